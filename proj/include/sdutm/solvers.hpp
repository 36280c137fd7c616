#pragma once

#include <optional>
#include <utility>

#include "sdutm/dispersion.hpp"
#include "sdutm/quadrature.hpp"
#include "sdutm/transforms.hpp"

namespace sdutm {

/// The explicitly derived half-line solution formulas.
enum class CaseId {
  AdvectionForward,
  AdvectionBackwardDirichlet,
  AdvectionBackwardDirichletStart0,
  AdvectionCenteredDirichlet,
  AdvectionBackward2Dirichlet,
  HeatCenteredDirichlet,
  HeatCenteredNeumann,
  HeatCentered4Dirichlet,
  SchrodingerCenteredDirichlet,
  SchrodingerCenteredNeumann,
};

const char* case_name(CaseId id);
const std::vector<CaseId>& all_cases();

/// Reporting window: nodes n in [1, ceil(1/h)] past a Dirichlet boundary,
/// [0, ceil(1/h)] otherwise.
std::pair<int, int> default_window(const IBVPSpec& spec);

/// Expected convergence order of each case's solution in h.
int case_order(CaseId id);

/// Evaluates the case's solution formula at time T on [n_begin, n_end].
/// Throws kErrCaseMismatch when the spec does not carry the case's
/// stencil/boundary signature, kErrQuadrature on unmet tolerance.
SolutionField solve_explicit(CaseId id, const IBVPSpec& spec, int n_begin, int n_end,
                             double T, const QuadratureConfig& cfg);

/// Derivative datum with the decayed transform obtained from the parent's by
/// parts; requires g.d1.
TimeFunction derivative_time_function(const TimeFunction& g);

/// Panel seed for the contour quadrature from the dispersion relation, the
/// node count, the elapsed time, and the initial datum's decay rate.
int suggest_contour_panels(const DispersionRelation& D, double span, int n_max,
                           double decay_rate, const QuadratureConfig& cfg);

/// Max pointwise difference between the two backward-advection variants
/// (transform starting at n=1 vs n=0) on the window.
double backward_variant_difference(const IBVPSpec& spec, int n_begin, int n_end,
                                   double T, const QuadratureConfig& cfg);

}  // namespace sdutm
