#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "sdutm/quadrature.hpp"
#include "sdutm/types.hpp"

namespace sdutm {

/// Forward lattice transform of initial data,
///   qhat(k) = h * sum_{n >= start} e^{-ik n h} phi(n h),
/// represented through zeta = e^{ikh} so it can also be evaluated at symmetry
/// points off the real contour (any |zeta| >= 1).
struct InitialTransform {
  int start_index = 1;
  int truncation_index = 0;   // last lattice index summed (closed forms: -1)
  double tail_bound = 0.0;
  double h = 0.0;
  std::function<cdouble(cdouble zeta)> eval_zeta;

  cdouble operator()(cdouble zeta) const { return eval_zeta(zeta); }
  cdouble at_k(cdouble k) const { return eval_zeta(std::exp(kI * k * h)); }
};

/// Builds the transform. Uses the datum's closed-form lattice transform when
/// present, otherwise a truncated sum with the cutoff chosen from the decay
/// bound so the tail stays below cfg.tail_eps. An explicit truncation index
/// overrides; with neither decay nor truncation this throws.
InitialTransform initial_transform(const SpaceFunction& phi, double h, int start_index,
                                   const QuadratureConfig& cfg,
                                   std::optional<int> explicit_truncation = std::nullopt);

/// f(W, T) = integral_{t0}^{T} e^{W t} g(t) dt. Moderate W only; solvers use
/// the decayed variant below.
cdouble time_transform(const TimeFunction& g, cdouble W, double t0, double T,
                       const QuadratureConfig& cfg);

/// integral_{t0}^{T} e^{-W (T - t)} g(t) dt = e^{-W T} f(W, T); closed form
/// when the datum carries one, adaptive quadrature otherwise. Bounded by
/// (T - t0) * max|g| for Re(W) >= 0, so it never overflows on the contour.
cdouble decayed_time_transform(const TimeFunction& g, cdouble W, double t0, double T,
                               const QuadratureConfig& cfg);

namespace shape {

/// One exponential-trigonometric term  e^{-a x} (C cos(b x) + S sin(b x)).
struct TrigTerm {
  double a = 1.0;
  double b = 0.0;
  cdouble cos_amp = 0.0;
  cdouble sin_amp = 0.0;
};

/// One monomial-exponential term  D x^p e^{-d x} (p <= 2).
struct MonomialTerm {
  cdouble amp = 0.0;
  int power = 1;
  double d = 1.0;
};

/// Space datum as a sum of the two families above, with closed-form lattice
/// transform and a conservative decay bound attached.
SpaceFunction decaying_space(std::vector<TrigTerm> trig, std::vector<MonomialTerm> mono,
                             std::string label);

/// Time datum  sum_j [A_j cos(w_j t) + B_j sin(w_j t)]  +  sum_l P_l(t) e^{g_l t}
/// with closed-form decayed transform and analytic derivatives.
struct TimeTrigTerm {
  double w = 0.0;
  cdouble cos_amp = 0.0;
  cdouble sin_amp = 0.0;
};
struct TimePolyExpTerm {
  // (c0 + c1 t + c2 t^2) e^{g t}
  cdouble c0 = 0.0, c1 = 0.0, c2 = 0.0;
  double g = 0.0;
};
TimeFunction structured_time(std::vector<TimeTrigTerm> trig,
                             std::vector<TimePolyExpTerm> poly, std::string label);

TimeFunction zero_time();
SpaceFunction zero_space();

}  // namespace shape

}  // namespace sdutm
