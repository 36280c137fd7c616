#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sdutm {

using cdouble = std::complex<double>;
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr cdouble kI{0.0, 1.0};

/// Error with a stable machine-readable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

inline constexpr const char* kErrUnnaturalDiscretization = "unnatural_discretization";
inline constexpr const char* kErrQuadrature = "quadrature_tolerance_unmet";
inline constexpr const char* kErrRootFinding = "root_finding_failed";
inline constexpr const char* kErrCaseMismatch = "case_spec_mismatch";
inline constexpr const char* kErrMissingDecay = "missing_decay_information";
inline constexpr const char* kErrMissingDerivative = "missing_derivative_data";
inline constexpr const char* kErrVanishingNotGuaranteed = "vanishing_not_guaranteed";
inline constexpr const char* kErrBadArgument = "bad_argument";

/// |phi(x)| <= amplitude * exp(-rate * x) for x >= 0.
struct DecayBound {
  double amplitude = 1.0;
  double rate = 1.0;
};

/// Spatial datum phi(x) on the half line.
struct SpaceFunction {
  std::function<cdouble(double)> value;
  std::optional<DecayBound> decay;
  /// Optional closed form of the lattice transform
  ///   h * sum_{n >= start} zeta^{-n} phi(n h),  valid for |zeta| >= 1.
  std::function<cdouble(cdouble zeta, double h, int start)> lattice_transform;
  std::string label;
};

/// Temporal datum g(t) with optional derivatives and a closed transform.
struct TimeFunction {
  std::function<cdouble(double)> value;
  std::function<cdouble(double)> d1;
  std::function<cdouble(double)> d2;
  /// Optional closed form of the decayed time transform
  ///   integral_{t0}^{T} exp(-W (T - t)) g(t) dt.
  std::function<cdouble(cdouble W, double t0, double T)> decayed_transform;
  std::string label;
};

/// Finite-difference stencil q'_n = (1/h^m) sum_j a_j q_{n+j}.
/// The coefficients absorb the PDE constant.
struct StencilSpec {
  std::vector<int> offsets;
  std::vector<cdouble> coeffs;
  int h_power = 1;
  std::string label;

  int min_offset() const { return offsets.front(); }
  int max_offset() const { return offsets.back(); }
};

enum class PdeKind { Advection, Heat, Schrodinger };

/// Continuous equation being discretized. For advection, sign selects
/// q_t = +c q_x (sign=+1) or q_t = -c q_x (sign=-1) with c > 0.
struct PdeSpec {
  PdeKind kind = PdeKind::Advection;
  double c = 1.0;
  int sign = +1;

  int spatial_order() const { return kind == PdeKind::Advection ? 1 : 2; }
  cdouble leading_coefficient() const {
    switch (kind) {
      case PdeKind::Advection: return cdouble(sign * c, 0.0);
      case PdeKind::Heat: return cdouble(1.0, 0.0);
      case PdeKind::Schrodinger: return cdouble(0.0, 0.5);
    }
    return 0.0;
  }
  /// Whether the continuous half-line problem requires boundary data.
  bool requires_boundary() const {
    return !(kind == PdeKind::Advection && sign > 0);
  }
};

enum class BoundaryKind { None, Dirichlet, Neumann };

struct BoundaryCondition {
  BoundaryKind kind = BoundaryKind::None;
  TimeFunction data;
};

/// A half-line initial-boundary-value problem, spatially discretized.
struct IBVPSpec {
  PdeSpec pde;
  StencilSpec stencil;
  double h = 0.01;
  SpaceFunction initial;
  BoundaryCondition boundary;
  double t0 = 0.0;
};

struct QuadratureConfig {
  int panels = 64;
  int nodes_per_panel = 16;
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double tail_eps = 1e-12;
  int max_panels = 1 << 17;
  int time_quad_depth = 14;
};

enum class Severity { Warning, Error };

struct Violation {
  std::string code;
  std::string message;
  Severity severity = Severity::Error;
};

struct Provenance {
  std::string method;
  QuadratureConfig cfg;
};

/// Evaluated q_n(T) on an inclusive node range [n_begin, n_begin + size - 1].
struct SolutionField {
  double h = 0.0;
  double T = 0.0;
  int n_begin = 0;
  std::vector<cdouble> values;
  Provenance provenance;

  int n_end() const { return n_begin + static_cast<int>(values.size()) - 1; }
  cdouble at(int n) const {
    int i = n - n_begin;
    if (i < 0 || i >= static_cast<int>(values.size()))
      throw Error(kErrBadArgument, "node index outside field range");
    return values[static_cast<size_t>(i)];
  }
};

/// Diagnostics for an IBVP specification; empty result means valid.
/// Corner-compatibility is checked to 1e-8; mismatches are warnings so that
/// solvers may still run on them.
std::vector<Violation> validate(const IBVPSpec& spec);

/// True if any violation has Error severity.
bool has_fatal(const std::vector<Violation>& violations);

/// Consistency sums of a stencil against a target leading coefficient:
/// sum a_j j^p / p! must vanish for p < m and equal `target` at p = m.
std::vector<Violation> stencil_consistency(const StencilSpec& st, cdouble target);

namespace stencils {

// Advection q_t = +c q_x, first order one-sided toward increasing n.
StencilSpec advection_forward(double c);
// Advection q_t = -c q_x, first order one-sided toward decreasing n.
StencilSpec advection_backward(double c);
// Advection q_t = -c q_x, second order centered.
StencilSpec advection_centered(double c);
// Advection q_t = -c q_x, second order one-sided toward decreasing n.
StencilSpec advection_backward2(double c);
// Heat q_t = q_xx, second order centered.
StencilSpec heat_centered();
// Heat q_t = q_xx, fourth order centered.
StencilSpec heat_centered4();
// Heat q_t = q_xx, one-sided toward increasing n.
StencilSpec heat_forward();
// Heat q_t = q_xx, one-sided toward decreasing n.
StencilSpec heat_backward();
// Schrodinger q_t = (i/2) q_xx, second order centered.
StencilSpec schrodinger_centered();

}  // namespace stencils

}  // namespace sdutm
