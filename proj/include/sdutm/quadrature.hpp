#pragma once

#include <functional>
#include <vector>

#include "sdutm/types.hpp"

namespace sdutm {

/// Gauss-Legendre nodes and weights on [-1, 1]; cached per order.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_rule(int order);

struct FieldIntegral {
  std::vector<cdouble> values;
  double error_estimate = 0.0;
  int panels = 0;
  bool converged = false;
};

/// Composite Gauss-Legendre quadrature of (1/2pi) * integral over
/// k in [-pi/h, pi/h], with panel doubling until two successive passes agree.
/// Field integrals share one integrand g and weight it by e^{ik n h} per node.
class ContourQuadrature {
 public:
  ContourQuadrature(double h, QuadratureConfig cfg) : h_(h), cfg_(cfg) {}

  /// values[i] = (1/2pi) * integral e^{ik (n0+i) h} g(k) dk, i = 0..count-1.
  /// Throws when the tolerance is unmet at cfg.max_panels.
  FieldIntegral field(const std::function<cdouble(double)>& g, int n0, int count,
                      int seed_panels = 0) const;

  /// Scalar convenience: (1/2pi) * integral g(k) dk.
  cdouble scalar(const std::function<cdouble(double)>& g, int seed_panels = 0,
                 double* error_estimate = nullptr) const;

  double h() const { return h_; }
  const QuadratureConfig& config() const { return cfg_; }

 private:
  FieldIntegral pass(const std::function<cdouble(double)>& g, int n0, int count,
                     int panels) const;

  double h_;
  QuadratureConfig cfg_;
};

/// integral_{t0}^{T} exp(-W (T - t)) g(t) dt by adaptive bisection, with the
/// exponentially damped tail truncated when Re(W) > 0.
cdouble decayed_time_integral(const std::function<cdouble(double)>& g, cdouble W,
                              double t0, double T, const QuadratureConfig& cfg);

/// Plain time transform integral_{t0}^{T} exp(W t) g(t) dt (moderate W only).
cdouble plain_time_integral(const std::function<cdouble(double)>& g, cdouble W,
                            double t0, double T, const QuadratureConfig& cfg);

/// Composite Gauss integral of f over [a, b] with a panel count chosen from an
/// oscillation estimate (total phase in radians across the interval).
cdouble oscillatory_gauss(const std::function<cdouble(double)>& f, double a, double b,
                          double total_phase, const QuadratureConfig& cfg);

/// Composite Gauss integral over [a, b] with panels graded geometrically away
/// from the left endpoint (integrand features concentrated near a).
cdouble graded_gauss(const std::function<cdouble(double)>& f, double a, double b,
                     double phase_per_octave, const QuadratureConfig& cfg);

/// (1 - exp(-s d)) / s, stable for small |s d|.
cdouble expm1_ratio(cdouble s, double d);

}  // namespace sdutm
