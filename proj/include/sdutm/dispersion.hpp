#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sdutm/types.hpp"

namespace sdutm {

/// Laurent polynomial sum_j c_j zeta^j on a contiguous exponent range.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const std::map<int, cdouble>& terms);

  cdouble eval(cdouble zeta) const;
  int min_exp() const { return jmin_; }
  int max_exp() const { return jmin_ + static_cast<int>(coef_.size()) - 1; }
  cdouble coeff(int j) const;
  bool empty() const { return coef_.empty(); }
  /// Minimum exponent with |coefficient| above tol * max|coefficient|.
  int min_significant_exp(double tol = 1e-13) const;

  LaurentPoly& add(int j, cdouble c);

 private:
  int jmin_ = 0;
  std::vector<cdouble> coef_;
};

/// Dispersion relation W(k) = P(e^{ikh}) with P(z) = -(1/h^m) sum_j a_j z^j.
struct DispersionRelation {
  LaurentPoly P;
  double h = 0.0;
  int m = 1;

  cdouble eval_zeta(cdouble z) const { return P.eval(z); }
  cdouble eval(cdouble k) const { return P.eval(std::exp(kI * k * h)); }
  int degree() const { return P.max_exp() - P.min_exp(); }
};

/// One root zeta = e^{i nu h} of P(zeta) = P(e^{ikh}) with the trivial root
/// removed. The relation at nu holds on the real-k contour iff |zeta| >= 1.
struct SymmetryRoot {
  cdouble zeta;
  bool usable_on_contour = false;
};

DispersionRelation dispersion_from_stencil(const StencilSpec& stencil, double h);

cdouble eval_W(const DispersionRelation& D, cdouble k);

/// All nontrivial symmetry roots at the contour point with e^{ikh} = z.
/// Exactly degree-1 roots; throws with the offending k when root polishing
/// cannot reach the residual tolerance.
std::vector<SymmetryRoot> symmetries_at_zeta(const DispersionRelation& D, cdouble z);
std::vector<SymmetryRoot> symmetries_at(const DispersionRelation& D, cdouble k);

enum class UsabilityVerdict { EverywhereUsable, NowhereUsable, Mixed };

struct TrackedSymmetry {
  std::vector<cdouble> zeta;        // one value per sample, continuously tracked
  UsabilityVerdict verdict = UsabilityVerdict::Mixed;
  bool reciprocal = false;          // zeta(k) * e^{ikh} constant along samples
  cdouble alpha = 0.0;              // that constant, when reciprocal
};

struct UsabilityReport {
  std::vector<double> k_samples;
  std::vector<TrackedSymmetry> symmetries;
  int usable_everywhere_count = 0;
  std::vector<std::string> diagnostics;  // tracking ambiguities etc.
};

/// Tracks symmetry roots continuously across the sample list (nearest-neighbor
/// matching in zeta) and aggregates per-family usability.
UsabilityReport symmetry_usability_report(const DispersionRelation& D,
                                          const std::vector<double>& k_samples);

/// Uniform sample list on [-pi/h, pi/h] avoiding the exact endpoints.
std::vector<double> default_contour_samples(double h, int count);

/// Modified-equation coefficients: q_t = sum_p c_p d^p/dx^p q with
/// c_p = h^{p-m} sum_j a_j j^p / p!, p = 1..p_max.
std::vector<cdouble> modified_equation(const StencilSpec& stencil, double h, int p_max);

/// sign of Re(-W(k)): negative means e^{-WT} decays there.
double decay_region(const DispersionRelation& D, cdouble k);

/// Exact rational arithmetic for the modified-equation table.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);
  Rational operator+(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

struct RationalComplex {
  Rational re, im;
  bool operator==(const RationalComplex& o) const { return re == o.re && im == o.im; }
};

/// Exact modified-equation coefficients (of h^{p-m}) for stencils with
/// rational coefficients; p = 1..p_max.
std::vector<RationalComplex> modified_equation_exact(
    const std::vector<int>& offsets, const std::vector<RationalComplex>& coeffs, int m,
    int p_max);

}  // namespace sdutm
