#include "sdutm/dispersion.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace sdutm {

LaurentPoly::LaurentPoly(const std::map<int, cdouble>& terms) {
  if (terms.empty()) return;
  jmin_ = terms.begin()->first;
  int jmax = terms.rbegin()->first;
  coef_.assign(static_cast<size_t>(jmax - jmin_ + 1), cdouble(0.0));
  for (const auto& [j, c] : terms) coef_[static_cast<size_t>(j - jmin_)] = c;
}

cdouble LaurentPoly::eval(cdouble zeta) const {
  if (coef_.empty()) return 0.0;
  cdouble acc = 0.0;
  for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) acc = acc * zeta + *it;
  return acc * std::pow(zeta, jmin_);
}

cdouble LaurentPoly::coeff(int j) const {
  int i = j - jmin_;
  if (i < 0 || i >= static_cast<int>(coef_.size())) return 0.0;
  return coef_[static_cast<size_t>(i)];
}

int LaurentPoly::min_significant_exp(double tol) const {
  double top = 0.0;
  for (const auto& c : coef_) top = std::max(top, std::abs(c));
  for (size_t i = 0; i < coef_.size(); ++i)
    if (std::abs(coef_[i]) > tol * top) return jmin_ + static_cast<int>(i);
  return max_exp();
}

LaurentPoly& LaurentPoly::add(int j, cdouble c) {
  if (coef_.empty()) {
    jmin_ = j;
    coef_.assign(1, c);
    return *this;
  }
  if (j < jmin_) {
    coef_.insert(coef_.begin(), static_cast<size_t>(jmin_ - j), cdouble(0.0));
    jmin_ = j;
  } else if (j > max_exp()) {
    coef_.resize(static_cast<size_t>(j - jmin_ + 1), cdouble(0.0));
  }
  coef_[static_cast<size_t>(j - jmin_)] += c;
  return *this;
}

DispersionRelation dispersion_from_stencil(const StencilSpec& stencil, double h) {
  if (!(h > 0.0)) throw Error(kErrBadArgument, "dispersion requires h > 0");
  DispersionRelation D;
  D.h = h;
  D.m = stencil.h_power;
  const double scale = std::pow(h, stencil.h_power);
  std::map<int, cdouble> terms;
  for (size_t i = 0; i < stencil.offsets.size(); ++i) {
    if (std::abs(stencil.coeffs[i]) == 0.0) continue;
    terms[stencil.offsets[i]] = -stencil.coeffs[i] / scale;
  }
  D.P = LaurentPoly(terms);
  return D;
}

cdouble eval_W(const DispersionRelation& D, cdouble k) { return D.eval(k); }

namespace {

// Coefficients (ascending) of P(zeta) - w cleared of negative exponents:
// Q(zeta) = sum_j p_j zeta^{j - jmin} - w zeta^{-jmin}.
std::vector<cdouble> cleared_coefficients(const DispersionRelation& D, cdouble w) {
  const int jmin = D.P.min_exp(), jmax = D.P.max_exp();
  std::vector<cdouble> q(static_cast<size_t>(jmax - jmin + 1), cdouble(0.0));
  for (int j = jmin; j <= jmax; ++j) q[static_cast<size_t>(j - jmin)] = D.P.coeff(j);
  q[static_cast<size_t>(-jmin)] -= w;
  return q;
}

// Synthetic division by (zeta - root); returns the quotient (ascending).
std::vector<cdouble> deflate(const std::vector<cdouble>& q, cdouble root) {
  const size_t d = q.size() - 1;
  std::vector<cdouble> out(d);
  cdouble carry = q[d];
  for (size_t i = d; i >= 1; --i) {
    out[i - 1] = carry;
    carry = q[i - 1] + carry * root;
  }
  return out;
}

std::vector<cdouble> polynomial_roots(const std::vector<cdouble>& coef) {
  // ascending coefficients, leading coefficient nonzero
  const int d = static_cast<int>(coef.size()) - 1;
  if (d <= 0) return {};
  if (d == 1) return {-coef[0] / coef[1]};
  if (d == 2) {
    const cdouble a = coef[2], b = coef[1], c = coef[0];
    cdouble sq = std::sqrt(b * b - 4.0 * a * c);
    // pick the sign that avoids cancellation
    cdouble bp = (std::real(std::conj(b) * sq) >= 0.0) ? b + sq : b - sq;
    if (std::abs(bp) == 0.0) return {cdouble(0.0), cdouble(0.0)};
    cdouble r1 = -bp / (2.0 * a);
    cdouble r2 = c / (a * r1);
    return {r1, r2};
  }
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
  const cdouble lead = coef[static_cast<size_t>(d)];
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -coef[static_cast<size_t>(i)] / lead;
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(companion, false);
  if (es.info() != Eigen::Success)
    throw Error(kErrRootFinding, "companion eigensolve failed");
  std::vector<cdouble> roots(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) roots[static_cast<size_t>(i)] = es.eigenvalues()(i);
  return roots;
}

cdouble polish_root(const std::vector<cdouble>& q, cdouble zeta) {
  // a few Newton steps on the cleared polynomial
  for (int iter = 0; iter < 8; ++iter) {
    cdouble val = 0.0, der = 0.0;
    for (size_t i = q.size(); i-- > 0;) {
      der = der * zeta + val;
      val = val * zeta + q[i];
    }
    if (std::abs(der) == 0.0) break;
    cdouble step = val / der;
    zeta -= step;
    if (std::abs(step) < 1e-15 * (1.0 + std::abs(zeta))) break;
  }
  return zeta;
}

constexpr double kUsableTol = 1e-9;

}  // namespace

std::vector<SymmetryRoot> symmetries_at_zeta(const DispersionRelation& D, cdouble z) {
  const cdouble w = D.P.eval(z);
  std::vector<cdouble> q = cleared_coefficients(D, w);
  std::vector<cdouble> reduced = deflate(q, z);
  std::vector<cdouble> roots = polynomial_roots(reduced);

  std::vector<SymmetryRoot> out;
  out.reserve(roots.size());
  const double wscale = 1.0 + std::abs(w);
  for (cdouble zeta : roots) {
    zeta = polish_root(q, zeta);
    const double residual = std::abs(D.P.eval(zeta) - w);
    if (!(residual <= 1e-10 * wscale)) {
      std::ostringstream msg;
      msg << "symmetry root residual " << residual << " at zeta=" << zeta
          << " (contour point z=" << z << ")";
      throw Error(kErrRootFinding, msg.str());
    }
    out.push_back({zeta, std::abs(zeta) >= 1.0 - kUsableTol});
  }
  return out;
}

std::vector<SymmetryRoot> symmetries_at(const DispersionRelation& D, cdouble k) {
  return symmetries_at_zeta(D, std::exp(kI * k * D.h));
}

std::vector<double> default_contour_samples(double h, int count) {
  std::vector<double> out;
  out.reserve(static_cast<size_t>(count));
  const double a = -kPi / h, b = kPi / h;
  for (int i = 0; i < count; ++i) {
    // interior offset avoids the periodic endpoints and exact symmetry points
    double t = (i + 0.5122) / count;
    out.push_back(a + (b - a) * t);
  }
  return out;
}

UsabilityReport symmetry_usability_report(const DispersionRelation& D,
                                          const std::vector<double>& k_samples) {
  if (k_samples.empty())
    throw Error(kErrBadArgument, "usability report requires at least one sample");
  UsabilityReport rep;
  rep.k_samples = k_samples;

  std::vector<std::vector<SymmetryRoot>> per_sample;
  per_sample.reserve(k_samples.size());
  for (double k : k_samples) per_sample.push_back(symmetries_at(D, cdouble(k)));

  const size_t nroots = per_sample.front().size();
  for (const auto& roots : per_sample)
    if (roots.size() != nroots)
      throw Error(kErrRootFinding, "root count changed along the contour");

  rep.symmetries.assign(nroots, {});
  for (auto& fam : rep.symmetries) fam.zeta.reserve(k_samples.size());
  if (nroots == 0) return rep;

  // Track by nearest-neighbor matching against the previous sample; with at
  // most a handful of roots an exhaustive permutation is cheapest and exact.
  std::vector<size_t> order(nroots);
  std::iota(order.begin(), order.end(), size_t{0});
  std::vector<cdouble> prev(nroots);
  for (size_t r = 0; r < nroots; ++r) {
    prev[r] = per_sample[0][r].zeta;
    rep.symmetries[r].zeta.push_back(prev[r]);
  }
  std::vector<bool> usable_all(nroots, per_sample[0][0].usable_on_contour);
  std::vector<bool> usable_any(nroots, false);
  for (size_t r = 0; r < nroots; ++r) {
    usable_all[r] = per_sample[0][r].usable_on_contour;
    usable_any[r] = per_sample[0][r].usable_on_contour;
  }

  for (size_t s = 1; s < per_sample.size(); ++s) {
    const auto& cur = per_sample[s];
    std::vector<size_t> perm(nroots);
    std::iota(perm.begin(), perm.end(), size_t{0});
    std::vector<size_t> best = perm;
    double best_cost = 1e300, second_cost = 1e300;
    do {
      double cost = 0.0;
      for (size_t r = 0; r < nroots; ++r) cost += std::abs(cur[perm[r]].zeta - prev[r]);
      if (cost < best_cost) {
        second_cost = best_cost;
        best_cost = cost;
        best = perm;
      } else if (cost < second_cost) {
        second_cost = cost;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (nroots > 1 && second_cost < 10.0 * best_cost && best_cost > 1e-12) {
      std::ostringstream msg;
      msg << "root tracking ambiguity near k=" << k_samples[s]
          << " (assignment margins " << best_cost << " vs " << second_cost << ")";
      rep.diagnostics.push_back(msg.str());
    }
    for (size_t r = 0; r < nroots; ++r) {
      prev[r] = cur[best[r]].zeta;
      rep.symmetries[r].zeta.push_back(prev[r]);
      usable_all[r] = usable_all[r] && cur[best[r]].usable_on_contour;
      usable_any[r] = usable_any[r] || cur[best[r]].usable_on_contour;
    }
  }

  for (size_t r = 0; r < nroots; ++r) {
    auto& fam = rep.symmetries[r];
    fam.verdict = usable_all[r] ? UsabilityVerdict::EverywhereUsable
                 : usable_any[r] ? UsabilityVerdict::Mixed
                                 : UsabilityVerdict::NowhereUsable;
    if (fam.verdict == UsabilityVerdict::EverywhereUsable) ++rep.usable_everywhere_count;

    // reciprocal structure: zeta(k) * e^{ikh} constant along the contour
    cdouble mean = 0.0;
    for (size_t s = 0; s < k_samples.size(); ++s)
      mean += fam.zeta[s] * std::exp(kI * (k_samples[s] * D.h));
    mean /= double(k_samples.size());
    double dev = 0.0;
    for (size_t s = 0; s < k_samples.size(); ++s)
      dev = std::max(dev, std::abs(fam.zeta[s] * std::exp(kI * (k_samples[s] * D.h)) - mean));
    if (dev <= 1e-8 * (1.0 + std::abs(mean))) {
      fam.reciprocal = true;
      fam.alpha = mean;
    }
  }
  return rep;
}

std::vector<cdouble> modified_equation(const StencilSpec& stencil, double h, int p_max) {
  if (p_max < stencil.h_power)
    throw Error(kErrBadArgument, "p_max must be at least the stencil h_power");
  std::vector<cdouble> out(static_cast<size_t>(p_max), cdouble(0.0));
  double pfact = 1.0;
  for (int p = 1; p <= p_max; ++p) {
    pfact *= p;
    cdouble s = 0.0;
    for (size_t i = 0; i < stencil.offsets.size(); ++i)
      s += stencil.coeffs[i] * std::pow(double(stencil.offsets[i]), double(p));
    out[static_cast<size_t>(p - 1)] = s / pfact * std::pow(h, p - stencil.h_power);
  }
  return out;
}

double decay_region(const DispersionRelation& D, cdouble k) {
  const double re = -D.eval(k).real();
  if (re > 0.0) return 1.0;
  if (re < 0.0) return -1.0;
  return 0.0;
}

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  a = std::abs(a);
  b = std::abs(b);
  while (b) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a ? a : 1;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw Error(kErrBadArgument, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = gcd64(num, den);
  num /= g;
  den /= g;
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num * o.den + o.num * den, den * o.den);
}

Rational Rational::operator*(const Rational& o) const {
  return Rational(num * o.num, den * o.den);
}

std::vector<RationalComplex> modified_equation_exact(
    const std::vector<int>& offsets, const std::vector<RationalComplex>& coeffs, int m,
    int p_max) {
  if (offsets.size() != coeffs.size())
    throw Error(kErrBadArgument, "offsets/coeffs size mismatch");
  (void)m;
  std::vector<RationalComplex> out(static_cast<size_t>(p_max));
  std::int64_t pfact = 1;
  for (int p = 1; p <= p_max; ++p) {
    pfact *= p;
    RationalComplex s{Rational(0), Rational(0)};
    for (size_t i = 0; i < offsets.size(); ++i) {
      std::int64_t jp = 1;
      for (int q = 0; q < p; ++q) jp *= offsets[i];
      s.re = s.re + coeffs[i].re * Rational(jp);
      s.im = s.im + coeffs[i].im * Rational(jp);
    }
    out[static_cast<size_t>(p - 1)] = {s.re * Rational(1, pfact), s.im * Rational(1, pfact)};
  }
  return out;
}

}  // namespace sdutm
