#include "sdutm/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace sdutm {

const GaussRule& gauss_rule(int order) {
  static std::map<int, GaussRule> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;

  GaussRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const int m = (order + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (order + 0.5));
    double z1 = 0.0, pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < order; ++j) {
        double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
      }
      pp = order * (z * p1 - p2) / (z * z - 1.0);
      z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    rule.nodes[i] = -z;
    rule.nodes[order - 1 - i] = z;
    rule.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.weights[order - 1 - i] = rule.weights[i];
  }
  auto [pos, _] = cache.emplace(order, std::move(rule));
  return pos->second;
}

namespace {

// Fixed chunk count keeps per-chunk partial sums identical for any thread
// count, so the ordered reduction is bit-stable for a given config.
constexpr int kChunks = 64;

}  // namespace

FieldIntegral ContourQuadrature::pass(const std::function<cdouble(double)>& g, int n0,
                                      int count, int panels) const {
  const GaussRule& rule = gauss_rule(cfg_.nodes_per_panel);
  const double a = -kPi / h_;
  const double width = 2.0 * kPi / h_ / panels;
  const double h = h_;

  auto chunk = [&](int p_begin, int p_end) {
    std::vector<cdouble> acc(static_cast<size_t>(count), cdouble(0.0));
    for (int p = p_begin; p < p_end; ++p) {
      const double left = a + p * width;
      for (size_t q = 0; q < rule.nodes.size(); ++q) {
        const double k = left + 0.5 * width * (rule.nodes[q] + 1.0);
        const double w = 0.5 * width * rule.weights[q];
        const cdouble gv = g(k) * w;
        cdouble zn = std::exp(kI * (k * n0 * h));
        const cdouble z = std::exp(kI * (k * h));
        for (int i = 0; i < count; ++i) {
          acc[static_cast<size_t>(i)] += gv * zn;
          zn *= z;
        }
      }
    }
    return acc;
  };

  const int nchunks = std::min(kChunks, panels);
  std::vector<std::vector<cdouble>> partials(static_cast<size_t>(nchunks));
  unsigned hw = std::thread::hardware_concurrency();
  if (hw > 1) {
    std::vector<std::future<std::vector<cdouble>>> futures;
    futures.reserve(static_cast<size_t>(nchunks));
    for (int c = 0; c < nchunks; ++c) {
      int p0 = panels * c / nchunks, p1 = panels * (c + 1) / nchunks;
      futures.push_back(std::async(std::launch::async, chunk, p0, p1));
    }
    for (int c = 0; c < nchunks; ++c) partials[static_cast<size_t>(c)] = futures[static_cast<size_t>(c)].get();
  } else {
    for (int c = 0; c < nchunks; ++c) {
      int p0 = panels * c / nchunks, p1 = panels * (c + 1) / nchunks;
      partials[static_cast<size_t>(c)] = chunk(p0, p1);
    }
  }

  FieldIntegral out;
  out.panels = panels;
  out.values.assign(static_cast<size_t>(count), cdouble(0.0));
  for (int c = 0; c < nchunks; ++c)
    for (int i = 0; i < count; ++i)
      out.values[static_cast<size_t>(i)] += partials[static_cast<size_t>(c)][static_cast<size_t>(i)];
  const double inv2pi = 1.0 / (2.0 * kPi);
  for (auto& v : out.values) v *= inv2pi;
  return out;
}

FieldIntegral ContourQuadrature::field(const std::function<cdouble(double)>& g, int n0,
                                       int count, int seed_panels) const {
  int panels = std::max({cfg_.panels, seed_panels, 4});
  FieldIntegral prev = pass(g, n0, count, panels);
  while (true) {
    int next = panels * 2;
    if (next > cfg_.max_panels) {
      std::ostringstream msg;
      msg << "contour quadrature did not converge at " << panels << " panels";
      throw Error(kErrQuadrature, msg.str());
    }
    FieldIntegral cur = pass(g, n0, count, next);
    double diff = 0.0, norm = 0.0;
    for (int i = 0; i < count; ++i) {
      diff = std::max(diff, std::abs(cur.values[static_cast<size_t>(i)] -
                                     prev.values[static_cast<size_t>(i)]));
      norm = std::max(norm, std::abs(cur.values[static_cast<size_t>(i)]));
    }
    cur.error_estimate = diff;
    if (diff <= std::max(cfg_.abs_tol, cfg_.rel_tol * norm)) {
      cur.converged = true;
      return cur;
    }
    prev = std::move(cur);
    panels = next;
  }
}

cdouble ContourQuadrature::scalar(const std::function<cdouble(double)>& g, int seed_panels,
                                  double* error_estimate) const {
  FieldIntegral r = field(g, 0, 1, seed_panels);
  if (error_estimate) *error_estimate = r.error_estimate;
  return r.values[0];
}

namespace {

cdouble gauss_segment(const std::function<cdouble(double)>& f, double a, double b,
                      const GaussRule& rule) {
  cdouble s = 0.0;
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (size_t q = 0; q < rule.nodes.size(); ++q)
    s += rule.weights[q] * f(mid + half * rule.nodes[q]);
  return s * half;
}

cdouble adaptive(const std::function<cdouble(double)>& f, double a, double b,
                 cdouble whole, double tol, int depth, const GaussRule& rule) {
  const double mid = 0.5 * (a + b);
  cdouble left = gauss_segment(f, a, mid, rule);
  cdouble right = gauss_segment(f, mid, b, rule);
  double err = std::abs(left + right - whole);
  if (err <= tol) return left + right;
  if (depth <= 0) {
    std::ostringstream msg;
    msg << "time quadrature stalled, local error estimate " << err;
    throw Error(kErrQuadrature, msg.str());
  }
  return adaptive(f, a, mid, left, 0.6 * tol, depth - 1, rule) +
         adaptive(f, mid, b, right, 0.6 * tol, depth - 1, rule);
}

cdouble adaptive_integral(const std::function<cdouble(double)>& f, double a, double b,
                          const QuadratureConfig& cfg, double extra_phase) {
  if (b <= a) return 0.0;
  const GaussRule& rule = gauss_rule(15);
  int segments = std::max(1, static_cast<int>(extra_phase / (8.0 * kPi)));
  segments = std::min(segments, 1 << 14);
  // first sweep for a magnitude estimate
  double scale = 0.0;
  std::vector<cdouble> wholes(static_cast<size_t>(segments));
  for (int s = 0; s < segments; ++s) {
    double l = a + (b - a) * s / segments, r = a + (b - a) * (s + 1) / segments;
    wholes[static_cast<size_t>(s)] = gauss_segment(f, l, r, rule);
    scale += std::abs(wholes[static_cast<size_t>(s)]);
  }
  double tol = std::max(cfg.abs_tol, cfg.rel_tol * scale) / segments;
  cdouble total = 0.0;
  for (int s = 0; s < segments; ++s) {
    double l = a + (b - a) * s / segments, r = a + (b - a) * (s + 1) / segments;
    total += adaptive(f, l, r, wholes[static_cast<size_t>(s)], std::max(tol, 5e-16 * (1.0 + scale)),
                      cfg.time_quad_depth, rule);
  }
  return total;
}

}  // namespace

cdouble decayed_time_integral(const std::function<cdouble(double)>& g, cdouble W,
                              double t0, double T, const QuadratureConfig& cfg) {
  if (T < t0) throw Error(kErrBadArgument, "time transform requires T >= t0");
  double span = T - t0;
  if (span == 0.0) return 0.0;
  // tau = T - t; the integrand exp(-W tau) g(T - tau) decays when Re(W) > 0
  if (W.real() > 0.0) span = std::min(span, 46.0 / W.real());
  auto f = [&](double tau) { return std::exp(-W * tau) * g(T - tau); };
  return adaptive_integral(f, 0.0, span, cfg, std::abs(W.imag()) * span);
}

cdouble plain_time_integral(const std::function<cdouble(double)>& g, cdouble W,
                            double t0, double T, const QuadratureConfig& cfg) {
  if (T == t0) return 0.0;
  auto f = [&](double t) { return std::exp(W * t) * g(t); };
  return adaptive_integral(f, t0, T, cfg, std::abs(W.imag()) * (T - t0));
}

cdouble oscillatory_gauss(const std::function<cdouble(double)>& f, double a, double b,
                          double total_phase, const QuadratureConfig& cfg) {
  if (b <= a) return 0.0;
  int panels = std::max(4, static_cast<int>(std::ceil(std::abs(total_phase) / kPi)) + 4);
  const GaussRule& rule = gauss_rule(cfg.nodes_per_panel);
  cdouble prev = 0.0;
  for (int iter = 0;; ++iter) {
    cdouble s = 0.0;
    for (int p = 0; p < panels; ++p)
      s += gauss_segment(f, a + (b - a) * p / panels, a + (b - a) * (p + 1) / panels, rule);
    if (iter > 0 &&
        std::abs(s - prev) <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(s)))
      return s;
    if (panels > (1 << 22))
      throw Error(kErrQuadrature, "oscillatory quadrature did not converge");
    prev = s;
    panels *= 2;
  }
}

cdouble graded_gauss(const std::function<cdouble(double)>& f, double a, double b,
                     double phase_per_octave, const QuadratureConfig& cfg) {
  if (b <= a) return 0.0;
  if (a <= 0.0) throw Error(kErrBadArgument, "graded quadrature requires a > 0");
  cdouble total = 0.0;
  double left = a;
  while (left < b) {
    double right = std::min(b, 2.0 * left);
    total += oscillatory_gauss(f, left, right, phase_per_octave, cfg);
    left = right;
  }
  return total;
}

cdouble expm1_ratio(cdouble s, double d) {
  cdouble sd = s * d;
  if (std::abs(sd) < 1e-4)
    return d * (1.0 - sd / 2.0 + sd * sd / 6.0 - sd * sd * sd / 24.0);
  return (1.0 - std::exp(-sd)) / s;
}

}  // namespace sdutm
