#include "sdutm/transforms.hpp"

#include <cmath>
#include <utility>

namespace sdutm {

InitialTransform initial_transform(const SpaceFunction& phi, double h, int start_index,
                                   const QuadratureConfig& cfg,
                                   std::optional<int> explicit_truncation) {
  if (!(h > 0.0)) throw Error(kErrBadArgument, "initial_transform requires h > 0");
  if (start_index != 0 && start_index != 1)
    throw Error(kErrBadArgument, "start index must be 0 or 1");

  InitialTransform out;
  out.start_index = start_index;
  out.h = h;

  if (phi.lattice_transform) {
    out.truncation_index = -1;
    out.tail_bound = 0.0;
    auto f = phi.lattice_transform;
    out.eval_zeta = [f, h, start_index](cdouble zeta) { return f(zeta, h, start_index); };
    return out;
  }

  int N = 0;
  double tail = 0.0;
  if (explicit_truncation) {
    N = *explicit_truncation;
    if (phi.decay) {
      const auto& db = *phi.decay;
      tail = db.amplitude * std::exp(-db.rate * (N + 1) * h) * h /
             (1.0 - std::exp(-db.rate * h));
    }
  } else if (phi.decay) {
    const auto& db = *phi.decay;
    const double geom = h / (1.0 - std::exp(-db.rate * h));
    double bound = db.amplitude * geom;
    N = start_index + 4;
    while (bound * std::exp(-db.rate * (N + 1) * h) > cfg.tail_eps) {
      ++N;
      if (N > 2'000'000)
        throw Error(kErrBadArgument,
                    "initial-data truncation index exceeds 2e6; datum decays too slowly");
    }
    tail = bound * std::exp(-db.rate * (N + 1) * h);
  } else {
    throw Error(kErrMissingDecay,
                "initial datum provides neither a decay bound nor an explicit truncation");
  }
  if (tail > cfg.tail_eps && !explicit_truncation)
    throw Error(kErrMissingDecay, "cannot meet tail_eps with the declared decay bound");

  auto samples = std::make_shared<std::vector<cdouble>>();
  samples->reserve(static_cast<size_t>(N - start_index + 1));
  for (int n = start_index; n <= N; ++n) samples->push_back(phi.value(n * h));

  out.truncation_index = N;
  out.tail_bound = tail;
  out.eval_zeta = [samples, h, start_index](cdouble zeta) {
    // h * zeta^{-s} * (phi_s + zeta^{-1} (phi_{s+1} + ...)), |zeta| >= 1
    const cdouble inv = 1.0 / zeta;
    cdouble acc = 0.0;
    for (auto it = samples->rbegin(); it != samples->rend(); ++it) acc = *it + acc * inv;
    if (start_index == 1) acc *= inv;
    return h * acc;
  };
  return out;
}

cdouble time_transform(const TimeFunction& g, cdouble W, double t0, double T,
                       const QuadratureConfig& cfg) {
  if (T == t0) return 0.0;
  if (g.decayed_transform) return std::exp(W * T) * g.decayed_transform(W, t0, T);
  if (!g.value) throw Error(kErrBadArgument, "time datum has no evaluator");
  return plain_time_integral(g.value, W, t0, T, cfg);
}

cdouble decayed_time_transform(const TimeFunction& g, cdouble W, double t0, double T,
                               const QuadratureConfig& cfg) {
  if (T == t0) return 0.0;
  if (g.decayed_transform) return g.decayed_transform(W, t0, T);
  if (!g.value) throw Error(kErrBadArgument, "time datum has no evaluator");
  return decayed_time_integral(g.value, W, t0, T, cfg);
}

namespace shape {

namespace {

// sum_{n >= s} r^n, n r^n, n^2 r^n for |r| < 1
cdouble geom0(cdouble r, int s) { return std::pow(r, s) / (1.0 - r); }
cdouble geom1(cdouble r, int s) {
  cdouble rs = std::pow(r, s);
  cdouble d = 1.0 - r;
  return double(s) * rs / d + rs * r / (d * d);
}
cdouble geom2(cdouble r, int s) {
  cdouble rs = std::pow(r, s);
  cdouble d = 1.0 - r;
  return double(s * s) * rs / d + double(2 * s + 1) * rs * r / (d * d) +
         2.0 * rs * r * r / (d * d * d);
}

// mu_j(s, d) = integral_0^d e^{-s tau} tau^j dtau, stable for small |s d|
cdouble mu(int j, cdouble s, double d) {
  cdouble sd = s * d;
  if (std::abs(sd) < 0.25) {
    cdouble sum = 0.0, term = 1.0;
    for (int q = 0; q <= 24; ++q) {
      sum += term / double(q + j + 1);
      term *= -sd / double(q + 1);
      if (std::abs(term) < 1e-20) break;
    }
    return std::pow(d, j + 1) * sum;
  }
  cdouble e = std::exp(-sd);
  switch (j) {
    case 0: return (1.0 - e) / s;
    case 1: return (1.0 - e * (1.0 + sd)) / (s * s);
    case 2: return (2.0 - e * (2.0 + 2.0 * sd + sd * sd)) / (s * s * s);
    default: throw Error(kErrBadArgument, "monomial power beyond 2");
  }
}

}  // namespace

SpaceFunction decaying_space(std::vector<TrigTerm> trig, std::vector<MonomialTerm> mono,
                             std::string label) {
  SpaceFunction f;
  f.label = std::move(label);

  auto trig_copy = std::make_shared<std::vector<TrigTerm>>(std::move(trig));
  auto mono_copy = std::make_shared<std::vector<MonomialTerm>>(std::move(mono));

  f.value = [trig_copy, mono_copy](double x) {
    cdouble v = 0.0;
    for (const auto& t : *trig_copy)
      v += std::exp(-t.a * x) * (t.cos_amp * std::cos(t.b * x) + t.sin_amp * std::sin(t.b * x));
    for (const auto& m : *mono_copy)
      v += m.amp * std::pow(x, m.power) * std::exp(-m.d * x);
    return v;
  };

  f.lattice_transform = [trig_copy, mono_copy](cdouble zeta, double h, int start) {
    cdouble v = 0.0;
    for (const auto& t : *trig_copy) {
      const cdouble plus = 0.5 * (t.cos_amp - kI * t.sin_amp);
      const cdouble minus = 0.5 * (t.cos_amp + kI * t.sin_amp);
      const cdouble rp = std::exp(cdouble(-t.a * h, t.b * h)) / zeta;
      const cdouble rm = std::exp(cdouble(-t.a * h, -t.b * h)) / zeta;
      v += h * (plus * geom0(rp, start) + minus * geom0(rm, start));
    }
    for (const auto& m : *mono_copy) {
      const cdouble r = std::exp(cdouble(-m.d * h, 0.0)) / zeta;
      cdouble s = 0.0;
      switch (m.power) {
        case 0: s = geom0(r, start); break;
        case 1: s = geom1(r, start); break;
        case 2: s = geom2(r, start); break;
        default: throw Error(kErrBadArgument, "monomial power beyond 2");
      }
      v += m.amp * std::pow(h, m.power) * h * s;
    }
    return v;
  };

  double rate = 1e300, amp = 0.0;
  for (const auto& t : *trig_copy) {
    rate = std::min(rate, t.a);
    amp += std::abs(t.cos_amp) + std::abs(t.sin_amp);
  }
  for (const auto& m : *mono_copy) {
    const double r = 0.9 * m.d;
    rate = std::min(rate, r);
    // sup_x x^p e^{-0.1 d x} = (p / (0.1 d e))^p
    amp += std::abs(m.amp) * std::pow(m.power / (0.1 * m.d * std::exp(1.0)),
                                      double(m.power));
  }
  if (trig_copy->empty() && mono_copy->empty()) {
    rate = 1.0;
    amp = 0.0;
  }
  f.decay = DecayBound{amp * (1.0 + 1e-12) + 1e-300, rate};
  return f;
}

TimeFunction structured_time(std::vector<TimeTrigTerm> trig,
                             std::vector<TimePolyExpTerm> poly, std::string label) {
  TimeFunction f;
  f.label = std::move(label);
  auto tr = std::make_shared<std::vector<TimeTrigTerm>>(std::move(trig));
  auto po = std::make_shared<std::vector<TimePolyExpTerm>>(std::move(poly));

  f.value = [tr, po](double t) {
    cdouble v = 0.0;
    for (const auto& a : *tr)
      v += a.cos_amp * std::cos(a.w * t) + a.sin_amp * std::sin(a.w * t);
    for (const auto& p : *po)
      v += (p.c0 + p.c1 * t + p.c2 * t * t) * std::exp(p.g * t);
    return v;
  };
  f.d1 = [tr, po](double t) {
    cdouble v = 0.0;
    for (const auto& a : *tr)
      v += -a.cos_amp * a.w * std::sin(a.w * t) + a.sin_amp * a.w * std::cos(a.w * t);
    for (const auto& p : *po)
      v += (p.c1 + 2.0 * p.c2 * t + p.g * (p.c0 + p.c1 * t + p.c2 * t * t)) *
           std::exp(p.g * t);
    return v;
  };
  f.d2 = [tr, po](double t) {
    cdouble v = 0.0;
    for (const auto& a : *tr)
      v += -a.cos_amp * a.w * a.w * std::cos(a.w * t) -
           a.sin_amp * a.w * a.w * std::sin(a.w * t);
    for (const auto& p : *po) {
      cdouble base = p.c0 + p.c1 * t + p.c2 * t * t;
      cdouble d1 = p.c1 + 2.0 * p.c2 * t;
      v += (2.0 * p.c2 + 2.0 * p.g * d1 + p.g * p.g * base) * std::exp(p.g * t);
    }
    return v;
  };

  f.decayed_transform = [tr, po](cdouble W, double t0, double T) {
    const double d = T - t0;
    cdouble v = 0.0;
    for (const auto& a : *tr) {
      const cdouble plus = 0.5 * (a.cos_amp - kI * a.sin_amp);   // e^{+iwt}
      const cdouble minus = 0.5 * (a.cos_amp + kI * a.sin_amp);  // e^{-iwt}
      v += plus * std::exp(kI * (a.w * T)) * expm1_ratio(W + kI * a.w, d);
      v += minus * std::exp(-kI * (a.w * T)) * expm1_ratio(W - kI * a.w, d);
    }
    for (const auto& p : *po) {
      const cdouble s = W + p.g;
      const cdouble m0 = mu(0, s, d), m1 = mu(1, s, d), m2 = mu(2, s, d);
      // t^j e^{g t} with t = T - tau
      cdouble j0 = m0;
      cdouble j1 = T * m0 - m1;
      cdouble j2 = T * T * m0 - 2.0 * T * m1 + m2;
      v += std::exp(p.g * T) * (p.c0 * j0 + p.c1 * j1 + p.c2 * j2);
    }
    return v;
  };
  return f;
}

TimeFunction zero_time() {
  TimeFunction f;
  f.label = "zero";
  f.value = [](double) { return cdouble(0.0); };
  f.d1 = f.value;
  f.d2 = f.value;
  f.decayed_transform = [](cdouble, double, double) { return cdouble(0.0); };
  return f;
}

SpaceFunction zero_space() {
  return decaying_space({}, {}, "zero");
}

}  // namespace shape

}  // namespace sdutm
