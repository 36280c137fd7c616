#include "sdutm/solvers.hpp"

#include <cmath>

namespace sdutm {

const char* case_name(CaseId id) {
  switch (id) {
    case CaseId::AdvectionForward: return "advection_forward";
    case CaseId::AdvectionBackwardDirichlet: return "advection_backward_dirichlet";
    case CaseId::AdvectionBackwardDirichletStart0: return "advection_backward_dirichlet_start0";
    case CaseId::AdvectionCenteredDirichlet: return "advection_centered_dirichlet";
    case CaseId::AdvectionBackward2Dirichlet: return "advection_backward2_dirichlet";
    case CaseId::HeatCenteredDirichlet: return "heat_centered_dirichlet";
    case CaseId::HeatCenteredNeumann: return "heat_centered_neumann";
    case CaseId::HeatCentered4Dirichlet: return "heat_centered4_dirichlet";
    case CaseId::SchrodingerCenteredDirichlet: return "schrodinger_centered_dirichlet";
    case CaseId::SchrodingerCenteredNeumann: return "schrodinger_centered_neumann";
  }
  return "unknown";
}

const std::vector<CaseId>& all_cases() {
  static const std::vector<CaseId> cases = {
      CaseId::AdvectionForward,
      CaseId::AdvectionBackwardDirichlet,
      CaseId::AdvectionBackwardDirichletStart0,
      CaseId::AdvectionCenteredDirichlet,
      CaseId::AdvectionBackward2Dirichlet,
      CaseId::HeatCenteredDirichlet,
      CaseId::HeatCenteredNeumann,
      CaseId::HeatCentered4Dirichlet,
      CaseId::SchrodingerCenteredDirichlet,
      CaseId::SchrodingerCenteredNeumann,
  };
  return cases;
}

int case_order(CaseId id) {
  switch (id) {
    case CaseId::AdvectionForward:
    case CaseId::AdvectionBackwardDirichlet:
    case CaseId::AdvectionBackwardDirichletStart0:
    case CaseId::AdvectionBackward2Dirichlet:
    case CaseId::HeatCenteredNeumann:
    case CaseId::SchrodingerCenteredNeumann:
      return 1;
    default:
      return 2;
  }
}

std::pair<int, int> default_window(const IBVPSpec& spec) {
  const int n_max = static_cast<int>(std::ceil(1.0 / spec.h));
  const int n_min = spec.boundary.kind == BoundaryKind::Dirichlet ? 1 : 0;
  return {n_min, n_max};
}

TimeFunction derivative_time_function(const TimeFunction& g) {
  if (!g.d1)
    throw Error(kErrMissingDerivative, "time datum lacks the derivative this case needs");
  TimeFunction f;
  f.label = g.label + "'";
  f.value = g.d1;
  f.d1 = g.d2;
  if (g.decayed_transform && g.value) {
    auto base = g.decayed_transform;
    auto val = g.value;
    f.decayed_transform = [base, val](cdouble W, double t0, double T) {
      // by parts: int e^{-W(T-t)} g' = g(T) - e^{-W(T-t0)} g(t0) - W int e^{-W(T-t)} g
      return val(T) - std::exp(-W * (T - t0)) * val(t0) - W * base(W, t0, T);
    };
  }
  return f;
}

int suggest_contour_panels(const DispersionRelation& D, double span, int n_max,
                           double decay_rate, const QuadratureConfig& cfg) {
  double max_im = 0.0, max_re = 0.0;
  const int samples = 512;
  for (int i = 0; i < samples; ++i) {
    double k = -kPi / D.h + 2.0 * kPi / D.h * (i + 0.5) / samples;
    cdouble W = D.eval(cdouble(k));
    max_im = std::max(max_im, std::abs(W.imag()));
    max_re = std::max(max_re, W.real());
  }
  double p = cfg.panels;
  p = std::max(p, span * max_im / kPi);
  p = std::max(p, 2.5 * std::sqrt(std::max(0.0, span * max_re)));
  p = std::max(p, 0.75 * n_max);
  if (decay_rate > 0.0) p = std::max(p, 2.0 / (decay_rate * D.h));
  p = std::min(p, double(cfg.max_panels) / 4.0);
  return static_cast<int>(std::ceil(p));
}

namespace {

bool stencil_matches(const StencilSpec& a, const StencilSpec& b) {
  if (a.offsets != b.offsets) return false;
  double scale = 0.0;
  for (const auto& c : b.coeffs) scale = std::max(scale, std::abs(c));
  for (size_t i = 0; i < a.coeffs.size(); ++i)
    if (std::abs(a.coeffs[i] - b.coeffs[i]) > 1e-12 * scale) return false;
  return a.h_power == b.h_power;
}

struct CaseSignature {
  StencilSpec stencil;
  BoundaryKind boundary;
  PdeKind pde;
  int start_index;
  bool needs_derivative;
};

CaseSignature case_signature(CaseId id, const PdeSpec& pde) {
  using namespace stencils;
  switch (id) {
    case CaseId::AdvectionForward:
      return {advection_forward(pde.c), BoundaryKind::None, PdeKind::Advection, 0, false};
    case CaseId::AdvectionBackwardDirichlet:
      return {advection_backward(pde.c), BoundaryKind::Dirichlet, PdeKind::Advection, 1, false};
    case CaseId::AdvectionBackwardDirichletStart0:
      return {advection_backward(pde.c), BoundaryKind::Dirichlet, PdeKind::Advection, 0, true};
    case CaseId::AdvectionCenteredDirichlet:
      return {advection_centered(pde.c), BoundaryKind::Dirichlet, PdeKind::Advection, 1, false};
    case CaseId::AdvectionBackward2Dirichlet:
      return {advection_backward2(pde.c), BoundaryKind::Dirichlet, PdeKind::Advection, 1, true};
    case CaseId::HeatCenteredDirichlet:
      return {heat_centered(), BoundaryKind::Dirichlet, PdeKind::Heat, 1, false};
    case CaseId::HeatCenteredNeumann:
      return {heat_centered(), BoundaryKind::Neumann, PdeKind::Heat, 0, false};
    case CaseId::HeatCentered4Dirichlet:
      return {heat_centered4(), BoundaryKind::Dirichlet, PdeKind::Heat, 1, true};
    case CaseId::SchrodingerCenteredDirichlet:
      return {schrodinger_centered(), BoundaryKind::Dirichlet, PdeKind::Schrodinger, 1, false};
    case CaseId::SchrodingerCenteredNeumann:
      return {schrodinger_centered(), BoundaryKind::Neumann, PdeKind::Schrodinger, 0, false};
  }
  throw Error(kErrBadArgument, "unknown case id");
}

}  // namespace

SolutionField solve_explicit(CaseId id, const IBVPSpec& spec, int n_begin, int n_end,
                             double T, const QuadratureConfig& cfg) {
  const CaseSignature sig = case_signature(id, spec.pde);
  if (spec.pde.kind != sig.pde || spec.boundary.kind != sig.boundary ||
      !stencil_matches(spec.stencil, sig.stencil))
    throw Error(kErrCaseMismatch,
                std::string("spec does not carry the signature of case ") + case_name(id));
  if (T < spec.t0) throw Error(kErrBadArgument, "T must be >= t0");
  if (n_end < n_begin) throw Error(kErrBadArgument, "empty node range");

  const double h = spec.h;
  const double c = spec.pde.c;
  const double t0 = spec.t0;
  const double span = T - t0;

  DispersionRelation D = dispersion_from_stencil(spec.stencil, h);
  InitialTransform qhat = initial_transform(spec.initial, h, sig.start_index, cfg);

  // boundary transforms, already folded with e^{-WT}
  const TimeFunction* u = spec.boundary.kind != BoundaryKind::None ? &spec.boundary.data : nullptr;
  TimeFunction uprime;
  if (sig.needs_derivative && spec.boundary.kind == BoundaryKind::Dirichlet)
    uprime = derivative_time_function(*u);

  auto Ud = [&](cdouble W) -> cdouble {
    return u ? decayed_time_transform(*u, W, t0, T, cfg) : cdouble(0.0);
  };
  auto UdPrime = [&](cdouble W) -> cdouble {
    return decayed_time_transform(uprime, W, t0, T, cfg);
  };

  std::function<cdouble(double)> g;
  switch (id) {
    case CaseId::AdvectionForward:
      g = [&](double k) {
        cdouble z = std::exp(kI * (k * h));
        cdouble W = D.eval_zeta(z);
        return std::exp(-W * span) * qhat(z);
      };
      break;
    case CaseId::AdvectionBackwardDirichlet:
      g = [&](double k) {
        cdouble z = std::exp(kI * (k * h));
        cdouble W = D.eval_zeta(z);
        return std::exp(-W * span) * qhat(z) + c * Ud(W) / z;
      };
      break;
    case CaseId::AdvectionBackwardDirichletStart0:
      g = [&](double k) {
        cdouble z = std::exp(kI * (k * h));
        cdouble W = D.eval_zeta(z);
        return std::exp(-W * span) * qhat(z) + c * Ud(W) + h * UdPrime(W);
      };
      break;
    case CaseId::AdvectionCenteredDirichlet:
      g = [&](double k) {
        cdouble z = std::exp(kI * (k * h));
        cdouble W = D.eval_zeta(z);
        return std::exp(-W * span) * (qhat(z) - qhat(-1.0 / z)) +
               c * std::cos(k * h) * Ud(W);
      };
      break;
    case CaseId::AdvectionBackward2Dirichlet:
      g = [&](double k) {
        cdouble z = std::exp(kI * (k * h));
        cdouble W = D.eval_zeta(z);
        return std::exp(-W * span) * qhat(z) +
               c * 0.5 * (3.0 / z - 1.0 / (z * z)) * Ud(W) -
               0.5 * h / z * UdPrime(W);
      };
      break;
    case CaseId::HeatCenteredDirichlet:
      g = [&](double k) {
        cdouble z = std::exp(kI * (k * h));
        cdouble W = D.eval_zeta(z);
        return std::exp(-W * span) * (qhat(z) - qhat(1.0 / z)) -
               2.0 * kI * std::sin(k * h) / h * Ud(W);
      };
      break;
    case CaseId::HeatCenteredNeumann:
      g = [&](double k) {
        cdouble z = std::exp(kI * (k * h));
        cdouble W = D.eval_zeta(z);
        return std::exp(-W * span) * (qhat(z) + z * qhat(1.0 / z)) - (1.0 + z) * Ud(W);
      };
      break;
    case CaseId::HeatCentered4Dirichlet:
      g = [&](double k) {
        cdouble z = std::exp(kI * (k * h));
        cdouble W = D.eval_zeta(z);
        cdouble zi = 1.0 / z;
        cdouble f0c = (14.0 * zi - 14.0 * z + z * z - zi * zi) / (12.0 * h);
        cdouble vc = h * (z - zi) / 12.0;
        return std::exp(-W * span) * (qhat(z) - qhat(zi)) + f0c * Ud(W) + vc * UdPrime(W);
      };
      break;
    case CaseId::SchrodingerCenteredDirichlet:
      g = [&](double k) {
        cdouble z = std::exp(kI * (k * h));
        cdouble W = D.eval_zeta(z);
        return std::exp(-W * span) * (qhat(z) - qhat(1.0 / z)) +
               std::sin(k * h) / h * Ud(W);
      };
      break;
    case CaseId::SchrodingerCenteredNeumann:
      g = [&](double k) {
        cdouble z = std::exp(kI * (k * h));
        cdouble W = D.eval_zeta(z);
        return std::exp(-W * span) * (qhat(z) + z * qhat(1.0 / z)) -
               0.5 * kI * (1.0 + z) * Ud(W);
      };
      break;
  }

  const double decay_rate = spec.initial.decay ? spec.initial.decay->rate : 1.0;
  const int seed = suggest_contour_panels(D, span, n_end, decay_rate, cfg);
  ContourQuadrature quad(h, cfg);
  FieldIntegral fi = quad.field(g, n_begin, n_end - n_begin + 1, seed);

  SolutionField out;
  out.h = h;
  out.T = T;
  out.n_begin = n_begin;
  out.values = std::move(fi.values);
  out.provenance = {std::string("explicit:") + case_name(id), cfg};
  return out;
}

double backward_variant_difference(const IBVPSpec& spec, int n_begin, int n_end,
                                   double T, const QuadratureConfig& cfg) {
  SolutionField a = solve_explicit(CaseId::AdvectionBackwardDirichlet, spec, n_begin,
                                   n_end, T, cfg);
  SolutionField b = solve_explicit(CaseId::AdvectionBackwardDirichletStart0, spec,
                                   n_begin, n_end, T, cfg);
  double diff = 0.0;
  for (size_t i = 0; i < a.values.size(); ++i)
    diff = std::max(diff, std::abs(a.values[i] - b.values[i]));
  return diff;
}

}  // namespace sdutm
