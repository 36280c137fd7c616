#include "sdutm/types.hpp"

#include <cmath>

namespace sdutm {

namespace {

double factorial(int p) {
  double f = 1.0;
  for (int i = 2; i <= p; ++i) f *= i;
  return f;
}

}  // namespace

std::vector<Violation> stencil_consistency(const StencilSpec& st, cdouble target) {
  std::vector<Violation> out;
  double scale = 0.0;
  for (const auto& a : st.coeffs) scale = std::max(scale, std::abs(a));
  if (scale == 0.0) {
    out.push_back({"stencil_coeffs_zero", "all stencil coefficients vanish", Severity::Error});
    return out;
  }
  const double tol = 1e-12 * scale;
  for (int p = 0; p < st.h_power; ++p) {
    cdouble s = 0.0;
    for (size_t i = 0; i < st.offsets.size(); ++i)
      s += st.coeffs[i] * std::pow(double(st.offsets[i]), double(p)) / factorial(p);
    if (std::abs(s) > tol)
      out.push_back({"stencil_inconsistent",
                     "consistency sum at derivative order " + std::to_string(p) +
                         " does not vanish",
                     Severity::Error});
  }
  cdouble lead = 0.0;
  for (size_t i = 0; i < st.offsets.size(); ++i)
    lead += st.coeffs[i] * std::pow(double(st.offsets[i]), double(st.h_power)) /
            factorial(st.h_power);
  if (std::abs(lead - target) > 1e-10 * (1.0 + std::abs(target)))
    out.push_back({"stencil_wrong_leading_coefficient",
                   "leading consistency sum does not match the PDE coefficient",
                   Severity::Error});
  return out;
}

std::vector<Violation> validate(const IBVPSpec& spec) {
  std::vector<Violation> out;

  if (!(spec.h > 0.0))
    out.push_back({"h_nonpositive", "mesh width h must be positive", Severity::Error});
  if (spec.pde.kind == PdeKind::Advection && !(spec.pde.c > 0.0))
    out.push_back({"c_nonpositive", "advection speed c must be positive", Severity::Error});

  const auto& st = spec.stencil;
  if (st.offsets.empty())
    out.push_back({"stencil_offsets_empty", "stencil has no offsets", Severity::Error});
  if (st.offsets.size() != st.coeffs.size())
    out.push_back({"stencil_size_mismatch", "offsets and coefficients differ in length",
                   Severity::Error});
  for (size_t i = 1; i < st.offsets.size(); ++i)
    if (st.offsets[i] <= st.offsets[i - 1]) {
      out.push_back({"stencil_offsets_invalid", "offsets must be strictly increasing",
                     Severity::Error});
      break;
    }
  if (st.h_power < 1)
    out.push_back({"stencil_hpower_invalid", "h_power must be >= 1", Severity::Error});

  if (!has_fatal(out)) {
    auto cons = stencil_consistency(st, spec.pde.leading_coefficient());
    out.insert(out.end(), cons.begin(), cons.end());
  }

  // Boundary kind compatible with the equation.
  const BoundaryKind bk = spec.boundary.kind;
  bool ok = true;
  switch (spec.pde.kind) {
    case PdeKind::Advection:
      ok = (spec.pde.sign > 0) ? (bk == BoundaryKind::None) : (bk == BoundaryKind::Dirichlet);
      break;
    case PdeKind::Heat:
    case PdeKind::Schrodinger:
      ok = (bk == BoundaryKind::Dirichlet || bk == BoundaryKind::Neumann);
      break;
  }
  if (!ok)
    out.push_back({"boundary_kind_incompatible",
                   "boundary kind is not admissible for this equation", Severity::Error});

  if (!spec.initial.value)
    out.push_back({"initial_missing", "initial datum has no evaluator", Severity::Error});
  if (bk != BoundaryKind::None && !spec.boundary.data.value)
    out.push_back({"boundary_missing", "boundary datum has no evaluator", Severity::Error});

  if (has_fatal(out)) return out;

  // Corner compatibility at (x, t) = (0, t0), tolerance 1e-8.
  if (bk == BoundaryKind::Dirichlet) {
    cdouble u0 = spec.boundary.data.value(spec.t0);
    cdouble p0 = spec.initial.value(0.0);
    if (std::abs(u0 - p0) > 1e-8)
      out.push_back({"corner_mismatch",
                     "Dirichlet datum at t0 differs from the initial trace at x=0",
                     Severity::Warning});
  } else if (bk == BoundaryKind::Neumann) {
    cdouble v0 = spec.boundary.data.value(spec.t0);
    const double d = 1e-6;
    cdouble dp = (spec.initial.value(2.0 * d) - spec.initial.value(0.0)) / (2.0 * d);
    // one-sided O(d) probe refined by Richardson with the half step
    cdouble dp2 = (spec.initial.value(d) - spec.initial.value(0.0)) / d;
    cdouble deriv = 2.0 * dp2 - dp;
    if (std::abs(v0 - deriv) > 1e-6)
      out.push_back({"corner_mismatch",
                     "Neumann datum at t0 differs from the initial slope at x=0",
                     Severity::Warning});
  }

  // Declared decay bound must hold at sampled grid points.
  if (spec.initial.decay && spec.initial.value) {
    const auto& db = *spec.initial.decay;
    for (int n = 0; n <= 400; n += 7) {
      double x = n * spec.h;
      if (std::abs(spec.initial.value(x)) >
          db.amplitude * std::exp(-db.rate * x) * (1.0 + 1e-9) + 1e-300) {
        out.push_back({"decay_bound_violated",
                       "initial datum exceeds its declared decay bound", Severity::Error});
        break;
      }
    }
  }

  // Declared time derivatives must agree with centered differences.
  const auto& g = spec.boundary.data;
  if (bk != BoundaryKind::None && g.value && g.d1) {
    double t = spec.t0 + 0.37;
    const double d = 1e-5;
    cdouble fd = (g.value(t + d) - g.value(t - d)) / (2.0 * d);
    double scale = std::abs(g.d1(t)) + 1.0;
    if (std::abs(fd - g.d1(t)) > 1e-6 * scale)
      out.push_back({"derivative_mismatch",
                     "declared first derivative disagrees with finite differences",
                     Severity::Warning});
  }

  return out;
}

bool has_fatal(const std::vector<Violation>& violations) {
  for (const auto& v : violations)
    if (v.severity == Severity::Error) return true;
  return false;
}

namespace stencils {

StencilSpec advection_forward(double c) {
  return {{0, 1}, {-c, c}, 1, "advection forward"};
}

StencilSpec advection_backward(double c) {
  return {{-1, 0}, {c, -c}, 1, "advection backward"};
}

StencilSpec advection_centered(double c) {
  return {{-1, 1}, {0.5 * c, -0.5 * c}, 1, "advection centered"};
}

StencilSpec advection_backward2(double c) {
  return {{-2, -1, 0}, {-0.5 * c, 2.0 * c, -1.5 * c}, 1, "advection backward second order"};
}

StencilSpec heat_centered() {
  return {{-1, 0, 1}, {1.0, -2.0, 1.0}, 2, "heat centered"};
}

StencilSpec heat_centered4() {
  return {{-2, -1, 0, 1, 2},
          {-1.0 / 12.0, 16.0 / 12.0, -30.0 / 12.0, 16.0 / 12.0, -1.0 / 12.0},
          2,
          "heat centered fourth order"};
}

StencilSpec heat_forward() {
  return {{0, 1, 2}, {1.0, -2.0, 1.0}, 2, "heat one-sided forward"};
}

StencilSpec heat_backward() {
  return {{-2, -1, 0}, {1.0, -2.0, 1.0}, 2, "heat one-sided backward"};
}

StencilSpec schrodinger_centered() {
  const cdouble a = kI * 0.5;
  return {{-1, 0, 1}, {a, -2.0 * a, a}, 2, "schrodinger centered"};
}

}  // namespace stencils

}  // namespace sdutm
