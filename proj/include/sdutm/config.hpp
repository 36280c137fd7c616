#pragma once

#include <map>
#include <string>

#include "sdutm/types.hpp"

namespace sdutm {

/// Problem description read from a nested key-value text file:
///
///   pde           = advection | heat | schrodinger
///   c             = 1.0            (advection speed)
///   h             = 0.01
///   t0            = 0
///   initial.expr  = exp(-2*x)*(sin(4*pi*x)+1)/2
///   boundary.kind = none | dirichlet | neumann
///   boundary.expr = -sin(4*pi*t)
///   stencil       = forward1 | backward1 | centered1 | backward2 |
///                   centered2 | centered4 | forward2 | backward2heat
///
/// Advection direction follows the boundary kind: none means q_t = +c q_x,
/// dirichlet means q_t = -c q_x. When `stencil` is omitted a natural default
/// is chosen (forward1 / backward1 / centered2). Custom real-coefficient
/// stencils may be given as stencil.offsets / stencil.coeffs / stencil.hpower
/// (comma-separated, coefficients include the PDE constant).
IBVPSpec parse_problem_config(const std::string& text);
IBVPSpec load_problem_config(const std::string& path);

std::map<std::string, std::string> parse_key_values(const std::string& text);

}  // namespace sdutm
