#pragma once

#include <memory>
#include <string>

#include "sdutm/types.hpp"

namespace sdutm {

/// Arithmetic over {x or t, exp, sin, cos, pi, numeric literals} with
/// + - * / and parentheses.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr parse_expression(const std::string& text, const std::string& variable);
double eval_expr(const ExprPtr& e, double value);
ExprPtr differentiate(const ExprPtr& e);

/// Space datum from an expression in x. A decay bound is probed from samples
/// (conservative envelope fit) so the lattice transform can truncate; the
/// bound is re-verified by validate().
SpaceFunction space_from_expr(const std::string& text);

/// Time datum from an expression in t with symbolic first and second
/// derivatives attached.
TimeFunction time_from_expr(const std::string& text);

}  // namespace sdutm
