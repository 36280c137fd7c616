#include "sdutm/expr.hpp"

#include <cctype>
#include <cmath>
#include <memory>
#include <vector>

namespace sdutm {

enum class ExprKind { Const, Var, Add, Sub, Mul, Div, Neg, Exp, Sin, Cos };

struct Expr {
  ExprKind kind;
  double value = 0.0;
  ExprPtr a, b;
};

namespace {

ExprPtr make(ExprKind k, ExprPtr a = nullptr, ExprPtr b = nullptr) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->a = std::move(a);
  e->b = std::move(b);
  return e;
}

ExprPtr constant(double v) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Const;
  e->value = v;
  return e;
}

class Parser {
 public:
  Parser(const std::string& text, std::string var) : s_(text), var_(std::move(var)) {}

  ExprPtr parse() {
    ExprPtr e = expression();
    skip_ws();
    if (pos_ != s_.size())
      throw Error(kErrBadArgument, "trailing characters in expression: '" +
                                       s_.substr(pos_) + "'");
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExprPtr expression() {
    ExprPtr e = term();
    for (;;) {
      if (eat('+')) e = make(ExprKind::Add, e, term());
      else if (eat('-')) e = make(ExprKind::Sub, e, term());
      else return e;
    }
  }

  ExprPtr term() {
    ExprPtr e = factor();
    for (;;) {
      if (eat('*')) e = make(ExprKind::Mul, e, factor());
      else if (eat('/')) e = make(ExprKind::Div, e, factor());
      else return e;
    }
  }

  ExprPtr factor() {
    if (eat('-')) return make(ExprKind::Neg, factor());
    if (eat('+')) return factor();
    return primary();
  }

  ExprPtr primary() {
    skip_ws();
    if (pos_ >= s_.size()) throw Error(kErrBadArgument, "unexpected end of expression");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return word();
    if (eat('(')) {
      ExprPtr e = expression();
      if (!eat(')')) throw Error(kErrBadArgument, "missing ')'");
      return e;
    }
    throw Error(kErrBadArgument, std::string("unexpected character '") + c + "'");
  }

  ExprPtr number() {
    size_t end = pos_;
    while (end < s_.size() &&
           (std::isdigit(static_cast<unsigned char>(s_[end])) || s_[end] == '.' ||
            s_[end] == 'e' || s_[end] == 'E' ||
            ((s_[end] == '+' || s_[end] == '-') && end > pos_ &&
             (s_[end - 1] == 'e' || s_[end - 1] == 'E'))))
      ++end;
    double v = std::stod(s_.substr(pos_, end - pos_));
    pos_ = end;
    return constant(v);
  }

  ExprPtr word() {
    size_t end = pos_;
    while (end < s_.size() && std::isalpha(static_cast<unsigned char>(s_[end]))) ++end;
    std::string w = s_.substr(pos_, end - pos_);
    pos_ = end;
    if (w == "pi") return constant(kPi);
    if (w == var_) return make(ExprKind::Var);
    if (w == "exp" || w == "sin" || w == "cos") {
      if (!eat('(')) throw Error(kErrBadArgument, w + " expects '('");
      ExprPtr arg = expression();
      if (!eat(')')) throw Error(kErrBadArgument, "missing ')' after " + w);
      ExprKind k = (w == "exp") ? ExprKind::Exp : (w == "sin") ? ExprKind::Sin : ExprKind::Cos;
      return make(k, arg);
    }
    throw Error(kErrBadArgument, "unknown identifier '" + w + "'");
  }

  const std::string& s_;
  std::string var_;
  size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expression(const std::string& text, const std::string& variable) {
  return Parser(text, variable).parse();
}

double eval_expr(const ExprPtr& e, double v) {
  switch (e->kind) {
    case ExprKind::Const: return e->value;
    case ExprKind::Var: return v;
    case ExprKind::Add: return eval_expr(e->a, v) + eval_expr(e->b, v);
    case ExprKind::Sub: return eval_expr(e->a, v) - eval_expr(e->b, v);
    case ExprKind::Mul: return eval_expr(e->a, v) * eval_expr(e->b, v);
    case ExprKind::Div: return eval_expr(e->a, v) / eval_expr(e->b, v);
    case ExprKind::Neg: return -eval_expr(e->a, v);
    case ExprKind::Exp: return std::exp(eval_expr(e->a, v));
    case ExprKind::Sin: return std::sin(eval_expr(e->a, v));
    case ExprKind::Cos: return std::cos(eval_expr(e->a, v));
  }
  return 0.0;
}

ExprPtr differentiate(const ExprPtr& e) {
  switch (e->kind) {
    case ExprKind::Const: return constant(0.0);
    case ExprKind::Var: return constant(1.0);
    case ExprKind::Add: return make(ExprKind::Add, differentiate(e->a), differentiate(e->b));
    case ExprKind::Sub: return make(ExprKind::Sub, differentiate(e->a), differentiate(e->b));
    case ExprKind::Mul:
      return make(ExprKind::Add, make(ExprKind::Mul, differentiate(e->a), e->b),
                  make(ExprKind::Mul, e->a, differentiate(e->b)));
    case ExprKind::Div:
      return make(ExprKind::Div,
                  make(ExprKind::Sub, make(ExprKind::Mul, differentiate(e->a), e->b),
                       make(ExprKind::Mul, e->a, differentiate(e->b))),
                  make(ExprKind::Mul, e->b, e->b));
    case ExprKind::Neg: return make(ExprKind::Neg, differentiate(e->a));
    case ExprKind::Exp: return make(ExprKind::Mul, differentiate(e->a), make(ExprKind::Exp, e->a));
    case ExprKind::Sin: return make(ExprKind::Mul, differentiate(e->a), make(ExprKind::Cos, e->a));
    case ExprKind::Cos:
      return make(ExprKind::Neg,
                  make(ExprKind::Mul, differentiate(e->a), make(ExprKind::Sin, e->a)));
  }
  return constant(0.0);
}

SpaceFunction space_from_expr(const std::string& text) {
  ExprPtr ast = parse_expression(text, "x");
  SpaceFunction f;
  f.label = text;
  f.value = [ast](double x) { return cdouble(eval_expr(ast, x), 0.0); };

  // Probe a conservative exponential envelope |phi| <= A e^{-alpha x}.
  double x1 = 18.0, x2 = 36.0;
  double v1 = std::abs(eval_expr(ast, x1)) + 1e-300;
  double v2 = std::abs(eval_expr(ast, x2)) + 1e-300;
  double alpha = (std::log(v1) - std::log(v2)) / (x2 - x1);
  if (!(alpha > 1e-3) || !std::isfinite(alpha)) {
    f.decay = std::nullopt;  // no usable decay detected; caller must truncate
    return f;
  }
  alpha *= 0.9;
  double A = 0.0;
  for (int j = 0; j <= 400; ++j) {
    double x = j * 0.15;
    A = std::max(A, std::abs(eval_expr(ast, x)) * std::exp(alpha * x));
  }
  f.decay = DecayBound{2.0 * A + 1e-300, alpha};
  return f;
}

TimeFunction time_from_expr(const std::string& text) {
  ExprPtr ast = parse_expression(text, "t");
  ExprPtr d1 = differentiate(ast);
  ExprPtr d2 = differentiate(d1);
  TimeFunction f;
  f.label = text;
  f.value = [ast](double t) { return cdouble(eval_expr(ast, t), 0.0); };
  f.d1 = [d1](double t) { return cdouble(eval_expr(d1, t), 0.0); };
  f.d2 = [d2](double t) { return cdouble(eval_expr(d2, t), 0.0); };
  return f;
}

}  // namespace sdutm
