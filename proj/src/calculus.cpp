#include <cmath>
#include <optional>

#include "ricci2d/expr.hpp"

namespace ricci2d {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const NegateNode* as_negate(const Expr& e) { return std::get_if<NegateNode>(&e.node().data); }

std::optional<double> fold(BinaryOp op, double a, double b) {
  try {
    return apply_binary(op, a, b);
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
}

// Smart constructors. Each rewrite below is exact in IEEE arithmetic, which is
// what lets simplify promise bit-identical values.

Expr make_neg(const Expr& a) {
  if (a.is_constant()) return Expr(-a.constant_value());
  if (const auto* n = as_negate(a)) return n->operand;
  return -a;
}

Expr make_sub(const Expr& a, const Expr& b);

Expr make_add(const Expr& a, const Expr& b) {
  if (a.is_constant() && b.is_constant()) {
    if (auto v = fold(BinaryOp::Add, a.constant_value(), b.constant_value())) return Expr(*v);
  }
  if (a.is_constant(0.0)) return b;
  if (b.is_constant(0.0)) return a;
  if (const auto* n = as_negate(b)) return make_sub(a, n->operand);
  if (b.is_constant() && b.constant_value() < 0) return make_sub(a, Expr(-b.constant_value()));
  return a + b;
}

Expr make_sub(const Expr& a, const Expr& b) {
  if (a.is_constant() && b.is_constant()) {
    if (auto v = fold(BinaryOp::Sub, a.constant_value(), b.constant_value())) return Expr(*v);
  }
  if (b.is_constant(0.0)) return a;
  if (a.is_constant(0.0)) return make_neg(b);
  if (const auto* n = as_negate(b)) return make_add(a, n->operand);
  if (b.is_constant() && b.constant_value() < 0) return make_add(a, Expr(-b.constant_value()));
  return a - b;
}

Expr make_mul(const Expr& a, const Expr& b) {
  if (a.is_constant() && b.is_constant()) {
    if (auto v = fold(BinaryOp::Mul, a.constant_value(), b.constant_value())) return Expr(*v);
  }
  if (a.is_constant(0.0) || b.is_constant(0.0)) return Expr(0.0);
  if (a.is_constant(1.0)) return b;
  if (b.is_constant(1.0)) return a;
  if (a.is_constant(-1.0)) return make_neg(b);
  if (b.is_constant(-1.0)) return make_neg(a);
  return a * b;
}

Expr make_div(const Expr& a, const Expr& b) {
  if (a.is_constant() && b.is_constant()) {
    if (auto v = fold(BinaryOp::Div, a.constant_value(), b.constant_value())) return Expr(*v);
  }
  if (a.is_constant(0.0)) return Expr(0.0);
  if (b.is_constant(1.0)) return a;
  if (b.is_constant(-1.0)) return make_neg(a);
  return a / b;
}

Expr make_pow(const Expr& a, const Expr& b) {
  if (a.is_constant() && b.is_constant()) {
    if (auto v = fold(BinaryOp::Pow, a.constant_value(), b.constant_value())) return Expr(*v);
  }
  if (b.is_constant(1.0)) return a;
  // Integer powers multiply repeatedly, so x^0 is 1 for every x.
  if (b.is_constant(0.0)) return Expr(1.0);
  return pow(a, b);
}

Expr make_apply(Func f, const Expr& a) {
  if (a.is_constant()) {
    try {
      return Expr(apply_function(f, a.constant_value()));
    } catch (const std::domain_error&) {
    }
  }
  return apply(f, a);
}

Expr make_binary(BinaryOp op, const Expr& a, const Expr& b) {
  switch (op) {
    case BinaryOp::Add: return make_add(a, b);
    case BinaryOp::Sub: return make_sub(a, b);
    case BinaryOp::Mul: return make_mul(a, b);
    case BinaryOp::Div: return make_div(a, b);
    case BinaryOp::Pow: return make_pow(a, b);
  }
  return Expr::binary(op, a, b);
}

Expr derivative_of_function(Func f, const Expr& u) {
  switch (f) {
    case Func::Exp: return make_apply(Func::Exp, u);
    case Func::Log: return make_div(Expr(1.0), u);
    case Func::Sin: return make_apply(Func::Cos, u);
    case Func::Cos: return make_neg(make_apply(Func::Sin, u));
    case Func::Tan: return make_div(Expr(1.0), make_pow(make_apply(Func::Cos, u), Expr(2.0)));
    case Func::Sinh: return make_apply(Func::Cosh, u);
    case Func::Cosh: return make_apply(Func::Sinh, u);
    case Func::Tanh: return make_pow(make_apply(Func::Sech, u), Expr(2.0));
    case Func::Sech:
      return make_neg(make_mul(make_apply(Func::Sech, u), make_apply(Func::Tanh, u)));
    case Func::Sqrt: return make_div(Expr(1.0), make_mul(Expr(2.0), make_apply(Func::Sqrt, u)));
    // u/|u| equals sign(u) away from 0 and is undefined at 0.
    case Func::Abs: return make_div(u, make_apply(Func::Abs, u));
    // (u - u)/u: zero away from 0, undefined at 0. Written so that the
    // 0/e rule of simplify cannot erase the singularity.
    case Func::Sign: return Expr::binary(BinaryOp::Div, Expr::binary(BinaryOp::Sub, u, u), u);
  }
  return Expr(0.0);
}

Expr derive(const Expr& e, Var v) {
  return std::visit(
      overloaded{
          [](const ConstantNode&) { return Expr(0.0); },
          [v](const VariableNode& n) { return Expr(n.var == v ? 1.0 : 0.0); },
          [v](const NegateNode& n) { return make_neg(derive(n.operand, v)); },
          [&](const BinaryNode& n) -> Expr {
            const Expr& a = n.lhs;
            const Expr& b = n.rhs;
            switch (n.op) {
              case BinaryOp::Add: return make_add(derive(a, v), derive(b, v));
              case BinaryOp::Sub: return make_sub(derive(a, v), derive(b, v));
              case BinaryOp::Mul:
                return make_add(make_mul(derive(a, v), b), make_mul(a, derive(b, v)));
              case BinaryOp::Div: {
                if (!b.depends_on(v)) return make_div(derive(a, v), b);
                return make_div(make_sub(make_mul(derive(a, v), b), make_mul(a, derive(b, v))),
                                make_pow(b, Expr(2.0)));
              }
              case BinaryOp::Pow: {
                if (!b.depends_on(v)) {
                  // d(a^n) = n a^(n-1) a'
                  const Expr da = derive(a, v);
                  if (da.is_constant(0.0)) return Expr(0.0);
                  return make_mul(make_mul(b, make_pow(a, make_sub(b, Expr(1.0)))), da);
                }
                // d(a^b) = a^b (b' log a + b a'/a), defined for a > 0
                const Expr db = derive(b, v);
                const Expr da = derive(a, v);
                return make_mul(e, make_add(make_mul(db, make_apply(Func::Log, a)),
                                            make_div(make_mul(b, da), a)));
              }
            }
            return Expr(0.0);
          },
          [v](const ApplyNode& n) {
            const Expr du = derive(n.arg, v);
            if (du.is_constant(0.0)) return Expr(0.0);
            return make_mul(derivative_of_function(n.func, n.arg), du);
          },
      },
      e.node().data);
}

}  // namespace

Expr simplify(const Expr& e) {
  return std::visit(overloaded{
                        [&](const ConstantNode&) { return e; },
                        [&](const VariableNode&) { return e; },
                        [](const NegateNode& n) { return make_neg(simplify(n.operand)); },
                        [](const BinaryNode& n) {
                          return make_binary(n.op, simplify(n.lhs), simplify(n.rhs));
                        },
                        [](const ApplyNode& n) { return make_apply(n.func, simplify(n.arg)); },
                    },
                    e.node().data);
}

Expr differentiate(const Expr& e, Var v) { return simplify(derive(e, v)); }

}  // namespace ricci2d
