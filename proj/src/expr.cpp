#include "ricci2d/expr.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace ricci2d {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string format_point(const Point& p) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << p.x1 << ", " << p.x2 << ")";
  return os.str();
}

}  // namespace

void Domain::validate() const {
  auto check = [](const Interval& r, const char* name) {
    if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || !(r.lo < r.hi)) {
      throw std::invalid_argument(std::string("domain range for ") + name +
                                  " must satisfy lo < hi");
    }
  };
  check(x1, "x1");
  check(x2, "x2");
  if (!(guard > 0.0) || !std::isfinite(guard)) {
    throw std::invalid_argument("domain guard must be positive");
  }
}

bool Domain::contains(const Point& p) const noexcept {
  return p.x1 >= x1.lo && p.x1 <= x1.hi && p.x2 >= x2.lo && p.x2 <= x2.hi;
}

DomainError::DomainError(const std::string& node, const Point& at, const std::string& reason)
    : std::runtime_error("domain error in '" + node + "' at " + format_point(at) + ": " + reason),
      node_(node),
      point_(at) {}

ParseError::ParseError(std::size_t position, const std::string& what)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + what),
      position_(position),
      detail_(what) {}

Expr::Expr() : Expr(0.0) {}

Expr::Expr(double value) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("expression constants must be finite");
  }
  node_ = std::make_shared<const Node>(Node{ConstantNode{value}});
}

Expr Expr::variable(Var v) { return Expr(std::make_shared<const Node>(Node{VariableNode{v}})); }

Expr Expr::negate(Expr operand) {
  return Expr(std::make_shared<const Node>(Node{NegateNode{std::move(operand)}}));
}

Expr Expr::binary(BinaryOp op, Expr lhs, Expr rhs) {
  return Expr(
      std::make_shared<const Node>(Node{BinaryNode{op, std::move(lhs), std::move(rhs)}}));
}

Expr Expr::apply(Func f, Expr arg) {
  return Expr(std::make_shared<const Node>(Node{ApplyNode{f, std::move(arg)}}));
}

bool Expr::is_constant() const noexcept {
  return std::holds_alternative<ConstantNode>(node_->data);
}

double Expr::constant_value() const noexcept {
  const auto* c = std::get_if<ConstantNode>(&node_->data);
  return c ? c->value : 0.0;
}

bool Expr::is_constant(double v) const noexcept { return is_constant() && constant_value() == v; }

bool Expr::is_variable_free() const { return !depends_on(Var::X1) && !depends_on(Var::X2); }

bool Expr::depends_on(Var v) const {
  return std::visit(overloaded{
                        [](const ConstantNode&) { return false; },
                        [v](const VariableNode& n) { return n.var == v; },
                        [v](const NegateNode& n) { return n.operand.depends_on(v); },
                        [v](const BinaryNode& n) { return n.lhs.depends_on(v) || n.rhs.depends_on(v); },
                        [v](const ApplyNode& n) { return n.arg.depends_on(v); },
                    },
                    node_->data);
}

std::size_t Expr::size() const {
  return std::visit(overloaded{
                        [](const ConstantNode&) -> std::size_t { return 1; },
                        [](const VariableNode&) -> std::size_t { return 1; },
                        [](const NegateNode& n) { return 1 + n.operand.size(); },
                        [](const BinaryNode& n) { return 1 + n.lhs.size() + n.rhs.size(); },
                        [](const ApplyNode& n) { return 1 + n.arg.size(); },
                    },
                    node_->data);
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  const auto& da = a.node_->data;
  const auto& db = b.node_->data;
  if (da.index() != db.index()) return false;
  return std::visit(
      overloaded{
          [&](const ConstantNode& n) { return n.value == std::get<ConstantNode>(db).value; },
          [&](const VariableNode& n) { return n.var == std::get<VariableNode>(db).var; },
          [&](const NegateNode& n) { return n.operand == std::get<NegateNode>(db).operand; },
          [&](const BinaryNode& n) {
            const auto& o = std::get<BinaryNode>(db);
            return n.op == o.op && n.lhs == o.lhs && n.rhs == o.rhs;
          },
          [&](const ApplyNode& n) {
            const auto& o = std::get<ApplyNode>(db);
            return n.func == o.func && n.arg == o.arg;
          },
      },
      da);
}

Expr operator+(const Expr& a, const Expr& b) { return Expr::binary(BinaryOp::Add, a, b); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::binary(BinaryOp::Sub, a, b); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::binary(BinaryOp::Mul, a, b); }
Expr operator/(const Expr& a, const Expr& b) { return Expr::binary(BinaryOp::Div, a, b); }
Expr operator-(const Expr& a) { return Expr::negate(a); }
Expr pow(const Expr& base, const Expr& exponent) {
  return Expr::binary(BinaryOp::Pow, base, exponent);
}
Expr apply(Func f, const Expr& arg) { return Expr::apply(f, arg); }

std::string_view function_name(Func f) noexcept {
  switch (f) {
    case Func::Exp: return "exp";
    case Func::Log: return "log";
    case Func::Sin: return "sin";
    case Func::Cos: return "cos";
    case Func::Tan: return "tan";
    case Func::Sinh: return "sinh";
    case Func::Cosh: return "cosh";
    case Func::Tanh: return "tanh";
    case Func::Sech: return "sech";
    case Func::Sqrt: return "sqrt";
    case Func::Abs: return "abs";
    case Func::Sign: return "sign";
  }
  return "?";
}

std::string_view variable_name(Var v) noexcept { return v == Var::X1 ? "x1" : "x2"; }

// ---------------------------------------------------------------------------
// Printing

namespace {

// Binding strength; larger binds tighter.
constexpr int kPrecSum = 1;
constexpr int kPrecProduct = 2;
constexpr int kPrecUnary = 3;
constexpr int kPrecPower = 4;
constexpr int kPrecAtom = 5;

std::string format_number(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, end);
}

int precedence(const Expr& e) {
  return std::visit(overloaded{
                        [](const ConstantNode& n) { return n.value < 0 || std::signbit(n.value) ? kPrecUnary : kPrecAtom; },
                        [](const VariableNode&) { return kPrecAtom; },
                        [](const NegateNode&) { return kPrecUnary; },
                        [](const BinaryNode& n) {
                          switch (n.op) {
                            case BinaryOp::Add:
                            case BinaryOp::Sub: return kPrecSum;
                            case BinaryOp::Mul:
                            case BinaryOp::Div: return kPrecProduct;
                            case BinaryOp::Pow: return kPrecPower;
                          }
                          return kPrecAtom;
                        },
                        [](const ApplyNode&) { return kPrecAtom; },
                    },
                    e.node().data);
}

void print(const Expr& e, int min_prec, std::string& out);

void print_operand(const Expr& e, int min_prec, std::string& out) {
  if (precedence(e) < min_prec) {
    out += '(';
    print(e, kPrecSum, out);
    out += ')';
  } else {
    print(e, min_prec, out);
  }
}

void print(const Expr& e, int /*min_prec*/, std::string& out) {
  std::visit(overloaded{
                 [&](const ConstantNode& n) { out += format_number(n.value); },
                 [&](const VariableNode& n) { out += variable_name(n.var); },
                 [&](const NegateNode& n) {
                   out += '-';
                   print_operand(n.operand, kPrecUnary, out);
                 },
                 [&](const BinaryNode& n) {
                   switch (n.op) {
                     case BinaryOp::Add:
                     case BinaryOp::Sub:
                       print_operand(n.lhs, kPrecSum, out);
                       out += n.op == BinaryOp::Add ? " + " : " - ";
                       print_operand(n.rhs, kPrecProduct, out);
                       break;
                     case BinaryOp::Mul:
                     case BinaryOp::Div:
                       print_operand(n.lhs, kPrecProduct, out);
                       out += n.op == BinaryOp::Mul ? "*" : "/";
                       print_operand(n.rhs, kPrecUnary, out);
                       break;
                     case BinaryOp::Pow:
                       print_operand(n.lhs, kPrecAtom, out);
                       out += '^';
                       print_operand(n.rhs, kPrecUnary, out);
                       break;
                   }
                 },
                 [&](const ApplyNode& n) {
                   out += function_name(n.func);
                   out += '(';
                   print(n.arg, kPrecSum, out);
                   out += ')';
                 },
             },
             e.node().data);
}

}  // namespace

std::string to_string(const Expr& e) {
  std::string out;
  print(e, kPrecSum, out);
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

double apply_function(Func f, double x) {
  double r = 0.0;
  switch (f) {
    case Func::Exp: r = std::exp(x); break;
    case Func::Log:
      if (!(x > 0.0)) throw std::domain_error("log of non-positive argument");
      r = std::log(x);
      break;
    case Func::Sin: r = std::sin(x); break;
    case Func::Cos: r = std::cos(x); break;
    case Func::Tan: r = std::tan(x); break;
    case Func::Sinh: r = std::sinh(x); break;
    case Func::Cosh: r = std::cosh(x); break;
    case Func::Tanh: r = std::tanh(x); break;
    case Func::Sech: r = 1.0 / std::cosh(x); break;
    case Func::Sqrt:
      if (x < 0.0) throw std::domain_error("sqrt of negative argument");
      r = std::sqrt(x);
      break;
    case Func::Abs: r = std::abs(x); break;
    case Func::Sign: r = x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); break;
  }
  if (!std::isfinite(r)) throw std::domain_error("non-finite result");
  return r;
}

namespace {

// Integer exponents up to this size are evaluated by repeated multiplication.
constexpr double kMaxLoopExponent = 1024.0;

double power(double base, double exponent) {
  if (exponent == std::trunc(exponent) && std::abs(exponent) <= kMaxLoopExponent) {
    const auto n = static_cast<long long>(std::abs(exponent));
    if (exponent < 0 && base == 0.0) throw std::domain_error("zero raised to a negative power");
    double r = 1.0;
    for (long long i = 0; i < n; ++i) r *= base;
    if (exponent < 0) r = 1.0 / r;
    return r;
  }
  if (!(base > 0.0)) throw std::domain_error("non-integer power of non-positive base");
  return std::pow(base, exponent);
}

}  // namespace

double apply_binary(BinaryOp op, double a, double b) {
  double r = 0.0;
  switch (op) {
    case BinaryOp::Add: r = a + b; break;
    case BinaryOp::Sub: r = a - b; break;
    case BinaryOp::Mul: r = a * b; break;
    case BinaryOp::Div:
      if (b == 0.0) throw std::domain_error("division by zero");
      r = a / b;
      break;
    case BinaryOp::Pow: r = power(a, b); break;
  }
  if (!std::isfinite(r)) throw std::domain_error("non-finite result");
  return r;
}

namespace {

std::string node_label(const Expr& e) {
  constexpr std::size_t kMaxLabel = 160;
  std::string s = to_string(e);
  if (s.size() > kMaxLabel) s = s.substr(0, kMaxLabel) + "...";
  return s;
}

}  // namespace

double evaluate(const Expr& e, const Point& p) {
  return std::visit(overloaded{
                        [](const ConstantNode& n) { return n.value; },
                        [&](const VariableNode& n) { return p[n.var]; },
                        [&](const NegateNode& n) { return -evaluate(n.operand, p); },
                        [&](const BinaryNode& n) {
                          const double a = evaluate(n.lhs, p);
                          const double b = evaluate(n.rhs, p);
                          try {
                            return apply_binary(n.op, a, b);
                          } catch (const std::domain_error& err) {
                            throw DomainError(node_label(e), p, err.what());
                          }
                        },
                        [&](const ApplyNode& n) {
                          const double a = evaluate(n.arg, p);
                          try {
                            return apply_function(n.func, a);
                          } catch (const std::domain_error& err) {
                            throw DomainError(node_label(e), p, err.what());
                          }
                        },
                    },
                    e.node().data);
}

namespace {

void additive_terms(const Expr& e, std::vector<Expr>& out) {
  if (const auto* b = std::get_if<BinaryNode>(&e.node().data)) {
    if (b->op == BinaryOp::Add || b->op == BinaryOp::Sub) {
      additive_terms(b->lhs, out);
      additive_terms(b->rhs, out);
      return;
    }
  }
  if (const auto* n = std::get_if<NegateNode>(&e.node().data)) {
    additive_terms(n->operand, out);
    return;
  }
  out.push_back(e);
}

void push_unique(std::vector<Expr>& out, const Expr& e) {
  if (e.is_constant()) return;
  if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
}

void collect_singular(const Expr& e, std::vector<Expr>& out) {
  std::visit(overloaded{
                 [](const ConstantNode&) {},
                 [](const VariableNode&) {},
                 [&](const NegateNode& n) { collect_singular(n.operand, out); },
                 [&](const BinaryNode& n) {
                   collect_singular(n.lhs, out);
                   collect_singular(n.rhs, out);
                   if (n.op == BinaryOp::Div) push_unique(out, n.rhs);
                   if (n.op == BinaryOp::Pow) {
                     const bool small_integer = n.rhs.is_constant() &&
                                                n.rhs.constant_value() >= 0 &&
                                                n.rhs.constant_value() == std::trunc(n.rhs.constant_value());
                     if (!small_integer) push_unique(out, n.lhs);
                   }
                 },
                 [&](const ApplyNode& n) {
                   collect_singular(n.arg, out);
                   if (n.func == Func::Log || n.func == Func::Sqrt) push_unique(out, n.arg);
                 },
             },
             e.node().data);
}

void collect_kinks(const Expr& e, std::vector<Expr>& out) {
  std::visit(overloaded{
                 [](const ConstantNode&) {},
                 [](const VariableNode&) {},
                 [&](const NegateNode& n) { collect_kinks(n.operand, out); },
                 [&](const BinaryNode& n) {
                   collect_kinks(n.lhs, out);
                   collect_kinks(n.rhs, out);
                 },
                 [&](const ApplyNode& n) {
                   collect_kinks(n.arg, out);
                   if (n.func == Func::Abs || n.func == Func::Sign) push_unique(out, n.arg);
                 },
             },
             e.node().data);
}

}  // namespace

double magnitude_scale(const Expr& e, const Point& p) {
  std::vector<Expr> terms;
  additive_terms(e, terms);
  double scale = 0.0;
  for (const auto& t : terms) scale = std::max(scale, std::abs(evaluate(t, p)));
  return scale;
}

std::vector<Expr> singular_factors(const Expr& e) {
  std::vector<Expr> out;
  collect_singular(e, out);
  return out;
}

std::vector<Expr> kink_arguments(const Expr& e) {
  std::vector<Expr> out;
  collect_kinks(e, out);
  return out;
}

Expr substitute(const Expr& e, Var from, const Expr& to) {
  return std::visit(overloaded{
                        [&](const ConstantNode&) { return e; },
                        [&](const VariableNode& n) { return n.var == from ? to : e; },
                        [&](const NegateNode& n) { return Expr::negate(substitute(n.operand, from, to)); },
                        [&](const BinaryNode& n) {
                          return Expr::binary(n.op, substitute(n.lhs, from, to),
                                              substitute(n.rhs, from, to));
                        },
                        [&](const ApplyNode& n) { return Expr::apply(n.func, substitute(n.arg, from, to)); },
                    },
                    e.node().data);
}

}  // namespace ricci2d
