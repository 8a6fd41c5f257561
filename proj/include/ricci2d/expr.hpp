#pragma once

/// @file expr.hpp
/// @brief Immutable symbolic expressions in the two plane coordinates x1, x2.
///
/// An Expr is a shared, immutable tree. Copies are cheap (one shared_ptr) and
/// trees may be handed to other threads freely. The node set is deliberately
/// small: constants, the two coordinates, negation, the five binary operators
/// and a fixed list of elementary functions.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ricci2d {

enum class Var { X1, X2 };

enum class Func { Exp, Log, Sin, Cos, Tan, Sinh, Cosh, Tanh, Sech, Sqrt, Abs, Sign };

enum class BinaryOp { Add, Sub, Mul, Div, Pow };

struct Point {
  double x1 = 0.0;
  double x2 = 0.0;

  [[nodiscard]] double operator[](Var v) const noexcept { return v == Var::X1 ? x1 : x2; }
  [[nodiscard]] Point shifted(Var v, double h) const noexcept {
    return v == Var::X1 ? Point{x1 + h, x2} : Point{x1, x2 + h};
  }
};

/// Closed interval [lo, hi] with lo < hi.
struct Interval {
  double lo = -1.0;
  double hi = 1.0;
};

/// Rectangular sampling region plus the minimum |denominator| tolerated at a
/// sample point.
struct Domain {
  Interval x1{};
  Interval x2{};
  double guard = 1e-6;

  /// Throws std::invalid_argument if a range is empty or the guard is not positive.
  void validate() const;
  [[nodiscard]] bool contains(const Point& p) const noexcept;
};

/// Raised when evaluation leaves the real domain of a node (division by zero,
/// log of a non-positive number, overflow, ...).
class DomainError : public std::runtime_error {
 public:
  DomainError(const std::string& node, const Point& at, const std::string& reason);
  [[nodiscard]] const std::string& node() const noexcept { return node_; }
  [[nodiscard]] const Point& point() const noexcept { return point_; }

 private:
  std::string node_;
  Point point_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what);
  [[nodiscard]] std::size_t position() const noexcept { return position_; }
  /// The message without the position prefix.
  [[nodiscard]] const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t position_;
  std::string detail_;
};

struct Node;

class Expr {
 public:
  /// The constant 0.
  Expr();
  /// Implicit so that `2.0 * e` reads naturally.
  Expr(double value);  // NOLINT(google-explicit-constructor)

  [[nodiscard]] static Expr variable(Var v);
  [[nodiscard]] static Expr negate(Expr operand);
  [[nodiscard]] static Expr binary(BinaryOp op, Expr lhs, Expr rhs);
  [[nodiscard]] static Expr apply(Func f, Expr arg);

  [[nodiscard]] const Node& node() const noexcept { return *node_; }

  [[nodiscard]] bool is_constant() const noexcept;
  /// Value of a Constant node; only meaningful when is_constant().
  [[nodiscard]] double constant_value() const noexcept;
  [[nodiscard]] bool is_constant(double v) const noexcept;
  /// True when no Variable node occurs anywhere in the tree.
  [[nodiscard]] bool is_variable_free() const;
  [[nodiscard]] bool depends_on(Var v) const;
  [[nodiscard]] std::size_t size() const;

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct ConstantNode {
  double value;
};
struct VariableNode {
  Var var;
};
struct NegateNode {
  Expr operand;
};
struct BinaryNode {
  BinaryOp op;
  Expr lhs;
  Expr rhs;
};
struct ApplyNode {
  Func func;
  Expr arg;
};

struct Node {
  std::variant<ConstantNode, VariableNode, NegateNode, BinaryNode, ApplyNode> data;
};

// Raw constructors: no simplification happens here.
[[nodiscard]] Expr operator+(const Expr& a, const Expr& b);
[[nodiscard]] Expr operator-(const Expr& a, const Expr& b);
[[nodiscard]] Expr operator*(const Expr& a, const Expr& b);
[[nodiscard]] Expr operator/(const Expr& a, const Expr& b);
[[nodiscard]] Expr operator-(const Expr& a);
[[nodiscard]] Expr pow(const Expr& base, const Expr& exponent);
[[nodiscard]] Expr apply(Func f, const Expr& arg);
[[nodiscard]] inline Expr x1() { return Expr::variable(Var::X1); }
[[nodiscard]] inline Expr x2() { return Expr::variable(Var::X2); }

[[nodiscard]] std::string_view function_name(Func f) noexcept;
[[nodiscard]] std::string_view variable_name(Var v) noexcept;

/// Infix text in the same grammar `parse` accepts. Output is minimally
/// parenthesised and reparses to a structurally equal tree.
[[nodiscard]] std::string to_string(const Expr& e);

/// Grammar:
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' unary)?
///   primary := number | 'x1' | 'x2' | func '(' expr ')' | '(' expr ')'
/// A '-' directly in front of a numeric literal that is not itself raised to
/// a power is folded into a negative Constant.
[[nodiscard]] Expr parse(std::string_view text);

/// Exact symbolic partial derivative. The result is passed through simplify.
[[nodiscard]] Expr differentiate(const Expr& e, Var v);

/// Constant folding plus the 0/1 identities; never reassociates, so the
/// result evaluates bit-identically wherever both trees are defined.
[[nodiscard]] Expr simplify(const Expr& e);

/// Throws DomainError naming the failing node and the point.
[[nodiscard]] double evaluate(const Expr& e, const Point& p);

/// Magnitude of the largest top-level additive term of e at p. Used to make
/// zero tests relative to the size of the quantities that cancel.
[[nodiscard]] double magnitude_scale(const Expr& e, const Point& p);

/// Sub-expressions whose vanishing makes e undefined: divisor operands,
/// bases raised to negative or non-integer powers, and log/sqrt arguments.
[[nodiscard]] std::vector<Expr> singular_factors(const Expr& e);

/// Arguments of every abs/sign node: places where e is not smooth.
[[nodiscard]] std::vector<Expr> kink_arguments(const Expr& e);

/// Replace every occurrence of `from` by `to`.
[[nodiscard]] Expr substitute(const Expr& e, Var from, const Expr& to);

/// Evaluation helpers shared by evaluate and constant folding, so that folding
/// reproduces evaluation bit for bit. Both throw std::domain_error on failure.
[[nodiscard]] double apply_function(Func f, double x);
[[nodiscard]] double apply_binary(BinaryOp op, double a, double b);

/// Randomised test: e vanishes at `samples` seeded points of d, within
/// tol * (1 + magnitude_scale). Points where a singular factor is smaller
/// than d.guard are rejected and redrawn.
[[nodiscard]] bool is_probably_zero(const Expr& e, const Domain& d, std::size_t samples,
                                    std::uint64_t seed, double tol = 1e-9);

}  // namespace ricci2d
