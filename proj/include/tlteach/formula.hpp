#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tlteach {

/// Threshold predicates read `x <= bound`; label predicates hold on one named state.
struct AtomicPredicate {
  enum class Kind : std::uint8_t { Threshold, Label };

  Kind kind = Kind::Threshold;
  std::uint64_t bound = 0;
  std::string symbol;

  static AtomicPredicate threshold(std::uint64_t bound);
  static AtomicPredicate label(std::string symbol);

  friend bool operator==(const AtomicPredicate&, const AtomicPredicate&) = default;
};

enum class DemoLabel : std::int8_t { Negative = -1, Positive = 1 };

constexpr DemoLabel operator-(DemoLabel l) {
  return l == DemoLabel::Positive ? DemoLabel::Negative : DemoLabel::Positive;
}
constexpr int to_int(DemoLabel l) { return static_cast<int>(l); }

enum class Op : std::uint8_t { True, Atom, Not, And, Or, Implies, Eventually, Always };

struct FormulaNode;

/// Immutable formula handle. Copies share structure.
class Formula {
 public:
  Formula();  // True

  static Formula truth();
  static Formula atom(AtomicPredicate p);
  static Formula threshold(std::uint64_t bound);
  static Formula label(std::string symbol);
  static Formula negation(Formula f);
  static Formula conjunction(Formula a, Formula b);
  static Formula disjunction(Formula a, Formula b);
  static Formula implication(Formula a, Formula b);
  static Formula eventually(std::uint64_t tau, Formula f);
  static Formula always(std::uint64_t tau, Formula f);

  Op op() const;
  const AtomicPredicate& predicate() const;  // Op::Atom only
  std::uint64_t tau() const;                 // Eventually/Always only
  const Formula& child() const;              // Not/Eventually/Always
  const Formula& lhs() const;                // binary ops
  const Formula& rhs() const;

  bool is_temporal() const { return op() == Op::Eventually || op() == Op::Always; }
  /// Number of nodes.
  std::size_t size() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
  /// Total structural order, used for deterministic containers.
  friend bool operator<(const Formula& a, const Formula& b);

  std::size_t hash() const;

 private:
  explicit Formula(std::shared_ptr<const FormulaNode> node) : node_(std::move(node)) {}
  static Formula make(Op op, Formula a, Formula b, std::uint64_t tau);
  std::shared_ptr<const FormulaNode> node_;
};

struct FormulaNode {
  Op op = Op::True;
  AtomicPredicate atom;
  std::uint64_t tau = 0;
  Formula a;
  Formula b;
};

/// Rewrites Or/Implies into the base grammar {True, Atom, Not, And, F, G}.
Formula normalize(const Formula& f);

/// True when no Or/Implies node remains.
bool is_normalized(const Formula& f);

/// Canonical text form; re-parses to a structurally equal formula.
std::string render(const Formula& f);

/// Minimal trajectory length for a strong verdict of label `l`. Or/Implies are
/// normalized first.
std::uint64_t minimal_length(const Formula& f, DemoLabel l);

/// Sum of every temporal bound in the formula.
std::uint64_t temporal_sum(const Formula& f);

/// Longest chain of nested temporal bounds (how far past t a node looks).
std::uint64_t horizon(const Formula& f);

enum class Tri : std::uint8_t { Holds, Fails, Unknown };

/// Sound but incomplete implication check for F/G-over-threshold shapes.
Tri implies_syntactic(const Formula& f1, const Formula& f2);

/// Shape accessors for `F[<=i](x<=v)` / `G[<=i](x<=v)` and label variants.
struct GridShape {
  Op op;  // Eventually or Always
  std::uint64_t tau;
  AtomicPredicate atom;
};
std::optional<GridShape> grid_shape(const Formula& f);

}  // namespace tlteach

template <>
struct std::hash<tlteach::Formula> {
  std::size_t operator()(const tlteach::Formula& f) const noexcept { return f.hash(); }
};
