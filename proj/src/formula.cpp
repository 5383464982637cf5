#include "tlteach/formula.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace tlteach {

AtomicPredicate AtomicPredicate::threshold(std::uint64_t bound) {
  AtomicPredicate p;
  p.kind = Kind::Threshold;
  p.bound = bound;
  return p;
}

AtomicPredicate AtomicPredicate::label(std::string symbol) {
  AtomicPredicate p;
  p.kind = Kind::Label;
  p.symbol = std::move(symbol);
  return p;
}

// A null node is the constant True, so default construction never allocates.
Formula::Formula() = default;

Formula Formula::make(Op op, Formula a, Formula b, std::uint64_t tau) {
  auto n = std::make_shared<FormulaNode>();
  n->op = op;
  n->a = std::move(a);
  n->b = std::move(b);
  n->tau = tau;
  return Formula(std::move(n));
}

Formula Formula::truth() { return Formula(); }

Formula Formula::atom(AtomicPredicate p) {
  auto n = std::make_shared<FormulaNode>();
  n->op = Op::Atom;
  n->atom = std::move(p);
  return Formula(std::move(n));
}

Formula Formula::threshold(std::uint64_t bound) { return atom(AtomicPredicate::threshold(bound)); }
Formula Formula::label(std::string symbol) { return atom(AtomicPredicate::label(std::move(symbol))); }
Formula Formula::negation(Formula f) { return make(Op::Not, std::move(f), Formula(), 0); }
Formula Formula::conjunction(Formula a, Formula b) { return make(Op::And, std::move(a), std::move(b), 0); }
Formula Formula::disjunction(Formula a, Formula b) { return make(Op::Or, std::move(a), std::move(b), 0); }
Formula Formula::implication(Formula a, Formula b) {
  return make(Op::Implies, std::move(a), std::move(b), 0);
}
Formula Formula::eventually(std::uint64_t tau, Formula f) {
  return make(Op::Eventually, std::move(f), Formula(), tau);
}
Formula Formula::always(std::uint64_t tau, Formula f) {
  return make(Op::Always, std::move(f), Formula(), tau);
}

Op Formula::op() const { return node_ ? node_->op : Op::True; }

const AtomicPredicate& Formula::predicate() const {
  if (op() != Op::Atom) throw std::logic_error("predicate() on a non-atom formula");
  return node_->atom;
}

std::uint64_t Formula::tau() const {
  if (!is_temporal()) throw std::logic_error("tau() on a non-temporal formula");
  return node_->tau;
}

const Formula& Formula::child() const {
  switch (op()) {
    case Op::Not:
    case Op::Eventually:
    case Op::Always:
      return node_->a;
    default:
      throw std::logic_error("child() on a formula without a single operand");
  }
}

const Formula& Formula::lhs() const {
  switch (op()) {
    case Op::And:
    case Op::Or:
    case Op::Implies:
      return node_->a;
    default:
      throw std::logic_error("lhs() on a non-binary formula");
  }
}

const Formula& Formula::rhs() const {
  switch (op()) {
    case Op::And:
    case Op::Or:
    case Op::Implies:
      return node_->b;
    default:
      throw std::logic_error("rhs() on a non-binary formula");
  }
}

std::size_t Formula::size() const {
  switch (op()) {
    case Op::True:
    case Op::Atom:
      return 1;
    case Op::Not:
    case Op::Eventually:
    case Op::Always:
      return 1 + child().size();
    default:
      return 1 + lhs().size() + rhs().size();
  }
}

bool operator==(const Formula& x, const Formula& y) {
  if (x.node_ == y.node_) return true;
  if (x.op() != y.op()) return false;
  switch (x.op()) {
    case Op::True:
      return true;
    case Op::Atom:
      return x.predicate() == y.predicate();
    case Op::Not:
      return x.child() == y.child();
    case Op::Eventually:
    case Op::Always:
      return x.tau() == y.tau() && x.child() == y.child();
    default:
      return x.lhs() == y.lhs() && x.rhs() == y.rhs();
  }
}

bool operator<(const Formula& x, const Formula& y) {
  if (x.op() != y.op()) return x.op() < y.op();
  switch (x.op()) {
    case Op::True:
      return false;
    case Op::Atom: {
      const auto& p = x.predicate();
      const auto& q = y.predicate();
      return std::tie(p.kind, p.bound, p.symbol) < std::tie(q.kind, q.bound, q.symbol);
    }
    case Op::Not:
      return x.child() < y.child();
    case Op::Eventually:
    case Op::Always:
      if (x.tau() != y.tau()) return x.tau() < y.tau();
      return x.child() < y.child();
    default:
      if (x.lhs() != y.lhs()) return x.lhs() < y.lhs();
      return x.rhs() < y.rhs();
  }
}

std::size_t Formula::hash() const {
  auto mix = [](std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  };
  std::size_t h = static_cast<std::size_t>(op()) * 0x100000001b3ULL;
  switch (op()) {
    case Op::True:
      return h;
    case Op::Atom:
      h = mix(h, static_cast<std::size_t>(predicate().kind));
      h = mix(h, std::hash<std::uint64_t>{}(predicate().bound));
      return mix(h, std::hash<std::string>{}(predicate().symbol));
    case Op::Not:
      return mix(h, child().hash());
    case Op::Eventually:
    case Op::Always:
      return mix(mix(h, tau()), child().hash());
    default:
      return mix(mix(h, lhs().hash()), rhs().hash());
  }
}

Formula normalize(const Formula& f) {
  switch (f.op()) {
    case Op::True:
    case Op::Atom:
      return f;
    case Op::Not:
      return Formula::negation(normalize(f.child()));
    case Op::And:
      return Formula::conjunction(normalize(f.lhs()), normalize(f.rhs()));
    case Op::Or:
      return Formula::negation(Formula::conjunction(Formula::negation(normalize(f.lhs())),
                                                    Formula::negation(normalize(f.rhs()))));
    case Op::Implies:
      // a -> b == !a | b == !(a & !b)
      return Formula::negation(
          Formula::conjunction(normalize(f.lhs()), Formula::negation(normalize(f.rhs()))));
    case Op::Eventually:
      return Formula::eventually(f.tau(), normalize(f.child()));
    case Op::Always:
      return Formula::always(f.tau(), normalize(f.child()));
  }
  return f;
}

bool is_normalized(const Formula& f) {
  switch (f.op()) {
    case Op::True:
    case Op::Atom:
      return true;
    case Op::Or:
    case Op::Implies:
      return false;
    case Op::And:
      return is_normalized(f.lhs()) && is_normalized(f.rhs());
    default:
      return is_normalized(f.child());
  }
}

namespace {

void render_into(const Formula& f, std::string& out) {
  switch (f.op()) {
    case Op::True:
      out += "T";
      return;
    case Op::Atom: {
      const auto& p = f.predicate();
      if (p.kind == AtomicPredicate::Kind::Threshold) {
        out += "(x<=" + std::to_string(p.bound) + ")";
      } else {
        out += "(sym:" + p.symbol + ")";
      }
      return;
    }
    case Op::Not:
      out += "!";
      render_into(f.child(), out);
      return;
    case Op::Eventually:
    case Op::Always:
      out += f.op() == Op::Eventually ? "F[<=" : "G[<=";
      out += std::to_string(f.tau());
      out += "] ";
      render_into(f.child(), out);
      return;
    case Op::And:
    case Op::Or:
    case Op::Implies: {
      const char* sep = f.op() == Op::And ? " & " : f.op() == Op::Or ? " | " : " -> ";
      out += "(";
      render_into(f.lhs(), out);
      out += sep;
      render_into(f.rhs(), out);
      out += ")";
      return;
    }
  }
}

}  // namespace

std::string render(const Formula& f) {
  std::string out;
  render_into(f, out);
  return out;
}

namespace {

std::uint64_t zeta(const Formula& f, bool positive) {
  switch (f.op()) {
    case Op::True:
    case Op::Atom:
      return 0;
    case Op::Not:
      return zeta(f.child(), !positive);
    case Op::And: {
      auto a = zeta(f.lhs(), positive);
      auto b = zeta(f.rhs(), positive);
      return positive ? std::max(a, b) : std::min(a, b);
    }
    case Op::Eventually:
      return zeta(f.child(), positive) + (positive ? 0 : f.tau());
    case Op::Always:
      return zeta(f.child(), positive) + (positive ? f.tau() : 0);
    case Op::Or:
    case Op::Implies:
      break;
  }
  throw std::logic_error("zeta on a non-normalized formula");
}

}  // namespace

std::uint64_t minimal_length(const Formula& f, DemoLabel l) {
  const bool positive = l == DemoLabel::Positive;
  return is_normalized(f) ? zeta(f, positive) : zeta(normalize(f), positive);
}

std::uint64_t temporal_sum(const Formula& f) {
  switch (f.op()) {
    case Op::True:
    case Op::Atom:
      return 0;
    case Op::Not:
      return temporal_sum(f.child());
    case Op::Eventually:
    case Op::Always:
      return f.tau() + temporal_sum(f.child());
    default:
      return temporal_sum(f.lhs()) + temporal_sum(f.rhs());
  }
}

std::uint64_t horizon(const Formula& f) {
  switch (f.op()) {
    case Op::True:
    case Op::Atom:
      return 0;
    case Op::Not:
      return horizon(f.child());
    case Op::Eventually:
    case Op::Always:
      return f.tau() + horizon(f.child());
    default:
      return std::max(horizon(f.lhs()), horizon(f.rhs()));
  }
}

std::optional<GridShape> grid_shape(const Formula& f) {
  if (!f.is_temporal() || f.child().op() != Op::Atom) return std::nullopt;
  return GridShape{f.op(), f.tau(), f.child().predicate()};
}

Tri implies_syntactic(const Formula& f1, const Formula& f2) {
  if (f1 == f2) return Tri::Holds;
  auto s1 = grid_shape(f1);
  auto s2 = grid_shape(f2);
  if (!s1 || !s2) return Tri::Unknown;
  if (s1->atom.kind != AtomicPredicate::Kind::Threshold ||
      s2->atom.kind != AtomicPredicate::Kind::Threshold) {
    return Tri::Unknown;
  }
  const auto i1 = s1->tau, i2 = s2->tau;
  const auto v1 = s1->atom.bound, v2 = s2->atom.bound;
  auto verdict = [](bool b) { return b ? Tri::Holds : Tri::Fails; };
  if (s1->op == Op::Eventually && s2->op == Op::Eventually) return verdict(i1 <= i2 && v1 <= v2);
  if (s1->op == Op::Always && s2->op == Op::Always) return verdict(i1 >= i2 && v1 <= v2);
  if (s1->op == Op::Always && s2->op == Op::Eventually) return verdict(v1 <= v2);
  return Tri::Unknown;
}

}  // namespace tlteach
