#include "tlteach/preference.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace tlteach {

namespace {

const std::vector<std::size_t> kNoNeighbours;

std::uint64_t predicate_value(const AtomicPredicate& p) {
  if (p.kind == AtomicPredicate::Kind::Threshold) return p.bound;
  for (Color c : kColors) {
    if (p.symbol == color_name(c)) return static_cast<std::uint64_t>(color_rank(c));
  }
  throw std::invalid_argument("no distance defined for label '" + p.symbol + "'");
}

GridShape require_shape(const Formula& f) {
  auto s = grid_shape(f);
  if (!s) throw std::invalid_argument("formula " + render(f) + " is not of the form F/G[<=i] atom");
  return *s;
}

std::uint64_t absdiff(std::uint64_t a, std::uint64_t b) { return a > b ? a - b : b - a; }

}  // namespace

const std::vector<std::size_t>& PreferenceModel::neighbours(std::size_t id) const {
  return neighbours_.empty() ? kNoNeighbours : neighbours_.at(id);
}

PreferenceModel PreferenceModel::uniform(std::size_t n) {
  PreferenceModel m;
  m.kind_ = PreferenceKind::Uniform;
  m.n_ = n;
  m.table_.assign(n * n, 1.0);
  m.name_ = "uniform";
  return m;
}

PreferenceModel PreferenceModel::ranked(std::vector<double> rank, std::string name) {
  PreferenceModel m;
  m.kind_ = PreferenceKind::GlobalRanked;
  m.n_ = rank.size();
  m.table_.resize(m.n_ * m.n_);
  for (std::size_t cur = 0; cur < m.n_; ++cur) {
    for (std::size_t c = 0; c < m.n_; ++c) {
      if (!(rank[c] > 0)) throw std::invalid_argument("preference values must be positive");
      m.table_[cur * m.n_ + c] = rank[c];
    }
  }
  m.name_ = std::move(name);
  return m;
}

PreferenceModel PreferenceModel::from_table(std::vector<std::vector<double>> rows, std::string name) {
  PreferenceModel m;
  m.n_ = rows.size();
  m.table_.reserve(m.n_ * m.n_);
  bool global = true;
  for (const auto& row : rows) {
    if (row.size() != m.n_) throw std::invalid_argument("preference table must be square");
    for (double v : row) {
      if (!(v > 0)) throw std::invalid_argument("preference values must be positive");
      m.table_.push_back(v);
    }
    global = global && row == rows.front();
  }
  m.kind_ = global ? PreferenceKind::GlobalRanked : PreferenceKind::Local;
  m.name_ = std::move(name);
  return m;
}

PreferenceModel implication_preference(const HypothesisSet& hyps) {
  const std::size_t n = hyps.size();
  std::vector<double> rank(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Formula& f = hyps.formulas[j];
    double r = 1 + (f.op() == Op::Always ? static_cast<double>(n + 1) : 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      const Formula& g = hyps.formulas[k];
      if (k != j && g.op() == f.op() && g != f && implies_syntactic(g, f) == Tri::Holds) r += 1;
    }
    rank[j] = r;
  }
  return PreferenceModel::ranked(std::move(rank), "global_implication");
}

std::uint64_t grid_distance(const Formula& a, const Formula& b) {
  const auto sa = require_shape(a);
  const auto sb = require_shape(b);
  return absdiff(sa.tau, sb.tau) + absdiff(predicate_value(sa.atom), predicate_value(sb.atom));
}

bool is_boundary_formula(const Formula& f) {
  auto s = grid_shape(f);
  return s && s->op == Op::Eventually && s->atom.kind == AtomicPredicate::Kind::Threshold &&
         (s->atom.bound == 0 || s->atom.bound == 10);
}

PreferenceModel manhattan_preference(const HypothesisSet& hyps, double penalty, bool boundary_switch) {
  const std::size_t n = hyps.size();
  if (penalty <= 0) {
    std::uint64_t a = 0;
    for (const auto& f : hyps.formulas) a = std::max(a, require_shape(f).tau);
    penalty = static_cast<double>(2 * (a + 9) + 1);
  }
  std::vector<std::vector<double>> rows(n, std::vector<double>(n));
  for (std::size_t cur = 0; cur < n; ++cur) {
    const Formula& fc = hyps.formulas[cur];
    const bool switch_to_g = boundary_switch && is_boundary_formula(fc);
    for (std::size_t c = 0; c < n; ++c) {
      const Formula& f = hyps.formulas[c];
      double v = 1 + static_cast<double>(grid_distance(f, fc));
      if (switch_to_g ? f.op() == Op::Eventually : f.op() != fc.op()) v += penalty;
      rows[cur][c] = v;
    }
  }
  auto m = PreferenceModel::from_table(std::move(rows), "local_manhattan");
  return m;
}

PreferenceModel noisy_local_preference(const PreferenceModel& base, const HypothesisSet& hyps,
                                       unsigned radius) {
  PreferenceModel m = base;
  m.kind_ = PreferenceKind::NoisyLocal;
  m.radius_ = radius;
  m.name_ = "noisy_local";
  const std::size_t n = hyps.size();
  m.neighbours_.assign(n, {});
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (j == k || hyps.formulas[j].op() != hyps.formulas[k].op()) continue;
      const auto d = grid_distance(hyps.formulas[j], hyps.formulas[k]);
      if (d >= 1 && d <= radius) m.neighbours_[j].push_back(k);
    }
  }
  return m;
}

}  // namespace tlteach
