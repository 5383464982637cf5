#include "tlteach/domain.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace tlteach {

int color_rank(Color c) { return static_cast<int>(c) + 1; }

const char* color_name(Color c) {
  switch (c) {
    case Color::Red: return "Red";
    case Color::Blue: return "Blue";
    case Color::Green: return "Green";
    case Color::Yellow: return "Yellow";
  }
  return "?";
}

char color_letter(Color c) { return color_name(c)[0]; }

int apply_action(int cell, Action a) {
  int r = cell / kGridSide, c = cell % kGridSide;
  switch (a) {
    case Action::Stay: break;
    case Action::North: r = std::min(r + 1, kGridSide - 1); break;
    case Action::South: r = std::max(r - 1, 0); break;
    case Action::East: c = std::min(c + 1, kGridSide - 1); break;
    case Action::West: c = std::max(c - 1, 0); break;
  }
  return r * kGridSide + c;
}

ColorMap parse_color_map(std::string_view text) {
  ColorMap m;
  std::size_t rows = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::string row;
    for (char ch : line) {
      if (ch == '#') break;
      if (!std::isspace(static_cast<unsigned char>(ch))) row.push_back(ch);
    }
    if (row.empty()) continue;
    ++rows;
    if (row.size() != static_cast<std::size_t>(kGridSide)) {
      throw std::invalid_argument("color map row " + std::to_string(rows) + " has " +
                                  std::to_string(row.size()) + " cells, expected 9");
    }
    for (char ch : row) {
      switch (std::toupper(static_cast<unsigned char>(ch))) {
        case 'R': m.cells.push_back(Color::Red); break;
        case 'B': m.cells.push_back(Color::Blue); break;
        case 'G': m.cells.push_back(Color::Green); break;
        case 'Y': m.cells.push_back(Color::Yellow); break;
        default:
          throw std::invalid_argument(std::string("unknown color letter '") + ch + "'");
      }
    }
  }
  if (m.cells.size() != static_cast<std::size_t>(kGridCells)) {
    throw std::invalid_argument("color map has " + std::to_string(m.cells.size()) +
                                " cells, expected 81");
  }
  return m;
}

ColorMap load_color_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open color map '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_color_map(buf.str());
}

std::string format_color_map(const ColorMap& m) {
  std::string out;
  for (int r = 0; r < kGridSide; ++r) {
    for (int c = 0; c < kGridSide; ++c) out.push_back(color_letter(m.at(r, c)));
    out.push_back('\n');
  }
  return out;
}

ColorMap generate_color_map(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, 3);
  ColorMap m;
  m.cells.resize(kGridCells);
  for (auto& c : m.cells) c = static_cast<Color>(pick(rng));
  for (int cell = 0; cell < kGridCells; ++cell) {
    if (m.cells[cell] != Color::Red) continue;
    for (Action a : kActions) {
      auto& n = m.cells[static_cast<std::size_t>(apply_action(cell, a))];
      if (n == Color::Green || n == Color::Yellow) n = Color::Blue;
    }
  }
  return m;
}

StateMask StateDomain::atom_mask(const AtomicPredicate& p) const {
  StateMask m = 0;
  for (std::size_t s = 0; s < size(); ++s) {
    bool holds = p.kind == AtomicPredicate::Kind::Threshold ? s <= p.bound : symbols_[s] == p.symbol;
    if (holds) m |= StateMask{1} << s;
  }
  return m;
}

void StateDomain::set_successors(std::vector<StateMask> rel) {
  if (!rel.empty() && rel.size() != size()) {
    throw std::invalid_argument("transition relation size does not match the alphabet");
  }
  successors_ = std::move(rel);
}

std::optional<State> StateDomain::find_state(std::string_view token) const {
  for (std::size_t s = 0; s < size(); ++s) {
    if (symbols_[s] == token) return static_cast<State>(s);
  }
  static const std::pair<std::string_view, std::string_view> kAliases[] = {
      {"♣", "club"}, {"♠", "spade"}, {"♦", "diamond"},
      {"R", "Red"},       {"B", "Blue"},       {"G", "Green"},       {"Y", "Yellow"}};
  for (const auto& [alias, canon] : kAliases) {
    if (alias != token) continue;
    for (std::size_t s = 0; s < size(); ++s) {
      if (symbols_[s] == canon) return static_cast<State>(s);
    }
  }
  return std::nullopt;
}

StateDomain numeric_domain(std::uint64_t max_value) {
  if (max_value >= 64) throw std::invalid_argument("numeric domain supports at most 64 states");
  StateDomain d;
  d.kind_ = DomainKind::Numeric;
  for (std::uint64_t v = 0; v <= max_value; ++v) d.symbols_.push_back(std::to_string(v));
  return d;
}

StateDomain symbolic_domain(std::vector<std::string> symbols) {
  if (symbols.empty() || symbols.size() > 64) {
    throw std::invalid_argument("symbolic domain needs 1..64 symbols");
  }
  StateDomain d;
  d.kind_ = DomainKind::Symbolic;
  d.symbols_ = std::move(symbols);
  return d;
}

StateDomain suit_domain() { return symbolic_domain({"club", "spade", "diamond"}); }

std::vector<StateMask> default_color_relation() {
  auto bit = [](Color c) { return StateMask{1} << static_cast<int>(c); };
  const StateMask all = 0xF;
  std::vector<StateMask> rel(4, all);
  rel[static_cast<int>(Color::Red)] = bit(Color::Red) | bit(Color::Blue);
  rel[static_cast<int>(Color::Green)] = bit(Color::Green) | bit(Color::Yellow) | bit(Color::Blue);
  return rel;
}

std::vector<StateMask> map_color_relation(const ColorMap& map) {
  std::vector<StateMask> rel(4, 0);
  for (int cell = 0; cell < kGridCells; ++cell) {
    const auto from = static_cast<int>(map.cells[cell]);
    for (Action a : kActions) {
      rel[from] |= StateMask{1} << static_cast<int>(map.cells[apply_action(cell, a)]);
    }
  }
  return rel;
}

StateDomain gridworld_domain(const ColorMap& map, bool relation_from_map) {
  if (map.cells.size() != static_cast<std::size_t>(kGridCells)) {
    throw std::invalid_argument("gridworld map must have 81 cells, got " +
                                std::to_string(map.cells.size()));
  }
  StateDomain d;
  d.kind_ = DomainKind::Gridworld;
  for (Color c : kColors) d.symbols_.emplace_back(color_name(c));
  d.successors_ = relation_from_map ? map_color_relation(map) : default_color_relation();
  d.map_ = map;
  return d;
}

bool valid_trajectory(const Trajectory& rho, const StateDomain& d) {
  if (rho.empty()) return false;
  for (std::size_t t = 0; t < rho.size(); ++t) {
    if (rho[t] >= d.size()) return false;
    if (t > 0 && !d.can_follow(rho[t - 1], rho[t])) return false;
  }
  return true;
}

Trajectory parse_trajectory(std::string_view text, const StateDomain& d) {
  Trajectory rho;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(start, end - start);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
    auto s = d.find_state(tok);
    if (!s) throw std::invalid_argument("unknown state token '" + std::string(tok) + "'");
    rho.push_back(*s);
    start = end + 1;
  }
  return rho;
}

std::string format_trajectory(const Trajectory& rho, const StateDomain& d) {
  std::string out;
  for (std::size_t t = 0; t < rho.size(); ++t) {
    if (t) out.push_back(',');
    out += d.symbol(rho[t]);
  }
  return out;
}

std::optional<std::vector<int>> realize_cells(const Trajectory& colors, const ColorMap& map) {
  if (colors.empty()) return std::vector<int>{};
  const std::size_t L = colors.size();
  // reach[k][cell]: cell can be occupied at step k while matching colors[0..k].
  std::vector<std::array<bool, kGridCells>> reach(L);
  for (auto& row : reach) row.fill(false);
  for (int cell = 0; cell < kGridCells; ++cell) {
    reach[0][cell] = static_cast<State>(map.cells[cell]) == colors[0];
  }
  for (std::size_t k = 1; k < L; ++k) {
    for (int cell = 0; cell < kGridCells; ++cell) {
      if (!reach[k - 1][cell]) continue;
      for (Action a : kActions) {
        int n = apply_action(cell, a);
        if (static_cast<State>(map.cells[n]) == colors[k]) reach[k][n] = true;
      }
    }
  }
  // Walk back from the smallest reachable final cell.
  std::vector<int> path(L, -1);
  for (int cell = 0; cell < kGridCells; ++cell) {
    if (reach[L - 1][cell]) {
      path[L - 1] = cell;
      break;
    }
  }
  if (path[L - 1] < 0) return std::nullopt;
  for (std::size_t k = L - 1; k > 0; --k) {
    for (int cell = 0; cell < kGridCells; ++cell) {
      if (!reach[k - 1][cell]) continue;
      bool adjacent = false;
      for (Action a : kActions) adjacent = adjacent || apply_action(cell, a) == path[k];
      if (adjacent) {
        path[k - 1] = cell;
        break;
      }
    }
  }
  return path;
}

Trajectory rollout_colors(const ColorMap& map, int start, const std::vector<Action>& actions) {
  Trajectory out;
  int cell = start;
  out.push_back(static_cast<State>(map.cells[cell]));
  for (Action a : actions) {
    cell = apply_action(cell, a);
    out.push_back(static_cast<State>(map.cells[cell]));
  }
  return out;
}

std::optional<std::size_t> HypothesisSet::index_of(const Formula& f) const {
  for (std::size_t i = 0; i < formulas.size(); ++i) {
    if (formulas[i] == f) return i;
  }
  return std::nullopt;
}

HypothesisSet generate_hypothesis_grid(const StateDomain& d, std::uint64_t a, bool boundary) {
  if (a < 1) throw std::invalid_argument("grid parameter a must be at least 1");
  std::vector<Formula> preds;
  if (d.kind() == DomainKind::Numeric) {
    for (std::uint64_t v = 1; v <= 9; ++v) preds.push_back(Formula::threshold(v));
  } else {
    for (const auto& s : d.symbols()) preds.push_back(Formula::label(s));
  }
  HypothesisSet h;
  for (int op = 0; op < 2; ++op) {
    for (std::uint64_t i = 1; i <= a; ++i) {
      for (const auto& p : preds) {
        h.formulas.push_back(op == 0 ? Formula::eventually(i, p) : Formula::always(i, p));
      }
    }
  }
  if (boundary) {
    for (std::uint64_t i = 1; i <= a; ++i) {
      h.formulas.push_back(Formula::eventually(i, Formula::threshold(0)));
      h.formulas.push_back(Formula::eventually(i, Formula::threshold(10)));
    }
  }
  return h;
}

HypothesisSet suit_example_hypotheses() {
  HypothesisSet h;
  for (const char* s : {"club", "spade", "diamond"}) {
    for (std::uint64_t i = 0; i <= 4; ++i) h.formulas.push_back(Formula::eventually(i, Formula::label(s)));
  }
  h.target_id = *h.index_of(Formula::eventually(2, Formula::label("club")));
  return h;
}

}  // namespace tlteach
