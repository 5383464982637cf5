#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tlteach/formula.hpp"

namespace tlteach {

/// Index into a domain's alphabet. Numeric states use their value as index.
using State = std::uint16_t;
using StateMask = std::uint64_t;
using Trajectory = std::vector<State>;

enum class DomainKind : std::uint8_t { Numeric, Symbolic, Gridworld };

enum class Color : std::uint8_t { Red, Blue, Green, Yellow };
inline constexpr std::array<Color, 4> kColors{Color::Red, Color::Blue, Color::Green, Color::Yellow};
inline constexpr int kGridSide = 9;
inline constexpr int kGridCells = kGridSide * kGridSide;

/// Color distance weight: Red=1, Blue=2, Green=3, Yellow=4.
int color_rank(Color c);
const char* color_name(Color c);
char color_letter(Color c);

/// Row-major 9x9 cell colors.
struct ColorMap {
  std::vector<Color> cells;
  Color at(int row, int col) const { return cells[static_cast<std::size_t>(row * kGridSide + col)]; }
};

enum class Action : std::uint8_t { Stay, North, South, East, West };
inline constexpr std::array<Action, 5> kActions{Action::Stay, Action::North, Action::South,
                                                 Action::East, Action::West};

/// Deterministic move; hitting the boundary leaves the robot in place.
int apply_action(int cell, Action a);

/// Parses 9 lines of 9 letters from {R,B,G,Y}. Blank lines and '#' comments are skipped.
ColorMap parse_color_map(std::string_view text);
ColorMap load_color_map(const std::string& path);
std::string format_color_map(const ColorMap& m);
/// Seeded random map in which no Red cell touches a Green or Yellow cell.
ColorMap generate_color_map(std::uint64_t seed);

/// Finite alphabet plus an optional successor relation over it.
class StateDomain {
 public:
  DomainKind kind() const { return kind_; }
  std::size_t size() const { return symbols_.size(); }
  const std::vector<std::string>& symbols() const { return symbols_; }
  const std::string& symbol(State s) const { return symbols_.at(s); }
  StateMask all_states() const { return size() == 64 ? ~StateMask{0} : (StateMask{1} << size()) - 1; }

  /// States on which the predicate holds.
  StateMask atom_mask(const AtomicPredicate& p) const;
  bool atom_holds(const AtomicPredicate& p, State s) const { return (atom_mask(p) >> s) & 1U; }

  bool constrained() const { return !successors_.empty(); }
  /// Allowed successors of `s`; every state when unconstrained.
  StateMask successors(State s) const { return constrained() ? successors_[s] : all_states(); }
  bool can_follow(State from, State to) const { return (successors(from) >> to) & 1U; }
  void set_successors(std::vector<StateMask> rel);
  const std::vector<StateMask>& relation() const { return successors_; }

  const std::optional<ColorMap>& color_map() const { return map_; }

  std::optional<State> find_state(std::string_view token) const;

  friend StateDomain numeric_domain(std::uint64_t max_value);
  friend StateDomain symbolic_domain(std::vector<std::string> symbols);
  friend StateDomain gridworld_domain(const ColorMap& map, bool relation_from_map);

 private:
  DomainKind kind_ = DomainKind::Numeric;
  std::vector<std::string> symbols_;
  std::vector<StateMask> successors_;
  std::optional<ColorMap> map_;
};

/// States {0..max_value}, threshold predicates.
StateDomain numeric_domain(std::uint64_t max_value = 10);
/// Unconstrained label alphabet in the given order.
StateDomain symbolic_domain(std::vector<std::string> symbols);
/// Card-suit alphabet club < spade < diamond.
StateDomain suit_domain();
/// Observation alphabet is the four colors in rank order. The default relation is
/// Red -> {Red, Blue}, Green -> {Green, Yellow, Blue}, others unconstrained; with
/// `relation_from_map` it is read off cell adjacency instead.
StateDomain gridworld_domain(const ColorMap& map, bool relation_from_map = false);

std::vector<StateMask> default_color_relation();
std::vector<StateMask> map_color_relation(const ColorMap& map);

bool valid_trajectory(const Trajectory& rho, const StateDomain& d);

/// Comma-separated state tokens.
Trajectory parse_trajectory(std::string_view text, const StateDomain& d);
std::string format_trajectory(const Trajectory& rho, const StateDomain& d);

/// A cell path whose colors are `colors` and whose steps are single actions.
std::optional<std::vector<int>> realize_cells(const Trajectory& colors, const ColorMap& map);
/// Colors observed along the cells visited from `start` under `actions` (start included).
Trajectory rollout_colors(const ColorMap& map, int start, const std::vector<Action>& actions);

struct HypothesisSet {
  std::vector<Formula> formulas;
  std::size_t target_id = 0;

  std::size_t size() const { return formulas.size(); }
  const Formula& target() const { return formulas.at(target_id); }
  std::optional<std::size_t> index_of(const Formula& f) const;
};

/// {F[<=i] p, G[<=i] p : 1<=i<=a} with p ranging over x<=1..9 (numeric) or the
/// domain's labels (otherwise). `boundary` appends F[<=i](x<=0) and F[<=i](x<=10).
HypothesisSet generate_hypothesis_grid(const StateDomain& d, std::uint64_t a, bool boundary = false);

/// {F[<=i] s : i in 0..4, s in suits} over suit_domain(), target F[<=2] club.
HypothesisSet suit_example_hypotheses();

}  // namespace tlteach
