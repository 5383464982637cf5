#pragma once

// Naive evaluators written straight from the strong/weak definitions. Shared by the
// unit tests and the acceptance binary as an oracle independent of the library's
// table-driven Evaluator and branch-and-bound solver.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "tlteach/domain.hpp"
#include "tlteach/formula.hpp"
#include "tlteach/ip.hpp"
#include "tlteach/semantics.hpp"

namespace ref {

using tlteach::Formula;
using tlteach::Op;
using tlteach::StateDomain;
using tlteach::Trajectory;

inline bool atom_at(const StateDomain& d, const Formula& f, const Trajectory& rho, std::uint64_t t) {
  const auto s = rho[t];
  const auto& p = f.predicate();
  if (p.kind == tlteach::AtomicPredicate::Kind::Threshold) {
    return s <= p.bound;
  }
  return d.symbol(s) == p.symbol;
}

inline bool weak(const StateDomain& d, const Formula& f, const Trajectory& rho, std::uint64_t t);

inline bool strong(const StateDomain& d, const Formula& f, const Trajectory& rho, std::uint64_t t) {
  const std::uint64_t L = rho.size();
  switch (f.op()) {
    case Op::True:
      return t < L;
    case Op::Atom:
      return t < L && atom_at(d, f, rho, t);
    case Op::Not:
      return !weak(d, f.child(), rho, t);
    case Op::And:
      return strong(d, f.lhs(), rho, t) && strong(d, f.rhs(), rho, t);
    case Op::Or:
      return strong(d, f.lhs(), rho, t) || strong(d, f.rhs(), rho, t);
    case Op::Implies:
      return !weak(d, f.lhs(), rho, t) || strong(d, f.rhs(), rho, t);
    case Op::Eventually:
      for (std::uint64_t u = t; u <= t + f.tau(); ++u) {
        if (strong(d, f.child(), rho, u)) return true;
      }
      return false;
    case Op::Always:
      for (std::uint64_t u = t; u <= t + f.tau(); ++u) {
        if (!strong(d, f.child(), rho, u)) return false;
      }
      return true;
  }
  return false;
}

inline bool weak(const StateDomain& d, const Formula& f, const Trajectory& rho, std::uint64_t t) {
  const std::uint64_t L = rho.size();
  switch (f.op()) {
    case Op::True:
      return true;
    case Op::Atom:
      return t >= L || atom_at(d, f, rho, t);
    case Op::Not:
      return !strong(d, f.child(), rho, t);
    case Op::And:
      return weak(d, f.lhs(), rho, t) && weak(d, f.rhs(), rho, t);
    case Op::Or:
      return weak(d, f.lhs(), rho, t) || weak(d, f.rhs(), rho, t);
    case Op::Implies:
      return !strong(d, f.lhs(), rho, t) || weak(d, f.rhs(), rho, t);
    case Op::Eventually:
      for (std::uint64_t u = t; u <= t + f.tau(); ++u) {
        if (weak(d, f.child(), rho, u)) return true;
      }
      return false;
    case Op::Always:
      for (std::uint64_t u = t; u <= t + f.tau(); ++u) {
        if (!weak(d, f.child(), rho, u)) return false;
      }
      return true;
  }
  return false;
}

inline int verdict(const StateDomain& d, const Formula& f, const Trajectory& rho) {
  if (strong(d, f, rho, 0)) return 1;
  if (!weak(d, f, rho, 0)) return -1;
  return 0;
}

/// Calls `visit` on every trajectory of length L over the domain that respects the
/// successor relation and start set.
inline void for_each_trajectory(std::size_t states, std::uint64_t L, const std::vector<tlteach::StateMask>& rel,
                                tlteach::StateMask start, const std::function<void(const Trajectory&)>& visit) {
  Trajectory rho(L, 0);
  std::function<void(std::uint64_t)> rec = [&](std::uint64_t t) {
    if (t == L) {
      visit(rho);
      return;
    }
    for (std::size_t s = 0; s < states; ++s) {
      if (t == 0 && start && !((start >> s) & 1U)) continue;
      if (t > 0 && !rel.empty() && !((rel[rho[t - 1]] >> s) & 1U)) continue;
      rho[t] = static_cast<tlteach::State>(s);
      rec(t + 1);
    }
  };
  rec(0);
}

struct BruteResult {
  bool feasible = false;
  std::size_t kappa = 0;
};

/// Best elimination count of one synthesis instance by full enumeration.
inline BruteResult brute_force(const tlteach::IpInstance& inst) {
  const bool pos = inst.variant == tlteach::IpVariant::Pos;
  const StateDomain& d = inst.domain;
  BruteResult best;
  for_each_trajectory(d.size(), inst.length, inst.transitions, inst.start_states, [&](const Trajectory& rho) {
    if (ref::verdict(d, inst.target, rho) != (pos ? 1 : -1)) return;
    for (const auto& p : inst.protect) {
      if (pos ? !weak(d, p, rho, 0) : strong(d, p, rho, 0)) return;
    }
    std::size_t k = 0;
    for (const auto& c : inst.candidates) {
      k += pos ? !weak(d, c.formula, rho, 0) : strong(d, c.formula, rho, 0);
    }
    if (!best.feasible || k > best.kappa) best = {true, k};
  });
  return best;
}

}  // namespace ref
