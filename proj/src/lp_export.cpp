#include "tlteach/lp_export.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tlteach {

std::size_t LinearModel::var(const std::string& name) {
  auto [it, inserted] = index.emplace(name, vars.size());
  if (inserted) vars.push_back(name);
  return it->second;
}

bool LinearModel::satisfied_by(const std::vector<int>& values, std::string* violated) const {
  for (const auto& c : constraints) {
    double lhs = 0;
    for (const auto& t : c.terms) lhs += t.coef * values.at(t.var);
    const bool ok = c.sense == Sense::Le   ? lhs <= c.rhs + 1e-9
                    : c.sense == Sense::Ge ? lhs >= c.rhs - 1e-9
                                           : std::abs(lhs - c.rhs) <= 1e-9;
    if (!ok) {
      if (violated) *violated = c.name;
      return false;
    }
  }
  return true;
}

double LinearModel::objective_value(const std::vector<int>& values) const {
  double v = 0;
  for (const auto& t : objective) v += t.coef * values.at(t.var);
  return v;
}

namespace {

struct LNode {
  Op op;
  StateMask mask = 0;
  std::uint64_t tau = 0;
  int a = -1;
  int b = -1;
};

std::vector<LNode> flatten(const StateDomain& d, const Formula& f) {
  std::vector<LNode> out;
  auto rec = [&](auto&& self, const Formula& g) -> int {
    LNode n{g.op()};
    switch (g.op()) {
      case Op::True:
        n.op = Op::Atom;
        n.mask = d.all_states();
        break;
      case Op::Atom:
        n.mask = d.atom_mask(g.predicate());
        break;
      case Op::Not:
        n.a = self(self, g.child());
        break;
      case Op::And:
        n.a = self(self, g.lhs());
        n.b = self(self, g.rhs());
        break;
      case Op::Eventually:
      case Op::Always:
        n.tau = g.tau();
        n.a = self(self, g.child());
        break;
      default:
        break;
    }
    out.push_back(n);
    return static_cast<int>(out.size()) - 1;
  };
  rec(rec, normalize(f));
  return out;
}

std::vector<Formula> tracked_formulas(const IpInstance& inst) {
  std::vector<Formula> fs{inst.target};
  for (const auto& p : inst.protect) fs.push_back(p);
  for (const auto& c : inst.candidates) fs.push_back(c.formula);
  return fs;
}

std::string zname(char view, std::size_t f, std::size_t n, std::size_t t) {
  return std::string("z") + view + "_" + std::to_string(f) + "_" + std::to_string(n) + "_" + std::to_string(t);
}

std::string sname(std::size_t t, std::size_t v) { return "s_" + std::to_string(t) + "_" + std::to_string(v); }

std::size_t window_end(std::size_t t, std::uint64_t tau, std::size_t L) { return tau >= L - t ? L : t + tau; }

}  // namespace

LinearModel to_linear_model(const IpInstance& inst) {
  LinearModel m;
  const std::size_t L = inst.length;
  const std::size_t n = inst.domain.size();
  const bool pos = inst.variant == IpVariant::Pos;
  std::size_t counter = 0;
  auto add = [&](std::vector<LinearTerm> terms, Sense s, double rhs) {
    m.constraints.push_back({"c" + std::to_string(counter++), std::move(terms), s, rhs});
  };

  for (std::size_t t = 0; t < L; ++t) {
    std::vector<LinearTerm> one;
    for (std::size_t v = 0; v < n; ++v) one.push_back({m.var(sname(t, v)), 1});
    add(std::move(one), Sense::Eq, 1);
  }
  if (inst.start_states) {
    for (std::size_t v = 0; v < n; ++v) {
      if (!((inst.start_states >> v) & 1U)) add({{m.var(sname(0, v)), 1}}, Sense::Eq, 0);
    }
  }
  if (!inst.transitions.empty()) {
    for (std::size_t t = 0; t + 1 < L; ++t) {
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
          if ((inst.transitions[u] >> v) & 1U) continue;
          add({{m.var(sname(t, u)), 1}, {m.var(sname(t + 1, v)), 1}}, Sense::Le, 1);
        }
      }
    }
  }

  const auto fs = tracked_formulas(inst);
  for (std::size_t f = 0; f < fs.size(); ++f) {
    const auto nodes = flatten(inst.domain, fs[f]);
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      const LNode& nd = nodes[k];
      for (std::size_t t = 0; t <= L; ++t) {
        const std::size_t zs = m.var(zname('S', f, k, t));
        const std::size_t zw = m.var(zname('W', f, k, t));
        switch (nd.op) {
          case Op::Atom:
            if (t < L) {
              std::vector<LinearTerm> ts{{zs, 1}}, tw{{zw, 1}};
              for (std::size_t v = 0; v < n; ++v) {
                if ((nd.mask >> v) & 1U) {
                  ts.push_back({m.var(sname(t, v)), -1});
                  tw.push_back({m.var(sname(t, v)), -1});
                }
              }
              add(std::move(ts), Sense::Eq, 0);
              add(std::move(tw), Sense::Eq, 0);
            } else {
              add({{zs, 1}}, Sense::Eq, 0);
              add({{zw, 1}}, Sense::Eq, 1);
            }
            break;
          case Op::Not:
            add({{zs, 1}, {m.var(zname('W', f, nd.a, t)), 1}}, Sense::Eq, 1);
            add({{zw, 1}, {m.var(zname('S', f, nd.a, t)), 1}}, Sense::Eq, 1);
            break;
          case Op::And:
            for (char view : {'S', 'W'}) {
              const std::size_t z = view == 'S' ? zs : zw;
              const std::size_t za = m.var(zname(view, f, nd.a, t));
              const std::size_t zb = m.var(zname(view, f, nd.b, t));
              add({{z, 1}, {za, -1}}, Sense::Le, 0);
              add({{z, 1}, {zb, -1}}, Sense::Le, 0);
              add({{z, 1}, {za, -1}, {zb, -1}}, Sense::Ge, -1);
            }
            break;
          case Op::Eventually:
          case Op::Always: {
            const std::size_t end = window_end(t, nd.tau, L);
            const double width = static_cast<double>(end - t + 1);
            for (char view : {'S', 'W'}) {
              const std::size_t z = view == 'S' ? zs : zw;
              std::vector<LinearTerm> sum{{z, 1}};
              for (std::size_t u = t; u <= end; ++u) {
                const std::size_t zu = m.var(zname(view, f, nd.a, u));
                if (nd.op == Op::Eventually) {
                  add({{z, 1}, {zu, -1}}, Sense::Ge, 0);
                } else {
                  add({{z, 1}, {zu, -1}}, Sense::Le, 0);
                }
                sum.push_back({zu, -1});
              }
              if (nd.op == Op::Eventually) {
                add(std::move(sum), Sense::Le, 0);
              } else {
                add(std::move(sum), Sense::Ge, 1 - width);
              }
            }
            break;
          }
          default:
            break;
        }
      }
    }
    const std::size_t root = nodes.size() - 1;
    const std::size_t rs = m.var(zname('S', f, root, 0));
    const std::size_t rw = m.var(zname('W', f, root, 0));
    if (f == 0) {
      if (pos) {
        add({{rs, 1}}, Sense::Eq, 1);
      } else {
        add({{rw, 1}}, Sense::Eq, 0);
      }
    } else if (f <= inst.protect.size()) {
      if (pos) {
        add({{rw, 1}}, Sense::Eq, 1);
      } else {
        add({{rs, 1}}, Sense::Eq, 0);
      }
    } else {
      const auto& c = inst.candidates[f - 1 - inst.protect.size()];
      const std::size_t b = m.var("b_" + std::to_string(c.id));
      m.objective.push_back({b, 1});
      // b = 1 only when the candidate's verdict opposes the label.
      if (pos) {
        add({{b, 1}, {rw, 1}}, Sense::Le, 1);
      } else {
        add({{b, 1}, {rs, -1}}, Sense::Le, 0);
      }
    }
  }
  return m;
}

std::vector<int> assignment_for(const LinearModel& model, const IpInstance& inst, const Trajectory& rho) {
  std::vector<int> values(model.vars.size(), 0);
  auto set = [&](const std::string& name, int v) {
    auto it = model.index.find(name);
    if (it != model.index.end()) values[it->second] = v;
  };
  const std::size_t L = inst.length;
  for (std::size_t t = 0; t < L && t < rho.size(); ++t) set(sname(t, rho[t]), 1);

  const auto fs = tracked_formulas(inst);
  const bool pos = inst.variant == IpVariant::Pos;
  for (std::size_t f = 0; f < fs.size(); ++f) {
    const auto nodes = flatten(inst.domain, fs[f]);
    std::vector<std::vector<int>> S(nodes.size(), std::vector<int>(L + 1)), W = S;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      const LNode& nd = nodes[k];
      for (std::size_t t = 0; t <= L; ++t) {
        switch (nd.op) {
          case Op::Atom:
            S[k][t] = t < L && ((nd.mask >> rho[t]) & 1U);
            W[k][t] = t >= L || ((nd.mask >> rho[t]) & 1U);
            break;
          case Op::Not:
            S[k][t] = !W[nd.a][t];
            W[k][t] = !S[nd.a][t];
            break;
          case Op::And:
            S[k][t] = S[nd.a][t] && S[nd.b][t];
            W[k][t] = W[nd.a][t] && W[nd.b][t];
            break;
          case Op::Eventually:
          case Op::Always: {
            const bool any = nd.op == Op::Eventually;
            int vs = !any, vw = !any;
            for (std::size_t u = t; u <= window_end(t, nd.tau, L); ++u) {
              vs = any ? (vs || S[nd.a][u]) : (vs && S[nd.a][u]);
              vw = any ? (vw || W[nd.a][u]) : (vw && W[nd.a][u]);
            }
            S[k][t] = vs;
            W[k][t] = vw;
            break;
          }
          default:
            break;
        }
        set(zname('S', f, k, t), S[k][t]);
        set(zname('W', f, k, t), W[k][t]);
      }
    }
    if (f > inst.protect.size()) {
      const auto& c = inst.candidates[f - 1 - inst.protect.size()];
      const std::size_t root = nodes.size() - 1;
      const bool elim = pos ? !W[root][0] : S[root][0];
      set("b_" + std::to_string(c.id), elim ? 1 : 0);
    }
  }
  return values;
}

std::string write_lp(const LinearModel& model) {
  std::ostringstream out;
  auto terms = [&](const std::vector<LinearTerm>& ts) {
    if (ts.empty()) {
      out << " 0";
      return;
    }
    bool first = true;
    for (const auto& t : ts) {
      const double c = t.coef;
      if (c < 0) {
        out << " - ";
      } else if (!first) {
        out << " + ";
      } else {
        out << " ";
      }
      if (std::abs(c) != 1) out << std::abs(c) << " ";
      out << model.vars[t.var];
      first = false;
    }
  };
  out << "\\ teaching instance\n";
  out << "Maximize\n obj:";
  terms(model.objective);
  out << "\nSubject To\n";
  for (const auto& c : model.constraints) {
    out << " " << c.name << ":";
    terms(c.terms);
    out << (c.sense == Sense::Le ? " <= " : c.sense == Sense::Ge ? " >= " : " = ") << c.rhs << "\n";
  }
  out << "Binary\n";
  for (const auto& v : model.vars) out << " " << v << "\n";
  out << "End\n";
  return out.str();
}

void write_lp_file(const LinearModel& model, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write LP file '" + path + "'");
  f << write_lp(model);
  if (!f) throw std::runtime_error("failed writing LP file '" + path + "'");
}

}  // namespace tlteach
