#include "vknot/presentation.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <numeric>

namespace vknot {

std::string to_string(PresKind k) {
  switch (k) {
    case PresKind::Quandle: return "quandle";
    case PresKind::Group: return "group";
    case PresKind::Biquandle: return "biquandle";
  }
  return "?";
}

std::string to_string(StepOp op) {
  switch (op) {
    case StepOp::Up: return "up";
    case StepOp::Down: return "down";
    case StepOp::UpBar: return "up_bar";
    case StepOp::DownBar: return "down_bar";
    case StepOp::Mul: return "mul";
    case StepOp::MulInv: return "mul_inv";
  }
  return "?";
}

StepOp step_op_from_string(const std::string& s) {
  if (s == "up") return StepOp::Up;
  if (s == "down") return StepOp::Down;
  if (s == "up_bar") return StepOp::UpBar;
  if (s == "down_bar") return StepOp::DownBar;
  if (s == "mul") return StepOp::Mul;
  if (s == "mul_inv") return StepOp::MulInv;
  throw Error("unknown relation op: " + s);
}

namespace {

int cyc(int i, int m) { return ((i % m) + m) % m; }

}  // namespace

ArcStructure arc_structure(const GaussCode& code) {
  require_valid(code);
  ArcStructure out;
  int nc = static_cast<int>(code.components.size());
  out.arc_of.resize(nc);
  std::vector<int> comp_base(nc, 0);
  for (int c = 0; c < nc; ++c) {
    const Component& comp = code.components[c];
    int m = static_cast<int>(comp.size());
    comp_base[c] = out.arc_count;
    if (m == 0) {
      out.arc_count += 1;  // a crossingless circle is a single free arc
      continue;
    }
    std::vector<int> unders;
    for (int p = 0; p < m; ++p)
      if (comp[p].role == Role::Under) unders.push_back(p);
    out.arc_of[c].assign(m, comp_base[c]);
    if (unders.empty()) {
      out.arc_count += 1;  // over-only component: one arc
      continue;
    }
    // Arc i ends (inclusive) at unders[i]; a position belongs to the arc
    // ending at the first under position >= it, cyclically.
    for (int p = 0; p < m; ++p) {
      auto it = std::lower_bound(unders.begin(), unders.end(), p);
      int idx = it == unders.end() ? 0 : static_cast<int>(it - unders.begin());
      out.arc_of[c][p] = comp_base[c] + idx;
    }
    out.arc_count += static_cast<int>(unders.size());
  }
  std::map<int, ArcStructure::CrossingArcs> per_crossing;
  for (int c = 0; c < nc; ++c) {
    const Component& comp = code.components[c];
    int m = static_cast<int>(comp.size());
    for (int p = 0; p < m; ++p) {
      const Passage& pass = comp[p];
      auto& entry = per_crossing[pass.crossing];
      entry.crossing = pass.crossing;
      entry.sign = pass.sign;
      if (pass.role == Role::Over) {
        entry.over_arc = out.arc_of[c][p];
      } else {
        entry.under_in_arc = out.arc_of[c][p];
        entry.under_out_arc = out.arc_of[c][cyc(p + 1, m)];
      }
    }
  }
  for (auto& [id, entry] : per_crossing) out.crossings.push_back(entry);
  return out;
}

SemiarcStructure semiarc_structure(const GaussCode& code) {
  require_valid(code);
  SemiarcStructure out;
  int nc = static_cast<int>(code.components.size());
  out.after_token.resize(nc);
  for (int c = 0; c < nc; ++c) {
    int m = static_cast<int>(code.components[c].size());
    if (m == 0) {
      out.semiarc_count += 1;  // free circle: one generator
      continue;
    }
    out.after_token[c].resize(m);
    for (int p = 0; p < m; ++p) out.after_token[c][p] = out.semiarc_count + p;
    out.semiarc_count += m;
  }
  std::map<int, SemiarcStructure::CrossingSemiarcs> per_crossing;
  for (int c = 0; c < nc; ++c) {
    const Component& comp = code.components[c];
    int m = static_cast<int>(comp.size());
    for (int p = 0; p < m; ++p) {
      const Passage& pass = comp[p];
      auto& entry = per_crossing[pass.crossing];
      entry.crossing = pass.crossing;
      entry.sign = pass.sign;
      int in = out.after_token[c][cyc(p - 1, m)];
      int after = out.after_token[c][p];
      if (pass.role == Role::Under) {
        entry.under_in = in;
        entry.under_out = after;
      } else {
        entry.over_in = in;
        entry.over_out = after;
      }
    }
  }
  for (auto& [id, entry] : per_crossing) out.crossings.push_back(entry);
  return out;
}

namespace {

std::vector<std::string> numbered_names(const char* prefix, int count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (int i = 1; i <= count; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

}  // namespace

Presentation wirtinger_quandle(const GaussCode& code) {
  ArcStructure arcs = arc_structure(code);
  Presentation pres;
  pres.kind = PresKind::Quandle;
  pres.generators = numbered_names("a", arcs.arc_count);
  for (const auto& cr : arcs.crossings) {
    Relation rel;
    rel.lhs = cr.under_out_arc;
    rel.base = cr.under_in_arc;
    rel.steps = {{cr.sign > 0 ? StepOp::Up : StepOp::UpBar, cr.over_arc}};
    pres.relations.push_back(rel);
  }
  return pres;
}

Presentation wirtinger_group(const GaussCode& code) {
  Presentation pres = wirtinger_quandle(code);
  pres.kind = PresKind::Group;
  return pres;
}

Presentation semiarc_biquandle(const GaussCode& code) {
  SemiarcStructure semi = semiarc_structure(code);
  Presentation pres;
  pres.kind = PresKind::Biquandle;
  pres.generators = numbered_names("s", semi.semiarc_count);
  for (const auto& cr : semi.crossings) {
    Relation under_rel, over_rel;
    under_rel.lhs = cr.under_out;
    under_rel.base = cr.under_in;
    under_rel.steps = {{cr.sign > 0 ? StepOp::Up : StepOp::UpBar, cr.over_in}};
    over_rel.lhs = cr.over_out;
    over_rel.base = cr.over_in;
    over_rel.steps = {{cr.sign > 0 ? StepOp::Down : StepOp::DownBar, cr.under_in}};
    pres.relations.push_back(under_rel);
    pres.relations.push_back(over_rel);
  }
  return pres;
}

Presentation adconj(const Presentation& q) {
  if (q.kind != PresKind::Quandle)
    throw NonWirtingerRelation("adconj expects a quandle presentation");
  for (const auto& rel : q.relations)
    for (const auto& step : rel.steps)
      if (step.op != StepOp::Up && step.op != StepOp::UpBar)
        throw NonWirtingerRelation("adconj: relation uses a non-conjugation step");
  Presentation out = q;
  out.kind = PresKind::Group;
  return out;
}

std::vector<long long> smith_invariant_factors(std::vector<std::vector<long long>> m) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  std::vector<long long> factors;
  int t = 0;
  while (t < rows && t < cols) {
    // Pivot: smallest nonzero magnitude in the submatrix.
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (m[i][j] != 0 &&
            (pi < 0 || std::llabs(m[i][j]) < std::llabs(m[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    std::swap(m[t], m[pi]);
    for (int i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        long long q = m[i][t] / m[t][t];
        for (int j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {  // remainder smaller than pivot: swap up, restart
          std::swap(m[t], m[i]);
          clean = false;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        long long q = m[t][j] / m[t][t];
        for (int i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (int i = t; i < rows; ++i) std::swap(m[i][t], m[i][j]);
          clean = false;
        }
      }
    }
    // Divisibility: the pivot must divide every remaining entry.
    bool fixed = true;
    for (int i = t + 1; i < rows && fixed; ++i)
      for (int j = t + 1; j < cols && fixed; ++j)
        if (m[i][j] % m[t][t] != 0) {
          for (int jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
          fixed = false;
        }
    if (!fixed) continue;  // redo elimination at the same t
    factors.push_back(std::llabs(m[t][t]));
    ++t;
  }
  return factors;
}

Abelianization abelianization(const Presentation& g) {
  if (g.kind != PresKind::Group)
    throw Error("abelianization expects a group presentation");
  int gens = static_cast<int>(g.generators.size());
  std::vector<std::vector<long long>> matrix;
  for (const auto& rel : g.relations) {
    std::vector<long long> row(gens, 0);
    row[rel.base] += 1;
    for (const auto& step : rel.steps) {
      switch (step.op) {
        case StepOp::Up:
        case StepOp::UpBar:
          break;  // conjugation: net exponent zero
        case StepOp::Mul:
          row[step.arg] += 1;
          break;
        case StepOp::MulInv:
          row[step.arg] -= 1;
          break;
        default:
          throw Error("abelianization: biquandle step in a group presentation");
      }
    }
    row[rel.lhs] -= 1;
    matrix.push_back(std::move(row));
  }
  auto factors = smith_invariant_factors(std::move(matrix));
  Abelianization out;
  out.free_rank = gens - static_cast<long long>(factors.size());
  for (long long f : factors)
    if (f > 1) out.torsion.push_back(f);
  return out;
}

namespace {

// Forward and first-argument-inverse tables per step op, flattened per target.
struct StepTables {
  int n = 0;
  std::array<Table, 6> fwd;
  std::array<Table, 6> inv;
  std::array<bool, 6> present{};

  int apply(StepOp op, int a, int b) const { return fwd[static_cast<int>(op)][a][b]; }
  int unapply(StepOp op, int a, int b) const { return inv[static_cast<int>(op)][a][b]; }
  bool has(StepOp op) const { return present[static_cast<int>(op)]; }
};

Table slice_inverse(const Table& t) {
  int n = static_cast<int>(t.size());
  Table inv(n, std::vector<int>(n, -1));
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a) inv[t[a][b]][b] = a;
  return inv;
}

StepTables tables_for(const FiniteQuandle& q) {
  StepTables t;
  t.n = q.n;
  t.fwd[static_cast<int>(StepOp::Up)] = q.op;
  t.inv[static_cast<int>(StepOp::Up)] = q.inv_op;
  t.fwd[static_cast<int>(StepOp::UpBar)] = q.inv_op;
  t.inv[static_cast<int>(StepOp::UpBar)] = q.op;
  t.present[static_cast<int>(StepOp::Up)] = t.present[static_cast<int>(StepOp::UpBar)] = true;
  return t;
}

StepTables tables_for(const FiniteBiquandle& b) {
  StepTables t;
  t.n = b.n;
  auto set = [&](StepOp op, const Table& table) {
    t.fwd[static_cast<int>(op)] = table;
    t.inv[static_cast<int>(op)] = slice_inverse(table);
    t.present[static_cast<int>(op)] = true;
  };
  set(StepOp::Up, b.up);
  set(StepOp::Down, b.down);
  set(StepOp::UpBar, b.up_bar);
  set(StepOp::DownBar, b.down_bar);
  return t;
}

StepTables tables_for(const FiniteGroup& g) {
  StepTables t;
  t.n = g.n;
  Table conj(g.n, std::vector<int>(g.n)), conj_inv(g.n, std::vector<int>(g.n));
  Table mul(g.n, std::vector<int>(g.n)), mul_inv(g.n, std::vector<int>(g.n));
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b) {
      conj[a][b] = g.conj(a, b);                       // b a b^-1
      conj_inv[a][b] = g.op(g.op(g.inv(b), a), b);     // b^-1 a b
      mul[a][b] = g.op(a, b);
      mul_inv[a][b] = g.op(a, g.inv(b));
    }
  auto set = [&](StepOp op, Table fwd, Table inv) {
    t.fwd[static_cast<int>(op)] = std::move(fwd);
    t.inv[static_cast<int>(op)] = std::move(inv);
    t.present[static_cast<int>(op)] = true;
  };
  set(StepOp::Up, conj, conj_inv);
  set(StepOp::UpBar, conj_inv, conj);
  set(StepOp::Mul, mul, mul_inv);
  set(StepOp::MulInv, mul_inv, mul);
  return t;
}

class ColoringSearch {
 public:
  ColoringSearch(const Presentation& p, const StepTables& t) : pres_(p), tabs_(t) {
    for (const auto& rel : p.relations)
      for (const auto& step : rel.steps)
        if (!t.has(step.op))
          throw Error("relation step '" + to_string(step.op) +
                      "' is not defined for this coloring target");
    color_.assign(p.generators.size(), -1);
  }

  ColoringCount run(const std::string& name) {
    ColoringCount out;
    out.target = name;
    if (pres_.generators.empty()) {
      out.total = 1;
      return out;
    }
    dfs(out);
    return out;
  }

 private:
  const Presentation& pres_;
  const StepTables& tabs_;
  std::vector<int> color_;
  std::vector<int> trail_;

  bool assign(int g, int v) {
    if (color_[g] == v) return true;
    if (color_[g] != -1) return false;
    color_[g] = v;
    trail_.push_back(g);
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      color_[trail_.back()] = -1;
      trail_.pop_back();
    }
  }

  // Unit propagation over the relations until fixpoint; false on conflict.
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& rel : pres_.relations) {
        bool args_known = true;
        for (const auto& step : rel.steps)
          if (color_[step.arg] == -1) {
            args_known = false;
            break;
          }
        if (!args_known) continue;
        if (color_[rel.base] != -1) {
          int v = color_[rel.base];
          for (const auto& step : rel.steps)
            v = tabs_.apply(step.op, v, color_[step.arg]);
          if (color_[rel.lhs] == -1) changed = true;
          if (!assign(rel.lhs, v)) return false;
        } else if (color_[rel.lhs] != -1) {
          int v = color_[rel.lhs];
          for (auto it = rel.steps.rbegin(); it != rel.steps.rend(); ++it)
            v = tabs_.unapply(it->op, v, color_[it->arg]);
          changed = true;
          if (!assign(rel.base, v)) return false;
        }
      }
    }
    return true;
  }

  void tally(ColoringCount& out) {
    out.total += 1;
    std::uint64_t image = 0;
    for (int c : color_) image |= std::uint64_t(1) << c;
    int size = __builtin_popcountll(image);
    if (size == tabs_.n) out.surjective += 1;
    if (size == 1) out.constant += 1;
  }

  void dfs(ColoringCount& out) {
    std::size_t mark = trail_.size();
    if (!propagate()) {
      undo_to(mark);
      return;
    }
    int g = -1;
    for (std::size_t i = 0; i < color_.size(); ++i)
      if (color_[i] == -1) {
        g = static_cast<int>(i);
        break;
      }
    if (g == -1) {
      tally(out);
      undo_to(mark);
      return;
    }
    for (int v = 0; v < tabs_.n; ++v) {
      std::size_t branch = trail_.size();
      assign(g, v);
      dfs(out);
      undo_to(branch);
    }
    undo_to(mark);
  }
};

}  // namespace

ColoringCount count_quandle_colorings(const Presentation& p, const FiniteQuandle& q) {
  if (p.kind != PresKind::Quandle)
    throw Error("count_quandle_colorings expects a quandle presentation");
  StepTables t = tables_for(q);
  return ColoringSearch(p, t).run(q.name);
}

ColoringCount count_biquandle_colorings(const Presentation& p, const FiniteBiquandle& b) {
  if (p.kind != PresKind::Biquandle)
    throw Error("count_biquandle_colorings expects a biquandle presentation");
  StepTables t = tables_for(b);
  return ColoringSearch(p, t).run(b.name);
}

ColoringCount count_group_colorings(const Presentation& p, const FiniteGroup& g) {
  if (p.kind != PresKind::Group)
    throw Error("count_group_colorings expects a group presentation");
  StepTables t = tables_for(g);
  return ColoringSearch(p, t).run(g.name);
}

}  // namespace vknot
