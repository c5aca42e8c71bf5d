// Shared test oracles and generators. Everything here is deliberately
// independent of the library's computation paths: plain exhaustive
// enumeration for coloring counts and a from-scratch boundary walker for the
// supporting surface.
#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "vknot/algebra.hpp"
#include "vknot/gauss.hpp"
#include "vknot/presentation.hpp"
#include "vknot/ribbon.hpp"

namespace vknot::testing {

// ---------------------------------------------------------------------------
// Exhaustive coloring oracle: try all n^gens assignments, evaluate every
// relation directly.

inline int oracle_apply(const Presentation& p, const FiniteQuandle* q,
                        const FiniteBiquandle* b, const FiniteGroup* g, StepOp op, int x,
                        int y) {
  switch (op) {
    case StepOp::Up:
      if (q) return q->op[x][y];
      if (b) return b->up[x][y];
      return g->conj(x, y);
    case StepOp::UpBar:
      if (q) return q->inv_op[x][y];
      if (b) return b->up_bar[x][y];
      return g->op(g->op(g->inv(y), x), y);
    case StepOp::Down:
      return b->down[x][y];
    case StepOp::DownBar:
      return b->down_bar[x][y];
    case StepOp::Mul:
      return g->op(x, y);
    case StepOp::MulInv:
      return g->op(x, g->inv(y));
  }
  (void)p;
  return -1;
}

inline ColoringCount oracle_count(const Presentation& p, const FiniteQuandle* q,
                                  const FiniteBiquandle* b, const FiniteGroup* g, int n) {
  ColoringCount out;
  out.target = "oracle";
  int gens = static_cast<int>(p.generators.size());
  std::vector<int> color(gens, 0);
  while (true) {
    bool ok = true;
    for (const auto& rel : p.relations) {
      int v = color[rel.base];
      for (const auto& step : rel.steps)
        v = oracle_apply(p, q, b, g, step.op, v, color[step.arg]);
      if (v != color[rel.lhs]) {
        ok = false;
        break;
      }
    }
    if (ok) {
      out.total++;
      std::set<int> image(color.begin(), color.end());
      if (static_cast<int>(image.size()) == n) out.surjective++;
      if (image.size() == 1) out.constant++;
    }
    int i = 0;
    for (; i < gens; ++i) {
      if (++color[i] < n) break;
      color[i] = 0;
    }
    if (i == gens) break;
  }
  return out;
}

inline ColoringCount oracle_quandle_count(const Presentation& p, const FiniteQuandle& q) {
  return oracle_count(p, &q, nullptr, nullptr, q.n);
}
inline ColoringCount oracle_biquandle_count(const Presentation& p, const FiniteBiquandle& b) {
  return oracle_count(p, nullptr, &b, nullptr, b.n);
}
inline ColoringCount oracle_group_count(const Presentation& p, const FiniteGroup& g) {
  return oracle_count(p, nullptr, nullptr, &g, g.n);
}

// ---------------------------------------------------------------------------
// Independent supporting-surface oracle. Walks the boundary of the band
// surface directly: each strand segment is a band whose two sides are
// boundary arcs; at a crossing disk the boundary turns through a corner
// between rotationally adjacent band-ends. State is (band, travel direction,
// which side of travel); walking on the left, arriving at slot s continues
// outward through the rotation-predecessor of s, staying on the left. The
// left-orbits are exactly the boundary circles.

struct OracleGenus {
  int total = 0;
  int pieces = 0;
};

inline OracleGenus oracle_supporting_genus(const GaussCode& code) {
  struct End {
    int vertex;
    int slot;  // 0 under-in, 1 over-in, 2 under-out, 3 over-out
  };
  std::map<int, int> vid;
  for (const auto& comp : code.components)
    for (const auto& p : comp)
      if (!vid.count(p.crossing)) vid.emplace(p.crossing, static_cast<int>(vid.size()));
  int V = static_cast<int>(vid.size());
  std::vector<int> vsign(V, +1);
  for (const auto& comp : code.components)
    for (const auto& p : comp) vsign[vid[p.crossing]] = p.sign;

  std::vector<std::pair<End, End>> segs;  // (tail end, head end)
  int circles = 0;
  for (const auto& comp : code.components) {
    int m = static_cast<int>(comp.size());
    if (m == 0) {
      ++circles;
      continue;
    }
    for (int p = 0; p < m; ++p) {
      const auto& a = comp[p];
      const auto& b = comp[(p + 1) % m];
      End tail{vid[a.crossing], a.role == Role::Under ? 2 : 3};
      End head{vid[b.crossing], b.role == Role::Under ? 0 : 1};
      segs.push_back({tail, head});
    }
  }
  int E = static_cast<int>(segs.size());

  // occupant[v][slot] = (segment, 0 = tail end / 1 = head end).
  std::vector<std::array<std::pair<int, int>, 4>> occ(V);
  for (int e = 0; e < E; ++e) {
    occ[segs[e].first.vertex][segs[e].first.slot] = {e, 0};
    occ[segs[e].second.vertex][segs[e].second.slot] = {e, 1};
  }
  // Cyclic slot order around each crossing disk; a negative crossing mirrors
  // the over strand.
  auto rotation_at = [&](int v) -> std::array<int, 4> {
    return vsign[v] > 0 ? std::array<int, 4>{0, 1, 2, 3} : std::array<int, 4>{0, 3, 2, 1};
  };

  // Left-side walker: 2E states (edge, direction).
  auto encode = [&](int e, bool fwd) { return e * 2 + (fwd ? 0 : 1); };
  auto next_state = [&](int e, bool fwd) {
    End at = fwd ? segs[e].second : segs[e].first;
    auto rot = rotation_at(at.vertex);
    int pos = 0;
    while (rot[pos] != at.slot) ++pos;
    int prev_slot = rot[(pos + 3) % 4];
    auto [ne, nend] = occ[at.vertex][prev_slot];
    return std::pair<int, bool>(ne, nend == 0);  // leave outward
  };

  std::vector<char> seen(2 * E, 0);
  std::map<int, int> piece_faces;

  // Connected pieces of the graph.
  std::vector<int> parent(V);
  for (int i = 0; i < V; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& s : segs) parent[find(s.first.vertex)] = find(s.second.vertex);

  for (int e = 0; e < E; ++e)
    for (bool fwd : {true, false}) {
      if (seen[encode(e, fwd)]) continue;
      int ce = e;
      bool cf = fwd;
      while (!seen[encode(ce, cf)]) {
        seen[encode(ce, cf)] = 1;
        auto [ne, nf] = next_state(ce, cf);
        ce = ne;
        cf = nf;
      }
      piece_faces[find(segs[e].first.vertex)]++;
    }

  std::map<int, std::array<int, 2>> piece;  // V, E per root
  for (int v = 0; v < V; ++v) piece[find(v)][0]++;
  for (const auto& s : segs) piece[find(s.first.vertex)][1]++;

  OracleGenus out;
  for (auto& [root, ve] : piece) {
    int chi = ve[0] - ve[1] + piece_faces[root];
    out.total += (2 - chi) / 2;
    out.pieces++;
  }
  out.pieces += circles;
  return out;
}

// ---------------------------------------------------------------------------
// Random generators. All valid by construction.

inline GaussCode random_code(std::mt19937& rng, int max_crossings, int max_components) {
  std::uniform_int_distribution<int> ncross(0, max_crossings);
  std::uniform_int_distribution<int> ncomp(1, max_components);
  int n = ncross(rng);
  int k = ncomp(rng);
  std::vector<Passage> tokens;
  std::uniform_int_distribution<int> coin(0, 1);
  for (int id = 1; id <= n; ++id) {
    int sign = coin(rng) ? +1 : -1;
    tokens.push_back({id, Role::Over, sign});
    tokens.push_back({id, Role::Under, sign});
  }
  std::shuffle(tokens.begin(), tokens.end(), rng);
  GaussCode code;
  code.components.resize(k);
  // Random split points.
  std::vector<int> cut(k - 1);
  std::uniform_int_distribution<int> pos(0, static_cast<int>(tokens.size()));
  for (auto& c : cut) c = pos(rng);
  std::sort(cut.begin(), cut.end());
  std::size_t t = 0;
  for (int c = 0; c < k; ++c) {
    std::size_t stop = c + 1 < k ? cut[c] : tokens.size();
    for (; t < stop; ++t) code.components[c].push_back(tokens[t]);
  }
  return code;
}

inline GaussCode random_knot_code(std::mt19937& rng, int max_crossings) {
  return random_code(rng, max_crossings, 1);
}

inline RibbonData random_ribbon(std::mt19937& rng, int max_bases, int max_handles,
                                int max_word) {
  std::uniform_int_distribution<int> nb(1, max_bases);
  int bases = nb(rng);
  std::uniform_int_distribution<int> nh(bases - 1, max_handles);
  int handles = std::max(nh(rng), bases - 1);
  RibbonData out;
  out.num_bases = bases;
  std::uniform_int_distribution<int> base_pick(1, bases);
  std::uniform_int_distribution<int> word_len(0, max_word);
  std::uniform_int_distribution<int> coin(0, 1);
  auto random_word = [&] {
    std::vector<BasePass> w;
    int len = word_len(rng);
    for (int i = 0; i < len; ++i) w.push_back({base_pick(rng), coin(rng) ? +1 : -1});
    return w;
  };
  // Spanning tree first so the base graph is connected.
  for (int b = 2; b <= bases; ++b) {
    std::uniform_int_distribution<int> prev(1, b - 1);
    out.handles.push_back({b, random_word(), prev(rng)});
  }
  for (int h = bases - 1; h < handles; ++h)
    out.handles.push_back({base_pick(rng), random_word(), base_pick(rng)});
  return out;
}

}  // namespace vknot::testing
