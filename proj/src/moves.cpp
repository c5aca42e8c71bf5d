#include "vknot/moves.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace vknot {

std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::R1Insert: return "R1_insert";
    case MoveKind::R1Delete: return "R1_delete";
    case MoveKind::R2Insert: return "R2_insert";
    case MoveKind::R2Delete: return "R2_delete";
    case MoveKind::R3: return "R3";
    case MoveKind::Forbidden: return "Forbidden";
  }
  return "?";
}

MoveKind move_kind_from_string(const std::string& s) {
  if (s == "R1_insert") return MoveKind::R1Insert;
  if (s == "R1_delete") return MoveKind::R1Delete;
  if (s == "R2_insert") return MoveKind::R2Insert;
  if (s == "R2_delete") return MoveKind::R2Delete;
  if (s == "R3") return MoveKind::R3;
  if (s == "Forbidden") return MoveKind::Forbidden;
  throw Error("unknown move kind: " + s);
}

namespace {

int cyc(int i, int m) { return ((i % m) + m) % m; }

const Component& component_at(const GaussCode& code, int c) {
  if (c < 0 || c >= static_cast<int>(code.components.size()))
    throw InvalidSite("component index " + std::to_string(c) + " out of range");
  return code.components[c];
}

void check_gap(const GaussCode& code, const GapRef& g) {
  const Component& comp = component_at(code, g.component);
  int gaps = std::max<int>(static_cast<int>(comp.size()), 1);
  if (g.position < 0 || g.position >= gaps)
    throw InvalidSite("gap position " + std::to_string(g.position) + " out of range");
}

void check_token(const GaussCode& code, const GapRef& g) {
  const Component& comp = component_at(code, g.component);
  if (comp.empty() || g.position < 0 || g.position >= static_cast<int>(comp.size()))
    throw InvalidSite("token position " + std::to_string(g.position) + " out of range");
}

void insert_block(Component& comp, int gap, const std::vector<Passage>& block) {
  comp.insert(comp.begin() + gap, block.begin(), block.end());
}

// Removes the given token positions (cyclic indices, distinct).
void remove_positions(Component& comp, std::vector<int> positions) {
  std::sort(positions.begin(), positions.end(), std::greater<int>());
  for (int p : positions) comp.erase(comp.begin() + p);
}

// Gap index, after deleting `removed` from a component of size m, that
// re-inserts at the spot just past old position `last` (the position of the
// last token of a deleted block). Returns 0 for an emptied component.
int gap_after_deletion(int m, const std::vector<int>& removed, int last) {
  int new_size = m - static_cast<int>(removed.size());
  if (new_size == 0) return 0;
  // First surviving token at or after last+1 (cyclically).
  int cur = cyc(last + 1, m);
  while (std::find(removed.begin(), removed.end(), cur) != removed.end())
    cur = cyc(cur + 1, m);
  int idx = 0;
  for (int i = 0; i < cur; ++i)
    if (std::find(removed.begin(), removed.end(), i) == removed.end()) ++idx;
  return idx % new_size;
}

struct R2DeleteInfo {
  int j = 0, k = 0;                 // crossing ids, j first on the over strand
  int over_comp = 0, over_pos = 0;  // first over token
  int under_comp = 0;
  int under_first = 0, under_second = 0;  // positions in under order
  bool parallel = true;
  // Reconstructed inverse-insert parameters.
  GapRef over_gap, under_gap;
  bool collapsed = false;
  bool over_first = true;
  int insert_sign = +1;
};

// Structural match for R2_delete at the over pair (c, p). Returns false with
// `why` set when the pattern does not apply.
bool match_r2_delete(const GaussCode& code, int c, int p, R2DeleteInfo& info,
                     std::string& why) {
  const Component& comp = component_at(code, c);
  int m = static_cast<int>(comp.size());
  if (m < 2) {
    why = "component too short";
    return false;
  }
  const Passage& t1 = comp[p];
  const Passage& t2 = comp[cyc(p + 1, m)];
  if (t1.role != Role::Over || t2.role != Role::Over) {
    why = "tokens are not an adjacent Over pair";
    return false;
  }
  if (t1.crossing == t2.crossing) {
    why = "adjacent Over passages of the same crossing";
    return false;
  }
  if (t1.sign != -t2.sign) {
    why = "crossings do not have opposite signs";
    return false;
  }
  int j = t1.crossing, k = t2.crossing;
  auto uj = code.find(j, Role::Under);
  auto uk = code.find(k, Role::Under);
  if (!uj || !uk) {
    why = "under passages missing";
    return false;
  }
  if (uj->first != uk->first) {
    why = "under passages on different components";
    return false;
  }
  int cu = uj->first;
  const Component& ucomp = code.components[cu];
  int mu = static_cast<int>(ucomp.size());
  int qj = uj->second, qk = uk->second;
  bool parallel;
  if (cyc(qj + 1, mu) == qk)
    parallel = true;
  else if (cyc(qk + 1, mu) == qj)
    parallel = false;
  else {
    why = "under passages not adjacent";
    return false;
  }

  info.j = j;
  info.k = k;
  info.over_comp = c;
  info.over_pos = p;
  info.under_comp = cu;
  info.under_first = parallel ? qj : qk;
  info.under_second = parallel ? qk : qj;
  info.parallel = parallel;
  info.insert_sign = t1.sign;
  info.over_first = true;

  // Where the pairs would be re-inserted after deletion.
  if (c != cu) {
    info.over_gap = {c, gap_after_deletion(m, {p, cyc(p + 1, m)}, cyc(p + 1, m))};
    info.under_gap = {cu, gap_after_deletion(mu, {info.under_first, info.under_second},
                                             info.under_second)};
    info.collapsed = false;
    return true;
  }
  std::vector<int> removed = {p, cyc(p + 1, m), info.under_first, info.under_second};
  info.over_gap = {c, gap_after_deletion(m, removed, cyc(p + 1, m))};
  info.under_gap = {c, gap_after_deletion(m, removed, info.under_second)};
  info.collapsed = info.over_gap == info.under_gap;
  if (info.collapsed) {
    if (parallel) {
      // Over pair followed immediately by U_j U_k: a spiral, not a bigon.
      why = "pairs collapse onto one gap with parallel orientation";
      return false;
    }
    // Nested block: decide whether the over pair leads the block.
    if (info.under_first == cyc(p + 2, m)) {
      info.over_first = true;
      info.insert_sign = t1.sign;  // j is the first crossing of the block
    } else {
      info.over_first = false;
      info.insert_sign = t2.sign;  // block reads U-first with k leading
    }
  }
  return true;
}

struct R3Pair {
  int comp = 0, pos = 0;     // first token of the pair
  int first_id = 0, second_id = 0;
  Role first_role = Role::Over, second_role = Role::Over;
};

bool load_r3_pair(const GaussCode& code, const GapRef& g, R3Pair& pair, std::string& why) {
  const Component& comp = component_at(code, g.component);
  int m = static_cast<int>(comp.size());
  if (m < 2 || g.position < 0 || g.position >= m) {
    why = "pair site out of range";
    return false;
  }
  const Passage& a = comp[g.position];
  const Passage& b = comp[cyc(g.position + 1, m)];
  if (a.crossing == b.crossing) {
    why = "adjacent passages belong to one crossing";
    return false;
  }
  pair = {g.component, g.position, a.crossing, b.crossing, a.role, b.role};
  return true;
}

// Validity of the triangle pattern for sliding across crossing `across`,
// derived from a planar-triangle model: with Z the strand not incident to
// `across`, X/Y the others, t' = +1 iff Z is over at both its crossings,
// u' = +1 iff X is over at `across`, and order bits o_S = +1 iff strand S
// meets `across` (resp. c1 for Z) first in its pair, the pattern is movable
// iff  s(across) = o_X o_Y u',  s(c2) = o_X o_Z t',  s(c1) = o_Y o_Z t'
// for one of the two (X,Y) namings (the namings are mirror images).
bool r3_pattern_valid(const GaussCode& code, const std::array<R3Pair, 3>& pairs,
                      int across, std::string& why) {
  int zi = -1;
  for (int i = 0; i < 3; ++i)
    if (pairs[i].first_id != across && pairs[i].second_id != across) {
      if (zi != -1) {
        why = "crossing " + std::to_string(across) + " missing from two pairs";
        return false;
      }
      zi = i;
    }
  if (zi == -1) {
    why = "crossing " + std::to_string(across) + " appears in every pair";
    return false;
  }
  const R3Pair& zp = pairs[zi];
  if (zp.first_role != zp.second_role) {
    why = "sliding strand is neither over nor under both other strands";
    return false;
  }
  int tprime = zp.first_role == Role::Over ? +1 : -1;

  std::map<int, int> sign_of;
  for (const auto& comp : code.components)
    for (const auto& pass : comp) sign_of[pass.crossing] = pass.sign;

  const R3Pair& pa = pairs[(zi + 1) % 3];
  const R3Pair& pb = pairs[(zi + 2) % 3];
  for (int naming = 0; naming < 2; ++naming) {
    const R3Pair& xp = naming == 0 ? pa : pb;
    const R3Pair& yp = naming == 0 ? pb : pa;
    int c2 = xp.first_id == across ? xp.second_id : xp.first_id;
    int c1 = yp.first_id == across ? yp.second_id : yp.first_id;
    // Z's pair must connect exactly c1 and c2.
    if (!((zp.first_id == c1 && zp.second_id == c2) ||
          (zp.first_id == c2 && zp.second_id == c1)))
      continue;
    Role x_role_at_across = xp.first_id == across ? xp.first_role : xp.second_role;
    int uprime = x_role_at_across == Role::Over ? +1 : -1;
    int ox = xp.first_id == across ? +1 : -1;
    int oy = yp.first_id == across ? +1 : -1;
    int oz = zp.first_id == c1 ? +1 : -1;
    int s3 = sign_of[across], s2 = sign_of[c2], s1 = sign_of[c1];
    if (s3 == ox * oy * uprime && s2 == ox * oz * tprime && s1 == oy * oz * tprime)
      return true;
  }
  why = "triangle orientation/sign pattern does not match a slide across " +
        std::to_string(across);
  return false;
}

bool r3_sites_distinct(const GaussCode& code, const GapRef& a, const GapRef& b,
                       const GapRef& c) {
  std::set<std::pair<int, int>> seen;
  for (const GapRef* g : {&a, &b, &c}) {
    int m = static_cast<int>(code.components[g->component].size());
    seen.insert({g->component, g->position});
    seen.insert({g->component, cyc(g->position + 1, m)});
  }
  return seen.size() == 6;
}

}  // namespace

GaussCode apply_move(const GaussCode& code, const MoveInstance& m) {
  GaussCode out = code;
  switch (m.kind) {
    case MoveKind::R1Insert: {
      check_gap(code, m.site);
      if (m.sign != 1 && m.sign != -1) throw InvalidSite("sign must be +1 or -1");
      int id = code.max_crossing_id() + 1;
      Passage over{id, Role::Over, m.sign}, under{id, Role::Under, m.sign};
      std::vector<Passage> block = m.over_first ? std::vector<Passage>{over, under}
                                                : std::vector<Passage>{under, over};
      insert_block(out.components[m.site.component], m.site.position, block);
      return out;
    }
    case MoveKind::R1Delete: {
      check_token(code, m.site);
      Component& comp = out.components[m.site.component];
      int sz = static_cast<int>(comp.size());
      if (sz < 2) throw PatternMismatch("component too short for R1_delete");
      int p = m.site.position, p2 = cyc(p + 1, sz);
      if (comp[p].crossing != comp[p2].crossing)
        throw PatternMismatch("adjacent passages are not the two halves of one chord");
      remove_positions(comp, {p, p2});
      return out;
    }
    case MoveKind::R2Insert: {
      check_gap(code, m.site);
      check_gap(code, m.under_site);
      if (m.sign != 1 && m.sign != -1) throw InvalidSite("sign must be +1 or -1");
      int j = code.max_crossing_id() + 1, k = j + 1;
      Passage oj{j, Role::Over, m.sign}, ok{k, Role::Over, -m.sign};
      Passage uj{j, Role::Under, m.sign}, uk{k, Role::Under, -m.sign};
      if (m.site == m.under_site) {
        if (m.parallel)
          throw PatternMismatch("same-gap R2_insert is only antiparallel (nested)");
        std::vector<Passage> block = m.over_first
                                         ? std::vector<Passage>{oj, ok, uk, uj}
                                         : std::vector<Passage>{uj, uk, ok, oj};
        insert_block(out.components[m.site.component], m.site.position, block);
        return out;
      }
      std::vector<Passage> over_block = {oj, ok};
      std::vector<Passage> under_block = m.parallel ? std::vector<Passage>{uj, uk}
                                                    : std::vector<Passage>{uk, uj};
      if (m.site.component == m.under_site.component) {
        // Insert at the larger gap first so the smaller index stays valid.
        if (m.site.position > m.under_site.position) {
          insert_block(out.components[m.site.component], m.site.position, over_block);
          insert_block(out.components[m.site.component], m.under_site.position,
                       under_block);
        } else {
          insert_block(out.components[m.site.component], m.under_site.position,
                       under_block);
          insert_block(out.components[m.site.component], m.site.position, over_block);
        }
      } else {
        insert_block(out.components[m.site.component], m.site.position, over_block);
        insert_block(out.components[m.under_site.component], m.under_site.position,
                     under_block);
      }
      return out;
    }
    case MoveKind::R2Delete: {
      check_token(code, m.site);
      R2DeleteInfo info;
      std::string why;
      if (!match_r2_delete(code, m.site.component, m.site.position, info, why))
        throw PatternMismatch("R2_delete: " + why);
      int mo = static_cast<int>(out.components[info.over_comp].size());
      if (info.over_comp == info.under_comp) {
        remove_positions(out.components[info.over_comp],
                         {info.over_pos, cyc(info.over_pos + 1, mo), info.under_first,
                          info.under_second});
      } else {
        remove_positions(out.components[info.over_comp],
                         {info.over_pos, cyc(info.over_pos + 1, mo)});
        remove_positions(out.components[info.under_comp],
                         {info.under_first, info.under_second});
      }
      return out;
    }
    case MoveKind::R3: {
      std::array<R3Pair, 3> pairs;
      std::string why;
      for (int i = 0; i < 3; ++i) {
        const GapRef& g = i == 0 ? m.site : (i == 1 ? m.pair2 : m.pair3);
        check_token(code, g);
        if (!load_r3_pair(code, g, pairs[i], why)) throw PatternMismatch("R3: " + why);
      }
      if (!r3_sites_distinct(code, m.site, m.pair2, m.pair3))
        throw PatternMismatch("R3: the three pairs do not involve six distinct passages");
      if (!r3_pattern_valid(code, pairs, m.across, why))
        throw PatternMismatch("R3: " + why);
      for (const GapRef* g : {&m.site, &m.pair2, &m.pair3}) {
        Component& comp = out.components[g->component];
        int sz = static_cast<int>(comp.size());
        std::swap(comp[g->position], comp[cyc(g->position + 1, sz)]);
      }
      return out;
    }
    case MoveKind::Forbidden: {
      check_token(code, m.site);
      Component& comp = out.components[m.site.component];
      int sz = static_cast<int>(comp.size());
      if (sz < 2) throw PatternMismatch("component too short for the forbidden move");
      int p = m.site.position, p2 = cyc(p + 1, sz);
      if (comp[p].role != Role::Over || comp[p2].role != Role::Over)
        throw PatternMismatch("forbidden move needs two adjacent Over passages");
      std::swap(comp[p], comp[p2]);
      return out;
    }
  }
  throw Error("unreachable move kind");
}

std::vector<MoveInstance> enumerate_moves(const GaussCode& code) {
  std::vector<MoveInstance> out;
  int nc = static_cast<int>(code.components.size());

  // R1 inserts: every gap, both token orders, both signs.
  for (int c = 0; c < nc; ++c) {
    int gaps = std::max<int>(static_cast<int>(code.components[c].size()), 1);
    for (int g = 0; g < gaps; ++g)
      for (bool over_first : {true, false})
        for (int sign : {+1, -1}) {
          MoveInstance m;
          m.kind = MoveKind::R1Insert;
          m.site = {c, g};
          m.sign = sign;
          m.over_first = over_first;
          out.push_back(m);
        }
  }

  // R1 deletes: isolated chords (adjacent passages of one crossing).
  for (int c = 0; c < nc; ++c) {
    const Component& comp = code.components[c];
    int sz = static_cast<int>(comp.size());
    if (sz < 2) continue;
    int limit = sz == 2 ? 1 : sz;  // a 2-token component has one unordered pair
    for (int p = 0; p < limit; ++p)
      if (comp[p].crossing == comp[cyc(p + 1, sz)].crossing) {
        MoveInstance m;
        m.kind = MoveKind::R1Delete;
        m.site = {c, p};
        out.push_back(m);
      }
  }

  // R2 inserts: ordered gap pairs (over gap, under gap).
  std::vector<GapRef> all_gaps;
  for (int c = 0; c < nc; ++c) {
    int gaps = std::max<int>(static_cast<int>(code.components[c].size()), 1);
    for (int g = 0; g < gaps; ++g) all_gaps.push_back({c, g});
  }
  for (const GapRef& g1 : all_gaps)
    for (const GapRef& g2 : all_gaps)
      for (int sign : {+1, -1}) {
        if (g1 == g2) {
          for (bool over_first : {true, false}) {
            MoveInstance m;
            m.kind = MoveKind::R2Insert;
            m.site = g1;
            m.under_site = g2;
            m.sign = sign;
            m.parallel = false;
            m.over_first = over_first;
            out.push_back(m);
          }
        } else {
          for (bool parallel : {true, false}) {
            MoveInstance m;
            m.kind = MoveKind::R2Insert;
            m.site = g1;
            m.under_site = g2;
            m.sign = sign;
            m.parallel = parallel;
            out.push_back(m);
          }
        }
      }

  // R2 deletes.
  for (int c = 0; c < nc; ++c) {
    const Component& comp = code.components[c];
    int sz = static_cast<int>(comp.size());
    if (sz < 2) continue;
    int limit = sz == 2 ? 1 : sz;
    for (int p = 0; p < limit; ++p) {
      R2DeleteInfo info;
      std::string why;
      if (match_r2_delete(code, c, p, info, why)) {
        MoveInstance m;
        m.kind = MoveKind::R2Delete;
        m.site = {c, p};
        out.push_back(m);
      }
    }
  }

  // R3: triangles of pairwise-adjacent chords.
  std::map<std::pair<int, int>, std::vector<GapRef>> adjacency;
  for (int c = 0; c < nc; ++c) {
    const Component& comp = code.components[c];
    int sz = static_cast<int>(comp.size());
    if (sz < 2) continue;
    for (int p = 0; p < sz; ++p) {
      int a = comp[p].crossing, b = comp[cyc(p + 1, sz)].crossing;
      if (a == b) continue;
      adjacency[{std::min(a, b), std::max(a, b)}].push_back({c, p});
    }
  }
  std::vector<int> ids;
  {
    std::set<int> idset;
    for (const auto& comp : code.components)
      for (const auto& pass : comp) idset.insert(pass.crossing);
    ids.assign(idset.begin(), idset.end());
  }
  int ni = static_cast<int>(ids.size());
  for (int i = 0; i < ni; ++i)
    for (int jx = i + 1; jx < ni; ++jx)
      for (int kx = jx + 1; kx < ni; ++kx) {
        int a = ids[i], b = ids[jx], cc = ids[kx];
        auto ab = adjacency.find({a, b});
        auto ac = adjacency.find({a, cc});
        auto bc = adjacency.find({b, cc});
        if (ab == adjacency.end() || ac == adjacency.end() || bc == adjacency.end())
          continue;
        for (const GapRef& s1 : ab->second)
          for (const GapRef& s2 : ac->second)
            for (const GapRef& s3 : bc->second) {
              if (!r3_sites_distinct(code, s1, s2, s3)) continue;
              std::array<R3Pair, 3> pairs;
              std::string why;
              bool ok = true;
              const GapRef* sites[3] = {&s1, &s2, &s3};
              for (int t = 0; t < 3 && ok; ++t)
                ok = load_r3_pair(code, *sites[t], pairs[t], why);
              if (!ok) continue;
              for (int across : {a, b, cc}) {
                if (r3_pattern_valid(code, pairs, across, why)) {
                  MoveInstance m;
                  m.kind = MoveKind::R3;
                  m.site = s1;
                  m.pair2 = s2;
                  m.pair3 = s3;
                  m.across = across;
                  out.push_back(m);
                }
              }
            }
      }

  // Forbidden: adjacent Over pairs.
  for (int c = 0; c < nc; ++c) {
    const Component& comp = code.components[c];
    int sz = static_cast<int>(comp.size());
    if (sz < 2) continue;
    int limit = sz == 2 ? 1 : sz;
    for (int p = 0; p < limit; ++p)
      if (comp[p].role == Role::Over && comp[cyc(p + 1, sz)].role == Role::Over) {
        MoveInstance m;
        m.kind = MoveKind::Forbidden;
        m.site = {c, p};
        out.push_back(m);
      }
  }
  return out;
}

MoveInstance inverse_of(const GaussCode& code, const MoveInstance& m) {
  switch (m.kind) {
    case MoveKind::R1Insert: {
      MoveInstance inv;
      inv.kind = MoveKind::R1Delete;
      inv.site = m.site;  // the inserted pair lands at (gap, gap+1)
      return inv;
    }
    case MoveKind::R1Delete: {
      check_token(code, m.site);
      const Component& comp = code.components[m.site.component];
      int sz = static_cast<int>(comp.size());
      const Passage& first = comp[m.site.position];
      MoveInstance inv;
      inv.kind = MoveKind::R1Insert;
      inv.site = {m.site.component,
                  gap_after_deletion(sz, {m.site.position, cyc(m.site.position + 1, sz)},
                                     cyc(m.site.position + 1, sz))};
      inv.sign = first.sign;
      inv.over_first = first.role == Role::Over;
      return inv;
    }
    case MoveKind::R2Insert: {
      MoveInstance inv;
      inv.kind = MoveKind::R2Delete;
      int pos = m.site.position;
      if (m.site == m.under_site) {
        pos += m.over_first ? 0 : 2;
      } else if (m.site.component == m.under_site.component &&
                 m.under_site.position < m.site.position) {
        pos += 2;
      }
      inv.site = {m.site.component, pos};
      return inv;
    }
    case MoveKind::R2Delete: {
      R2DeleteInfo info;
      std::string why;
      if (!match_r2_delete(code, m.site.component, m.site.position, info, why))
        throw PatternMismatch("R2_delete: " + why);
      MoveInstance inv;
      inv.kind = MoveKind::R2Insert;
      inv.site = info.over_gap;
      inv.under_site = info.under_gap;
      inv.sign = info.insert_sign;
      inv.parallel = info.collapsed ? false : info.parallel;
      inv.over_first = info.over_first;
      return inv;
    }
    case MoveKind::R3:
    case MoveKind::Forbidden:
      return m;  // both rewrites are involutions at the same site
  }
  throw Error("unreachable move kind");
}

}  // namespace vknot
