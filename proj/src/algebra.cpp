#include "vknot/algebra.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

namespace vknot {

namespace {

bool table_shape_ok(int n, const Table& t) {
  if (static_cast<int>(t.size()) != n) return false;
  for (const auto& row : t) {
    if (static_cast<int>(row.size()) != n) return false;
    for (int v : row)
      if (v < 0 || v >= n) return false;
  }
  return true;
}

void require_shape(int n, const Table& t, const char* what) {
  if (!table_shape_ok(n, t))
    throw Error(std::string(what) + ": expected an " + std::to_string(n) + "x" +
                std::to_string(n) + " table with entries in 0.." + std::to_string(n - 1));
}

bool column_bijective(const Table& t, int b) {
  int n = static_cast<int>(t.size());
  std::vector<char> seen(n, 0);
  for (int a = 0; a < n; ++a) {
    if (seen[t[a][b]]) return false;
    seen[t[a][b]] = 1;
  }
  return true;
}

}  // namespace

std::vector<AxiomViolation> group_violations(int n, const Table& mul) {
  std::vector<AxiomViolation> out;
  require_shape(n, mul, "group");
  int e = -1;
  for (int cand = 0; cand < n && e < 0; ++cand) {
    bool ok = true;
    for (int a = 0; a < n; ++a)
      if (mul[cand][a] != a || mul[a][cand] != a) {
        ok = false;
        break;
      }
    if (ok) e = cand;
  }
  if (e < 0) {
    out.push_back({"identity", 0, 0, 0, "no two-sided identity element"});
    return out;
  }
  for (int a = 0; a < n; ++a) {
    bool has_inv = false;
    for (int b = 0; b < n; ++b)
      if (mul[a][b] == e && mul[b][a] == e) has_inv = true;
    if (!has_inv) {
      out.push_back({"inverses", a, 0, 0, "element " + std::to_string(a) + " has no inverse"});
      if (out.size() > 8) return out;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) {
          out.push_back({"associativity", a, b, c, "(a*b)*c != a*(b*c)"});
          if (out.size() > 8) return out;
        }
  return out;
}

FiniteGroup make_group(const Table& mul, std::string name) {
  int n = static_cast<int>(mul.size());
  auto v = group_violations(n, mul);
  if (!v.empty()) throw AxiomError("not a group: " + v.front().message, v);
  FiniteGroup g;
  g.n = n;
  g.mul = mul;
  g.name = std::move(name);
  for (int cand = 0; cand < n; ++cand) {
    bool ok = true;
    for (int a = 0; a < n; ++a)
      if (mul[cand][a] != a || mul[a][cand] != a) ok = false;
    if (ok) {
      g.identity = cand;
      break;
    }
  }
  g.inverse.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul[a][b] == g.identity && mul[b][a] == g.identity) g.inverse[a] = b;
  return g;
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw Error("cyclic_group: n must be >= 1");
  Table mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  return make_group(mul, "C" + std::to_string(n));
}

FiniteGroup dihedral_group(int n) {
  if (n < 1) throw Error("dihedral_group: n must be >= 1");
  // Elements (i, j) = r^i s^j, index = i + n*j.
  int size = 2 * n;
  Table mul(size, std::vector<int>(size));
  for (int i1 = 0; i1 < n; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          int i = ((j1 ? i1 - i2 : i1 + i2) % n + n) % n;
          int j = j1 ^ j2;
          mul[i1 + n * j1][i2 + n * j2] = i + n * j;
        }
  return make_group(mul, "D" + std::to_string(n));
}

FiniteGroup dicyclic_group(int n) {
  if (n < 1) throw Error("dicyclic_group: n must be >= 1");
  // Elements a^i b^j, i in 0..2n-1, j in 0..1, with b a = a^-1 b, b^2 = a^n.
  int two_n = 2 * n, size = 4 * n;
  Table mul(size, std::vector<int>(size));
  for (int i1 = 0; i1 < two_n; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < two_n; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          int i, j;
          if (j1 == 0) {
            i = (i1 + i2) % two_n;
            j = j2;
          } else if (j2 == 0) {
            i = ((i1 - i2) % two_n + two_n) % two_n;
            j = 1;
          } else {
            i = ((i1 - i2 + n) % two_n + two_n) % two_n;
            j = 0;
          }
          mul[i1 + two_n * j1][i2 + two_n * j2] = i + two_n * j;
        }
  return make_group(mul, n == 2 ? std::string("Q8") : "Dic" + std::to_string(n));
}

namespace {

std::array<int, 4> perm_compose(const std::array<int, 4>& f, const std::array<int, 4>& g) {
  // (f o g)(x) = f(g(x))
  return {f[g[0]], f[g[1]], f[g[2]], f[g[3]]};
}

FiniteGroup group_from_perms(std::vector<std::array<int, 4>> elems, std::string name) {
  int n = static_cast<int>(elems.size());
  Table mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto prod = perm_compose(elems[a], elems[b]);
      int idx = static_cast<int>(std::find(elems.begin(), elems.end(), prod) - elems.begin());
      if (idx == n) throw Error("group_from_perms: not closed");
      mul[a][b] = idx;
    }
  return make_group(mul, std::move(name));
}

}  // namespace

FiniteGroup alternating_group_4() {
  std::vector<std::array<int, 4>> elems;
  std::array<int, 4> p = {0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (p[i] > p[j]) ++inversions;
    if (inversions % 2 == 0) elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return group_from_perms(std::move(elems), "A4");
}

FiniteGroup symmetric_group_3() {
  std::vector<std::array<int, 4>> elems;
  std::array<int, 4> p = {0, 1, 2, 3};
  do {
    if (p[3] == 3) elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return group_from_perms(std::move(elems), "S3");
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  int n = g.n * h.n;
  Table mul(n, std::vector<int>(n));
  auto idx = [&](int a, int b) { return a * h.n + b; };
  for (int a1 = 0; a1 < g.n; ++a1)
    for (int b1 = 0; b1 < h.n; ++b1)
      for (int a2 = 0; a2 < g.n; ++a2)
        for (int b2 = 0; b2 < h.n; ++b2)
          mul[idx(a1, b1)][idx(a2, b2)] = idx(g.mul[a1][a2], h.mul[b1][b2]);
  return make_group(mul, g.name + "x" + h.name);
}

std::vector<FiniteGroup> groups_up_to_order_12() {
  std::vector<FiniteGroup> out;
  for (int n = 1; n <= 12; ++n) out.push_back(cyclic_group(n));
  out.push_back(direct_product(cyclic_group(2), cyclic_group(2)));   // V4
  out.push_back(symmetric_group_3());                                // S3
  out.push_back(direct_product(cyclic_group(4), cyclic_group(2)));
  out.push_back(direct_product(direct_product(cyclic_group(2), cyclic_group(2)),
                               cyclic_group(2)));                    // C2^3
  out.push_back(dihedral_group(4));                                  // D4
  out.push_back(dicyclic_group(2));                                  // Q8
  out.push_back(direct_product(cyclic_group(3), cyclic_group(3)));
  out.push_back(dihedral_group(5));                                  // D5
  out.push_back(direct_product(cyclic_group(6), cyclic_group(2)));
  out.push_back(dihedral_group(6));                                  // D6
  out.push_back(alternating_group_4());
  out.push_back(dicyclic_group(3));                                  // Dic3
  return out;
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elements) {
  if (elements.empty()) return false;
  std::set<int> s(elements.begin(), elements.end());
  if (s.size() != elements.size()) return false;
  for (int a : s)
    if (a < 0 || a >= g.n) return false;
  if (!s.count(g.identity)) return false;
  for (int a : s) {
    if (!s.count(g.inv(a))) return false;
    for (int b : s)
      if (!s.count(g.op(a, b))) return false;
  }
  return true;
}

std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g) {
  // Close random-free: grow subgroups from generating subsets, breadth-first
  // over generators; fine at |G| <= 12.
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> frontier = {{g.identity}};
  found.insert({g.identity});
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& h : frontier) {
      for (int x = 0; x < g.n; ++x) {
        std::set<int> gen(h.begin(), h.end());
        if (gen.count(x)) continue;
        gen.insert(x);
        // Closure.
        bool grew = true;
        while (grew) {
          grew = false;
          std::vector<int> cur(gen.begin(), gen.end());
          for (int a : cur) {
            if (!gen.count(g.inv(a))) {
              gen.insert(g.inv(a));
              grew = true;
            }
            for (int b : cur)
              if (!gen.count(g.op(a, b))) {
                gen.insert(g.op(a, b));
                grew = true;
              }
          }
        }
        std::vector<int> closed(gen.begin(), gen.end());
        if (found.insert(closed).second) next.push_back(closed);
      }
    }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

std::vector<int> center_of_subgroup(const FiniteGroup& g, const std::vector<int>& p) {
  std::vector<int> out;
  for (int m : p) {
    bool central = true;
    for (int x : p)
      if (g.op(m, x) != g.op(x, m)) central = false;
    if (central) out.push_back(m);
  }
  return out;
}

std::vector<AxiomViolation> quandle_violations(int n, const Table& op, const Table& inv_op) {
  std::vector<AxiomViolation> out;
  require_shape(n, op, "quandle op");
  require_shape(n, inv_op, "quandle inv_op");
  for (int a = 0; a < n; ++a)
    if (op[a][a] != a) {
      out.push_back({"idempotence", a, 0, 0,
                     "a*a != a at a=" + std::to_string(a)});
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (inv_op[op[a][b]][b] != a || op[inv_op[a][b]][b] != a) {
        out.push_back({"right-invertibility", a, b, 0,
                       "inv_op is not inverse to op at (" + std::to_string(a) + "," +
                           std::to_string(b) + ")"});
        if (out.size() > 16) return out;
      }
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (op[op[a][b]][c] != op[op[a][c]][op[b][c]]) {
          out.push_back({"right-distributivity", a, b, c, "(a*b)*c != (a*c)*(b*c)"});
          if (out.size() > 16) return out;
        }
  return out;
}

FiniteQuandle validate_quandle(const Table& op, const Table& inv_op, std::string name) {
  int n = static_cast<int>(op.size());
  auto v = quandle_violations(n, op, inv_op);
  if (!v.empty()) throw AxiomError("not a quandle: " + v.front().message, v);
  return FiniteQuandle{n, op, inv_op, std::move(name)};
}

FiniteQuandle make_quandle(const Table& op, std::string name) {
  int n = static_cast<int>(op.size());
  require_shape(n, op, "quandle op");
  Table inv(n, std::vector<int>(n, -1));
  for (int b = 0; b < n; ++b) {
    if (!column_bijective(op, b))
      throw AxiomError("not a quandle: column " + std::to_string(b) + " of op is not a bijection",
                       {{"right-invertibility", 0, b, 0, "column not bijective"}});
    for (int a = 0; a < n; ++a) inv[op[a][b]][b] = a;
  }
  return validate_quandle(op, inv, std::move(name));
}

FiniteQuandle trivial_quandle(int n) {
  if (n < 1) throw Error("trivial_quandle: n must be >= 1");
  Table op(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) op[a][b] = a;
  return make_quandle(op, "trivial" + std::to_string(n));
}

FiniteQuandle dihedral_quandle(int n) {
  if (n < 1) throw Error("dihedral_quandle: n must be >= 1");
  Table op(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) op[a][b] = ((2 * b - a) % n + n) % n;
  return make_quandle(op, "dihedral" + std::to_string(n));
}

FiniteQuandle conjugation_quandle(const FiniteGroup& g) {
  Table op(g.n, std::vector<int>(g.n));
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b) op[a][b] = g.conj(a, b);
  return make_quandle(op, "conj(" + g.name + ")");
}

FiniteQuandle coset_quandle(const FiniteGroup& g, const std::vector<int>& p, int m) {
  if (!is_subgroup(g, p)) throw NotSubgroup("coset_quandle: P is not a subgroup");
  std::set<int> pset(p.begin(), p.end());
  if (!pset.count(m)) throw MNotInCenterOfP("coset_quandle: m is not in P");
  for (int x : p)
    if (g.op(m, x) != g.op(x, m))
      throw MNotInCenterOfP("coset_quandle: m is not central in P");
  // Right cosets Pg; representative = least element.
  std::vector<int> coset_of(g.n, -1);
  std::vector<int> reps;
  for (int x = 0; x < g.n; ++x) {
    if (coset_of[x] != -1) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int q : p) coset_of[g.op(q, x)] = id;
  }
  int nc = static_cast<int>(reps.size());
  Table op(nc, std::vector<int>(nc));
  for (int i = 0; i < nc; ++i)
    for (int j = 0; j < nc; ++j) {
      int gg = reps[i], hh = reps[j];
      // P(g h^-1 m h)
      int val = g.op(gg, g.op(g.inv(hh), g.op(m, hh)));
      op[i][j] = coset_of[val];
    }
  return make_quandle(op, "coset(" + g.name + ",|P|=" + std::to_string(p.size()) +
                              ",m=" + std::to_string(m) + ")");
}

namespace {

struct BiOps {
  const Table *up, *down, *up_bar, *down_bar;
  int U(int a, int b) const { return (*up)[a][b]; }
  int D(int a, int b) const { return (*down)[a][b]; }
  int Ub(int a, int b) const { return (*up_bar)[a][b]; }
  int Db(int a, int b) const { return (*down_bar)[a][b]; }
};

}  // namespace

std::vector<AxiomViolation> biquandle_violations(int n, const Table& up, const Table& down,
                                                 const Table& up_bar, const Table& down_bar) {
  std::vector<AxiomViolation> out;
  require_shape(n, up, "biquandle up");
  require_shape(n, down, "biquandle down");
  require_shape(n, up_bar, "biquandle up_bar");
  require_shape(n, down_bar, "biquandle down_bar");
  BiOps o{&up, &down, &up_bar, &down_bar};

  // Axiom 1: each operation is a bijection in its first argument.
  const char* names[4] = {"up", "down", "up_bar", "down_bar"};
  const Table* tables[4] = {&up, &down, &up_bar, &down_bar};
  for (int t = 0; t < 4; ++t)
    for (int b = 0; b < n; ++b)
      if (!column_bijective(*tables[t], b)) {
        out.push_back({"axiom1", 0, b, 0,
                       std::string(names[t]) + "[.][" + std::to_string(b) +
                           "] is not a bijection"});
      }
  if (!out.empty()) return out;

  // Axiom 2: c = a_c iff a = c^a; b = a^{b-bar} iff a = b_{a-bar}.
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      if ((c == o.D(a, c)) != (a == o.U(c, a))) {
        out.push_back({"axiom2", a, c, 0, "c=a_c iff a=c^a fails"});
        if (out.size() > 16) return out;
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if ((b == o.Ub(a, b)) != (a == o.Db(b, a))) {
        out.push_back({"axiom2", a, b, 0, "b=a^{b-bar} iff a=b_{a-bar} fails"});
        if (out.size() > 16) return out;
      }

  // Axiom 3: the ten identities, checked over all triples. Overlined words
  // distribute the bar over their letters without reversal.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        struct Check {
          const char* label;
          int lhs, rhs;
        };
        const Check checks[] = {
            {"id1: a=a^{b,bar(b_a)}", a, o.Ub(o.U(a, b), o.D(b, a))},
            {"id2: b=b_{a,bar(a^b)}", b, o.Db(o.D(b, a), o.U(a, b))},
            {"id3: a=a^{bar b,b_{bar a}}", a, o.U(o.Ub(a, b), o.Db(b, a))},
            {"id4: b=b_{bar a,a^{bar b}}", b, o.D(o.Db(b, a), o.Ub(a, b))},
            {"id5: a^{bc}=a^{c_b,b^c}", o.U(o.U(a, b), c),
             o.U(o.U(a, o.D(c, b)), o.U(b, c))},
            {"id6: c_{ba}=c_{a^b,b_a}", o.D(o.D(c, b), a),
             o.D(o.D(c, o.U(a, b)), o.D(b, a))},
            {"id7: (b_a)^{c_{a^b}}=(b^c)_{a^{c_b}}",
             o.U(o.D(b, a), o.D(c, o.U(a, b))), o.D(o.U(b, c), o.U(a, o.D(c, b)))},
            {"id8: mirror of id7",
             o.Ub(o.Db(b, a), o.Db(c, o.Ub(a, b))), o.Db(o.Ub(b, c), o.Ub(a, o.Db(c, b)))},
            {"id9: mirror of id5", o.Ub(o.Ub(a, b), c),
             o.Ub(o.Ub(a, o.Db(c, b)), o.Ub(b, c))},
            {"id10: mirror of id6", o.Db(o.Db(c, b), a),
             o.Db(o.Db(c, o.Ub(a, b)), o.Db(b, a))},
        };
        for (const auto& chk : checks)
          if (chk.lhs != chk.rhs) {
            out.push_back({std::string("axiom3 ") + chk.label, a, b, c, chk.label});
            if (out.size() > 16) return out;
          }
      }
  return out;
}

FiniteBiquandle validate_biquandle(const Table& up, const Table& down, const Table& up_bar,
                                   const Table& down_bar, std::string name) {
  int n = static_cast<int>(up.size());
  auto v = biquandle_violations(n, up, down, up_bar, down_bar);
  if (!v.empty()) throw AxiomError("not a biquandle: " + v.front().message, v);
  return FiniteBiquandle{n, up, down, up_bar, down_bar, std::move(name)};
}

bool alternative_axioms_hold(const FiniteBiquandle& bq) {
  int n = bq.n;
  BiOps o{&bq.up, &bq.down, &bq.up_bar, &bq.down_bar};
  for (int a = 0; a < n; ++a) {
    if (o.Ub(o.Db(a, a), o.Db(a, a)) != a) return false;
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (o.D(o.D(a, b), c) != o.D(o.D(a, o.U(c, b)), o.D(b, c))) return false;
        if (o.U(o.U(a, b), c) != o.U(o.U(a, o.D(c, b)), o.U(b, c))) return false;
        if (o.U(o.D(a, b), o.D(c, o.U(b, a))) != o.D(o.U(a, c), o.U(b, o.D(c, a))))
          return false;
      }
  }
  return true;
}

FiniteBiquandle quandle_as_biquandle(const FiniteQuandle& q) {
  Table down(q.n, std::vector<int>(q.n));
  for (int a = 0; a < q.n; ++a)
    for (int b = 0; b < q.n; ++b) down[a][b] = a;
  return validate_biquandle(q.op, down, q.inv_op, down, "biq(" + q.name + ")");
}

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int mod_inverse(int a, int p) {
  int r = 1, base = ((a % p) + p) % p, e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

FiniteBiquandle alexander_biquandle(int p, int s, int t) {
  if (!is_prime(p)) throw NotPrime("alexander_biquandle: p = " + std::to_string(p));
  auto norm = [&](int x) { return ((x % p) + p) % p; };
  s = norm(s);
  t = norm(t);
  if (s == 0) throw NonUnit("alexander_biquandle: s is not a unit mod p");
  if (t == 0) throw NonUnit("alexander_biquandle: t is not a unit mod p");
  int si = mod_inverse(s, p), ti = mod_inverse(t, p);
  Table up(p, std::vector<int>(p)), down(p, std::vector<int>(p));
  Table up_bar(p, std::vector<int>(p)), down_bar(p, std::vector<int>(p));
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) {
      up[a][b] = norm(t * a + (1 - s * t) * b);
      up_bar[a][b] = norm(ti * a + (1 - si * ti) * b);
      down[a][b] = norm(s * a);
      down_bar[a][b] = norm(si * a);
    }
  return validate_biquandle(up, down, up_bar, down_bar,
                            "alexander(" + std::to_string(p) + "," + std::to_string(s) +
                                "," + std::to_string(t) + ")");
}

}  // namespace vknot
