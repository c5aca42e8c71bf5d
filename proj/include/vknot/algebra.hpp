// Finite quandles, biquandles, and groups as validated operation tables,
// with the constructions used as coloring targets: dihedral and conjugation
// quandles, coset quandles (P\G, m), and Alexander biquandles over Z_p.
#pragma once

#include <string>
#include <vector>

#include "vknot/gauss.hpp"

namespace vknot {

using Table = std::vector<std::vector<int>>;  // row-major, row = first argument

struct AxiomViolation {
  std::string axiom;
  int a = 0, b = 0, c = 0;  // witnessing triple (unused slots stay 0)
  std::string message;
};

struct AxiomError : Error {
  AxiomError(const std::string& msg, std::vector<AxiomViolation> v)
      : Error(msg), violations(std::move(v)) {}
  std::vector<AxiomViolation> violations;
};

struct FiniteGroup {
  int n = 0;
  Table mul;
  int identity = 0;
  std::vector<int> inverse;
  std::string name;

  int op(int a, int b) const { return mul[a][b]; }
  int inv(int a) const { return inverse[a]; }
  int conj(int a, int b) const { return mul[mul[b][a]][inverse[b]]; }  // b a b^-1
};

std::vector<AxiomViolation> group_violations(int n, const Table& mul);
// Throws AxiomError on failure; derives identity and inverses.
FiniteGroup make_group(const Table& mul, std::string name = "group");

// Group catalog (used to cover every group of order <= 12 up to isomorphism).
FiniteGroup cyclic_group(int n);
FiniteGroup dihedral_group(int n);         // order 2n, n >= 1
FiniteGroup dicyclic_group(int n);         // order 4n; n=2 is the quaternion group
FiniteGroup alternating_group_4();
FiniteGroup symmetric_group_3();
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
// All groups of order <= 12, one per isomorphism class (24 groups).
std::vector<FiniteGroup> groups_up_to_order_12();

// Subgroup utilities for the coset construction. Elements are indices.
bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elements);
std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g);
std::vector<int> center_of_subgroup(const FiniteGroup& g, const std::vector<int>& p);

struct FiniteQuandle {
  int n = 0;
  Table op;      // a * b
  Table inv_op;  // a *^{-1} b  (the unique x with x * b = a)
  std::string name;
};

std::vector<AxiomViolation> quandle_violations(int n, const Table& op, const Table& inv_op);
// Validates op and inv_op together; throws AxiomError on failure.
FiniteQuandle validate_quandle(const Table& op, const Table& inv_op,
                               std::string name = "quandle");
// Derives inv_op from op (columns must be bijections).
FiniteQuandle make_quandle(const Table& op, std::string name = "quandle");

FiniteQuandle trivial_quandle(int n);
FiniteQuandle dihedral_quandle(int n);  // a*b = 2b - a mod n
FiniteQuandle conjugation_quandle(const FiniteGroup& g);
// Quandle on right cosets P\G with Pg^{Ph} = P(g h^-1 m h); requires m in the
// center of the subgroup P. Throws NotSubgroup / MNotInCenterOfP.
FiniteQuandle coset_quandle(const FiniteGroup& g, const std::vector<int>& p, int m);

struct NotSubgroup : Error {
  using Error::Error;
};
struct MNotInCenterOfP : Error {
  using Error::Error;
};
struct NotPrime : Error {
  using Error::Error;
};
struct NonUnit : Error {
  using Error::Error;
};

struct FiniteBiquandle {
  int n = 0;
  Table up, down, up_bar, down_bar;  // a^b, a_b, a^{b-bar}, a_{b-bar}
  std::string name;
};

std::vector<AxiomViolation> biquandle_violations(int n, const Table& up, const Table& down,
                                                 const Table& up_bar, const Table& down_bar);
FiniteBiquandle validate_biquandle(const Table& up, const Table& down, const Table& up_bar,
                                   const Table& down_bar, std::string name = "biquandle");

// Whether the alternative four-identity axiom set also holds (recorded, not
// asserted equivalent to the primary set).
bool alternative_axioms_hold(const FiniteBiquandle& b);

// Every quandle induces a biquandle: a^b = a*b, a^{b-bar} = a*^{-1}b,
// a_b = a_{b-bar} = a.
FiniteBiquandle quandle_as_biquandle(const FiniteQuandle& q);

// Tables over Z_p: a^b = ta + (1-st)b, a_b = sa, with barred inverses.
FiniteBiquandle alexander_biquandle(int p, int s, int t);

}  // namespace vknot
