// Quandle, group, and biquandle presentations read off Gauss codes, the
// Adconj conversion, abelianization via Smith normal form, and finite
// coloring counts.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vknot/algebra.hpp"
#include "vknot/gauss.hpp"

namespace vknot {

enum class PresKind { Quandle, Group, Biquandle };

// One operation application in a relation's right-hand word. For quandles
// only Up/UpBar occur; biquandle relations use the four crossing operations;
// group relations read Up/UpBar as conjugation (a^b = b a b^-1) and may also
// use plain right multiplication.
enum class StepOp { Up, Down, UpBar, DownBar, Mul, MulInv };

std::string to_string(PresKind k);
std::string to_string(StepOp op);
StepOp step_op_from_string(const std::string& s);

struct Step {
  StepOp op;
  int arg;  // generator index
  friend bool operator==(const Step&, const Step&) = default;
};

// lhs = base . steps (applied left to right).
struct Relation {
  int lhs;
  int base;
  std::vector<Step> steps;
  friend bool operator==(const Relation&, const Relation&) = default;
};

struct Presentation {
  PresKind kind = PresKind::Quandle;
  std::vector<std::string> generators;
  std::vector<Relation> relations;
  friend bool operator==(const Presentation&, const Presentation&) = default;
};

struct NonWirtingerRelation : Error {
  using Error::Error;
};

// Arc decomposition shared by the Wirtinger presentations and the Tube map.
// Arcs run from one Under passage (exclusive) to the next (inclusive); a
// component with no Under passages is a single arc.
struct ArcStructure {
  int arc_count = 0;
  std::vector<std::vector<int>> arc_of;  // [component][position] -> arc index
  struct CrossingArcs {
    int crossing, sign;
    int over_arc, under_in_arc, under_out_arc;
  };
  std::vector<CrossingArcs> crossings;  // ascending crossing id
};
ArcStructure arc_structure(const GaussCode& code);

// Semi-arc decomposition: one generator per strand segment between
// consecutive classical passages.
struct SemiarcStructure {
  int semiarc_count = 0;
  std::vector<std::vector<int>> after_token;  // [component][position] -> semi-arc index
  struct CrossingSemiarcs {
    int crossing, sign;
    int under_in, under_out, over_in, over_out;
  };
  std::vector<CrossingSemiarcs> crossings;  // ascending crossing id
};
SemiarcStructure semiarc_structure(const GaussCode& code);

// Generators = arcs; one relation per crossing: out = in ^ over for a
// positive crossing, out = in ^ over-bar for a negative one.
Presentation wirtinger_quandle(const GaussCode& code);
// Same generators, relations read as conjugation: x = y z y^{-1}.
Presentation wirtinger_group(const GaussCode& code);
// Generators = semi-arcs; a positive crossing maps (under-in a, over-in b)
// to (a^b, b_a); a negative crossing uses the barred operations.
Presentation semiarc_biquandle(const GaussCode& code);

// Rewrites a Wirtinger-shaped quandle presentation as a group presentation
// (quandle operation read as conjugation). Throws NonWirtingerRelation if a
// relation uses Down/DownBar/Mul steps.
Presentation adconj(const Presentation& q);

struct Abelianization {
  long long free_rank = 0;
  std::vector<long long> torsion;  // invariant factors > 1, divisibility order
  friend bool operator==(const Abelianization&, const Abelianization&) = default;
};

// Invariant factors of an integer matrix (nonzero diagonal of the Smith
// normal form, in divisibility order).
std::vector<long long> smith_invariant_factors(std::vector<std::vector<long long>> m);
Abelianization abelianization(const Presentation& g);

struct ColoringCount {
  std::string target;
  long long total = 0;
  long long surjective = 0;
  long long constant = 0;
  friend bool operator==(const ColoringCount&, const ColoringCount&) = default;
};

ColoringCount count_quandle_colorings(const Presentation& p, const FiniteQuandle& q);
ColoringCount count_biquandle_colorings(const Presentation& p, const FiniteBiquandle& b);
// Assignments of group elements satisfying the relations (conjugation and
// multiplication steps); used to cross-check adconj.
ColoringCount count_group_colorings(const Presentation& p, const FiniteGroup& g);

}  // namespace vknot
