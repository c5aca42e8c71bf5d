#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "vknot/catalog.hpp"
#include "vknot/gauss.hpp"

using namespace vknot;

TEST_CASE("parse: trefoil") {
  GaussCode code = parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+");
  CHECK(code.components.size() == 1);
  CHECK(code.crossing_count() == 3);
  CHECK(validate(code).empty());
}

TEST_CASE("parse: crossingless circles") {
  CHECK(parse_gauss("()").components.size() == 1);
  CHECK(parse_gauss("()").components[0].empty());
  CHECK(parse_gauss("").components.size() == 1);
  GaussCode two = parse_gauss("(); ()");
  CHECK(two.components.size() == 2);
}

TEST_CASE("parse: syntax errors carry positions") {
  CHECK_THROWS_AS(parse_gauss("O1+ X2-"), ParseError);
  CHECK_THROWS_AS(parse_gauss("O1"), ParseError);
  CHECK_THROWS_AS(parse_gauss("O0+ U0+"), ParseError);
  CHECK_THROWS_AS(parse_gauss("O1+ U2+;"), ParseError);
}

TEST_CASE("parse: semantic errors") {
  CHECK_THROWS_AS(parse_gauss("O1+ U1+ O1+"), InvalidCodeError);  // id 1 twice as Over
  CHECK_THROWS_AS(parse_gauss("O1+ U1-"), InvalidCodeError);      // sign mismatch
  CHECK_THROWS_AS(parse_gauss("O1+ U1+ O5-"), InvalidCodeError);  // id 5 unpaired
}

TEST_CASE("validate reports violation kinds") {
  GaussCode code;
  code.components.push_back({{1, Role::Over, +1}, {1, Role::Under, -1}});
  auto v = validate(code);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == ViolationKind::SignMismatch);
  CHECK(v[0].crossing == 1);

  GaussCode unpaired;
  unpaired.components.push_back({{5, Role::Over, +1}});
  auto v2 = validate(unpaired);
  REQUIRE(v2.size() == 1);
  CHECK(v2[0].kind == ViolationKind::UnpairedCrossing);
  CHECK(v2[0].crossing == 5);
}

TEST_CASE("canonical form is stable under symmetries") {
  GaussCode trefoil = parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+");
  // Rotation of the component.
  GaussCode rotated = parse_gauss("U1+ O2+ U3+ O1+ U2+ O3+");
  CHECK(canonically_equal(trefoil, rotated));
  // Relabeling of crossings.
  GaussCode relabeled = parse_gauss("O7+ U5+ O2+ U7+ O5+ U2+");
  CHECK(canonically_equal(trefoil, relabeled));
  // A different knot is not equal.
  CHECK_FALSE(canonically_equal(trefoil, parse_gauss("O1+ U2+ U1+ O2+")));
}

TEST_CASE("round-trip: canonicalize(parse(serialize(c))) == canonicalize(c)") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    GaussCode code = testing::random_code(rng, 6, 3);
    std::string s = serialize_gauss(code);
    GaussCode back = parse_gauss(s);
    CHECK(serialize_gauss(back) == s);
    CHECK(canonicalize(back) == canonicalize(code));
  }
}

TEST_CASE("supporting genus: pinned values") {
  CHECK(supporting_genus(parse_gauss("()")) == 0);
  CHECK(supporting_genus(parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+")) == 0);  // trefoil
  CHECK(supporting_genus(parse_gauss("O1+ U2+ U1+ O2+")) == 1);          // virtual trefoil
  CHECK(is_realizable(parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+")));
  CHECK_FALSE(is_realizable(parse_gauss("O1+ U2+ U1+ O2+")));
  // A kink is realizable.
  CHECK(supporting_genus(parse_gauss("O1+ U1+")) == 0);
  CHECK(supporting_genus(parse_gauss("O1- U1-")) == 0);
}

TEST_CASE("supporting genus: catalog entries") {
  CHECK(supporting_genus(catalog_lookup("figure-eight")->code) == 0);
  CHECK(supporting_genus(catalog_lookup("kishino")->code) == 2);
}

TEST_CASE("supporting genus agrees with the independent boundary walker") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    GaussCode code = testing::random_code(rng, 7, 3);
    GenusReport report = genus_report(code);
    auto oracle = testing::oracle_supporting_genus(code);
    CHECK(report.total_genus == oracle.total);
    CHECK(static_cast<int>(report.component_genera.size()) == oracle.pieces);
  }
}

TEST_CASE("supporting genus invariant under relabeling and rotation") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    GaussCode code = testing::random_code(rng, 7, 2);
    int g = supporting_genus(code);
    GaussCode canon = canonicalize(code);
    CHECK(supporting_genus(canon) == g);
    if (!code.components[0].empty()) {
      GaussCode rotated = code;
      std::rotate(rotated.components[0].begin(), rotated.components[0].begin() + 1,
                  rotated.components[0].end());
      CHECK(supporting_genus(rotated) == g);
    }
  }
}

TEST_CASE("disconnected codes are flagged") {
  GaussCode split = parse_gauss("O1+ U1+; O2- U2-");
  GenusReport report = genus_report(split);
  CHECK(report.disconnected);
  CHECK(report.component_genera.size() == 2);
  CHECK(report.total_genus == 0);

  GenusReport linked = genus_report(parse_gauss("O1+ O2+; U1+ U2+"));
  CHECK_FALSE(linked.disconnected);
}
