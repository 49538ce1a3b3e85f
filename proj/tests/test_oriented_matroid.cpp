#include <doctest.h>

#include "omlab/errors.hpp"
#include "omlab/oriented_matroid.hpp"
#include "omlab/realization.hpp"
#include "support.hpp"

using namespace omlab;
using omlab::testing::letters;

namespace {

SignedSet sg(const GroundSet& g, std::vector<std::string> pos, std::vector<std::string> neg) {
  return {g.subset(pos), g.subset(neg)};
}

OrientedMatroid w1() { return om_from_points(omlab::testing::w1_config()); }

Axiom violated_axiom(const GroundSet& g, std::vector<SignedSet> family) {
  try {
    validate_oriented_matroid(g, std::move(family));
  } catch (const AxiomViolation& ex) {
    return ex.axiom();
  }
  FAIL("expected AxiomViolation");
  return Axiom::M1;
}

}  // namespace

TEST_CASE("canonical representative has its first element positive") {
  const auto g = letters(3);
  CHECK(sg(g, {"a"}, {"c"}).is_canonical());
  CHECK_FALSE(sg(g, {"c"}, {"a"}).is_canonical());
  CHECK(sg(g, {"a", "b"}, {}).is_canonical());
  CHECK(signed_less(sg(g, {"a", "b"}, {}), sg(g, {"a"}, {"b"})));
}

TEST_CASE("validate_oriented_matroid examples") {
  const auto g = letters(2);
  const auto x = sg(g, {"a", "b"}, {});
  const OrientedMatroid om = validate_oriented_matroid(g, {x, x.negated()});
  CHECK(om.rank() == 1);
  CHECK(violated_axiom(g, {sg(g, {"a"}, {})}) == Axiom::O1);
  const auto y = sg(g, {"a"}, {"b"});
  CHECK(violated_axiom(g, {y, y.negated(), x, x.negated()}) == Axiom::O2);
}

TEST_CASE("(O3) standard elimination form") {
  // Circuits of points a=1, b=-1, c=1 on the line: +a+b, +a-c, +b+c.
  const auto g = letters(3);
  const std::vector<SignedSet> good = {sg(g, {"a", "b"}, {}), sg(g, {"a"}, {"c"}), sg(g, {"b", "c"}, {})};
  CHECK_NOTHROW(validate_representatives(g, good));
  // Flipping one sign leaves (O1), (O2) intact but breaks elimination.
  const std::vector<SignedSet> bad = {sg(g, {"a", "b"}, {}), sg(g, {"a", "c"}, {}), sg(g, {"b", "c"}, {})};
  try {
    validate_representatives(g, bad);
    FAIL("expected AxiomViolation");
  } catch (const AxiomViolation& ex) {
    CHECK(ex.axiom() == Axiom::O3);
  }
}

TEST_CASE("underlying_matroid examples") {
  CHECK(underlying_matroid(w1()) == uniform_matroid(letters(4), 1));
  const auto g = letters(2);
  CHECK(underlying_matroid(validate_representatives(g, {sg(g, {"a", "b"}, {})})).circuits() ==
        std::vector<Subset>{g.full()});
  const OrientedMatroid empty = validate_representatives(g, {});
  CHECK(underlying_matroid(empty) == free_matroid(g));
  CHECK(empty.rank() == 2);
}

TEST_CASE("orthogonal examples") {
  const auto g = letters(3);
  CHECK(orthogonal(sg(g, {"a", "b"}, {}), sg(g, {"a"}, {"b"})));
  CHECK_FALSE(orthogonal(sg(g, {"a"}, {"c"}), sg(g, {"a"}, {"c"})));
  CHECK_FALSE(orthogonal(sg(g, {"a"}, {"c"}), sg(g, {"c"}, {"a"})));
  CHECK(orthogonal(sg(g, {"a"}, {}), sg(g, {"b"}, {"c"})));
}

TEST_CASE("dual_oriented_matroid examples") {
  const auto g = letters(3);
  const OrientedMatroid om =
      validate_representatives(g, {sg(g, {"a", "b"}, {}), sg(g, {"a"}, {"c"}), sg(g, {"b", "c"}, {})});
  const OrientedMatroid co = dual_oriented_matroid(om);
  REQUIRE(co.representatives().size() == 1);
  CHECK(co.representatives().front() == sg(g, {"a", "c"}, {"b"}));

  std::vector<SignedSet> loops;
  for (std::size_t i = 0; i < 3; ++i) loops.push_back({Subset::singleton(i), {}});
  CHECK(dual_oriented_matroid(validate_representatives(g, loops)).representatives().empty());

  // W1 has rank 1 on four elements, so its dual has rank 3 and a single
  // cocircuit pair on all of E (the dual of U_{1,4} is U_{3,4}).
  const auto g4 = letters(4);
  const OrientedMatroid w1co = dual_oriented_matroid(w1());
  REQUIRE(w1co.representatives().size() == 1);
  CHECK(w1co.representatives().front() == sg(g4, {"a", "c"}, {"b", "d"}));
  CHECK(w1co.rank() == 3);
  for (const auto& x : w1().circuits()) CHECK(orthogonal(x, w1co.representatives().front()));
}

TEST_CASE("positive_circuits examples") {
  const auto g4 = letters(4);
  CHECK(positive_circuits(w1()) == std::vector<Subset>{g4.subset({"a", "b"}), g4.subset({"a", "d"}),
                                                       g4.subset({"b", "c"}), g4.subset({"c", "d"})});
  const auto g = letters(2);
  CHECK(positive_circuits(validate_representatives(g, {sg(g, {"a"}, {"b"})})).empty());
  CHECK(positive_circuits(validate_representatives(g, {sg(g, {"a", "b"}, {})})) == std::vector<Subset>{g.full()});
}

TEST_CASE("contains_positive_circuit examples") {
  const auto g = letters(4);
  CHECK(contains_positive_circuit(w1(), g.subset({"a", "c", "d"})) == g.subset({"a", "d"}));
  CHECK_FALSE(contains_positive_circuit(w1(), g.subset({"a", "c"})));
  CHECK_FALSE(contains_positive_circuit(w1(), Subset{}));
}

TEST_CASE("add_coloops examples") {
  const OrientedMatroid one = add_coloops(w1(), {"e"});
  CHECK(one.rank() == 2);
  CHECK(one.representatives().size() == w1().representatives().size());
  CHECK(add_coloops(validate_representatives(GroundSet({"a"}), {}), {"e"}).rank() == 2);
  CHECK(add_coloops(w1(), {"e", "f"}).rank() == 3);
  CHECK_THROWS_AS(add_coloops(w1(), {"b"}), LabelCollision);
}

TEST_CASE("duality invariants on realizable oriented matroids") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const PointConfig config = omlab::testing::corpus_config(seed);
    const OrientedMatroid om = om_from_points(config);
    const OrientedMatroid co = dual_oriented_matroid(om);
    CHECK(co.underlying() == dual_matroid(om.underlying()));
    CHECK(dual_oriented_matroid(co) == om);
    CHECK_NOTHROW(validate_oriented_matroid(co.ground(), co.circuits()));
    for (const auto& x : om.circuits()) {
      for (const auto& y : co.circuits()) CHECK(orthogonal(x, y));
    }
    // (O2) via (M2): no positive circuit support strictly contains another support.
    for (Subset p : positive_circuits(om)) {
      for (const auto& x : om.representatives()) {
        CHECK_FALSE((x.support() != p && x.support().subset_of(p)));
      }
    }
  }
}
