#include <doctest.h>

#include <random>
#include <stdexcept>

#include "diagram.hpp"
#include "test_util.hpp"

using namespace betti;
using betti::testing::diagram_of;
using betti::testing::random_degree_sequence;

namespace {

DegreeSequence seq(std::vector<std::int64_t> entries) {
  return DegreeSequence(std::move(entries));
}

}  // namespace

TEST_CASE("degree sequences are strictly increasing") {
  CHECK(seq({0, 3, 4, 7, 8}).n() == 4);
  CHECK_THROWS_AS(seq({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(seq({2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(seq({}), std::invalid_argument);
  CHECK(DegreeSequence::parse("0, 3,4,7,8") == seq({0, 3, 4, 7, 8}));
  CHECK(seq({-2, 0, 5}).to_string() == "-2,0,5");
  CHECK_THROWS_AS(DegreeSequence::parse("0,,1"), std::invalid_argument);
  CHECK_THROWS_AS(DegreeSequence::parse("0,x"), std::invalid_argument);
}

TEST_CASE("pure diagram of a Koszul shape") {
  const BettiDiagram d = pure_diagram(seq({0, 1, 2}));
  CHECK(d == diagram_of({{0, 0, "1"}, {1, 0, "2"}, {2, 0, "1"}}));
}

TEST_CASE("pure diagram entries follow the degree sequence") {
  CHECK(pure_diagram(seq({0, 2, 4})) ==
        diagram_of({{0, 0, "1/4"}, {1, 1, "1/2"}, {2, 2, "1/4"}}));
  CHECK(pure_diagram(seq({0, 3, 4})) ==
        diagram_of({{0, 0, "1/6"}, {1, 2, "2/3"}, {2, 2, "1/2"}}));
}

TEST_CASE("pure diagram rejects sequences without a resolution shape") {
  CHECK_THROWS_AS(pure_diagram(seq({5})), std::invalid_argument);
}

TEST_CASE("scale is exact entrywise") {
  const BettiDiagram d = pure_diagram(seq({0, 2, 4}));
  CHECK(scale(d, Rational(1)) == d);
  CHECK(scale(d, Rational(4)) ==
        diagram_of({{0, 0, "1"}, {1, 1, "2"}, {2, 2, "1"}}));
  CHECK(scale(d, Rational(0)) == BettiDiagram{});
  CHECK(scale(d, Rational(0)).empty());
}

TEST_CASE("add sums entrywise and drops cancellations") {
  const BettiDiagram curve =
      add(scale(pure_diagram(seq({0, 2, 4})), Rational(2)),
          scale(pure_diagram(seq({0, 3, 4})), Rational(3)));
  CHECK(curve ==
        diagram_of({{0, 0, "1"}, {1, 1, "1"}, {1, 2, "2"}, {2, 2, "2"}}));

  const BettiDiagram d = pure_diagram(seq({0, 1, 2}));
  CHECK(add(d, BettiDiagram{}) == d);
  CHECK(add(d, scale(d, Rational(-1))).empty());
}

TEST_CASE("entry returns the stored value or exact zero") {
  const BettiDiagram d = pure_diagram(seq({0, 1, 2}));
  CHECK(d.entry(1, 0) == 2);
  CHECK(d.entry(5, 5) == 0);

  const BettiDiagram curve =
      add(scale(pure_diagram(seq({0, 2, 4})), Rational(2)),
          scale(pure_diagram(seq({0, 3, 4})), Rational(3)));
  CHECK(curve.entry(2, 2) == 2);
}

TEST_CASE("diagram invariants: no zeros, nonnegative columns") {
  std::map<Position, Rational> with_zero{{Position{0, 0}, Rational(0)}};
  CHECK_THROWS_AS(BettiDiagram{with_zero}, std::invalid_argument);
  std::map<Position, Rational> bad_column{{Position{-1, 0}, Rational(1)}};
  CHECK_THROWS_AS(BettiDiagram{bad_column}, std::invalid_argument);
  CHECK_THROWS_AS(BettiDiagram{}.projective_dimension(), std::invalid_argument);
}

TEST_CASE("pure diagrams have one positive entry per column at row e_p - p") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 8);
    const DegreeSequence e = random_degree_sequence(rng, n, -10, 30);
    const BettiDiagram d = pure_diagram(e);
    REQUIRE(d.support_size() == static_cast<std::size_t>(n + 1));
    for (std::int64_t p = 0; p <= n; ++p) {
      const Rational value = d.entry(p, e[p] - p);
      CHECK(value > 0);
    }
    CHECK(d.projective_dimension() == n);
  }
}

TEST_CASE("add and scale satisfy a*D + b*D = (a+b)*D exactly") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 6);
    const BettiDiagram d = pure_diagram(random_degree_sequence(rng, n, 0, 25));
    const Rational a = betti::testing::random_positive_rational(rng) -
                       betti::testing::random_positive_rational(rng);
    const Rational b = betti::testing::random_positive_rational(rng) -
                       betti::testing::random_positive_rational(rng);
    CHECK(add(scale(d, a), scale(d, b)) == scale(d, a + b));
  }
}

TEST_CASE("translating a degree sequence shifts rows but keeps values") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 6);
    const DegreeSequence e = random_degree_sequence(rng, n, 0, 20);
    const std::int64_t shift = static_cast<std::int64_t>(rng() % 11) - 5;
    std::vector<std::int64_t> translated;
    for (std::int64_t v : e.entries()) translated.push_back(v + shift);
    const BettiDiagram base = pure_diagram(e);
    const BettiDiagram moved = pure_diagram(DegreeSequence(translated));
    REQUIRE(base.support_size() == moved.support_size());
    for (std::int64_t p = 0; p <= n; ++p) {
      CHECK(base.entry(p, e[p] - p) == moved.entry(p, e[p] - p + shift));
    }
  }
}
