#include <doctest.h>

#include <random>
#include <stdexcept>

#include "decompose.hpp"
#include "errors.hpp"
#include "test_util.hpp"

using namespace betti;
using betti::testing::diagram_of;

namespace {

IndexVector ivec(std::vector<std::int64_t> entries) {
  return IndexVector(std::move(entries));
}

}  // namespace

TEST_CASE("index vectors are weakly increasing and nonnegative") {
  CHECK(ivec({0, 1, 2}).admissible());
  CHECK_FALSE(ivec({1, 3}).admissible());
  CHECK_THROWS_AS(ivec({2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(ivec({-1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(ivec({}), std::invalid_argument);
  CHECK(ivec({1, 2, 2}).to_string() == "(1,2,2)");
}

TEST_CASE("secant degree sequences: all-twos and one-then-twos patterns") {
  // (2,...,2) gives (0, k+2, ..., r-k-2, r, r+1).
  for (std::int64_t k = 1; k <= 4; ++k) {
    const std::int64_t r = 2 * k + 5;
    std::vector<std::int64_t> expected{0};
    for (std::int64_t v = k + 2; v <= r - k - 2; ++v) expected.push_back(v);
    expected.push_back(r);
    expected.push_back(r + 1);
    CHECK(pi_k_sequence(IndexVector(std::vector<std::int64_t>(k + 1, 2)), k,
                        r + 2) == DegreeSequence(expected));

    // (1,2,...,2) replaces r by r-1.
    std::vector<std::int64_t> lead(k + 1, 2);
    lead[0] = 1;
    expected[expected.size() - 2] = r - 1;
    CHECK(pi_k_sequence(IndexVector(lead), k, r + 2) ==
          DegreeSequence(expected));
  }
}

TEST_CASE("pi_k_sequence worked instance and bounds") {
  CHECK(pi_k_sequence(ivec({2, 2}), 1, 9) == DegreeSequence({0, 3, 4, 7, 8}));
  CHECK(pi_k_sequence(ivec({1, 2}), 1, 9) == DegreeSequence({0, 3, 4, 6, 8}));
  // Length is r - 2k.
  CHECK(pi_k_sequence(ivec({0, 0}), 1, 9).size() == 5);
  // d = 6 means r = 4 < 2k+3.
  CHECK_THROWS_AS(pi_k_sequence(ivec({2, 2}), 1, 6), std::invalid_argument);
  CHECK_THROWS_AS(pi_k_sequence(ivec({2}), 1, 9), std::invalid_argument);
  // i_k = 3 collides with the leading removal block at r = 2k+3.
  CHECK_THROWS_AS(pi_k_sequence(ivec({3, 3}), 1, 7), OverlapError);
}

TEST_CASE("enumerate_admissible lists weakly increasing vectors over {0,1,2}") {
  const auto k0 = enumerate_admissible(0);
  REQUIRE(k0.size() == 3);
  CHECK(k0[0] == ivec({0}));
  CHECK(k0[1] == ivec({1}));
  CHECK(k0[2] == ivec({2}));

  const auto k1 = enumerate_admissible(1);
  REQUIRE(k1.size() == 6);
  CHECK(k1[0] == ivec({0, 0}));
  CHECK(k1[1] == ivec({0, 1}));
  CHECK(k1[2] == ivec({0, 2}));
  CHECK(k1[3] == ivec({1, 1}));
  CHECK(k1[4] == ivec({1, 2}));
  CHECK(k1[5] == ivec({2, 2}));

  CHECK(enumerate_admissible(2).size() == 10);
  CHECK(enumerate_admissible(5).size() == 28);  // binomial(8, 2)
}

TEST_CASE("greedy decomposition of a pure diagram is a single term") {
  const DegreeSequence e({0, 3, 4, 7, 8});
  const Decomposition terms = greedy_decompose(pure_diagram(e));
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].coefficient == 1);
  CHECK(terms[0].sequence == e);
}

TEST_CASE("greedy decomposition recovers the curve diagram terms") {
  const BettiDiagram curve =
      diagram_of({{0, 0, "1"}, {1, 1, "1"}, {1, 2, "2"}, {2, 2, "2"}});
  const Decomposition terms = greedy_decompose(curve);
  REQUIRE(terms.size() == 2);
  CHECK(terms[0].coefficient == 2);
  CHECK(terms[0].sequence == DegreeSequence({0, 2, 4}));
  CHECK(terms[1].coefficient == 3);
  CHECK(terms[1].sequence == DegreeSequence({0, 3, 4}));
  CHECK(recompose(terms) == curve);
  CHECK(terms.total() == 5);
}

TEST_CASE("diagrams outside the cone are rejected with the residual") {
  try {
    greedy_decompose(diagram_of({{1, 0, "1"}}));
    FAIL("expected NotInConeError");
  } catch (const NotInConeError& e) {
    CHECK(!e.residual().empty());
  }

  // Negative entries violate the precondition instead.
  CHECK_THROWS_AS(greedy_decompose(diagram_of({{0, 0, "-1"}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(greedy_decompose(BettiDiagram{}), std::invalid_argument);
}

TEST_CASE("recompose examples") {
  CHECK(recompose(Decomposition{}).empty());

  const DegreeSequence e({0, 2, 3});
  const Decomposition single(
      {DecompositionTerm{Rational(1), e}});
  CHECK(recompose(single) == pure_diagram(e));

  const Decomposition pair({
      DecompositionTerm{Rational(14), DegreeSequence({0, 3, 4, 7, 8})},
      DecompositionTerm{Rational(12), DegreeSequence({0, 3, 4, 6, 8})},
  });
  CHECK(recompose(pair) == diagram_of({{0, 0, "1"},
                                       {1, 2, "12"},
                                       {2, 2, "16"},
                                       {3, 3, "4"},
                                       {3, 4, "4"},
                                       {4, 4, "3"}}));
}

TEST_CASE("decomposition coefficients must be positive") {
  CHECK_THROWS_AS(
      Decomposition({DecompositionTerm{Rational(0), DegreeSequence({0, 1})}}),
      std::invalid_argument);
}

TEST_CASE("round trip on random chains of pure diagrams") {
  // Build nonnegative combinations along a chain of termwise-comparable
  // degree sequences, then check greedy_decompose . recompose is exact.
  std::mt19937_64 rng(987654);
  for (int trial = 0; trial < 60; ++trial) {
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 5);
    const std::size_t chain_length = 2 + rng() % 4;

    std::vector<std::int64_t> bottom;
    std::int64_t level = 0;
    for (std::int64_t i = 0; i <= n; ++i) {
      bottom.push_back(level);
      level += 1 + static_cast<std::int64_t>(rng() % 2);
    }
    std::vector<DegreeSequence> chain{DegreeSequence(bottom)};
    while (chain.size() < chain_length) {
      // Raise one raisable coordinate by one to stay strictly increasing.
      std::vector<std::int64_t> next = chain.back().entries();
      std::vector<std::size_t> raisable;
      for (std::size_t idx = 0; idx < next.size(); ++idx) {
        const bool top = idx + 1 == next.size();
        if (top || next[idx] + 1 < next[idx + 1]) raisable.push_back(idx);
      }
      next[raisable[rng() % raisable.size()]] += 1;
      chain.emplace_back(next);
    }

    Decomposition combo = [&] {
      std::vector<DecompositionTerm> terms;
      for (const DegreeSequence& e : chain) {
        terms.push_back(DecompositionTerm{
            betti::testing::random_positive_rational(rng), e});
      }
      return Decomposition(std::move(terms));
    }();

    const BettiDiagram diagram = recompose(combo);
    const Decomposition recovered = greedy_decompose(diagram);
    CHECK(recompose(recovered) == diagram);
    // On a chain the greedy elimination recovers the terms exactly, bottom
    // sequence first.
    REQUIRE(recovered.size() == combo.size());
    for (std::size_t i = 0; i < combo.size(); ++i) {
      CHECK(recovered[i].coefficient > 0);
      CHECK(recovered[i].coefficient == combo[i].coefficient);
      CHECK(recovered[i].sequence == combo[i].sequence);
    }
  }
}
