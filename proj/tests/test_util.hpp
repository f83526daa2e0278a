#ifndef BETTI_TEST_UTIL_HPP
#define BETTI_TEST_UTIL_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "diagram.hpp"
#include "rational.hpp"

namespace betti::testing {

// Frozen-table helper: build a diagram from (p, q, "value") triples.
inline BettiDiagram diagram_of(
    const std::vector<std::tuple<std::int64_t, std::int64_t, std::string>>&
        cells) {
  DiagramBuilder builder;
  for (const auto& [p, q, value] : cells) {
    builder.set_checked(p, q, parse_rational(value));
  }
  return std::move(builder).build();
}

// Strictly increasing sequence with n+1 entries drawn from [low, high];
// anchor_low forces the first entry to equal low.
inline DegreeSequence random_degree_sequence(std::mt19937_64& rng,
                                             std::int64_t n,
                                             std::int64_t low,
                                             std::int64_t high,
                                             bool anchor_low = false) {
  std::vector<std::int64_t> pool;
  for (std::int64_t v = low + (anchor_low ? 1 : 0); v <= high; ++v) {
    pool.push_back(v);
  }
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<std::int64_t> picked(
      pool.begin(), pool.begin() + (anchor_low ? n : n + 1));
  if (anchor_low) picked.push_back(low);
  std::sort(picked.begin(), picked.end());
  return DegreeSequence(std::move(picked));
}

inline Rational random_positive_rational(std::mt19937_64& rng,
                                         std::int64_t max_num = 20,
                                         std::int64_t max_den = 12) {
  std::uniform_int_distribution<std::int64_t> num(1, max_num);
  std::uniform_int_distribution<std::int64_t> den(1, max_den);
  return make_rational(num(rng), den(rng));
}

}  // namespace betti::testing

#endif
