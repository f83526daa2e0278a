#ifndef BETTI_DECOMPOSE_HPP
#define BETTI_DECOMPOSE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "diagram.hpp"
#include "rational.hpp"

namespace betti {

// Weakly increasing tuple (i_0, ..., i_k) of nonnegative integers selecting
// which tail positions are removed when forming a secant degree sequence.
// Secant diagrams only ever involve vectors with entries <= 2 (admissible).
class IndexVector {
 public:
  explicit IndexVector(std::vector<std::int64_t> entries);

  const std::vector<std::int64_t>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  std::int64_t back() const { return entries_.back(); }

  bool admissible() const { return entries_.back() <= 2; }

  std::string to_string() const;  // e.g. "(1,2,2)"

  friend bool operator==(const IndexVector&, const IndexVector&) = default;

 private:
  std::vector<std::int64_t> entries_;
};

// One term of a nonnegative pure-diagram combination.
struct DecompositionTerm {
  Rational coefficient;     // strictly positive
  DegreeSequence sequence;  // the pure diagram it scales
};

// Ordered list of (coefficient, sequence) pairs. recompose() reproduces the
// source diagram exactly; coefficients are unnormalized (see total()).
class Decomposition {
 public:
  Decomposition() = default;
  explicit Decomposition(std::vector<DecompositionTerm> terms);

  const std::vector<DecompositionTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  const DecompositionTerm& operator[](std::size_t i) const { return terms_[i]; }

  // Sum of the raw coefficients. Dividing each coefficient by this value
  // gives the multiplicity-one normalization of the same decomposition.
  Rational total() const;

 private:
  std::vector<DecompositionTerm> terms_;
};

// Degree sequence of the pure diagram pi_k(i; d): sorted remainder of
// {0, ..., r+1} after removing {1, ..., k+1} and {r+1-(i_j+j) : 0 <= j <= k},
// where r = d - 2. The result has length r-2k. Requires i.size() == k+1 and
// r >= 2k+3; throws OverlapError when the two removal sets collide (r too
// small for this index vector).
DegreeSequence pi_k_sequence(const IndexVector& i, std::int64_t k,
                             std::int64_t d);

// All weakly increasing (i_0, ..., i_k) with entries in {0, 1, 2}, in
// lexicographic order; there are binomial(k+3, k+1) of them.
std::vector<IndexVector> enumerate_admissible(std::int64_t k);

// Top-strand elimination: repeatedly read off the degree sequence
// e_p = p + min{q : b_{p,q} != 0} of the residual diagram, subtract the
// largest multiple of its pure diagram keeping all entries nonnegative, and
// record the term. Requires a nonempty diagram with nonnegative entries.
// Throws NotInConeError when the residual has a column gap or a
// non-increasing top strand (no pure-diagram chain can cover it); the error
// carries the offending residual.
Decomposition greedy_decompose(const BettiDiagram& d);

// Exact sum of coefficient * pure_diagram(sequence) over the terms.
BettiDiagram recompose(const Decomposition& t);

}  // namespace betti

#endif
