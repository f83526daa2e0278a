#ifndef BETTI_MONOMIAL_HPP
#define BETTI_MONOMIAL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "diagram.hpp"

namespace betti {

// Faces are encoded as bitmasks over vertices 0..n-1.
using VertexSet = std::uint32_t;

// Abstract simplicial complex given by its facets (maximal faces, pairwise
// non-nested; the constructor drops nested inputs). A complex whose only
// face is the empty face has the single facet 0.
class SimplicialComplex {
 public:
  SimplicialComplex(std::int64_t vertex_count, std::vector<VertexSet> facets);

  std::int64_t vertex_count() const { return vertex_count_; }
  const std::vector<VertexSet>& facets() const { return facets_; }

  bool has_face(VertexSet face) const;

  // All faces (including the empty face) grouped by dimension |F|-1;
  // result[d] lists the d-dimensional faces in increasing mask order.
  std::vector<std::vector<VertexSet>> faces_by_dimension() const;

  // Subcomplex of the faces contained in `vertices`.
  SimplicialComplex restrict_to(VertexSet vertices) const;

 private:
  std::int64_t vertex_count_;
  std::vector<VertexSet> facets_;
};

// Squarefree monomial ideal in nvars variables, generators encoded as the
// vertex subsets of their supports. The constructor minimalizes the
// generating set to an antichain under divisibility. The empty generator
// list is the zero ideal; a constant generator (empty support) is rejected.
class SquarefreeIdeal {
 public:
  SquarefreeIdeal(std::int64_t nvars, std::vector<VertexSet> generators);

  std::int64_t nvars() const { return nvars_; }
  const std::vector<VertexSet>& generators() const { return generators_; }

  // Shared input grammar: either comma-separated variable products
  // ("x0*x2, x1*x3") or comma-separated 0/1 exponent vectors of length nvars
  // ("1010,0101"). Throws ParseError on malformed input.
  static SquarefreeIdeal parse(std::int64_t nvars, const std::string& text);

  std::string to_string() const;  // "x0*x2, x1*x3" form

 private:
  std::int64_t nvars_;
  std::vector<VertexSet> generators_;
};

// Stanley-Reisner complex: faces are exactly the subsets containing no
// generator's support.
SimplicialComplex stanley_reisner(const SquarefreeIdeal& ideal);

// Ranks of reduced rational homology, keyed by dimension; dimensions of rank
// zero are omitted. The empty-face-only complex has rank 1 in dimension -1.
// Ranks come from exact (fraction-free) integer elimination of the boundary
// matrices.
std::map<std::int64_t, std::int64_t> reduced_homology_ranks(
    const SimplicialComplex& c);

// Graded Betti diagram of S/I via Hochster's formula: column p, row
// q = |sigma| - p picks up the rank of reduced homology in dimension
// |sigma|-p-1 of the restriction to sigma, summed over all vertex subsets.
// b_{0,0} = 1 always.
BettiDiagram hochster_betti(const SquarefreeIdeal& ideal);

// Exact rank of an integer matrix (Bareiss fraction-free elimination).
// Exposed for the homology tests.
std::int64_t integer_matrix_rank(std::vector<std::vector<Integer>> m);

}  // namespace betti

#endif
