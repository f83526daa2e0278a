#include "monomial.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"

namespace betti {

namespace {

// The Hochster sum walks all 2^nvars restrictions, each with an exact
// homology computation; this bound keeps misuse from looking like a hang.
constexpr std::int64_t kMaxOracleVars = 12;

std::vector<VertexSet> maximal_antichain(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
    return std::popcount(a) > std::popcount(b);
  });
  std::vector<VertexSet> out;
  for (VertexSet candidate : sets) {
    bool nested = false;
    for (VertexSet kept : out) {
      if ((candidate & kept) == candidate) {
        nested = true;
        break;
      }
    }
    if (!nested) out.push_back(candidate);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> minimal_antichain(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
    return std::popcount(a) < std::popcount(b);
  });
  std::vector<VertexSet> out;
  for (VertexSet candidate : sets) {
    bool redundant = false;
    for (VertexSet kept : out) {
      if ((candidate & kept) == kept) {  // kept divides candidate
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(candidate);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::int64_t vertex_count,
                                     std::vector<VertexSet> facets)
    : vertex_count_(vertex_count), facets_(maximal_antichain(std::move(facets))) {
  if (vertex_count_ < 0 || vertex_count_ > kMaxOracleVars) {
    throw std::invalid_argument("complex supports 0.." +
                                std::to_string(kMaxOracleVars) + " vertices");
  }
  const VertexSet universe =
      vertex_count_ == 0 ? 0 : ((VertexSet{1} << vertex_count_) - 1);
  for (VertexSet facet : facets_) {
    if ((facet & ~universe) != 0) {
      throw std::invalid_argument("facet uses a vertex outside 0..n-1");
    }
  }
  if (facets_.empty()) facets_.push_back(0);  // the empty face is always there
}

bool SimplicialComplex::has_face(VertexSet face) const {
  for (VertexSet facet : facets_) {
    if ((face & facet) == face) return true;
  }
  return false;
}

std::vector<std::vector<VertexSet>> SimplicialComplex::faces_by_dimension()
    const {
  std::set<VertexSet> all;
  for (VertexSet facet : facets_) {
    for (VertexSet sub = facet; sub != 0; sub = (sub - 1) & facet) {
      all.insert(sub);
    }
  }
  std::int64_t top = 0;
  for (VertexSet facet : facets_) {
    top = std::max<std::int64_t>(top, std::popcount(facet));
  }
  std::vector<std::vector<VertexSet>> out(top);  // out[d]: faces of dim d >= 0
  for (VertexSet face : all) {  // ascending mask order within each dimension
    out[std::popcount(face) - 1].push_back(face);
  }
  return out;
}

SimplicialComplex SimplicialComplex::restrict_to(VertexSet vertices) const {
  std::vector<VertexSet> restricted;
  restricted.reserve(facets_.size());
  for (VertexSet facet : facets_) restricted.push_back(facet & vertices);
  return SimplicialComplex(vertex_count_, std::move(restricted));
}

SquarefreeIdeal::SquarefreeIdeal(std::int64_t nvars,
                                 std::vector<VertexSet> generators)
    : nvars_(nvars), generators_(minimal_antichain(std::move(generators))) {
  if (nvars_ < 1 || nvars_ > kMaxOracleVars) {
    throw std::invalid_argument("oracle supports 1.." +
                                std::to_string(kMaxOracleVars) + " variables");
  }
  const VertexSet universe = (VertexSet{1} << nvars_) - 1;
  for (VertexSet generator : generators_) {
    if (generator == 0) {
      throw std::invalid_argument("constant generator: the ideal must be proper");
    }
    if ((generator & ~universe) != 0) {
      throw std::invalid_argument("generator uses a variable outside x0..x" +
                                  std::to_string(nvars_ - 1));
    }
  }
}

namespace {

VertexSet parse_variable_product(const std::string& term, std::int64_t nvars) {
  VertexSet support = 0;
  std::istringstream in(term);
  std::string factor;
  bool any = false;
  while (std::getline(in, factor, '*')) {
    const auto begin = factor.find_first_not_of(" \t");
    const auto end = factor.find_last_not_of(" \t");
    if (begin == std::string::npos) {
      throw ParseError("empty factor in monomial '" + term + "'");
    }
    factor = factor.substr(begin, end - begin + 1);
    if (factor.size() < 2 || factor[0] != 'x') {
      throw ParseError("expected a variable like x3, got '" + factor + "'");
    }
    std::size_t used = 0;
    long long index = 0;
    try {
      index = std::stoll(factor.substr(1), &used);
    } catch (const std::exception&) {
      throw ParseError("bad variable index in '" + factor + "'");
    }
    if (used + 1 != factor.size() || index < 0 || index >= nvars) {
      throw ParseError("variable '" + factor + "' outside x0..x" +
                       std::to_string(nvars - 1));
    }
    if (support & (VertexSet{1} << index)) {
      throw ParseError("repeated variable in squarefree monomial '" + term +
                       "'");
    }
    support |= VertexSet{1} << index;
    any = true;
  }
  if (!any) throw ParseError("empty monomial term");
  return support;
}

VertexSet parse_exponent_vector(const std::string& term, std::int64_t nvars) {
  if (static_cast<std::int64_t>(term.size()) != nvars) {
    throw ParseError("exponent vector '" + term + "' must have length " +
                     std::to_string(nvars));
  }
  VertexSet support = 0;
  for (std::int64_t i = 0; i < nvars; ++i) {
    if (term[i] == '1') {
      support |= VertexSet{1} << i;
    } else if (term[i] != '0') {
      throw ParseError("exponent vector '" + term + "' must be 0/1");
    }
  }
  if (support == 0) throw ParseError("zero exponent vector is a constant");
  return support;
}

}  // namespace

SquarefreeIdeal SquarefreeIdeal::parse(std::int64_t nvars,
                                       const std::string& text) {
  if (nvars < 1 || nvars > kMaxOracleVars) {
    throw ParseError("oracle supports 1.." + std::to_string(kMaxOracleVars) +
                     " variables");
  }
  std::vector<VertexSet> generators;
  std::istringstream in(text);
  std::string term;
  while (std::getline(in, term, ',')) {
    const auto begin = term.find_first_not_of(" \t");
    const auto end = term.find_last_not_of(" \t");
    if (begin == std::string::npos) {
      if (text.find_first_not_of(" \t") == std::string::npos) continue;
      throw ParseError("empty generator in ideal '" + text + "'");
    }
    term = term.substr(begin, end - begin + 1);
    generators.push_back(term.find('x') != std::string::npos
                             ? parse_variable_product(term, nvars)
                             : parse_exponent_vector(term, nvars));
  }
  return SquarefreeIdeal(nvars, std::move(generators));
}

std::string SquarefreeIdeal::to_string() const {
  std::ostringstream out;
  bool first_generator = true;
  for (VertexSet generator : generators_) {
    if (!first_generator) out << ", ";
    first_generator = false;
    bool first_var = true;
    for (std::int64_t v = 0; v < nvars_; ++v) {
      if (generator & (VertexSet{1} << v)) {
        if (!first_var) out << '*';
        out << 'x' << v;
        first_var = false;
      }
    }
  }
  return out.str();
}

SimplicialComplex stanley_reisner(const SquarefreeIdeal& ideal) {
  const std::int64_t n = ideal.nvars();
  const VertexSet universe = (VertexSet{1} << n) - 1;
  // A subset is a face iff it contains no generator; collect the maximal ones.
  std::vector<VertexSet> faces;
  for (VertexSet subset = 0; /* see break */; ++subset) {
    bool face = true;
    for (VertexSet generator : ideal.generators()) {
      if ((subset & generator) == generator) {
        face = false;
        break;
      }
    }
    if (face) faces.push_back(subset);
    if (subset == universe) break;
  }
  return SimplicialComplex(n, std::move(faces));
}

std::int64_t integer_matrix_rank(std::vector<std::vector<Integer>> m) {
  if (m.empty() || m[0].empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  // Bareiss fraction-free elimination; only the rank is consumed.
  std::size_t rank = 0;
  Integer previous_pivot(1);
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot_row = rank;
    while (pivot_row < rows && m[pivot_row][col] == 0) ++pivot_row;
    if (pivot_row == rows) continue;
    std::swap(m[rank], m[pivot_row]);
    const Integer pivot = m[rank][col];
    for (std::size_t row = rank + 1; row < rows; ++row) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        m[row][j] = (pivot * m[row][j] - m[row][col] * m[rank][j]) /
                    previous_pivot;
      }
      m[row][col] = 0;
    }
    previous_pivot = pivot;
    ++rank;
  }
  return static_cast<std::int64_t>(rank);
}

namespace {

// Signed boundary matrix from d-faces to (d-1)-faces. Row order follows the
// face lists; d = 0 maps onto the single empty face (augmentation).
std::vector<std::vector<Integer>> boundary_matrix(
    const std::vector<VertexSet>& lower, const std::vector<VertexSet>& upper) {
  std::vector<std::vector<Integer>> matrix(
      lower.size(), std::vector<Integer>(upper.size(), Integer(0)));
  for (std::size_t j = 0; j < upper.size(); ++j) {
    const VertexSet face = upper[j];
    int sign = 1;
    for (VertexSet bits = face; bits != 0; bits &= bits - 1) {
      const VertexSet vertex = bits & (~bits + 1);
      const VertexSet sub = face & ~vertex;
      const auto it = std::lower_bound(lower.begin(), lower.end(), sub);
      matrix[it - lower.begin()][j] = sign;
      sign = -sign;
    }
  }
  return matrix;
}

}  // namespace

std::map<std::int64_t, std::int64_t> reduced_homology_ranks(
    const SimplicialComplex& c) {
  const auto faces = c.faces_by_dimension();
  const std::int64_t top = static_cast<std::int64_t>(faces.size()) - 1;

  // chains[d+1] lists d-faces; chains[0] is the empty face.
  std::vector<std::vector<VertexSet>> chains;
  chains.push_back({0});
  for (const auto& level : faces) chains.push_back(level);

  // boundary_rank[d+1] = rank of the boundary from d-faces to (d-1)-faces.
  std::vector<std::int64_t> boundary_rank(top + 3, 0);
  for (std::int64_t d = 0; d <= top; ++d) {
    boundary_rank[d + 1] =
        integer_matrix_rank(boundary_matrix(chains[d], chains[d + 1]));
  }

  std::map<std::int64_t, std::int64_t> ranks;
  for (std::int64_t d = -1; d <= top; ++d) {
    const std::int64_t dim_chain =
        static_cast<std::int64_t>(chains[d + 1].size());
    const std::int64_t rank =
        dim_chain - boundary_rank[d + 1] - boundary_rank[d + 2];
    if (rank != 0) ranks[d] = rank;
  }
  return ranks;
}

BettiDiagram hochster_betti(const SquarefreeIdeal& ideal) {
  const std::int64_t n = ideal.nvars();
  const SimplicialComplex complex = stanley_reisner(ideal);
  const VertexSet universe = (VertexSet{1} << n) - 1;

  DiagramBuilder builder;
  for (VertexSet sigma = 0; /* see break */; ++sigma) {
    // Restrictions that are faces are cones/simplices: no reduced homology.
    if (!complex.has_face(sigma)) {
      const auto ranks = reduced_homology_ranks(complex.restrict_to(sigma));
      const std::int64_t size = std::popcount(sigma);
      for (const auto& [dim, rank] : ranks) {
        const std::int64_t p = size - dim - 1;
        builder.add(p, size - p, Rational(rank));
      }
    }
    if (sigma == universe) break;
  }
  builder.add(0, 0, Rational(1));  // H~_{-1} of the empty restriction
  return std::move(builder).build();
}

}  // namespace betti
