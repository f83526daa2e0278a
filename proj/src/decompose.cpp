#include "decompose.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"
#include "serialize.hpp"

namespace betti {

IndexVector::IndexVector(std::vector<std::int64_t> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw std::invalid_argument("index vector must be nonempty");
  }
  if (entries_.front() < 0) {
    throw std::invalid_argument("index vector entries must be nonnegative");
  }
  for (std::size_t j = 1; j < entries_.size(); ++j) {
    if (entries_[j - 1] > entries_[j]) {
      throw std::invalid_argument("index vector must be weakly increasing: " +
                                  to_string());
    }
  }
}

std::string IndexVector::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    if (j) out << ',';
    out << entries_[j];
  }
  out << ')';
  return out.str();
}

Decomposition::Decomposition(std::vector<DecompositionTerm> terms)
    : terms_(std::move(terms)) {
  for (const auto& term : terms_) {
    if (term.coefficient <= 0) {
      throw std::invalid_argument("decomposition coefficients must be positive");
    }
  }
}

Rational Decomposition::total() const {
  Rational sum(0);
  for (const auto& term : terms_) sum += term.coefficient;
  return sum;
}

DegreeSequence pi_k_sequence(const IndexVector& i, std::int64_t k,
                             std::int64_t d) {
  if (k < 0) throw std::invalid_argument("secant order k must be >= 0");
  if (static_cast<std::int64_t>(i.size()) != k + 1) {
    throw std::invalid_argument("index vector " + i.to_string() +
                                " has wrong length for k=" + std::to_string(k));
  }
  const std::int64_t r = d - 2;
  if (r < 2 * k + 3) {
    throw std::invalid_argument("need r = d-2 >= 2k+3, got r=" +
                                std::to_string(r) + " for k=" +
                                std::to_string(k));
  }

  std::set<std::int64_t> removed;
  for (std::int64_t m = 1; m <= k + 1; ++m) removed.insert(m);
  for (std::int64_t j = 0; j <= k; ++j) {
    const std::int64_t value = r + 1 - (i[j] + j);
    if (value < 1 || value > r + 1) {
      throw std::invalid_argument("removal value " + std::to_string(value) +
                                  " outside {1,...,r+1} for i=" + i.to_string());
    }
    if (!removed.insert(value).second) {
      throw OverlapError("removal sets collide at " + std::to_string(value) +
                         " (r=" + std::to_string(r) + " too small for i=" +
                         i.to_string() + ")");
    }
  }

  std::vector<std::int64_t> remaining;
  remaining.reserve(r + 2 - removed.size());
  for (std::int64_t value = 0; value <= r + 1; ++value) {
    if (!removed.contains(value)) remaining.push_back(value);
  }
  return DegreeSequence(std::move(remaining));
}

std::vector<IndexVector> enumerate_admissible(std::int64_t k) {
  if (k < 0) throw std::invalid_argument("secant order k must be >= 0");
  std::vector<IndexVector> out;
  std::vector<std::int64_t> current(k + 1, 0);
  while (true) {
    out.emplace_back(current);
    // Next weakly increasing vector over {0,1,2} in lexicographic order.
    std::int64_t j = k;
    while (j >= 0 && current[j] == 2) --j;
    if (j < 0) break;
    const std::int64_t next = current[j] + 1;
    for (std::int64_t m = j; m <= k; ++m) current[m] = next;
  }
  return out;
}

namespace {

// Minimal row of each column 0..pdim, or NotInCone if some column is empty.
DegreeSequence top_strand(const BettiDiagram& d) {
  const std::int64_t pdim = d.projective_dimension();
  std::vector<std::int64_t> shape(pdim + 1);
  std::vector<bool> seen(pdim + 1, false);
  for (const auto& [pos, value] : d.entries()) {
    if (!seen[pos.p] || pos.q < shape[pos.p]) shape[pos.p] = pos.q;
    seen[pos.p] = true;
  }
  std::vector<std::int64_t> entries(pdim + 1);
  for (std::int64_t p = 0; p <= pdim; ++p) {
    if (!seen[p]) {
      throw NotInConeError(
          "column " + std::to_string(p) +
              " is empty below the projective dimension; no pure-diagram "
              "chain covers the residual",
          render_diagram(d, DiagramFormat::kTable));
    }
    entries[p] = p + shape[p];
  }
  for (std::int64_t p = 1; p <= pdim; ++p) {
    if (entries[p - 1] >= entries[p]) {
      throw NotInConeError(
          "top strand " + std::to_string(entries[p - 1]) + " >= " +
              std::to_string(entries[p]) + " at column " + std::to_string(p) +
              " is not strictly increasing",
          render_diagram(d, DiagramFormat::kTable));
    }
  }
  return DegreeSequence(std::move(entries));
}

}  // namespace

Decomposition greedy_decompose(const BettiDiagram& d) {
  if (d.empty()) {
    throw std::invalid_argument("cannot decompose the empty diagram");
  }
  for (const auto& [pos, value] : d.entries()) {
    if (value < 0) {
      throw std::invalid_argument("diagram entry b_{" + std::to_string(pos.p) +
                                  "," + std::to_string(pos.q) +
                                  "} = " + to_string(value) + " is negative");
    }
  }

  std::vector<DecompositionTerm> terms;
  BettiDiagram residual = d;
  while (!residual.empty()) {
    DegreeSequence e = top_strand(residual);
    if (e.size() < 2) {
      throw NotInConeError(
          "residual concentrated in column 0 admits no pure diagram",
          render_diagram(residual, DiagramFormat::kTable));
    }
    const BettiDiagram pure = pure_diagram(e);
    // Largest c keeping the residual nonnegative; the pure diagram touches
    // exactly the top-strand positions.
    bool have = false;
    Rational c(0);
    for (const auto& [pos, value] : pure.entries()) {
      Rational ratio = residual.entry(pos.p, pos.q) / value;
      if (!have || ratio < c) {
        c = ratio;
        have = true;
      }
    }
    terms.push_back(DecompositionTerm{c, e});
    residual = add(residual, scale(pure, -c));
  }
  return Decomposition(std::move(terms));
}

BettiDiagram recompose(const Decomposition& t) {
  BettiDiagram out;
  for (const auto& term : t.terms()) {
    out = add(out, scale(pure_diagram(term.sequence), term.coefficient));
  }
  return out;
}

}  // namespace betti
