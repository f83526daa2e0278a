#ifndef BETTI_DIAGRAM_HPP
#define BETTI_DIAGRAM_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rational.hpp"

namespace betti {

// Strictly increasing integer tuple (e_0, ..., e_n) characterizing a pure
// diagram: column p of the pure resolution is twisted by e_p.
class DegreeSequence {
 public:
  explicit DegreeSequence(std::vector<std::int64_t> entries);

  const std::vector<std::int64_t>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  // Homological length: size() - 1.
  std::int64_t n() const { return static_cast<std::int64_t>(size()) - 1; }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }

  // Comma-separated rendering, e.g. "0,3,4,7,8".
  std::string to_string() const;
  static DegreeSequence parse(const std::string& text);

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) =
      default;
  friend auto operator<=>(const DegreeSequence& a, const DegreeSequence& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<std::int64_t> entries_;
};

struct Position {
  std::int64_t p = 0;  // column, nonnegative
  std::int64_t q = 0;  // row, any integer

  friend bool operator==(const Position&, const Position&) = default;
  friend auto operator<=>(const Position&, const Position&) = default;
};

// Sparse table of nonzero rationals indexed by (column p, row q). Entry
// (p, q) counts the degree-(p+q) generators of the p-th step of a minimal
// graded free resolution. Zero entries are never stored, so diagram equality
// is plain map equality. Immutable value type; all operations below are pure.
class BettiDiagram {
 public:
  BettiDiagram() = default;

  // Nonzero entries only; throws on a duplicate position, a zero value or a
  // negative column.
  explicit BettiDiagram(std::map<Position, Rational> entries);

  // Stored value, or exact zero outside the support.
  Rational entry(std::int64_t p, std::int64_t q) const;

  bool empty() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }

  // Largest column with a nonzero entry; throws std::invalid_argument on the
  // empty diagram (which has no resolution shape).
  std::int64_t projective_dimension() const;

  std::int64_t min_row() const;
  std::int64_t max_row() const;

  const std::map<Position, Rational>& entries() const { return entries_; }

  friend bool operator==(const BettiDiagram&, const BettiDiagram&) = default;

 private:
  friend class DiagramBuilder;
  std::map<Position, Rational> entries_;
};

// Accumulates entries with exact cancellation; used by the arithmetic ops
// and the deserializers.
class DiagramBuilder {
 public:
  // Adds value at (p, q); entries cancelling to zero are removed.
  void add(std::int64_t p, std::int64_t q, const Rational& value);
  // Throws on duplicates or explicit zeros (strict deserialization).
  void set_checked(std::int64_t p, std::int64_t q, const Rational& value);

  BettiDiagram build() &&;

 private:
  std::map<Position, Rational> entries_;
};

// Pure diagram of a degree sequence: for each column p in 0..n the single
// entry sits at row q = e_p - p with value n! * prod_{i != p} 1/|e_i - e_p|.
// Requires at least two entries (n >= 1).
BettiDiagram pure_diagram(const DegreeSequence& e);

// Entrywise exact scaling; c = 0 yields the empty diagram.
BettiDiagram scale(const BettiDiagram& d, const Rational& c);

// Entrywise exact sum; entries cancelling to zero are dropped.
BettiDiagram add(const BettiDiagram& a, const BettiDiagram& b);

}  // namespace betti

#endif
