#ifndef BETTI_SECANT_HPP
#define BETTI_SECANT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "decompose.hpp"
#include "diagram.hpp"
#include "rational.hpp"

namespace betti {

// Parameters of the k-th secant variety of a genus-2 curve embedded in P^r
// by a line bundle of degree d = r + 2. Validates r >= 2k+3 (below that the
// secant variety fills the ambient space or is a hypersurface, and the
// diagram formulas do not apply).
struct SecantParams {
  std::int64_t k = 0;
  std::int64_t r = 0;

  SecantParams(std::int64_t k_order, std::int64_t ambient_r);

  std::int64_t line_bundle_degree() const { return r + 2; }
};

struct VerificationCheck {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

// Bundle of named exact checks for one (k, r) grid point.
class VerificationReport {
 public:
  VerificationReport(std::int64_t k, std::int64_t r) : k_(k), r_(r) {}

  std::int64_t k() const { return k_; }
  std::int64_t r() const { return r_; }

  void record(std::string name, std::string expected, std::string computed);
  void record(std::string name, const Rational& expected,
              const Rational& computed);

  const std::vector<VerificationCheck>& checks() const { return checks_; }
  bool all_passed() const;
  std::string to_string() const;  // one line per check plus a summary line

 private:
  std::int64_t k_;
  std::int64_t r_;
  std::vector<VerificationCheck> checks_;
};

// deg(Sigma_k). For k >= 1 this is
//   binomial(r-k, k+1) + 2*binomial(r-k-1, k) + binomial(r-k-2, k-1),
// asserted exactly equal to the product form
//   (r^2+r-2k-2) * prod_{j=r-2k}^{r-k-2} j / (k+1)!.
// For k = 0 it is the degree r+2 of the curve itself.
Rational secant_degree(const SecantParams& p);

// Pure-diagram coefficient c_{i;d} in the two-term decomposition of the
// normalized diagram. Only (2,...,2) and (1,2,...,2) carry mass:
//   c_{(2,...,2)}   = (r^2 - 2kr - r) / (r^2 + r - 2k - 2)
//   c_{(1,2,...,2)} = 1 - c_{(2,...,2)}
// (k = 0: c_{(2)} = r/(r+2), c_{(1)} = 2/(r+2)); every other admissible
// vector returns exact 0. Rejects non-admissible vectors.
Rational coefficient(const IndexVector& i, const SecantParams& p);

// deg * [c_{(2,..,2)} beta(pi_k((2,..,2))) + c_{(1,2,..,2)} beta(pi_k((1,2,..,2)))].
// Every entry of the result is a nonnegative integer with b_{0,0} = 1.
BettiDiagram assemble_betti(const SecantParams& p);

// Closed form for the row-(k+1) strand entry at column i. Valid for
// 1 <= i <= r-2k-3 when k >= 1 and 1 <= i <= r-2 when k = 0.
Rational strand_value(std::int64_t i, const SecantParams& p);

// The five pinned positions of the diagram (k >= 1):
//   (r-2k-1, 2k+2) -> k+2      (r-2k-2, 2k+2) -> r-2k-1
//   (r-2k-2, 2k+1) -> r-k-2    (r-2k-1, 2k+1) -> 0
//   (0, 0)         -> 1
std::map<Position, Rational> anchor_values(const SecantParams& p);

// Support of row 2k+2 for a genus-g curve: columns r-g-2k through r-1-2k.
std::pair<std::int64_t, std::int64_t> top_row_range(std::int64_t g,
                                                    std::int64_t k,
                                                    std::int64_t r);

// Shape checks of the assembled diagram: rows 1..k empty and row 0 = {b00=1};
// row k+1 supported exactly on 1..r-2k-3 (k >= 1) or 1..r-2 (k = 0); rows
// k+2..2k empty; rows 2k+1 and 2k+2 match the anchors; nothing beyond column
// r-2k-1 or row 2k+2. Failures are reported, not thrown.
VerificationReport vanishing_predicates(const SecantParams& p,
                                        const BettiDiagram& d);

// Full bundle for one grid point: assembly, integrality and nonnegativity,
// anchors, strand closed form, multiplicity == degree (both degree forms),
// greedy decomposition recovery with the closed-form coefficients,
// coefficient range and sum, vanishing shape, and the row-(2k+2) support
// window at genus 2.
VerificationReport verify(const SecantParams& p);

}  // namespace betti

#endif
