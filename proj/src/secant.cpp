#include "secant.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"
#include "hilbert.hpp"

namespace betti {

namespace {

IndexVector all_twos(std::int64_t k) {
  return IndexVector(std::vector<std::int64_t>(k + 1, 2));
}

IndexVector one_then_twos(std::int64_t k) {
  std::vector<std::int64_t> entries(k + 1, 2);
  entries[0] = 1;
  return IndexVector(std::move(entries));
}

Rational degree_binomial_form(std::int64_t k, std::int64_t r) {
  return Rational(binomial_int(r - k, k + 1) + 2 * binomial_int(r - k - 1, k) +
                  binomial_int(r - k - 2, k - 1));
}

Rational degree_product_form(std::int64_t k, std::int64_t r) {
  Integer prod(1);
  for (std::int64_t j = r - 2 * k; j <= r - k - 2; ++j) prod *= j;
  const Integer head = Integer(r) * r + r - 2 * k - 2;
  return make_rational(head * prod, factorial_int(k + 1));
}

}  // namespace

SecantParams::SecantParams(std::int64_t k_order, std::int64_t ambient_r)
    : k(k_order), r(ambient_r) {
  if (k < 0) throw std::invalid_argument("secant order k must be >= 0");
  if (r < 2 * k + 3) {
    throw std::invalid_argument("need r >= 2k+3, got k=" + std::to_string(k) +
                                " r=" + std::to_string(r));
  }
}

void VerificationReport::record(std::string name, std::string expected,
                                std::string computed) {
  const bool pass = expected == computed;
  checks_.push_back(VerificationCheck{std::move(name), std::move(expected),
                                      std::move(computed), pass});
}

void VerificationReport::record(std::string name, const Rational& expected,
                                const Rational& computed) {
  record(std::move(name), betti::to_string(expected),
         betti::to_string(computed));
}

bool VerificationReport::all_passed() const {
  for (const auto& check : checks_) {
    if (!check.pass) return false;
  }
  return true;
}

std::string VerificationReport::to_string() const {
  std::ostringstream out;
  out << "k=" << k_ << " r=" << r_ << ": "
      << (all_passed() ? "PASS" : "FAIL") << " (" << checks_.size()
      << " checks)\n";
  for (const auto& check : checks_) {
    out << "  [" << (check.pass ? "pass" : "FAIL") << "] " << check.name
        << ": expected " << check.expected;
    if (!check.pass) out << ", computed " << check.computed;
    out << '\n';
  }
  return out.str();
}

Rational secant_degree(const SecantParams& p) {
  if (p.k == 0) return Rational(p.r + 2);
  const Rational binomial_form = degree_binomial_form(p.k, p.r);
  const Rational product_form = degree_product_form(p.k, p.r);
  if (binomial_form != product_form) {
    throw std::logic_error("secant degree forms disagree at k=" +
                           std::to_string(p.k) + " r=" + std::to_string(p.r) +
                           ": " + to_string(binomial_form) + " vs " +
                           to_string(product_form));
  }
  return binomial_form;
}

Rational coefficient(const IndexVector& i, const SecantParams& p) {
  if (static_cast<std::int64_t>(i.size()) != p.k + 1) {
    throw std::invalid_argument("index vector " + i.to_string() +
                                " has wrong length for k=" +
                                std::to_string(p.k));
  }
  if (!i.admissible()) {
    throw std::invalid_argument("index vector " + i.to_string() +
                                " is not admissible (needs i_k <= 2)");
  }
  if (p.k == 0) {
    if (i[0] == 2) return make_rational(p.r, p.r + 2);
    if (i[0] == 1) return make_rational(2, p.r + 2);
    return Rational(0);
  }
  if (i == all_twos(p.k)) {
    const Integer num = Integer(p.r) * p.r - Integer(2) * p.k * p.r - p.r;
    const Integer den = Integer(p.r) * p.r + p.r - 2 * p.k - 2;
    return make_rational(num, den);
  }
  if (i == one_then_twos(p.k)) {
    return 1 - coefficient(all_twos(p.k), p);
  }
  return Rational(0);
}

BettiDiagram assemble_betti(const SecantParams& p) {
  const Rational deg = secant_degree(p);
  const std::int64_t d = p.line_bundle_degree();
  const IndexVector lead = one_then_twos(p.k);
  const IndexVector tail = all_twos(p.k);
  const BettiDiagram lead_part =
      scale(pure_diagram(pi_k_sequence(lead, p.k, d)),
            deg * coefficient(lead, p));
  const BettiDiagram tail_part =
      scale(pure_diagram(pi_k_sequence(tail, p.k, d)),
            deg * coefficient(tail, p));
  return add(lead_part, tail_part);
}

Rational strand_value(std::int64_t i, const SecantParams& p) {
  if (p.k == 0) {
    if (i < 1 || i > p.r - 2) {
      throw std::invalid_argument("strand column " + std::to_string(i) +
                                  " out of range 1.." + std::to_string(p.r - 2));
    }
    const Integer num = factorial_int(p.r - 1) *
                        (Integer(p.r) * p.r - Integer(i) * p.r - 2 * i - 2);
    const Integer den = Integer(i + 1) * factorial_int(i - 1) *
                        factorial_int(p.r - i);
    return make_rational(num, den);
  }
  if (i < 1 || i > p.r - 2 * p.k - 3) {
    throw std::invalid_argument("strand column " + std::to_string(i) +
                                " out of range 1.." +
                                std::to_string(p.r - 2 * p.k - 3));
  }
  const std::int64_t r = p.r;
  const std::int64_t k = p.k;
  const Integer bracket = Integer(r) * r * r - Integer(i + k + 1) * r * r -
                          Integer(i + k + 2) * r +
                          Integer(2) * (k + 1) * (i + k + 1);
  const Integer num = factorial_int(r - k - 2) * bracket;
  const Integer den = factorial_int(k + 1) * Integer(i + k + 1) *
                      factorial_int(i - 1) * factorial_int(r - i - 2 * k - 3) *
                      Integer(r - i - k - 2) * Integer(r - i - k - 1) *
                      Integer(r - i - k);
  return make_rational(num, den);
}

std::map<Position, Rational> anchor_values(const SecantParams& p) {
  if (p.k < 1) {
    throw std::invalid_argument("anchor_values is defined for k >= 1");
  }
  const std::int64_t k = p.k;
  const std::int64_t r = p.r;
  return {
      {Position{r - 2 * k - 1, 2 * k + 2}, Rational(k + 2)},
      {Position{r - 2 * k - 2, 2 * k + 2}, Rational(r - 2 * k - 1)},
      {Position{r - 2 * k - 2, 2 * k + 1}, Rational(r - k - 2)},
      {Position{r - 2 * k - 1, 2 * k + 1}, Rational(0)},
      {Position{0, 0}, Rational(1)},
  };
}

std::pair<std::int64_t, std::int64_t> top_row_range(std::int64_t g,
                                                    std::int64_t k,
                                                    std::int64_t r) {
  if (g < 1) throw std::invalid_argument("genus must be >= 1");
  return {r - g - 2 * k, r - 1 - 2 * k};
}

namespace {

std::string row_support_string(const BettiDiagram& d, std::int64_t q) {
  std::set<std::int64_t> columns;
  for (const auto& [pos, value] : d.entries()) {
    if (pos.q == q) columns.insert(pos.p);
  }
  if (columns.empty()) return "{}";
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (std::int64_t p : columns) {
    if (!first) out << ',';
    out << p;
    first = false;
  }
  out << '}';
  return out.str();
}

std::string interval_string(std::int64_t low, std::int64_t high) {
  if (low > high) return "{}";
  std::ostringstream out;
  out << '{';
  for (std::int64_t p = low; p <= high; ++p) {
    if (p != low) out << ',';
    out << p;
  }
  out << '}';
  return out.str();
}

std::string row_content_string(const BettiDiagram& d, std::int64_t q) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [pos, value] : d.entries()) {
    if (pos.q != q) continue;
    if (!first) out << ' ';
    out << 'b' << pos.p << '=' << to_string(value);
    first = false;
  }
  return first ? "{}" : out.str();
}

// The pinned anchor rows for k = 0 coincide with the k >= 1 formulas: the
// strand row carries (r-2, 1) -> r-2 with column r-1 empty, and row 2
// carries (r-2, 2) -> r-1 and (r-1, 2) -> 2.
std::map<Position, Rational> curve_anchor_values(const SecantParams& p) {
  const std::int64_t r = p.r;
  return {
      {Position{r - 1, 2}, Rational(2)},
      {Position{r - 2, 2}, Rational(r - 1)},
      {Position{r - 2, 1}, Rational(r - 2)},
      {Position{r - 1, 1}, Rational(0)},
      {Position{0, 0}, Rational(1)},
  };
}

std::map<Position, Rational> anchors_for(const SecantParams& p) {
  return p.k == 0 ? curve_anchor_values(p) : anchor_values(p);
}

}  // namespace

VerificationReport vanishing_predicates(const SecantParams& p,
                                        const BettiDiagram& d) {
  VerificationReport report(p.k, p.r);
  const std::int64_t k = p.k;
  const std::int64_t r = p.r;

  report.record("row_0", "b0=1", row_content_string(d, 0));
  for (std::int64_t q = 1; q <= k; ++q) {
    report.record("row_" + std::to_string(q) + "_empty", "{}",
                  row_support_string(d, q));
  }

  const std::int64_t strand_end = (k == 0) ? r - 2 : r - 2 * k - 3;
  report.record("row_" + std::to_string(k + 1) + "_support",
                interval_string(1, strand_end),
                row_support_string(d, k + 1));

  for (std::int64_t q = k + 2; q <= 2 * k; ++q) {
    report.record("row_" + std::to_string(q) + "_empty", "{}",
                  row_support_string(d, q));
  }

  // Rows 2k+1 and 2k+2 must equal the anchor content exactly. For k = 0 the
  // strand row and row 2k+1 coincide; the support check above already pins
  // it, and the anchor comparison below pins the two boundary values.
  const auto anchors = anchors_for(p);
  for (const auto& [pos, value] : anchors) {
    report.record("anchor_b" + std::to_string(pos.p) + "_" +
                      std::to_string(pos.q),
                  value, d.entry(pos.p, pos.q));
  }
  if (k >= 1) {
    report.record("row_" + std::to_string(2 * k + 1) + "_support",
                  interval_string(r - 2 * k - 2, r - 2 * k - 2),
                  row_support_string(d, 2 * k + 1));
  }
  report.record("row_" + std::to_string(2 * k + 2) + "_support",
                interval_string(r - 2 * k - 2, r - 2 * k - 1),
                row_support_string(d, 2 * k + 2));

  bool inside = true;
  std::string offender = "all entries inside";
  for (const auto& [pos, value] : d.entries()) {
    if (pos.p > r - 2 * k - 1 || pos.q > 2 * k + 2 || pos.q < 0) {
      inside = false;
      offender = "entry at (" + std::to_string(pos.p) + "," +
                 std::to_string(pos.q) + ")";
      break;
    }
  }
  report.record("bounding_box", "all entries inside",
                inside ? "all entries inside" : offender);
  return report;
}

VerificationReport verify(const SecantParams& p) {
  VerificationReport report(p.k, p.r);
  const std::int64_t k = p.k;
  const std::int64_t r = p.r;

  const BettiDiagram diagram = assemble_betti(p);
  const Rational degree = secant_degree(p);

  {
    std::string bad = "all integral and positive";
    for (const auto& [pos, value] : diagram.entries()) {
      if (!is_integer(value) || value <= 0) {
        bad = "b_{" + std::to_string(pos.p) + "," + std::to_string(pos.q) +
              "} = " + to_string(value);
        break;
      }
    }
    report.record("entries_integral_positive", "all integral and positive",
                  bad);
  }

  if (k >= 1) {
    report.record("degree_forms_agree", degree_binomial_form(k, r),
                  degree_product_form(k, r));
  }

  for (const auto& [pos, value] : anchors_for(p)) {
    report.record(
        "anchor_b" + std::to_string(pos.p) + "_" + std::to_string(pos.q),
        value, diagram.entry(pos.p, pos.q));
  }

  const std::int64_t strand_end = (k == 0) ? r - 2 : r - 2 * k - 3;
  for (std::int64_t i = 1; i <= strand_end; ++i) {
    report.record("strand_b" + std::to_string(i) + "_" + std::to_string(k + 1),
                  strand_value(i, p), diagram.entry(i, k + 1));
  }

  report.record("multiplicity_equals_degree", degree, multiplicity(diagram));

  const IndexVector lead = one_then_twos(k);
  const IndexVector tail = all_twos(k);
  const Rational lead_coeff = coefficient(lead, p);
  const Rational tail_coeff = coefficient(tail, p);
  const DegreeSequence lead_seq = pi_k_sequence(lead, k, p.line_bundle_degree());
  const DegreeSequence tail_seq = pi_k_sequence(tail, k, p.line_bundle_degree());

  try {
    const Decomposition decomposition = greedy_decompose(diagram);
    report.record("decomposition_terms", "2",
                  std::to_string(decomposition.size()));
    if (decomposition.size() == 2) {
      report.record("decomposition_sequence_0", lead_seq.to_string(),
                    decomposition[0].sequence.to_string());
      report.record("decomposition_coefficient_0", degree * lead_coeff,
                    decomposition[0].coefficient);
      report.record("decomposition_sequence_1", tail_seq.to_string(),
                    decomposition[1].sequence.to_string());
      report.record("decomposition_coefficient_1", degree * tail_coeff,
                    decomposition[1].coefficient);
      report.record("decomposition_recomposes", "exact",
                    recompose(decomposition) == diagram ? "exact" : "differs");
    }
  } catch (const NotInConeError& e) {
    report.record("decomposition_terms", "2",
                  std::string("NotInCone: ") + e.what());
  }

  report.record("coefficient_sum", Rational(1), lead_coeff + tail_coeff);
  report.record("coefficients_in_unit_interval", "yes",
                (lead_coeff >= 0 && lead_coeff <= 1 && tail_coeff >= 0 &&
                 tail_coeff <= 1)
                    ? "yes"
                    : "no");

  const VerificationReport shape = vanishing_predicates(p, diagram);
  for (const auto& check : shape.checks()) {
    report.record("vanishing." + check.name, check.expected, check.computed);
  }

  const auto [low, high] = top_row_range(2, k, r);
  report.record("top_row_support_genus2", interval_string(low, high),
                row_support_string(diagram, 2 * k + 2));

  return report;
}

}  // namespace betti
