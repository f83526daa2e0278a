#include "diagram.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace betti {

DegreeSequence::DegreeSequence(std::vector<std::int64_t> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw std::invalid_argument("degree sequence must be nonempty");
  }
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i - 1] >= entries_[i]) {
      throw std::invalid_argument("degree sequence must be strictly increasing: " +
                                  to_string());
    }
  }
}

std::string DegreeSequence::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out << ',';
    out << entries_[i];
  }
  return out.str();
}

DegreeSequence DegreeSequence::parse(const std::string& text) {
  std::vector<std::int64_t> values;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    std::size_t begin = token.find_first_not_of(" \t");
    std::size_t end = token.find_last_not_of(" \t");
    if (begin == std::string::npos) {
      throw std::invalid_argument("empty entry in degree sequence: '" + text + "'");
    }
    token = token.substr(begin, end - begin + 1);
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad degree sequence entry: '" + token + "'");
    }
    if (used != token.size()) {
      throw std::invalid_argument("bad degree sequence entry: '" + token + "'");
    }
    values.push_back(value);
  }
  if (values.empty()) {
    throw std::invalid_argument("empty degree sequence: '" + text + "'");
  }
  return DegreeSequence(std::move(values));
}

BettiDiagram::BettiDiagram(std::map<Position, Rational> entries)
    : entries_(std::move(entries)) {
  for (const auto& [pos, value] : entries_) {
    if (pos.p < 0) {
      throw std::invalid_argument("diagram column must be nonnegative");
    }
    if (value == 0) {
      throw std::invalid_argument("diagram must not store zero entries");
    }
  }
}

Rational BettiDiagram::entry(std::int64_t p, std::int64_t q) const {
  auto it = entries_.find(Position{p, q});
  return it == entries_.end() ? Rational(0) : it->second;
}

std::int64_t BettiDiagram::projective_dimension() const {
  if (entries_.empty()) {
    throw std::invalid_argument("empty diagram has no projective dimension");
  }
  return entries_.rbegin()->first.p;
}

std::int64_t BettiDiagram::min_row() const {
  if (entries_.empty()) {
    throw std::invalid_argument("empty diagram has no rows");
  }
  std::int64_t q = entries_.begin()->first.q;
  for (const auto& [pos, value] : entries_) q = std::min(q, pos.q);
  return q;
}

std::int64_t BettiDiagram::max_row() const {
  if (entries_.empty()) {
    throw std::invalid_argument("empty diagram has no rows");
  }
  std::int64_t q = entries_.begin()->first.q;
  for (const auto& [pos, value] : entries_) q = std::max(q, pos.q);
  return q;
}

void DiagramBuilder::add(std::int64_t p, std::int64_t q, const Rational& value) {
  if (p < 0) throw std::invalid_argument("diagram column must be nonnegative");
  if (value == 0) return;
  auto [it, inserted] = entries_.try_emplace(Position{p, q}, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) entries_.erase(it);
  }
}

void DiagramBuilder::set_checked(std::int64_t p, std::int64_t q,
                                 const Rational& value) {
  if (p < 0) throw std::invalid_argument("diagram column must be nonnegative");
  if (value == 0) {
    throw std::invalid_argument("explicit zero entry at (" + std::to_string(p) +
                                "," + std::to_string(q) + ")");
  }
  auto [it, inserted] = entries_.try_emplace(Position{p, q}, value);
  if (!inserted) {
    throw std::invalid_argument("duplicate entry at (" + std::to_string(p) +
                                "," + std::to_string(q) + ")");
  }
}

BettiDiagram DiagramBuilder::build() && {
  BettiDiagram out;
  out.entries_ = std::move(entries_);
  return out;
}

BettiDiagram pure_diagram(const DegreeSequence& e) {
  if (e.size() < 2) {
    throw std::invalid_argument(
        "pure diagram needs a degree sequence of length >= 2, got " +
        e.to_string());
  }
  const std::int64_t n = e.n();
  const Integer n_fact = factorial_int(n);
  DiagramBuilder builder;
  for (std::int64_t p = 0; p <= n; ++p) {
    Integer denom(1);
    for (std::int64_t i = 0; i <= n; ++i) {
      if (i != p) denom *= std::abs(e[i] - e[p]);
    }
    builder.add(p, e[p] - p, make_rational(n_fact, denom));
  }
  return std::move(builder).build();
}

BettiDiagram scale(const BettiDiagram& d, const Rational& c) {
  DiagramBuilder builder;
  if (c != 0) {
    for (const auto& [pos, value] : d.entries()) {
      builder.add(pos.p, pos.q, value * c);
    }
  }
  return std::move(builder).build();
}

BettiDiagram add(const BettiDiagram& a, const BettiDiagram& b) {
  DiagramBuilder builder;
  for (const auto& [pos, value] : a.entries()) builder.add(pos.p, pos.q, value);
  for (const auto& [pos, value] : b.entries()) builder.add(pos.p, pos.q, value);
  return std::move(builder).build();
}

}  // namespace betti
