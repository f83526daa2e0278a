#include "serialize.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "errors.hpp"

namespace betti {

namespace {

constexpr const char* kSchemaVersion = "1";
constexpr const char* kCsvHeader = "p,q,value";

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::int64_t parse_int(const std::string& token, const char* what) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    throw ParseError(std::string("bad ") + what + ": '" + token + "'");
  }
  if (used != token.size()) {
    throw ParseError(std::string("bad ") + what + ": '" + token + "'");
  }
  return value;
}

Rational parse_value(const std::string& token) {
  Rational value;
  try {
    value = parse_rational(token);
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
  if (value == 0) {
    throw ParseError("zero value '" + token + "'; diagrams store nonzero "
                     "entries only");
  }
  return value;
}

BettiDiagram parse_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("schema_version") ||
      !doc["schema_version"].is_string()) {
    throw ParseError("diagram document must carry a schema_version string");
  }
  if (doc["schema_version"].get<std::string>() != kSchemaVersion) {
    throw ParseError("unsupported schema_version '" +
                     doc["schema_version"].get<std::string>() + "'");
  }
  if (!doc.contains("entries") || !doc["entries"].is_array()) {
    throw ParseError("diagram document must carry an entries array");
  }
  DiagramBuilder builder;
  for (const auto& item : doc["entries"]) {
    if (!item.is_object() || !item.contains("p") || !item.contains("q") ||
        !item.contains("value") || !item["p"].is_number_integer() ||
        !item["q"].is_number_integer() || !item["value"].is_string()) {
      throw ParseError("each entry needs integer p, integer q and string value");
    }
    const auto p = item["p"].get<std::int64_t>();
    const auto q = item["q"].get<std::int64_t>();
    try {
      builder.set_checked(p, q, parse_value(item["value"].get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  return std::move(builder).build();
}

BettiDiagram parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || trim(line) != kCsvHeader) {
    throw ParseError(std::string("csv diagram must start with header '") +
                     kCsvHeader + "'");
  }
  DiagramBuilder builder;
  while (std::getline(in, line)) {
    const std::string row = trim(line);
    if (row.empty()) continue;
    std::istringstream cells(row);
    std::string p_cell, q_cell, v_cell, extra;
    if (!std::getline(cells, p_cell, ',') || !std::getline(cells, q_cell, ',') ||
        !std::getline(cells, v_cell, ',')) {
      throw ParseError("csv row needs p,q,value: '" + row + "'");
    }
    if (std::getline(cells, extra, ',')) {
      throw ParseError("csv row has trailing fields: '" + row + "'");
    }
    try {
      builder.set_checked(parse_int(trim(p_cell), "column p"),
                          parse_int(trim(q_cell), "row q"),
                          parse_value(trim(v_cell)));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  return std::move(builder).build();
}

std::string render_json(const BettiDiagram& d) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [pos, value] : d.entries()) {
    entries.push_back({{"p", pos.p}, {"q", pos.q}, {"value", to_string(value)}});
  }
  nlohmann::json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["entries"] = std::move(entries);
  return doc.dump(2) + "\n";
}

std::string render_csv(const BettiDiagram& d) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto& [pos, value] : d.entries()) {
    out << pos.p << ',' << pos.q << ',' << to_string(value) << '\n';
  }
  return out.str();
}

std::string render_table(const BettiDiagram& d) {
  if (d.empty()) return "(empty diagram)\n";
  const std::int64_t pdim = d.projective_dimension();
  const std::int64_t q_min = d.min_row();
  const std::int64_t q_max = d.max_row();

  const std::size_t columns = static_cast<std::size_t>(pdim + 1);
  std::vector<std::vector<std::string>> cells(
      static_cast<std::size_t>(q_max - q_min + 1),
      std::vector<std::string>(columns, "."));
  for (const auto& [pos, value] : d.entries()) {
    cells[pos.q - q_min][pos.p] = to_string(value);
  }

  std::vector<std::size_t> widths(columns);
  for (std::size_t p = 0; p < columns; ++p) {
    widths[p] = std::to_string(p).size();
    for (const auto& row : cells) widths[p] = std::max(widths[p], row[p].size());
  }
  std::size_t label_width = 0;
  for (std::int64_t q = q_min; q <= q_max; ++q) {
    label_width = std::max(label_width, std::to_string(q).size() + 1);
  }

  std::ostringstream out;
  out << std::string(label_width, ' ');
  for (std::size_t p = 0; p < columns; ++p) {
    out << "  " << std::string(widths[p] - std::to_string(p).size(), ' ')
        << p;
  }
  out << '\n';
  for (std::int64_t q = q_min; q <= q_max; ++q) {
    const std::string label = std::to_string(q) + ":";
    out << std::string(label_width - label.size(), ' ') << label;
    const auto& row = cells[q - q_min];
    for (std::size_t p = 0; p < columns; ++p) {
      out << "  " << std::string(widths[p] - row[p].size(), ' ') << row[p];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace

BettiDiagram parse_diagram(const std::string& text, DiagramFormat format) {
  switch (format) {
    case DiagramFormat::kJson:
      return parse_json(text);
    case DiagramFormat::kCsv:
      return parse_csv(text);
    case DiagramFormat::kTable:
      throw ParseError("the table format is render-only");
  }
  throw ParseError("unknown diagram format");
}

std::string render_diagram(const BettiDiagram& d, DiagramFormat format) {
  switch (format) {
    case DiagramFormat::kJson:
      return render_json(d);
    case DiagramFormat::kCsv:
      return render_csv(d);
    case DiagramFormat::kTable:
      return render_table(d);
  }
  throw std::invalid_argument("unknown diagram format");
}

}  // namespace betti
