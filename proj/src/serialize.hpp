#ifndef BETTI_SERIALIZE_HPP
#define BETTI_SERIALIZE_HPP

#include <string>

#include "diagram.hpp"

namespace betti {

enum class DiagramFormat {
  kJson,   // {"schema_version":"1","entries":[{"p":..,"q":..,"value":".."},..]}
  kCsv,    // header "p,q,value", one entry per line
  kTable,  // aligned grid, rows q ascending, "." for zero (render only)
};

// Throws ParseError on malformed syntax, duplicate cells, zero values or an
// unsupported schema version. kTable is render-only.
BettiDiagram parse_diagram(const std::string& text, DiagramFormat format);

// json and csv round-trip losslessly through parse_diagram. The table format
// prints values as integers when exact, otherwise "a/b".
std::string render_diagram(const BettiDiagram& d, DiagramFormat format);

}  // namespace betti

#endif
