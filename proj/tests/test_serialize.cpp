#include <doctest.h>

#include <random>

#include "errors.hpp"
#include "secant.hpp"
#include "serialize.hpp"
#include "test_util.hpp"

using namespace betti;
using betti::testing::diagram_of;

TEST_CASE("json parsing") {
  const std::string doc =
      R"({"schema_version":"1","entries":[{"p":0,"q":0,"value":"1"}]})";
  CHECK(parse_diagram(doc, DiagramFormat::kJson) == diagram_of({{0, 0, "1"}}));

  CHECK_THROWS_AS(parse_diagram("{", DiagramFormat::kJson), ParseError);
  CHECK_THROWS_AS(parse_diagram("{}", DiagramFormat::kJson), ParseError);
  CHECK_THROWS_AS(
      parse_diagram(R"({"schema_version":"2","entries":[]})",
                    DiagramFormat::kJson),
      ParseError);
  CHECK_THROWS_AS(
      parse_diagram(
          R"({"schema_version":"1","entries":[{"p":0,"q":0,"value":"0"}]})",
          DiagramFormat::kJson),
      ParseError);
  const std::string duplicated =
      R"({"schema_version":"1","entries":[{"p":0,"q":0,"value":"1"},
                                          {"p":0,"q":0,"value":"2"}]})";
  CHECK_THROWS_AS(parse_diagram(duplicated, DiagramFormat::kJson), ParseError);
}

TEST_CASE("csv parsing") {
  CHECK(parse_diagram("p,q,value\n1,2,12\n", DiagramFormat::kCsv) ==
        diagram_of({{1, 2, "12"}}));
  CHECK(parse_diagram("p,q,value\n", DiagramFormat::kCsv).empty());
  CHECK(parse_diagram("p,q,value\n0,0,7/13\n", DiagramFormat::kCsv)
            .entry(0, 0) == make_rational(7, 13));

  CHECK_THROWS_AS(parse_diagram("1,2,12\n", DiagramFormat::kCsv), ParseError);
  CHECK_THROWS_AS(parse_diagram("p,q,value\n0,0,1\n0,0,2\n",
                                DiagramFormat::kCsv),
                  ParseError);
  CHECK_THROWS_AS(parse_diagram("p,q,value\n0,0\n", DiagramFormat::kCsv),
                  ParseError);
  CHECK_THROWS_AS(parse_diagram("p,q,value\n0,0,1,9\n", DiagramFormat::kCsv),
                  ParseError);
  CHECK_THROWS_AS(parse_diagram("p,q,value\n0,0,0\n", DiagramFormat::kCsv),
                  ParseError);
  CHECK_THROWS_AS(parse_diagram("p,q,value\n-1,0,1\n", DiagramFormat::kCsv),
                  ParseError);
}

TEST_CASE("table format mirrors the diagram layout") {
  const std::string table =
      render_diagram(assemble_betti(SecantParams(0, 3)), DiagramFormat::kTable);
  CHECK(table ==
        "    0  1  2\n"
        "0:  1  .  .\n"
        "1:  .  1  .\n"
        "2:  .  2  2\n");
  CHECK(render_diagram(BettiDiagram{}, DiagramFormat::kTable) ==
        "(empty diagram)\n");
  CHECK_THROWS_AS(parse_diagram("", DiagramFormat::kTable), ParseError);
}

TEST_CASE("empty diagram renders as header-only csv") {
  CHECK(render_diagram(BettiDiagram{}, DiagramFormat::kCsv) == "p,q,value\n");
}

TEST_CASE("json and csv round trips are lossless") {
  std::mt19937_64 rng(60902);
  for (int trial = 0; trial < 40; ++trial) {
    DiagramBuilder builder;
    const int entries = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < entries; ++i) {
      const auto p = static_cast<std::int64_t>(rng() % 6);
      const auto q = static_cast<std::int64_t>(rng() % 9) - 2;
      const Rational value = betti::testing::random_positive_rational(rng) -
                             betti::testing::random_positive_rational(rng);
      builder.add(p, q, value);
    }
    const BettiDiagram d = std::move(builder).build();
    CHECK(parse_diagram(render_diagram(d, DiagramFormat::kJson),
                        DiagramFormat::kJson) == d);
    CHECK(parse_diagram(render_diagram(d, DiagramFormat::kCsv),
                        DiagramFormat::kCsv) == d);
  }
}
