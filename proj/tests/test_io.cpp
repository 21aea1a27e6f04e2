#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>

#include "quandles/error.hpp"
#include "quandles/io.hpp"
#include "support.hpp"

using namespace quandles;
using testsupport::fresh_temp_dir;
using testsupport::make_r3;
using testsupport::write_file;

TEST_CASE("serialization round-trips byte for byte") {
  QuandleDocument doc{"R3", std::vector<std::string>{"a", "b", "c"}, make_r3()};
  std::string text = serialize_quandle_document(doc);
  QuandleDocument parsed = parse_quandle_document(text);
  CHECK(parsed.quandle == doc.quandle);
  CHECK(parsed.name == doc.name);
  CHECK(parsed.labels == doc.labels);
  CHECK(serialize_quandle_document(parsed) == text);

  QuandleDocument bare{std::nullopt, std::nullopt, make_r3()};
  std::string bare_text = serialize_quandle_document(bare);
  CHECK(serialize_quandle_document(parse_quandle_document(bare_text)) == bare_text);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_quandle_document("not json"), ParseError);
  CHECK_THROWS_AS(parse_quandle_document("[1, 2]"), ParseError);
  CHECK_THROWS_AS(parse_quandle_document(R"({"table": [[0]]})"), ParseError);
  CHECK_THROWS_AS(parse_quandle_document(R"({"size": 2, "table": [[0, 1]]})"), ParseError);
  CHECK_THROWS_AS(parse_quandle_document(R"({"size": 1, "table": [[0]], "labels": []})"),
                  ParseError);
  CHECK_THROWS_AS(parse_quandle_document(R"({"size": 1, "table": [["x"]]})"), ParseError);
  // Structurally fine JSON with an out-of-range entry fails table validation.
  CHECK_THROWS_AS(parse_quandle_document(R"({"size": 2, "table": [[0, 5], [1, 1]]})"),
                  std::invalid_argument);
  // A well-formed document violating an axiom raises the axiom error.
  CHECK_THROWS_AS(parse_quandle_document(R"({"size": 2, "table": [[0, 0], [0, 1]]})"),
                  AxiomError);
}

TEST_CASE("homomorphism files resolve inline and path sources") {
  auto dir = fresh_temp_dir("quandles_io");
  write_file(dir / "r3.json",
             serialize_quandle_document({"R3", std::nullopt, make_r3()}));
  write_file(dir / "hom.json", R"({
    "source": "r3.json",
    "target": {"size": 1, "table": [[0]]},
    "map": [0, 0, 0]
  })");
  HomDocument doc = load_hom_file((dir / "hom.json").string());
  CHECK(doc.source.quandle == make_r3());
  CHECK(doc.target.quandle.size() == 1);
  CHECK(doc.map == std::vector<int>{0, 0, 0});

  write_file(dir / "bad_map.json", R"({
    "source": "r3.json",
    "target": {"size": 1, "table": [[0]]},
    "map": [0, 0]
  })");
  CHECK_THROWS_AS(load_hom_file((dir / "bad_map.json").string()), ParseError);
  CHECK_THROWS_AS(load_hom_file((dir / "missing.json").string()), ParseError);

  std::string hom_text = serialize_hom_document(doc);
  CHECK(hom_text.find("\"map\": [0, 0, 0]") != std::string::npos);
  std::filesystem::remove_all(dir);
}
