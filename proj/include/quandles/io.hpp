#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quandles/quandle.hpp"

namespace quandles {

// A quandle file is a JSON object with an integer "size", a square "table"
// of row-major entries (row x, column y holds x |> y), and optional "name"
// and "labels" fields. Serialization is canonical: fixed key order, two-space
// indent, one table row per line, so emitted files re-read byte-identically.
struct QuandleDocument {
  std::optional<std::string> name;
  std::optional<std::vector<std::string>> labels;
  Quandle quandle;
};

QuandleDocument parse_quandle_document(const std::string& text);
QuandleDocument load_quandle_file(const std::string& path);
std::string serialize_quandle_document(const QuandleDocument& doc);

// A homomorphism file carries "source" and "target" (inline quandle objects
// or path strings, resolved relative to the file) plus an integer "map".
// The map is not checked here; callers decide how to report violations.
struct HomDocument {
  QuandleDocument source;
  QuandleDocument target;
  std::vector<int> map;
};

HomDocument load_hom_file(const std::string& path);
std::string serialize_hom_document(const HomDocument& doc);

}  // namespace quandles
