#include "quandles/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "quandles/error.hpp"

namespace quandles {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json parse_json(const std::string& text, const std::string& where) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError("malformed document (" + where + "): " + e.what());
  }
}

QuandleDocument quandle_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError("quandle document must be an object (" + where + ")");
  if (!j.contains("size") || !j["size"].is_number_integer())
    throw ParseError("quandle document needs an integer \"size\" (" + where + ")");
  if (!j.contains("table") || !j["table"].is_array())
    throw ParseError("quandle document needs a \"table\" array (" + where + ")");

  const int size = j["size"].get<int>();
  if (size < 1) throw ParseError("\"size\" must be positive (" + where + ")");
  if (static_cast<int>(j["table"].size()) != size)
    throw ParseError("\"table\" does not match the declared size (" + where + ")");

  std::vector<std::vector<int>> table;
  table.reserve(static_cast<std::size_t>(size));
  for (const auto& row : j["table"]) {
    if (!row.is_array() || static_cast<int>(row.size()) != size)
      throw ParseError("\"table\" rows must have length \"size\" (" + where + ")");
    std::vector<int> entries;
    entries.reserve(static_cast<std::size_t>(size));
    for (const auto& cell : row) {
      if (!cell.is_number_integer())
        throw ParseError("\"table\" entries must be integers (" + where + ")");
      entries.push_back(cell.get<int>());
    }
    table.push_back(std::move(entries));
  }

  QuandleDocument doc{std::nullopt, std::nullopt, Quandle::from_table(std::move(table))};
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("\"name\" must be a string (" + where + ")");
    doc.name = j["name"].get<std::string>();
  }
  if (j.contains("labels")) {
    if (!j["labels"].is_array() || static_cast<int>(j["labels"].size()) != size)
      throw ParseError("\"labels\" must list one string per element (" + where + ")");
    std::vector<std::string> labels;
    for (const auto& label : j["labels"]) {
      if (!label.is_string()) throw ParseError("\"labels\" must be strings (" + where + ")");
      labels.push_back(label.get<std::string>());
    }
    doc.labels = std::move(labels);
  }
  return doc;
}

}  // namespace

QuandleDocument parse_quandle_document(const std::string& text) {
  return quandle_from_json(parse_json(text, "inline"), "inline");
}

QuandleDocument load_quandle_file(const std::string& path) {
  return quandle_from_json(parse_json(read_file(path), path), path);
}

std::string serialize_quandle_document(const QuandleDocument& doc) {
  std::ostringstream out;
  out << "{\n";
  if (doc.name) out << "  \"name\": " << json(*doc.name).dump() << ",\n";
  out << "  \"size\": " << doc.quandle.size() << ",\n";
  out << "  \"table\": [\n";
  for (int x = 0; x < doc.quandle.size(); ++x) {
    out << "    [";
    for (int y = 0; y < doc.quandle.size(); ++y) {
      if (y) out << ", ";
      out << doc.quandle.op(x, y);
    }
    out << (x + 1 < doc.quandle.size() ? "],\n" : "]\n");
  }
  out << "  ]";
  if (doc.labels) {
    out << ",\n  \"labels\": [";
    for (std::size_t i = 0; i < doc.labels->size(); ++i) {
      if (i) out << ", ";
      out << json((*doc.labels)[i]).dump();
    }
    out << "]";
  }
  out << "\n}\n";
  return out.str();
}

HomDocument load_hom_file(const std::string& path) {
  const json j = parse_json(read_file(path), path);
  if (!j.is_object()) throw ParseError("homomorphism document must be an object (" + path + ")");
  for (const char* key : {"source", "target", "map"})
    if (!j.contains(key))
      throw ParseError("homomorphism document needs \"" + std::string(key) + "\" (" + path + ")");

  auto resolve = [&](const json& side, const char* key) {
    if (side.is_string()) {
      std::filesystem::path base = std::filesystem::path(path).parent_path();
      return load_quandle_file((base / side.get<std::string>()).string());
    }
    return quandle_from_json(side, std::string(key) + " of " + path);
  };
  QuandleDocument source = resolve(j["source"], "source");
  QuandleDocument target = resolve(j["target"], "target");

  if (!j["map"].is_array()) throw ParseError("\"map\" must be an array (" + path + ")");
  std::vector<int> map;
  for (const auto& cell : j["map"]) {
    if (!cell.is_number_integer()) throw ParseError("\"map\" entries must be integers (" + path + ")");
    map.push_back(cell.get<int>());
  }
  if (static_cast<int>(map.size()) != source.quandle.size())
    throw ParseError("\"map\" must be total on the source (" + path + ")");
  for (int v : map)
    if (v < 0 || v >= target.quandle.size())
      throw ParseError("\"map\" values must index the target (" + path + ")");

  return HomDocument{std::move(source), std::move(target), std::move(map)};
}

std::string serialize_hom_document(const HomDocument& doc) {
  std::ostringstream out;
  auto indented_quandle = [&](const QuandleDocument& q) {
    std::istringstream lines(serialize_quandle_document(q));
    std::ostringstream shifted;
    std::string line;
    bool first = true;
    while (std::getline(lines, line)) {
      if (!first) shifted << "\n  ";
      shifted << line;
      first = false;
    }
    return shifted.str();
  };
  out << "{\n";
  out << "  \"source\": " << indented_quandle(doc.source) << ",\n";
  out << "  \"target\": " << indented_quandle(doc.target) << ",\n";
  out << "  \"map\": [";
  for (std::size_t i = 0; i < doc.map.size(); ++i) {
    if (i) out << ", ";
    out << doc.map[i];
  }
  out << "]\n}\n";
  return out.str();
}

}  // namespace quandles
