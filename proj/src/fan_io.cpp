#include "toricchi/fan_io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "toricchi/error.hpp"

namespace toricchi {

namespace {

using nlohmann::json;

std::int64_t as_integer(const json& value, const std::string& where) {
  if (!value.is_number_integer()) throw MalformedInput(where + " must be an integer");
  if (value.is_number_unsigned() &&
      value.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    throw MalformedInput(where + " is out of range");
  }
  return value.get<std::int64_t>();
}

const json& require(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw MalformedInput(std::string("missing field '") + key + "'");
  return *it;
}

}  // namespace

FanDocument parse_fan_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw MalformedInput(std::string("fan file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw MalformedInput("fan file must contain a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "name" && key != "dim" && key != "rays" && key != "max_cones") {
      throw MalformedInput("unknown field '" + key + "'");
    }
  }

  std::optional<std::string> name;
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) throw MalformedInput("'name' must be a string");
    name = it->get<std::string>();
  }

  const std::int64_t dim = as_integer(require(doc, "dim"), "'dim'");
  if (dim < 1 || dim > 16) throw MalformedInput("'dim' must be between 1 and 16");

  const json& rays_json = require(doc, "rays");
  if (!rays_json.is_array()) throw MalformedInput("'rays' must be a list");
  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < rays_json.size(); ++i) {
    const json& ray = rays_json[i];
    const std::string where = "ray " + std::to_string(i + 1);
    if (!ray.is_array()) throw MalformedInput(where + " must be a list of integers");
    IntVector coords;
    for (const json& x : ray) coords.push_back(as_integer(x, where + " coordinate"));
    rays.push_back(std::move(coords));
  }

  const json& cones_json = require(doc, "max_cones");
  if (!cones_json.is_array()) throw MalformedInput("'max_cones' must be a list");
  std::vector<std::vector<int>> cones;
  for (std::size_t i = 0; i < cones_json.size(); ++i) {
    const json& cone = cones_json[i];
    const std::string where = "cone " + std::to_string(i + 1);
    if (!cone.is_array()) throw MalformedInput(where + " must be a list of ray indices");
    std::vector<int> idx;
    for (const json& x : cone) {
      const std::int64_t v = as_integer(x, where + " index");
      if (v < 1 || v > static_cast<std::int64_t>(rays.size())) {
        throw MalformedInput(where + " index " + std::to_string(v) + " out of range");
      }
      idx.push_back(static_cast<int>(v));
    }
    cones.push_back(std::move(idx));
  }

  return {std::move(name),
          Fan::from_one_based(static_cast<int>(dim), std::move(rays), cones)};
}

FanDocument load_fan_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot read fan file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_fan_document(buffer.str());
}

std::string format_fan_document(const FanDocument& doc) {
  std::ostringstream out;
  auto list = [&](const auto& values, auto&& render) {
    out << '[';
    bool first = true;
    for (const auto& v : values) {
      if (!first) out << ", ";
      out << render(v);
      first = false;
    }
    out << ']';
  };
  out << "{\n";
  if (doc.name) out << "  \"name\": " << json(*doc.name).dump() << ",\n";
  out << "  \"dim\": " << doc.fan.dim() << ",\n";
  out << "  \"rays\": [\n";
  for (int i = 0; i < doc.fan.ray_count(); ++i) {
    out << "    ";
    list(doc.fan.ray(i), [](std::int64_t x) { return std::to_string(x); });
    out << (i + 1 < doc.fan.ray_count() ? ",\n" : "\n");
  }
  out << "  ],\n";
  out << "  \"max_cones\": [\n";
  const auto& cones = doc.fan.max_cones();
  for (std::size_t i = 0; i < cones.size(); ++i) {
    out << "    ";
    list(cones[i].elements(), [](int x) { return std::to_string(x + 1); });
    out << (i + 1 < cones.size() ? ",\n" : "\n");
  }
  out << "  ]\n}\n";
  return out.str();
}

WeilDivisor parse_divisor(const std::string& text) {
  WeilDivisor divisor;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string token = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                    : comma - pos);
    const auto first = token.find_first_not_of(" \t");
    const auto last = token.find_last_not_of(" \t");
    token = first == std::string::npos ? "" : token.substr(first, last - first + 1);
    std::int64_t value = 0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (token.empty() || ec != std::errc{} || ptr != end) {
      throw MalformedInput("divisor entry '" + token + "' is not an integer");
    }
    divisor.coeffs.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return divisor;
}

}  // namespace toricchi
