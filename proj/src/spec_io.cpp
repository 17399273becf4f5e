/* Copyright 2026 The gframe Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "gframe/spec_io.hpp"

#include <cmath>
#include <string>

#include "json.hpp"

namespace gframe {

namespace {

using json = nlohmann::json;

[[noreturn]] void schema_error(const std::string& field, const std::string& why) {
  throw Error(ErrorCode::SchemaError, "field '" + field + "': " + why);
}

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

void allow_only(const json& obj, std::initializer_list<const char*> keys, const std::string& where) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* k : keys) known = known || item.key() == k;
    if (!known) schema_error(where + item.key(), "unknown field");
  }
}

Index read_count(const json& v, const std::string& field) {
  if (!v.is_number_integer()) schema_error(field, "expected an integer");
  const auto value = v.get<std::int64_t>();
  if (value < 1) schema_error(field, "must be >= 1");
  return static_cast<Index>(value);
}

Complex read_complex(const json& v, const std::string& field) {
  if (!v.is_array() || v.size() != 2) schema_error(field, "expected a [re, im] pair");
  if (!v[0].is_number() || !v[1].is_number()) schema_error(field, "entries must be numbers");
  const Complex c(v[0].get<double>(), v[1].get<double>());
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) schema_error(field, "non-finite value");
  return c;
}

std::optional<std::string> read_text(const json& meta, const char* key) {
  if (!meta.contains(key)) return std::nullopt;
  const json& v = meta.at(key);
  if (!v.is_string()) schema_error(std::string("metadata.") + key, "expected a string");
  return v.get<std::string>();
}

}  // namespace

FrameSpec parse_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_and_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " +
                                           std::to_string(col) + ": " + e.what());
  }
  if (!doc.is_object()) schema_error("<root>", "expected an object");
  allow_only(doc, {"hilbert_dim", "blocks", "metadata"}, "");
  if (!doc.contains("hilbert_dim")) schema_error("hilbert_dim", "missing");
  if (!doc.contains("blocks")) schema_error("blocks", "missing");

  const Index n = read_count(doc["hilbert_dim"], "hilbert_dim");
  const json& blocks_json = doc["blocks"];
  if (!blocks_json.is_array() || blocks_json.empty()) schema_error("blocks", "expected a nonempty array");

  std::vector<CMatrix> blocks;
  blocks.reserve(blocks_json.size());
  for (std::size_t j = 0; j < blocks_json.size(); ++j) {
    const std::string where = "blocks[" + std::to_string(j) + "]";
    const json& b = blocks_json[j];
    if (!b.is_object()) schema_error(where, "expected an object");
    allow_only(b, {"rows", "matrix"}, where + ".");
    if (!b.contains("rows")) schema_error(where + ".rows", "missing");
    if (!b.contains("matrix")) schema_error(where + ".matrix", "missing");
    const Index rows = read_count(b["rows"], where + ".rows");
    const json& mat = b["matrix"];
    if (!mat.is_array() || static_cast<Index>(mat.size()) != rows) {
      schema_error(where + ".matrix", "expected " + std::to_string(rows) + " rows");
    }
    CMatrix block(rows, n);
    for (Index r = 0; r < rows; ++r) {
      const std::string row_where = where + ".matrix[" + std::to_string(r) + "]";
      const json& row = mat[static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<Index>(row.size()) != n) {
        schema_error(row_where, "expected " + std::to_string(n) + " entries");
      }
      for (Index c = 0; c < n; ++c) {
        block(r, c) = read_complex(row[static_cast<std::size_t>(c)],
                                   row_where + "[" + std::to_string(c) + "]");
      }
    }
    blocks.push_back(std::move(block));
  }

  std::optional<std::string> name, description;
  if (doc.contains("metadata")) {
    const json& meta = doc["metadata"];
    if (!meta.is_object()) schema_error("metadata", "expected an object");
    allow_only(meta, {"name", "description"}, "metadata.");
    name = read_text(meta, "name");
    description = read_text(meta, "description");
  }
  return FrameSpec{GFrame(n, std::move(blocks)), std::move(name), std::move(description)};
}

std::string serialize_spec(const FrameSpec& spec) {
  json doc;
  doc["hilbert_dim"] = spec.frame.hilbert_dim();
  json blocks = json::array();
  for (const auto& b : spec.frame.blocks()) {
    json mat = json::array();
    for (Index r = 0; r < b.rows(); ++r) {
      json row = json::array();
      for (Index c = 0; c < b.cols(); ++c) row.push_back({b(r, c).real(), b(r, c).imag()});
      mat.push_back(std::move(row));
    }
    blocks.push_back({{"rows", b.rows()}, {"matrix", std::move(mat)}});
  }
  doc["blocks"] = std::move(blocks);
  if (spec.name || spec.description) {
    json meta = json::object();
    if (spec.name) meta["name"] = *spec.name;
    if (spec.description) meta["description"] = *spec.description;
    doc["metadata"] = std::move(meta);
  }
  return doc.dump();
}

}  // namespace gframe
