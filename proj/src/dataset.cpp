// Copyright 2026 The AIF Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "aif/dataset.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace aif::data {

namespace {

using nlohmann::json;

std::string_view kind_name(ValueKind k) {
  return k == ValueKind::binary ? "binary" : "real";
}

ValueKind parse_kind(std::string_view name, std::string_view where) {
  if (name == "binary") return ValueKind::binary;
  if (name == "real") return ValueKind::real;
  throw std::invalid_argument(std::string(where) + ": unknown value_kind '" +
                              std::string(name) + "'");
}

[[noreturn]] void fail_line(std::string_view source, std::size_t line,
                            const std::string& what) {
  throw std::invalid_argument(std::string(source) + ":" + std::to_string(line) +
                              ": " + what);
}

}  // namespace

ValueKind kind_of(const Value& v) {
  return std::holds_alternative<double>(v) ? ValueKind::real : ValueKind::binary;
}

Value Dataset::x_value(std::size_t i) const {
  if (x_kind == ValueKind::real) return x_real[i];
  return x_bits[i];
}

Value Dataset::y_value(std::size_t i) const {
  if (y_kind == ValueKind::real) return y_real[i];
  return y_bits[i];
}

void Dataset::validate() const {
  const std::size_t nx = x_kind == ValueKind::real ? x_real.size() : x_bits.size();
  const std::size_t ny = y_kind == ValueKind::real ? y_real.size() : y_bits.size();
  if (nx != ny) throw std::invalid_argument("dataset: x and y record counts differ");
  if ((x_kind == ValueKind::real && !x_bits.empty()) ||
      (x_kind == ValueKind::binary && !x_real.empty()) ||
      (y_kind == ValueKind::real && !y_bits.empty()) ||
      (y_kind == ValueKind::binary && !y_real.empty())) {
    throw std::invalid_argument("dataset: column storage does not match value kind");
  }
  if (split_n > nx) {
    throw std::invalid_argument("dataset: split_N " + std::to_string(split_n) +
                                " exceeds record count " + std::to_string(nx));
  }
}

DatasetView training_view(const Dataset& d) { return {&d, 0, d.split_n}; }

std::string format_real(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, r.ptr);
}

double parse_real(std::string_view text) {
  double v{};
  const auto r = std::from_chars(text.data(), text.data() + text.size(), v);
  if (r.ec != std::errc{} || r.ptr != text.data() + text.size()) {
    throw std::invalid_argument("not a decimal real: '" + std::string(text) + "'");
  }
  return v;
}

Dataset read_jsonl(std::istream& in, std::string_view source_name) {
  Dataset d;
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) {
    throw std::invalid_argument(std::string(source_name) + ": empty dataset file");
  }
  ++line_no;
  json meta_line;
  try {
    meta_line = json::parse(line);
  } catch (const json::exception& e) {
    fail_line(source_name, line_no, std::string("bad JSON: ") + e.what());
  }
  if (!meta_line.is_object() || !meta_line.contains("meta")) {
    fail_line(source_name, line_no, "first line must be a {\"meta\": ...} object");
  }
  try {
    const json& meta = meta_line["meta"];
    if (meta.contains("value_kind")) {
      const std::string vk = meta["value_kind"].get<std::string>();
      if (vk == "mixed") {
        d.x_kind = parse_kind(meta.at("x_kind").get<std::string>(), source_name);
        d.y_kind = parse_kind(meta.at("y_kind").get<std::string>(), source_name);
      } else {
        d.x_kind = d.y_kind = parse_kind(vk, source_name);
      }
    }
    d.split_n = meta.value("split_N", std::size_t{0});
    for (const auto& [key, value] : meta.items()) {
      if (key == "value_kind" || key == "x_kind" || key == "y_kind" ||
          key == "split_N") {
        continue;
      }
      d.meta[key] = value.is_string() ? value.get<std::string>() : value.dump();
    }
  } catch (const json::exception& e) {
    fail_line(source_name, line_no, std::string("bad meta header: ") + e.what());
  }

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json rec;
    try {
      rec = json::parse(line);
    } catch (const json::exception& e) {
      fail_line(source_name, line_no, std::string("bad JSON: ") + e.what());
    }
    if (!rec.is_object() || !rec.contains("x") || !rec.contains("y") ||
        !rec["x"].is_string() || !rec["y"].is_string()) {
      fail_line(source_name, line_no, "record must be {\"x\": string, \"y\": string}");
    }
    const std::string xs = rec["x"].get<std::string>();
    const std::string ys = rec["y"].get<std::string>();
    try {
      if (d.x_kind == ValueKind::real) {
        d.x_real.push_back(parse_real(xs));
      } else {
        d.x_bits.push_back(BitString::from_string(xs));
      }
      if (d.y_kind == ValueKind::real) {
        d.y_real.push_back(parse_real(ys));
      } else {
        d.y_bits.push_back(BitString::from_string(ys));
      }
    } catch (const std::invalid_argument& e) {
      fail_line(source_name, line_no, e.what());
    }
  }

  try {
    d.validate();
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string(source_name) + ": " + e.what());
  }
  return d;
}

Dataset read_jsonl_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open dataset file: " + path);
  return read_jsonl(in, path);
}

void write_jsonl(const Dataset& d, std::ostream& out) {
  d.validate();
  json meta;
  if (d.x_kind == d.y_kind) {
    meta["value_kind"] = kind_name(d.x_kind);
  } else {
    meta["value_kind"] = "mixed";
    meta["x_kind"] = kind_name(d.x_kind);
    meta["y_kind"] = kind_name(d.y_kind);
  }
  meta["split_N"] = d.split_n;
  for (const auto& [key, value] : d.meta) meta[key] = value;
  out << json{{"meta", meta}}.dump() << '\n';

  const std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i) {
    json rec;
    rec["x"] = d.x_kind == ValueKind::real ? format_real(d.x_real[i])
                                           : d.x_bits[i].to_string();
    rec["y"] = d.y_kind == ValueKind::real ? format_real(d.y_real[i])
                                           : d.y_bits[i].to_string();
    out << rec.dump() << '\n';
  }
}

void write_jsonl_file(const Dataset& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  write_jsonl(d, out);
}

}  // namespace aif::data
