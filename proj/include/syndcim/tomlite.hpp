// syndcim -- performance-aware DCIM macro compiler
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace syndcim::toml {

/// Minimal TOML subset used by spec files and library manifests:
/// bare-key `key = value` pairs, `[dotted.table]` headers, `#` comments,
/// strings, integers, floats, booleans and flat arrays. No inline tables,
/// arrays of tables, dates or multi-line strings.
struct Value;
using Array = std::vector<Value>;

struct Value {
  std::variant<std::monostate, bool, int64_t, double, std::string, Array> v;

  bool is_bool() const { return std::holds_alternative<bool>(v); }
  bool is_int() const { return std::holds_alternative<int64_t>(v); }
  bool is_float() const { return std::holds_alternative<double>(v); }
  bool is_number() const { return is_int() || is_float(); }
  bool is_string() const { return std::holds_alternative<std::string>(v); }
  bool is_array() const { return std::holds_alternative<Array>(v); }

  bool as_bool() const { return std::get<bool>(v); }
  int64_t as_int() const { return std::get<int64_t>(v); }
  double as_float() const { return is_int() ? double(std::get<int64_t>(v)) : std::get<double>(v); }
  const std::string &as_string() const { return std::get<std::string>(v); }
  const Array &as_array() const { return std::get<Array>(v); }
};

/// Parsed document: flat map from fully qualified dotted key to value,
/// e.g. "cells.full_adder.energy_fj" -> 1.0.
class Document {
public:
  std::map<std::string, Value> entries;

  bool has(const std::string &key) const { return entries.count(key) != 0; }
  const Value *find(const std::string &key) const {
    auto it = entries.find(key);
    return it == entries.end() ? nullptr : &it->second;
  }

  // Typed getters; `require_*` throws MalformedDocument when missing/mistyped.
  int64_t require_int(const std::string &key) const;
  double require_float(const std::string &key) const;
  std::string require_string(const std::string &key) const;
  std::vector<std::string> require_string_array(const std::string &key) const;
  std::vector<double> require_float_array(const std::string &key) const;

  int64_t get_int(const std::string &key, int64_t dflt) const;
  double get_float(const std::string &key, double dflt) const;
  std::string get_string(const std::string &key, const std::string &dflt) const;

  /// Keys directly below `prefix.` (one path segment), sorted, deduplicated.
  std::vector<std::string> children(const std::string &prefix) const;
};

/// Throws SynError(MalformedDocument) on any syntax problem, with a line number.
Document parse(const std::string &text);
Document parse_file(const std::string &path);

} // namespace syndcim::toml
