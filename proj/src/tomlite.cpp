// syndcim -- performance-aware DCIM macro compiler
// SPDX-License-Identifier: Apache-2.0

#include "syndcim/tomlite.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "syndcim/errors.hpp"

namespace syndcim::toml {

namespace {

struct Cursor {
  const std::string &s;
  size_t pos = 0;
  int line = 1;

  bool eof() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }
  char get() {
    char c = s[pos++];
    if (c == '\n')
      line++;
    return c;
  }
  void skip_ws() {
    while (!eof() && (peek() == ' ' || peek() == '\t'))
      pos++;
  }
  [[noreturn]] void error(const std::string &msg) const {
    fail(Errc::MalformedDocument, msg + " at line " + std::to_string(line));
  }
};

bool is_bare_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

std::string parse_key_path(Cursor &c) {
  std::string key;
  while (!c.eof()) {
    c.skip_ws();
    if (c.eof() || !is_bare_char(c.peek()))
      c.error("expected key");
    while (!c.eof() && is_bare_char(c.peek()))
      key += c.get();
    c.skip_ws();
    if (!c.eof() && c.peek() == '.') {
      c.get();
      key += '.';
      continue;
    }
    break;
  }
  return key;
}

std::string parse_string(Cursor &c) {
  char quote = c.get(); // " or '
  std::string out;
  while (true) {
    if (c.eof())
      c.error("unterminated string");
    char ch = c.get();
    if (ch == quote)
      break;
    if (ch == '\n')
      c.error("newline in string");
    if (quote == '"' && ch == '\\') {
      if (c.eof())
        c.error("dangling escape");
      char e = c.get();
      switch (e) {
      case 'n': out += '\n'; break;
      case 't': out += '\t'; break;
      case '"': out += '"'; break;
      case '\\': out += '\\'; break;
      default: c.error("unsupported escape");
      }
    } else {
      out += ch;
    }
  }
  return out;
}

Value parse_value(Cursor &c);

Value parse_array(Cursor &c) {
  c.get(); // [
  Array arr;
  while (true) {
    c.skip_ws();
    while (!c.eof() && (c.peek() == '\n' || c.peek() == '\r' || c.peek() == '#')) {
      if (c.peek() == '#') {
        while (!c.eof() && c.peek() != '\n')
          c.get();
      } else {
        c.get();
      }
      c.skip_ws();
    }
    if (c.eof())
      c.error("unterminated array");
    if (c.peek() == ']') {
      c.get();
      break;
    }
    arr.push_back(parse_value(c));
    c.skip_ws();
    while (!c.eof() && (c.peek() == '\n' || c.peek() == '\r')) {
      c.get();
      c.skip_ws();
    }
    if (!c.eof() && c.peek() == ',') {
      c.get();
      continue;
    }
  }
  Value v;
  v.v = std::move(arr);
  return v;
}

Value parse_scalar(Cursor &c) {
  std::string tok;
  while (!c.eof() && c.peek() != '\n' && c.peek() != '#' && c.peek() != ',' && c.peek() != ']') {
    tok += c.get();
  }
  while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t' || tok.back() == '\r'))
    tok.pop_back();
  if (tok.empty())
    c.error("missing value");

  Value v;
  if (tok == "true") {
    v.v = true;
    return v;
  }
  if (tok == "false") {
    v.v = false;
    return v;
  }
  bool looks_float = tok.find_first_of(".eE") != std::string::npos &&
                     tok.find_first_not_of("+-0123456789.eE") == std::string::npos;
  if (!looks_float) {
    int64_t iv = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), iv);
    if (ec == std::errc() && p == tok.data() + tok.size()) {
      v.v = iv;
      return v;
    }
  }
  try {
    size_t consumed = 0;
    double dv = std::stod(tok, &consumed);
    if (consumed == tok.size()) {
      v.v = dv;
      return v;
    }
  } catch (...) {
  }
  c.error("cannot parse value '" + tok + "'");
}

Value parse_value(Cursor &c) {
  c.skip_ws();
  if (c.eof())
    c.error("missing value");
  char ch = c.peek();
  if (ch == '"' || ch == '\'') {
    Value v;
    v.v = parse_string(c);
    return v;
  }
  if (ch == '[')
    return parse_array(c);
  return parse_scalar(c);
}

} // namespace

Document parse(const std::string &text) {
  Document doc;
  Cursor c{text};
  std::string table; // current [table] prefix, "" at top level

  while (!c.eof()) {
    c.skip_ws();
    if (c.eof())
      break;
    char ch = c.peek();
    if (ch == '\n' || ch == '\r') {
      c.get();
      continue;
    }
    if (ch == '#') {
      while (!c.eof() && c.peek() != '\n')
        c.get();
      continue;
    }
    if (ch == '[') {
      c.get();
      if (!c.eof() && c.peek() == '[')
        c.error("arrays of tables are not supported");
      table = parse_key_path(c);
      c.skip_ws();
      if (c.eof() || c.get() != ']')
        c.error("expected ']'");
      continue;
    }
    std::string key = parse_key_path(c);
    c.skip_ws();
    if (c.eof() || c.get() != '=')
      c.error("expected '='");
    Value v = parse_value(c);
    std::string full = table.empty() ? key : table + "." + key;
    if (doc.entries.count(full))
      c.error("duplicate key '" + full + "'");
    doc.entries.emplace(std::move(full), std::move(v));
    c.skip_ws();
    if (!c.eof() && c.peek() == '#') {
      while (!c.eof() && c.peek() != '\n')
        c.get();
    }
    if (!c.eof() && c.peek() != '\n' && c.peek() != '\r')
      c.error("trailing characters after value");
  }
  return doc;
}

Document parse_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    fail(Errc::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

namespace {
[[noreturn]] void missing(const std::string &key) {
  fail(Errc::MalformedDocument, "missing or mistyped key '" + key + "'");
}
} // namespace

int64_t Document::require_int(const std::string &key) const {
  const Value *v = find(key);
  if (!v || !v->is_int())
    missing(key);
  return v->as_int();
}

double Document::require_float(const std::string &key) const {
  const Value *v = find(key);
  if (!v || !v->is_number())
    missing(key);
  return v->as_float();
}

std::string Document::require_string(const std::string &key) const {
  const Value *v = find(key);
  if (!v || !v->is_string())
    missing(key);
  return v->as_string();
}

std::vector<std::string> Document::require_string_array(const std::string &key) const {
  const Value *v = find(key);
  if (!v || !v->is_array())
    missing(key);
  std::vector<std::string> out;
  for (const Value &e : v->as_array()) {
    if (!e.is_string())
      missing(key);
    out.push_back(e.as_string());
  }
  return out;
}

std::vector<double> Document::require_float_array(const std::string &key) const {
  const Value *v = find(key);
  if (!v || !v->is_array())
    missing(key);
  std::vector<double> out;
  for (const Value &e : v->as_array()) {
    if (!e.is_number())
      missing(key);
    out.push_back(e.as_float());
  }
  return out;
}

int64_t Document::get_int(const std::string &key, int64_t dflt) const {
  const Value *v = find(key);
  return v && v->is_int() ? v->as_int() : dflt;
}

double Document::get_float(const std::string &key, double dflt) const {
  const Value *v = find(key);
  return v && v->is_number() ? v->as_float() : dflt;
}

std::string Document::get_string(const std::string &key, const std::string &dflt) const {
  const Value *v = find(key);
  return v && v->is_string() ? v->as_string() : dflt;
}

std::vector<std::string> Document::children(const std::string &prefix) const {
  std::vector<std::string> out;
  std::string p = prefix + ".";
  for (const auto &[k, v] : entries) {
    if (k.rfind(p, 0) != 0)
      continue;
    std::string rest = k.substr(p.size());
    size_t dot = rest.find('.');
    std::string child = dot == std::string::npos ? rest : rest.substr(0, dot);
    if (out.empty() || out.back() != child)
      out.push_back(child);
  }
  return out;
}

} // namespace syndcim::toml

namespace syndcim {

const char *errc_name(Errc c) {
  switch (c) {
  case Errc::MalformedDocument: return "MalformedDocument";
  case Errc::InvalidSpec: return "InvalidSpec";
  case Errc::MissingKind: return "MissingKind";
  case Errc::DuplicateKey: return "DuplicateKey";
  case Errc::NegativeValue: return "NegativeValue";
  case Errc::ManifestSyntax: return "ManifestSyntax";
  case Errc::OutOfRange: return "OutOfRange";
  case Errc::Incompatible: return "Incompatible";
  case Errc::BudgetInfeasible: return "BudgetInfeasible";
  case Errc::NoSlack: return "NoSlack";
  case Errc::AlreadyRetimed: return "AlreadyRetimed";
  case Errc::MinHeightReached: return "MinHeightReached";
  case Errc::EmptyFrontier: return "EmptyFrontier";
  case Errc::UnsupportedPrecision: return "UnsupportedPrecision";
  case Errc::DimensionMismatch: return "DimensionMismatch";
  case Errc::BadGrouping: return "BadGrouping";
  case Errc::NonFiniteInput: return "NonFiniteInput";
  case Errc::CombinationalLoop: return "CombinationalLoop";
  case Errc::UndrivenNet: return "UndrivenNet";
  case Errc::UnboundBlock: return "UnboundBlock";
  case Errc::UnknownDesignId: return "UnknownDesignId";
  case Errc::VerificationMismatch: return "VerificationMismatch";
  case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

} // namespace syndcim
