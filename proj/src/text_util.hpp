#pragma once

// Tokenizing helpers shared by the text-format parsers.

#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "kirby/intmat.hpp"

namespace kirby::detail {

inline bool is_integer_token(std::string_view tok) {
  std::size_t i = 0;
  if (!tok.empty() && (tok[0] == '+' || tok[0] == '-')) i = 1;
  if (i == tok.size()) return false;
  for (; i < tok.size(); ++i)
    if (tok[i] < '0' || tok[i] > '9') return false;
  return true;
}

inline Integer parse_integer(std::string_view tok, std::string_view what) {
  if (!is_integer_token(tok)) {
    throw KirbyError("expected integer for " + std::string(what) + ", got '" + std::string(tok) + "'");
  }
  std::string s(tok);
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

inline Integer read_integer(std::istream& in, std::string_view what) {
  std::string tok;
  if (!(in >> tok)) throw KirbyError("unexpected end of input reading " + std::string(what));
  return parse_integer(tok, what);
}

inline long to_long(const Integer& x, std::string_view what) {
  if (!x.fits_slong_p()) throw KirbyError(std::string(what) + " out of range");
  return x.get_si();
}

inline std::size_t to_count(const Integer& x, std::string_view what) {
  if (x < 0 || !x.fits_ulong_p()) throw KirbyError(std::string(what) + " must be a non-negative count");
  return x.get_ui();
}

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

/// Non-empty, non-comment lines with their 1-based line numbers.
struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

inline std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  std::size_t no = 0;
  while (std::getline(in, raw)) {
    ++no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    auto toks = split_ws(raw);
    if (toks.empty() || toks[0][0] == '#') continue;
    out.push_back({no, std::move(toks)});
  }
  return out;
}

/// Value of a `key=value` token; throws if the key does not match.
inline std::string kv_value(const std::string& tok, std::string_view key) {
  const std::string prefix = std::string(key) + "=";
  if (tok.rfind(prefix, 0) != 0) {
    throw KirbyError("expected '" + prefix + "...', got '" + tok + "'");
  }
  return tok.substr(prefix.size());
}

inline std::size_t kv_count(const std::string& tok, std::string_view key) {
  return to_count(parse_integer(kv_value(tok, key), key), key);
}

[[noreturn]] inline void fail_at(const Line& line, const std::string& msg) {
  throw KirbyError("line " + std::to_string(line.number) + ": " + msg);
}

}  // namespace kirby::detail
