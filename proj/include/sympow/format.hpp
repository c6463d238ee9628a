#pragma once

#include <cctype>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ideal.hpp"

namespace sympow {

inline std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < m.vars(); ++i) {
    if (m.deg(i) == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'x' << (i + 1);
    if (m.deg(i) > 1) os << '^' << m.deg(i);
  }
  return os.str();
}

inline std::string to_string(const MonomialIdeal& I) {
  if (I.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Monomial& g : I.gens()) {
    if (!first) os << ',';
    first = false;
    os << to_string(g);
  }
  return os.str();
}

namespace detail {

inline void skip_ws(const std::string& s, std::size_t& p) {
  while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
}

inline long parse_int(const std::string& s, std::size_t& p) {
  skip_ws(s, p);
  std::size_t start = p;
  while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
  if (p == start) throw structural_error("expected integer in ideal text");
  return std::stol(s.substr(start, p - start));
}

} // namespace detail

/// Parse the ideal text grammar. Generators are separated by ','; a monomial
/// is a '*'-separated list of factors x<i> or x<i>^<e>; whitespace is
/// ignored; "0" is the zero ideal and "1" the unit ideal. When n < 0 the
/// ambient variable count is inferred as the largest index that occurs.
inline MonomialIdeal parse_ideal(const std::string& text, int n = -1) {
  using detail::skip_ws;
  // First pass to find the largest variable index when n is inferred.
  if (n < 0) {
    int max_idx = 0;
    for (std::size_t p = 0; p < text.size(); ++p) {
      if (text[p] == 'x') {
        std::size_t q = p + 1;
        long idx = detail::parse_int(text, q);
        max_idx = std::max(max_idx, static_cast<int>(idx));
      }
    }
    n = max_idx;
  }

  std::vector<Monomial> gens;
  std::size_t p = 0;
  skip_ws(text, p);
  if (p >= text.size()) throw structural_error("empty ideal text");
  while (true) {
    skip_ws(text, p);
    std::vector<Exponent> exps(n, 0);
    bool is_zero_token = false;
    // One generator: "0", "1", or factors joined by '*'.
    while (true) {
      skip_ws(text, p);
      if (p < text.size() && (text[p] == '0' || text[p] == '1')) {
        is_zero_token = (text[p] == '0');
        ++p;
      } else if (p < text.size() && text[p] == 'x') {
        ++p;
        long idx = detail::parse_int(text, p);
        if (idx < 1 || idx > n) throw structural_error("variable index out of range");
        long e = 1;
        skip_ws(text, p);
        if (p < text.size() && text[p] == '^') {
          ++p;
          e = detail::parse_int(text, p);
          if (e < 0) throw structural_error("negative exponent");
        }
        exps[idx - 1] = checked_add(exps[idx - 1], static_cast<Exponent>(e));
      } else {
        throw structural_error("unexpected character in ideal text");
      }
      skip_ws(text, p);
      if (p < text.size() && text[p] == '*') { ++p; continue; }
      break;
    }
    if (!is_zero_token) gens.push_back(Monomial(exps));
    skip_ws(text, p);
    if (p < text.size() && text[p] == ',') { ++p; continue; }
    break;
  }
  if (p != text.size()) throw structural_error("trailing characters in ideal text");
  return MonomialIdeal::make(n, std::move(gens));
}

inline nlohmann::json to_json(const MonomialIdeal& I) {
  nlohmann::json j;
  j["n"] = I.vars();
  auto arr = nlohmann::json::array();
  for (const Monomial& g : I.gens()) arr.push_back(g.exponents());
  j["gens"] = std::move(arr);
  return j;
}

inline MonomialIdeal ideal_from_json(const nlohmann::json& j) {
  int n = j.at("n").get<int>();
  std::vector<Monomial> gens;
  for (const auto& v : j.at("gens"))
    gens.push_back(Monomial(v.get<std::vector<Exponent>>()));
  return MonomialIdeal::make(n, std::move(gens));
}

} // namespace sympow
