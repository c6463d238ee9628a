#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "errors.hpp"

namespace sympow {

using Exponent = int;

inline Exponent checked_add(Exponent a, Exponent b) {
  long long s = static_cast<long long>(a) + static_cast<long long>(b);
  if (s > std::numeric_limits<Exponent>::max())
    throw structural_error("exponent overflow");
  return static_cast<Exponent>(s);
}

/// A monomial x_1^{a_1} ... x_n^{a_n}, stored as its exponent vector.
/// Variable indices are 0-based internally; the text format is 1-based.
class Monomial {
public:
  Monomial() = default;

  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
    for (Exponent e : exps_)
      if (e < 0) throw structural_error("negative exponent");
  }

  static Monomial one(int n) { return Monomial(std::vector<Exponent>(n, 0)); }

  static Monomial variable(int n, int i, Exponent e = 1) {
    std::vector<Exponent> v(n, 0);
    v.at(i) = e;
    return Monomial(std::move(v));
  }

  int vars() const { return static_cast<int>(exps_.size()); }

  Exponent deg(int i) const { return exps_[i]; }

  const std::vector<Exponent>& exponents() const { return exps_; }

  int degree() const {
    long long d = 0;
    for (Exponent e : exps_) d += e;
    return static_cast<int>(d);
  }

  std::vector<int> support() const {
    std::vector<int> s;
    for (int i = 0; i < vars(); ++i)
      if (exps_[i] > 0) s.push_back(i);
    return s;
  }

  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
  }

  bool is_squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
  }

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }

private:
  std::vector<Exponent> exps_;
};

inline void require_same_vars(const Monomial& a, const Monomial& b) {
  if (a.vars() != b.vars())
    throw structural_error("mismatched exponent-vector lengths");
}

inline bool divides(const Monomial& a, const Monomial& b) {
  require_same_vars(a, b);
  for (int i = 0; i < a.vars(); ++i)
    if (a.deg(i) > b.deg(i)) return false;
  return true;
}

inline Monomial mul(const Monomial& a, const Monomial& b) {
  require_same_vars(a, b);
  std::vector<Exponent> v(a.vars());
  for (int i = 0; i < a.vars(); ++i) v[i] = checked_add(a.deg(i), b.deg(i));
  return Monomial(std::move(v));
}

/// b / a, assuming a | b.
inline Monomial div(const Monomial& b, const Monomial& a) {
  require_same_vars(a, b);
  std::vector<Exponent> v(a.vars());
  for (int i = 0; i < a.vars(); ++i) {
    v[i] = b.deg(i) - a.deg(i);
    if (v[i] < 0) throw structural_error("inexact monomial division");
  }
  return Monomial(std::move(v));
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_vars(a, b);
  std::vector<Exponent> v(a.vars());
  for (int i = 0; i < a.vars(); ++i) v[i] = std::max(a.deg(i), b.deg(i));
  return Monomial(std::move(v));
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_vars(a, b);
  std::vector<Exponent> v(a.vars());
  for (int i = 0; i < a.vars(); ++i) v[i] = std::min(a.deg(i), b.deg(i));
  return Monomial(std::move(v));
}

inline Monomial pow(const Monomial& a, int k) {
  std::vector<Exponent> v(a.vars());
  for (int i = 0; i < a.vars(); ++i) {
    long long e = static_cast<long long>(a.deg(i)) * k;
    if (e > std::numeric_limits<Exponent>::max())
      throw structural_error("exponent overflow");
    v[i] = static_cast<Exponent>(e);
  }
  return Monomial(std::move(v));
}

/// Restriction u_F: keep exponents at indices in keep, zero elsewhere.
inline Monomial restrict_to(const Monomial& a, const std::vector<int>& keep) {
  std::vector<Exponent> v(a.vars(), 0);
  for (int i : keep) v[i] = a.deg(i);
  return Monomial(std::move(v));
}

/// Lex order induced by x_1 > x_2 > ... > x_n.
inline bool lex_greater(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.vars(); ++i) {
    if (a.deg(i) != b.deg(i)) return a.deg(i) > b.deg(i);
  }
  return false;
}

/// Canonical generator order: degree ascending, ties broken by putting the
/// lex-larger monomial first. Within one degree this reproduces the usual
/// descending-lex generator listings.
inline bool canonical_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return lex_greater(a, b);
}

} // namespace sympow
