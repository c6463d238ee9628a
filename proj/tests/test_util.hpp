#pragma once

#include <random>
#include <vector>

#include <sympow/sympow.hpp>

namespace testutil {

using namespace sympow;

inline MonomialIdeal ideal(const char* text, int n = -1) { return parse_ideal(text, n); }

inline Monomial mono(std::vector<Exponent> e) { return Monomial(std::move(e)); }

/// All monomials of total degree <= d, the membership-oracle box.
inline std::vector<Monomial> degree_box(int n, int d) {
  std::vector<Monomial> out;
  for (int k = 0; k <= d; ++k)
    for_each_monomial_of_degree(n, k, [&](const Monomial& m) { out.push_back(m); });
  return out;
}

inline Monomial random_monomial(std::mt19937_64& rng, int n, int max_exp) {
  std::uniform_int_distribution<int> dist(0, max_exp);
  std::vector<Exponent> e(n);
  for (int i = 0; i < n; ++i) e[i] = dist(rng);
  return Monomial(e);
}

/// Random nonzero proper monomial ideal with small exponents.
inline MonomialIdeal random_ideal(std::mt19937_64& rng, int n, int max_gens, int max_exp) {
  std::uniform_int_distribution<int> count(1, max_gens);
  while (true) {
    std::vector<Monomial> gens;
    int c = count(rng);
    for (int t = 0; t < c; ++t) {
      Monomial m = random_monomial(rng, n, max_exp);
      if (!m.is_one()) gens.push_back(m);
    }
    MonomialIdeal I = MonomialIdeal::make(n, gens);
    if (!I.is_zero() && !I.is_unit()) return I;
  }
}

inline MonomialIdeal random_squarefree_ideal(std::mt19937_64& rng, int n, int max_gens) {
  while (true) {
    MonomialIdeal I = random_ideal(rng, n, max_gens, 1);
    if (!I.is_zero() && !I.is_unit()) return I;
  }
}

} // namespace testutil
