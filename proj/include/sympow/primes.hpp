#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ideal.hpp"

namespace sympow {

/// P_F = (x_i : i in F), F a nonempty 0-based index set.
struct MonomialPrime {
  std::vector<int> support; // sorted, nonempty

  bool operator==(const MonomialPrime& o) const { return support == o.support; }
  bool operator<(const MonomialPrime& o) const { return support < o.support; }
};

inline MonomialPrime make_prime(std::vector<int> support) {
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  if (support.empty()) throw domain_error("empty prime support");
  return MonomialPrime{std::move(support)};
}

inline MonomialIdeal prime_ideal(const MonomialPrime& P, int n) {
  std::vector<Monomial> gens;
  for (int i : P.support) {
    if (i < 0 || i >= n) throw structural_error("prime support out of range");
    gens.push_back(Monomial::variable(n, i));
  }
  return MonomialIdeal::make(n, std::move(gens));
}

/// An irreducible monomial ideal (x_i^{e_i} : i in dom), kept as a partial
/// map. Carrier for the decomposition algorithm; its radical is a prime.
struct IrreducibleComponent {
  std::map<int, Exponent> entries; // i -> e_i >= 1

  bool operator==(const IrreducibleComponent& o) const { return entries == o.entries; }
  bool operator<(const IrreducibleComponent& o) const { return entries < o.entries; }
};

inline MonomialIdeal component_ideal(const IrreducibleComponent& C, int n) {
  std::vector<Monomial> gens;
  for (auto [i, e] : C.entries) gens.push_back(Monomial::variable(n, i, e));
  return MonomialIdeal::make(n, std::move(gens));
}

namespace detail {

inline void decompose_rec(const MonomialIdeal& I, std::set<IrreducibleComponent>& out) {
  // Find a generator with at least two support variables and split it into
  // two coprime parts; pure-power generator sets are the base case.
  for (const Monomial& g : I.gens()) {
    std::vector<int> supp = g.support();
    if (supp.size() < 2) continue;
    int i = supp[0];
    Monomial v = Monomial::variable(I.vars(), i, g.deg(i));
    Monomial w = div(g, v);
    decompose_rec(add(I, principal(v)), out);
    decompose_rec(add(I, principal(w)), out);
    return;
  }
  IrreducibleComponent C;
  for (const Monomial& g : I.gens()) {
    int i = g.support().at(0);
    C.entries[i] = g.deg(i);
  }
  out.insert(C);
}

} // namespace detail

/// Irredundant irreducible decomposition of a proper nonzero monomial ideal.
/// Components come out in deterministic (map-key) order.
inline std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& I) {
  if (I.is_zero() || I.is_unit())
    throw domain_error("decomposition of zero or unit ideal");
  std::set<IrreducibleComponent> comps;
  detail::decompose_rec(I, comps);
  // Irredundancy: an irreducible monomial ideal contains an intersection of
  // monomial ideals only by containing one of them, so pairwise containment
  // filtering is enough.
  std::vector<IrreducibleComponent> all(comps.begin(), comps.end());
  std::vector<MonomialIdeal> ideals;
  ideals.reserve(all.size());
  for (const auto& C : all) ideals.push_back(component_ideal(C, I.vars()));
  std::vector<IrreducibleComponent> kept;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (i == j) continue;
      if (contains(ideals[i], ideals[j])) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(all[i]);
  }
  return kept;
}

inline std::vector<MonomialPrime> associated_primes(const MonomialIdeal& I) {
  std::set<MonomialPrime> primes;
  for (const auto& C : irreducible_decomposition(I)) {
    std::vector<int> supp;
    for (auto [i, e] : C.entries) supp.push_back(i);
    primes.insert(MonomialPrime{std::move(supp)});
  }
  return {primes.begin(), primes.end()};
}

/// Monomial localization I(P): substitute x_i -> 1 for x_i outside P.
/// The result lives in the same ambient ring.
inline MonomialIdeal localize(const MonomialIdeal& I, const MonomialPrime& P) {
  std::vector<Monomial> gens;
  gens.reserve(I.gens().size());
  for (const Monomial& g : I.gens()) gens.push_back(restrict_to(g, P.support));
  return MonomialIdeal::make(I.vars(), std::move(gens));
}

inline int height(const MonomialIdeal& I) {
  if (I.is_zero() || I.is_unit()) throw domain_error("height of zero or unit ideal");
  std::size_t h = static_cast<std::size_t>(I.vars()) + 1;
  for (const MonomialPrime& P : associated_primes(I)) h = std::min(h, P.support.size());
  return static_cast<int>(h);
}

/// P_F^c as an ideal: all monomials of degree c on F.
inline MonomialIdeal prime_power(const MonomialPrime& P, int c, int n) {
  std::vector<Monomial> gens;
  std::vector<Exponent> cur(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int rem) {
    if (idx + 1 == P.support.size()) {
      cur[P.support[idx]] = rem;
      gens.push_back(Monomial(cur));
      cur[P.support[idx]] = 0;
      return;
    }
    for (int e = 0; e <= rem; ++e) {
      cur[P.support[idx]] = e;
      rec(idx + 1, rem - e);
    }
    cur[P.support[idx]] = 0;
  };
  rec(0, c);
  return MonomialIdeal::make(n, std::move(gens));
}

/// Minimal generators of an intersection of prime powers, found by scanning
/// the exponent box: a monomial lies in P_F^c iff its F-degree is >= c, so
/// the intersection's minimal generators are the vectors where every
/// coordinate decrease breaks some inequality. Far cheaper than iterated
/// pairwise lcm for many factors.
inline MonomialIdeal intersect_prime_powers(
    const std::vector<std::pair<MonomialPrime, int>>& factors, int n,
    long long cell_cap = 50'000'000) {
  if (factors.empty()) return MonomialIdeal::unit(n);
  std::vector<Exponent> box(n, 0);
  for (const auto& [P, c] : factors)
    for (int i : P.support) box[i] = std::max(box[i], static_cast<Exponent>(c));
  long long cells = 1;
  for (int i = 0; i < n; ++i) {
    cells *= box[i] + 1;
    if (cells > cell_cap) throw resource_error("prime-power intersection box too large");
  }
  std::vector<Monomial> gens;
  std::vector<Exponent> cur(n, 0);
  std::vector<long long> sums(factors.size(), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      // cover check + minimality in one pass
      for (std::size_t f = 0; f < factors.size(); ++f)
        if (sums[f] < factors[f].second) return;
      for (int v = 0; v < n; ++v) {
        if (cur[v] == 0) continue;
        bool breaks = false;
        for (std::size_t f = 0; f < factors.size(); ++f) {
          const auto& F = factors[f].first.support;
          if (std::binary_search(F.begin(), F.end(), v) &&
              sums[f] - 1 < factors[f].second) {
            breaks = true;
            break;
          }
        }
        if (!breaks) return; // lowering x_v keeps it inside: not minimal
      }
      gens.push_back(Monomial(cur));
      return;
    }
    for (Exponent e = 0; e <= box[i]; ++e) {
      cur[i] = e;
      if (e > 0)
        for (std::size_t f = 0; f < factors.size(); ++f) {
          const auto& F = factors[f].first.support;
          if (std::binary_search(F.begin(), F.end(), i)) sums[f] += 1;
        }
      rec(i + 1);
    }
    for (std::size_t f = 0; f < factors.size(); ++f) {
      const auto& F = factors[f].first.support;
      if (std::binary_search(F.begin(), F.end(), i)) sums[f] -= box[i];
    }
    cur[i] = 0;
  };
  rec(0);
  return MonomialIdeal::make(n, std::move(gens));
}

/// If I equals the intersection of powers of its pairwise-incomparable
/// associated primes, return the (P_i, k_i) list; otherwise nullopt.
inline std::optional<std::vector<std::pair<MonomialPrime, int>>>
is_minimal_intersection_type(const MonomialIdeal& I) {
  if (I.is_zero() || I.is_unit())
    throw domain_error("intersection type of zero or unit ideal");
  std::vector<MonomialPrime> ass = associated_primes(I);
  for (std::size_t i = 0; i < ass.size(); ++i)
    for (std::size_t j = 0; j < ass.size(); ++j) {
      if (i == j) continue;
      if (std::includes(ass[j].support.begin(), ass[j].support.end(),
                        ass[i].support.begin(), ass[i].support.end()))
        return std::nullopt; // embedded prime
    }
  std::vector<std::pair<MonomialPrime, int>> fit;
  for (const MonomialPrime& P : ass) {
    // Largest k with I subseteq P^k equals the least F-degree of a generator,
    // i.e. alpha of the monomial localization.
    MonomialIdeal loc = localize(I, P);
    if (loc.is_unit()) return std::nullopt;
    fit.emplace_back(P, loc.alpha());
  }
  if (intersect_prime_powers(fit, I.vars()) != I) return std::nullopt;
  return fit;
}

} // namespace sympow
