#pragma once

#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "primes.hpp"

namespace sympow {

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = parent[find(b)]; }
};

} // namespace detail

/// Try to factor I as a product of ideals with pairwise disjoint supports.
/// Two variables are forced into the same factor whenever their pair of
/// exponent columns is not a full product set; the resulting partition is
/// verified by multiplying the candidate factors back together. Returns
/// {I} when no nontrivial verified factorization exists.
inline std::vector<MonomialIdeal> disjoint_product_factors(const MonomialIdeal& I) {
  std::vector<int> supp = I.support();
  if (supp.size() < 2 || I.num_gens() < 2) return {I};
  detail::UnionFind uf(I.vars());
  for (std::size_t a = 0; a < supp.size(); ++a)
    for (std::size_t b = a + 1; b < supp.size(); ++b) {
      int i = supp[a], j = supp[b];
      std::set<Exponent> mi, mj;
      std::set<std::pair<Exponent, Exponent>> pairs;
      for (const Monomial& g : I.gens()) {
        mi.insert(g.deg(i));
        mj.insert(g.deg(j));
        pairs.insert({g.deg(i), g.deg(j)});
      }
      if (pairs.size() < mi.size() * mj.size()) uf.unite(i, j);
    }
  std::map<int, std::vector<int>> blocks;
  for (int i : supp) blocks[uf.find(i)].push_back(i);
  if (blocks.size() < 2) return {I};
  std::vector<MonomialIdeal> factors;
  MonomialIdeal product = MonomialIdeal::unit(I.vars());
  for (const auto& [root, vars] : blocks) {
    std::vector<Monomial> gens;
    for (const Monomial& g : I.gens()) gens.push_back(restrict_to(g, vars));
    MonomialIdeal F = MonomialIdeal::make(I.vars(), std::move(gens));
    factors.push_back(F);
    product = multiply(product, F);
  }
  if (product != I) return {I};
  return factors;
}

namespace detail {

/// I^{(k)} straight from the definition: intersect (I(P))^k over Ass(I).
/// Folding order is smallest-first to bound intermediate blowup.
inline MonomialIdeal symbolic_power_naive(const MonomialIdeal& I, int k) {
  std::vector<MonomialIdeal> pieces;
  for (const MonomialPrime& P : associated_primes(I))
    pieces.push_back(power(localize(I, P), k));
  std::sort(pieces.begin(), pieces.end(),
            [](const MonomialIdeal& a, const MonomialIdeal& b) {
              return a.num_gens() < b.num_gens();
            });
  MonomialIdeal acc = pieces.front();
  for (std::size_t i = 1; i < pieces.size(); ++i) acc = intersect(acc, pieces[i]);
  return acc;
}

/// Symbolic power of a factor with gcd 1, after disjoint splitting.
inline MonomialIdeal symbolic_power_core(const MonomialIdeal& F, int k) {
  if (F.is_unit()) return F;
  std::vector<MonomialPrime> ass = associated_primes(F);
  // If the support prime is associated, symbolic and ordinary powers agree.
  std::vector<int> supp = F.support();
  for (const MonomialPrime& P : ass)
    if (P.support == supp) return power(F, k);
  // Minimal intersection type: I^{(k)} is the intersection of P_i^{k*k_i}.
  bool embedded = false;
  for (std::size_t i = 0; i < ass.size() && !embedded; ++i)
    for (std::size_t j = 0; j < ass.size(); ++j) {
      if (i == j) continue;
      if (std::includes(ass[j].support.begin(), ass[j].support.end(),
                        ass[i].support.begin(), ass[i].support.end())) {
        embedded = true;
        break;
      }
    }
  if (!embedded) {
    std::vector<std::pair<MonomialPrime, int>> fit;
    for (const MonomialPrime& P : ass) {
      MonomialIdeal loc = localize(F, P);
      fit.emplace_back(P, loc.alpha());
    }
    if (intersect_prime_powers(fit, F.vars()) == F) {
      for (auto& [P, c] : fit) c *= k;
      return intersect_prime_powers(fit, F.vars());
    }
  }
  // Generic path.
  std::vector<MonomialIdeal> pieces;
  for (const MonomialPrime& P : ass) pieces.push_back(power(localize(F, P), k));
  std::sort(pieces.begin(), pieces.end(),
            [](const MonomialIdeal& a, const MonomialIdeal& b) {
              return a.num_gens() < b.num_gens();
            });
  MonomialIdeal acc = pieces.front();
  for (std::size_t i = 1; i < pieces.size(); ++i) acc = intersect(acc, pieces[i]);
  return acc;
}

} // namespace detail

struct SymbolicOptions {
  bool naive = false; // skip every shortcut and use the Ass-intersection definition
};

/// k-th symbolic power of a proper nonzero monomial ideal: intersection of
/// the contracted powers over all associated primes. The default pipeline
/// peels off the gcd, splits disjoint-support products, short-circuits
/// ideals whose support prime is associated, and uses the prime-power
/// intersection when I has minimal intersection type.
inline MonomialIdeal symbolic_power(const MonomialIdeal& I, int k,
                                    const SymbolicOptions& opts = {}) {
  if (I.is_zero() || I.is_unit())
    throw domain_error("symbolic power of zero or unit ideal");
  if (k < 1) throw domain_error("symbolic power needs k >= 1");
  if (opts.naive) return detail::symbolic_power_naive(I, k);
  auto [u, J] = gcd_factor(I);
  MonomialIdeal result = MonomialIdeal::unit(I.vars());
  if (!J.is_unit()) {
    for (const MonomialIdeal& F : disjoint_product_factors(J))
      result = multiply(result, detail::symbolic_power_core(F, k));
  }
  if (!u.is_one()) result = scale(pow(u, k), result);
  return result;
}

/// Per-k comparison of symbolic and ordinary powers up to k_max.
inline std::vector<std::pair<int, bool>> powers_coincide(const MonomialIdeal& I, int k_max,
                                                         const SymbolicOptions& opts = {}) {
  if (I.is_zero() || I.is_unit())
    throw domain_error("power comparison of zero or unit ideal");
  std::vector<std::pair<int, bool>> out;
  MonomialIdeal ordinary = I;
  for (int k = 1; k <= k_max; ++k) {
    if (k > 1) ordinary = multiply(ordinary, I);
    out.emplace_back(k, symbolic_power(I, k, opts) == ordinary);
  }
  return out;
}

/// Degrees ell with beta_{0,ell}(I^{(k)}) != 0.
inline std::vector<int> generator_degree_set(const MonomialIdeal& I, int k,
                                             const SymbolicOptions& opts = {}) {
  std::set<int> degs;
  MonomialIdeal S = symbolic_power(I, k, opts);
  for (const Monomial& g : S.gens()) degs.insert(g.degree());
  return {degs.begin(), degs.end()};
}

struct SymbolicPowerReport {
  int k = 0;
  MonomialIdeal generators;
  std::vector<int> degrees; // sorted multiset of generator degrees
  int alpha = 0;
  int omega = 0;
  bool equals_ordinary = false;
};

inline SymbolicPowerReport symbolic_power_report(const MonomialIdeal& I, int k,
                                                 const SymbolicOptions& opts = {}) {
  SymbolicPowerReport r;
  r.k = k;
  r.generators = symbolic_power(I, k, opts);
  for (const Monomial& g : r.generators.gens()) r.degrees.push_back(g.degree());
  std::sort(r.degrees.begin(), r.degrees.end());
  r.alpha = r.generators.alpha();
  r.omega = r.generators.omega();
  r.equals_ordinary = (r.generators == power(I, k));
  return r;
}

} // namespace sympow
