#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "primes.hpp"
#include "symbolic.hpp"

namespace sympow {

/// Weighted simplicial complex (Delta(I), w): facets are the supports of the
/// primes in the minimal intersection decomposition, weighted by the k_i.
struct WeightedComplex {
  int n = 0;
  std::vector<std::vector<int>> facets; // sorted index sets, antichain
  std::vector<int> weights;             // positive, parallel to facets
};

/// A k-cover: sum over every facet F of a_i, i in F, is at least k * w(F).
struct Cover {
  std::vector<Exponent> a;
  int k = 0;

  bool operator==(const Cover& o) const { return k == o.k && a == o.a; }
};

inline WeightedComplex weighted_complex(const MonomialIdeal& I) {
  auto fit = is_minimal_intersection_type(I);
  if (!fit) throw domain_error("ideal is not of minimal intersection type");
  WeightedComplex W;
  W.n = I.vars();
  for (const auto& [P, c] : *fit) {
    W.facets.push_back(P.support);
    W.weights.push_back(c);
  }
  return W;
}

inline bool is_cover(const WeightedComplex& W, const std::vector<Exponent>& a, int k) {
  for (std::size_t f = 0; f < W.facets.size(); ++f) {
    long long s = 0;
    for (int i : W.facets[f]) s += a[i];
    if (s < static_cast<long long>(k) * W.weights[f]) return false;
  }
  return true;
}

namespace detail {

/// All minimal k-covers: box enumeration with the per-variable bound
/// a_i <= k * max weight over facets containing i (larger entries are never
/// minimal).
inline std::vector<std::vector<Exponent>> minimal_covers(const WeightedComplex& W, int k,
                                                         long long cell_cap) {
  std::vector<Exponent> box(W.n, 0);
  for (std::size_t f = 0; f < W.facets.size(); ++f)
    for (int i : W.facets[f])
      box[i] = std::max<Exponent>(box[i], k * W.weights[f]);
  long long cells = 1;
  for (int i = 0; i < W.n; ++i) {
    cells *= box[i] + 1;
    if (cells > cell_cap) throw resource_error("cover candidate box too large");
  }
  std::vector<std::vector<Exponent>> out;
  std::vector<Exponent> cur(W.n, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == W.n) {
      if (!is_cover(W, cur, k)) return;
      for (int v = 0; v < W.n; ++v) {
        if (cur[v] == 0) continue;
        cur[v] -= 1;
        bool still = is_cover(W, cur, k);
        cur[v] += 1;
        if (still) return; // not minimal
      }
      out.push_back(cur);
      return;
    }
    for (Exponent e = 0; e <= box[i]; ++e) {
      cur[i] = e;
      rec(i + 1);
    }
    cur[i] = 0;
  };
  rec(0);
  return out;
}

inline bool leq(const std::vector<Exponent>& a, const std::vector<Exponent>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// A minimal k-cover splits as a sum of covers of orders k' + k'' = k with
/// k', k'' >= 1 iff it splits with the k'-part shrunk to a minimal k'-cover.
inline bool decomposes(const WeightedComplex& W, const std::vector<Exponent>& a, int k,
                       const std::vector<std::vector<std::vector<Exponent>>>& minimal_by_k) {
  std::vector<Exponent> rest(a.size());
  for (int k1 = 1; k1 < k; ++k1) {
    for (const auto& b : minimal_by_k[k1]) {
      if (!leq(b, a)) continue;
      for (std::size_t i = 0; i < a.size(); ++i) rest[i] = a[i] - b[i];
      if (is_cover(W, rest, k - k1)) return true;
    }
  }
  return false;
}

} // namespace detail

/// Indecomposable k-covers for 1 <= k <= k_max. Candidates are the minimal
/// covers per order (a non-minimal cover always splits off a 0-cover), and a
/// candidate survives iff it admits no split against the lower-order lists.
inline std::vector<Cover> indecomposable_covers(const WeightedComplex& W, int k_max,
                                                long long cell_cap = 50'000'000) {
  if (k_max < 1) throw domain_error("k_max must be positive");
  std::vector<std::vector<std::vector<Exponent>>> minimal_by_k(k_max + 1);
  for (int k = 1; k <= k_max; ++k) minimal_by_k[k] = detail::minimal_covers(W, k, cell_cap);
  std::vector<Cover> out;
  for (int k = 1; k <= k_max; ++k)
    for (const auto& a : minimal_by_k[k])
      if (!detail::decomposes(W, a, k, minimal_by_k)) out.push_back({a, k});
  return out;
}

/// Generators u t^q of the symbolic Rees algebra above the ambient
/// variables, sorted by the generator order: higher t-order first, ties by
/// descending lex on the monomial. `stable` records that every candidate at
/// k_max + 1 decomposes (a heuristic completeness certificate, not a proof).
struct ReesGenerators {
  WeightedComplex complex;
  std::vector<std::pair<Monomial, int>> generators;
  bool stable = false;
};

inline ReesGenerators rees_generators(const MonomialIdeal& I, int k_max,
                                      long long cell_cap = 50'000'000) {
  ReesGenerators R;
  R.complex = weighted_complex(I);
  std::vector<std::vector<std::vector<Exponent>>> minimal_by_k(k_max + 2);
  for (int k = 1; k <= k_max + 1; ++k)
    minimal_by_k[k] = detail::minimal_covers(R.complex, k, cell_cap);
  for (int k = 1; k <= k_max; ++k)
    for (const auto& a : minimal_by_k[k])
      if (!detail::decomposes(R.complex, a, k, minimal_by_k))
        R.generators.emplace_back(Monomial(a), k);
  R.stable = true;
  for (const auto& a : minimal_by_k[k_max + 1])
    if (!detail::decomposes(R.complex, a, k_max + 1, minimal_by_k)) {
      R.stable = false;
      break;
    }
  std::sort(R.generators.begin(), R.generators.end(),
            [](const auto& A, const auto& B) {
              if (A.second != B.second) return A.second > B.second;
              return lex_greater(A.first, B.first);
            });
  return R;
}

/// d(I, k): knapsack maximum of sum c_s * deg(u_s) over nonnegative c with
/// sum c_s q_s <= k, taken over the Rees generators. Only orders <= k can
/// contribute, so the generator list is complete for this computation.
inline int d_of_k(const MonomialIdeal& I, int k, long long cell_cap = 50'000'000) {
  if (k < 1) throw domain_error("d(I,k) needs k >= 1");
  ReesGenerators R = rees_generators(I, k, cell_cap);
  std::vector<long long> dp(k + 1, 0);
  for (int b = 1; b <= k; ++b) {
    dp[b] = dp[b - 1];
    for (const auto& [u, q] : R.generators)
      if (q <= b) dp[b] = std::max(dp[b], dp[b - q] + u.degree());
  }
  return static_cast<int>(dp[k]);
}

/// Fit |a| = c*k + d across all indecomposable covers up to k_max. With data
/// at a single order k0 the fit is underdetermined; the convention c = 1,
/// d = s - k0 is used (and must be nonnegative).
inline std::optional<std::pair<int, int>> linear_cover_function(const MonomialIdeal& I,
                                                                int k_max,
                                                                long long cell_cap = 50'000'000) {
  ReesGenerators R = rees_generators(I, k_max, cell_cap);
  std::map<int, int> size_at_k; // order -> common cover size
  for (const auto& [u, q] : R.generators) {
    int s = u.degree();
    auto it = size_at_k.find(q);
    if (it == size_at_k.end())
      size_at_k[q] = s;
    else if (it->second != s)
      return std::nullopt;
  }
  if (size_at_k.empty()) return std::nullopt;
  if (size_at_k.size() == 1) {
    auto [k0, s] = *size_at_k.begin();
    if (s - k0 < 0) return std::nullopt;
    return std::make_pair(1, s - k0);
  }
  auto it = size_at_k.begin();
  auto [k1, s1] = *it;
  ++it;
  auto [k2, s2] = *it;
  if ((s2 - s1) % (k2 - k1) != 0) return std::nullopt;
  int c = (s2 - s1) / (k2 - k1);
  int d = s1 - c * k1;
  if (c < 0 || d < 0) return std::nullopt;
  for (auto [k, s] : size_at_k)
    if (s != c * k + d) return std::nullopt;
  return std::make_pair(c, d);
}

/// The degree-k piece of the subalgebra generated by the covers: the ideal
/// generated by all products of cover monomials with orders summing to k.
/// For a minimal intersection type ideal this reproduces I^{(k)}.
inline MonomialIdeal rees_piece(const ReesGenerators& R, int k) {
  std::vector<MonomialIdeal> piece(k + 1, MonomialIdeal::zero(R.complex.n));
  piece[0] = MonomialIdeal::unit(R.complex.n);
  for (int q = 1; q <= k; ++q) {
    std::vector<Monomial> gens;
    for (const auto& [u, p] : R.generators) {
      if (p > q) continue;
      for (const Monomial& g : piece[q - p].gens()) gens.push_back(mul(u, g));
    }
    piece[q] = MonomialIdeal::make(R.complex.n, std::move(gens));
  }
  return piece[k];
}

/// Brute-force split search straight from the definition, used to re-verify
/// reported indecomposables: every b <= a and every k' with (b, k') and
/// (a - b, k - k') both covers and neither part trivial.
inline bool brute_force_decomposes(const WeightedComplex& W, const Cover& c) {
  std::vector<Exponent> b(c.a.size(), 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == b.size()) {
      for (int k1 = 0; k1 <= c.k; ++k1) {
        bool trivial1 = (k1 == 0 && std::all_of(b.begin(), b.end(),
                                                [](Exponent e) { return e == 0; }));
        std::vector<Exponent> rest(c.a.size());
        for (std::size_t t = 0; t < c.a.size(); ++t) rest[t] = c.a[t] - b[t];
        bool trivial2 = (c.k - k1 == 0 && std::all_of(rest.begin(), rest.end(),
                                                      [](Exponent e) { return e == 0; }));
        if (trivial1 || trivial2) continue;
        if (is_cover(W, b, k1) && is_cover(W, rest, c.k - k1)) return true;
      }
      return false;
    }
    for (Exponent e = 0; e <= c.a[i]; ++e) {
      b[i] = e;
      if (rec(i + 1)) return true;
    }
    b[i] = 0;
    return false;
  };
  return rec(0);
}

} // namespace sympow
