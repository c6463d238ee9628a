#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "families.hpp"

namespace sympow {

namespace detail {

inline int rank_mod_p(std::vector<std::vector<long long>> M, long long p) {
  if (M.empty() || M[0].empty()) return 0;
  const std::size_t rows = M.size(), cols = M[0].size();
  auto norm = [&](long long v) { return ((v % p) + p) % p; };
  auto inverse = [&](long long a) {
    long long r = 1, e = p - 2, b = norm(a);
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && norm(M[piv][col]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(M[row], M[piv]);
    long long inv = inverse(M[row][col]);
    for (std::size_t r = row + 1; r < rows; ++r) {
      long long f = norm(M[r][col]) * inv % p;
      if (f == 0) continue;
      for (std::size_t c = col; c < cols; ++c) M[r][c] = norm(M[r][c] - f * M[row][c]);
    }
    ++row;
    ++rank;
  }
  return rank;
}

inline int rank_exact(std::vector<std::vector<boost::multiprecision::cpp_int>> M) {
  using boost::multiprecision::cpp_int;
  if (M.empty() || M[0].empty()) return 0;
  const std::size_t rows = M.size(), cols = M[0].size();
  int rank = 0;
  std::size_t row = 0;
  cpp_int prev = 1;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && M[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(M[row], M[piv]);
    // Bareiss fraction-free elimination step
    for (std::size_t r = row + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c)
        M[r][c] = (M[row][col] * M[r][c] - M[r][col] * M[row][c]) / prev;
      M[r][col] = 0;
    }
    prev = M[row][col];
    ++row;
    ++rank;
  }
  return rank;
}

/// Reduced homology ranks of a simplicial complex given as face masks over a
/// vertex list. faces_by_dim[d] holds the dimension-(d-1) faces, so index 0
/// is the empty face slot. Returns h[j] = dim H~_{j-1} for j = 0..max.
inline std::vector<int> reduced_homology_dims(
    const std::vector<std::vector<std::uint32_t>>& faces_by_card,
    const std::vector<int>& verts, long long field_char) {
  using boost::multiprecision::cpp_int;
  const int levels = static_cast<int>(faces_by_card.size());
  // boundary_{c}: C_c -> C_{c-1} on cardinality-c faces, c >= 1
  std::vector<int> ranks(levels + 1, 0);
  for (int c = 1; c < levels; ++c) {
    const auto& lower = faces_by_card[c - 1];
    const auto& upper = faces_by_card[c];
    if (lower.empty() || upper.empty()) continue;
    std::map<std::uint32_t, int> row_of;
    for (std::size_t r = 0; r < lower.size(); ++r) row_of[lower[r]] = static_cast<int>(r);
    if (field_char == 0) {
      std::vector<std::vector<cpp_int>> M(lower.size(), std::vector<cpp_int>(upper.size(), 0));
      for (std::size_t u = 0; u < upper.size(); ++u) {
        std::uint32_t mask = upper[u];
        int sign = 1;
        for (std::size_t t = 0; t < verts.size(); ++t) {
          if (!(mask & (1u << t))) continue;
          M[row_of.at(mask ^ (1u << t))][u] = sign;
          sign = -sign;
        }
      }
      ranks[c] = rank_exact(std::move(M));
    } else {
      std::vector<std::vector<long long>> M(lower.size(), std::vector<long long>(upper.size(), 0));
      for (std::size_t u = 0; u < upper.size(); ++u) {
        std::uint32_t mask = upper[u];
        int sign = 1;
        for (std::size_t t = 0; t < verts.size(); ++t) {
          if (!(mask & (1u << t))) continue;
          M[row_of.at(mask ^ (1u << t))][u] = sign;
          sign = -sign;
        }
      }
      ranks[c] = rank_mod_p(std::move(M), field_char);
    }
  }
  std::vector<int> h(levels, 0);
  for (int c = 0; c < levels; ++c) {
    int dim_c = static_cast<int>(faces_by_card[c].size());
    h[c] = dim_c - ranks[c] - ranks[c + 1];
  }
  return h;
}

} // namespace detail

/// Multigraded Betti numbers of an ideal, with the coarse (i, total degree)
/// view and the regularity.
struct BettiTable {
  long long field_char = 32003;
  std::map<std::pair<int, std::vector<Exponent>>, int> multigraded;
  std::map<std::pair<int, int>, int> coarse;
  int regularity = 0;

  int beta(int i, int j) const {
    auto it = coarse.find({i, j});
    return it == coarse.end() ? 0 : it->second;
  }
};

inline bool is_prime_number(long long p) {
  if (p < 2) return false;
  for (long long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

/// beta_{i,a}(I) = dim H~_{i-1}(K^a) for the upper-Koszul complex
/// K^a = { S subseteq supp(a) : x^a / x_S in I }, over all multidegrees a
/// in the divisor-closed box below lcm(G(I)).
inline BettiTable betti_table(const MonomialIdeal& I, long long field_char = 32003,
                              long long cell_cap = 50'000'000) {
  if (I.is_zero() || I.is_unit()) throw domain_error("betti table of zero or unit ideal");
  if (field_char != 0 && !is_prime_number(field_char))
    throw domain_error("field characteristic must be 0 or a prime");
  BettiTable T;
  T.field_char = field_char;
  Monomial top = I.generator_lcm();
  long long cells = 1;
  for (int i = 0; i < I.vars(); ++i) {
    cells *= top.deg(i) + 1;
    if (cells > cell_cap) throw resource_error("betti multidegree box too large");
  }
  std::vector<Exponent> a(I.vars(), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == I.vars()) {
      Monomial xa((a));
      if (!contains(I, xa)) return;
      std::vector<int> verts;
      for (int v = 0; v < I.vars(); ++v)
        if (a[v] > 0) verts.push_back(v);
      if (verts.size() > 31) throw resource_error("multidegree support too large");
      // faces grouped by cardinality; membership decides each subset
      std::vector<std::vector<std::uint32_t>> faces(verts.size() + 1);
      for (std::uint32_t mask = 0; mask < (1u << verts.size()); ++mask) {
        std::vector<Exponent> e = a;
        bool ok = true;
        for (std::size_t t = 0; t < verts.size(); ++t)
          if (mask & (1u << t)) e[verts[t]] -= 1;
        Monomial m{e};
        ok = contains(I, m);
        if (ok) faces[__builtin_popcount(mask)].push_back(mask);
      }
      std::vector<int> h = detail::reduced_homology_dims(faces, verts, field_char);
      for (std::size_t c = 0; c < h.size(); ++c) {
        if (h[c] == 0) continue;
        int i_hom = static_cast<int>(c); // beta_{i,a} with i = c (H~_{c-1})
        T.multigraded[{i_hom, a}] += h[c];
        T.coarse[{i_hom, Monomial(a).degree()}] += h[c];
      }
      return;
    }
    for (Exponent e = 0; e <= top.deg(i); ++e) {
      a[i] = e;
      rec(i + 1);
    }
    a[i] = 0;
  };
  rec(0);
  T.regularity = 0;
  for (const auto& [ij, b] : T.coarse)
    if (b > 0) T.regularity = std::max(T.regularity, ij.second - ij.first);
  return T;
}

/// A witnessing order of G(I) whose successive colon ideals are all
/// variable-generated.
struct QuotientOrder {
  std::vector<Monomial> order;
};

inline bool is_variable_generated(const MonomialIdeal& J) {
  for (const Monomial& g : J.gens())
    if (g.degree() != 1) return false;
  return true;
}

/// Check one candidate order for linear quotients. The order must be a
/// permutation of G(I).
inline bool verify_linear_quotients(const MonomialIdeal& I, const std::vector<Monomial>& ord) {
  if (ord.size() != I.gens().size()) return false;
  std::vector<Monomial> sorted = ord;
  std::sort(sorted.begin(), sorted.end(), canonical_less);
  if (sorted != I.gens()) return false;
  for (std::size_t i = 1; i < ord.size(); ++i) {
    std::vector<Monomial> quots;
    for (std::size_t j = 0; j < i; ++j) quots.push_back(div(ord[j], gcd(ord[j], ord[i])));
    if (!is_variable_generated(MonomialIdeal::make(I.vars(), std::move(quots)))) return false;
  }
  return true;
}

namespace detail {

/// Lex order for every permutation of the variables, generators sorted
/// descending; complete for polymatroidal inputs.
inline std::optional<std::vector<Monomial>> lex_quotients_order(const MonomialIdeal& I) {
  const int n = I.vars();
  if (I.num_gens() == 1) return I.gens();
  if (n > 7) return std::nullopt;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<Monomial> ord = I.gens();
    std::sort(ord.begin(), ord.end(), [&](const Monomial& a, const Monomial& b) {
      for (int t = 0; t < n; ++t) {
        int i = perm[t];
        if (a.deg(i) != b.deg(i)) return a.deg(i) > b.deg(i);
      }
      return false;
    });
    if (verify_linear_quotients(I, ord)) return ord;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

inline bool colon_step_ok(const MonomialIdeal& I, const std::vector<int>& prefix, int next) {
  std::vector<Monomial> quots;
  const auto& G = I.gens();
  for (int j : prefix) quots.push_back(div(G[j], gcd(G[j], G[next])));
  return is_variable_generated(MonomialIdeal::make(I.vars(), std::move(quots)));
}

struct LqSearch {
  const MonomialIdeal& I;
  long long budget;
  long long nodes = 0;
  std::set<std::vector<char>> dead; // chosen-sets that admit no completion

  explicit LqSearch(const MonomialIdeal& ideal, long long node_budget)
      : I(ideal), budget(node_budget) {}

  bool extend(std::vector<int>& prefix, std::vector<char>& used) {
    if (prefix.size() == I.gens().size()) return true;
    if (dead.count(used)) return false;
    for (int cand = 0; cand < I.num_gens(); ++cand) {
      if (used[cand]) continue;
      if (++nodes > budget) throw resource_error("linear-quotients search budget exceeded");
      if (!prefix.empty() && !colon_step_ok(I, prefix, cand)) continue;
      prefix.push_back(cand);
      used[cand] = 1;
      if (extend(prefix, used)) return true;
      prefix.pop_back();
      used[cand] = 0;
    }
    dead.insert(used);
    return false;
  }
};

} // namespace detail

/// Find (or verify) a linear-quotients order. The search tries the lex order
/// for every permutation of the variables first, which is complete for
/// polymatroidal inputs, then falls back to exhaustive backtracking over
/// prefixes with the variable-generated-colon pruning test. The colon ideal
/// only depends on the chosen prefix as a set, so failed sets are memoized.
inline std::optional<QuotientOrder> linear_quotients_order(
    const MonomialIdeal& I, const std::optional<std::vector<Monomial>>& fixed_order = {},
    long long node_budget = 20'000'000) {
  if (I.is_zero()) throw domain_error("linear quotients of zero ideal");
  if (fixed_order) {
    if (verify_linear_quotients(I, *fixed_order)) return QuotientOrder{*fixed_order};
    return std::nullopt;
  }
  if (auto lex = detail::lex_quotients_order(I)) return QuotientOrder{std::move(*lex)};
  detail::LqSearch search(I, node_budget);
  std::vector<int> prefix;
  std::vector<char> used(I.num_gens(), 0);
  if (search.extend(prefix, used)) {
    std::vector<Monomial> ord;
    for (int i : prefix) ord.push_back(I.gens()[i]);
    return QuotientOrder{std::move(ord)};
  }
  return std::nullopt;
}

struct RegularityResult {
  int value = 0;
  bool via_linear_quotients = false; // true when read off a witness order
};

struct LinearityOptions {
  long long field_char = 32003;
  long long cell_cap = 50'000'000;
  bool allow_shortcut = true;
  long long node_budget = 20'000'000;
};

/// Castelnuovo–Mumford regularity of the ideal. With the shortcut enabled a
/// verified linear-quotients witness gives reg I = omega(I) without any
/// homology (ideals with linear quotients are componentwise linear).
inline RegularityResult regularity(const MonomialIdeal& I, const LinearityOptions& opts = {}) {
  if (I.is_zero() || I.is_unit()) throw domain_error("regularity of zero or unit ideal");
  if (opts.allow_shortcut && detail::lex_quotients_order(I))
    return {I.omega(), true};
  return {betti_table(I, opts.field_char, opts.cell_cap).regularity, false};
}

/// Equigenerated ideals only (false by convention otherwise): all nonzero
/// beta_{i,j} must lie on the line j = alpha(I) + i.
inline bool has_linear_resolution(const MonomialIdeal& I, const LinearityOptions& opts = {}) {
  if (I.is_zero() || I.is_unit()) throw domain_error("linear resolution of zero or unit ideal");
  if (!I.is_equigenerated()) return false;
  if (opts.allow_shortcut && detail::lex_quotients_order(I)) return true;
  BettiTable T = betti_table(I, opts.field_char, opts.cell_cap);
  for (const auto& [ij, b] : T.coarse)
    if (b > 0 && ij.second != I.alpha() + ij.first) return false;
  return true;
}

/// Componentwise linearity, checked on the components I_<d> for
/// alpha(I) <= d <= omega(I). Higher components are m * I_<d-1> plus nothing
/// new, and multiplying a d-linear ideal by m stays (d+1)-linear, so the
/// range suffices.
inline bool is_componentwise_linear(const MonomialIdeal& I, const LinearityOptions& opts = {}) {
  if (I.is_zero() || I.is_unit()) throw domain_error("cwl of zero or unit ideal");
  for (int d = I.alpha(); d <= I.omega(); ++d) {
    MonomialIdeal comp = graded_component(I, d);
    if (comp.is_zero()) continue;
    if (!has_linear_resolution(comp, opts)) return false;
  }
  return true;
}

inline bool is_componentwise_polymatroidal(const MonomialIdeal& I) {
  if (I.is_zero() || I.is_unit()) throw domain_error("cwp of zero or unit ideal");
  for (int d = I.alpha(); d <= I.omega(); ++d) {
    MonomialIdeal comp = graded_component(I, d);
    if (comp.is_zero()) continue;
    if (!is_polymatroidal(comp)) return false;
  }
  return true;
}

} // namespace sympow
