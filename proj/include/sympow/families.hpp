#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "format.hpp"
#include "primes.hpp"

namespace sympow {

/// Veronese type (n, d, a): all degree-d monomials with exponents capped by a.
struct VeroneseSpec {
  int n = 0;
  int d = 0;
  std::vector<Exponent> caps; // empty means squarefree (all caps 1)
};

inline MonomialIdeal veronese_type(const VeroneseSpec& spec) {
  std::vector<Exponent> caps = spec.caps;
  if (caps.empty()) caps.assign(spec.n, 1);
  if (static_cast<int>(caps.size()) != spec.n)
    throw structural_error("cap vector length mismatch");
  std::vector<Monomial> gens;
  std::vector<Exponent> cur(spec.n, 0);
  std::function<void(int, int)> rec = [&](int i, int rem) {
    if (i == spec.n) {
      if (rem == 0) gens.push_back(Monomial(cur));
      return;
    }
    for (Exponent e = 0; e <= std::min<Exponent>(caps[i], rem); ++e) {
      cur[i] = e;
      rec(i + 1, rem - e);
    }
    cur[i] = 0;
  };
  rec(0, spec.d);
  return MonomialIdeal::make(spec.n, std::move(gens));
}

/// Squarefree Veronese ideal of degree d in n variables.
inline MonomialIdeal squarefree_veronese(int n, int d) {
  return veronese_type({n, d, {}});
}

/// Squarefree Veronese of degree d on a variable subset A inside an
/// n-variable ambient ring.
inline MonomialIdeal squarefree_veronese_on(int n, const std::vector<int>& A, int d) {
  std::vector<Exponent> caps(n, 0);
  for (int i : A) caps.at(i) = 1;
  return veronese_type({n, d, std::move(caps)});
}

/// Principal Borel ideal B(u) for u = x_{i_1} ... x_{i_d} with weakly
/// increasing 0-based indices.
inline MonomialIdeal principal_borel(int n, const std::vector<int>& indices) {
  for (std::size_t t = 0; t < indices.size(); ++t) {
    if (indices[t] < 0 || indices[t] >= n) throw structural_error("borel index out of range");
    if (t > 0 && indices[t] < indices[t - 1])
      throw structural_error("borel indices must be weakly increasing");
  }
  std::vector<Monomial> gens;
  std::vector<int> j(indices.size());
  std::function<void(std::size_t, int)> rec = [&](std::size_t t, int lo) {
    if (t == indices.size()) {
      std::vector<Exponent> e(n, 0);
      for (int idx : j) e[idx] += 1;
      gens.push_back(Monomial(e));
      return;
    }
    for (int v = lo; v <= indices[t]; ++v) {
      j[t] = v;
      rec(t + 1, v);
    }
  };
  rec(0, 0);
  return MonomialIdeal::make(n, std::move(gens));
}

/// Transversal polymatroidal ideal: the product P_{A_1} ... P_{A_t}.
inline MonomialIdeal transversal(int n, const std::vector<std::vector<int>>& supports) {
  if (supports.empty()) throw domain_error("transversal needs at least one support");
  MonomialIdeal I = MonomialIdeal::unit(n);
  for (const auto& A : supports) I = multiply(I, prime_ideal(make_prime(A), n));
  return I;
}

/// Matching-matroidal ideal: squarefree part of a prime product.
inline MonomialIdeal matching_matroidal(int n, const std::vector<std::vector<int>>& supports) {
  return squarefree_part(transversal(n, supports));
}

/// Exchange property: for all u, v in G(I) and every i with
/// deg_i(u) > deg_i(v), some j with deg_j(u) < deg_j(v) has
/// x_j * (u / x_i) in G(I). Together with equigeneration this characterizes
/// polymatroidal ideals.
inline bool is_polymatroidal(const MonomialIdeal& I) {
  if (I.is_zero()) throw domain_error("polymatroidal test on zero ideal");
  if (!I.is_equigenerated()) return false;
  std::set<std::vector<Exponent>> members;
  for (const Monomial& g : I.gens()) members.insert(g.exponents());
  const int n = I.vars();
  for (const Monomial& u : I.gens())
    for (const Monomial& v : I.gens()) {
      for (int i = 0; i < n; ++i) {
        if (u.deg(i) <= v.deg(i)) continue;
        bool found = false;
        for (int j = 0; j < n && !found; ++j) {
          if (u.deg(j) >= v.deg(j)) continue;
          std::vector<Exponent> w = u.exponents();
          w[i] -= 1;
          w[j] += 1;
          found = members.count(w) > 0;
        }
        if (!found) return false;
      }
    }
  return true;
}

inline bool is_matroidal(const MonomialIdeal& I) {
  return I.is_squarefree() && is_polymatroidal(I);
}

/// Dual exchange property: for all u, v and i with deg_i(u) < deg_i(v),
/// some j with deg_j(u) > deg_j(v) has x_i * (u / x_j) in G(I).
inline bool has_dual_exchange(const MonomialIdeal& I) {
  if (I.is_zero()) throw domain_error("dual exchange test on zero ideal");
  if (!I.is_equigenerated()) return false;
  std::set<std::vector<Exponent>> members;
  for (const Monomial& g : I.gens()) members.insert(g.exponents());
  const int n = I.vars();
  for (const Monomial& u : I.gens())
    for (const Monomial& v : I.gens()) {
      for (int i = 0; i < n; ++i) {
        if (u.deg(i) >= v.deg(i)) continue;
        bool found = false;
        for (int j = 0; j < n && !found; ++j) {
          if (u.deg(j) <= v.deg(j)) continue;
          std::vector<Exponent> w = u.exponents();
          w[j] -= 1;
          w[i] += 1;
          found = members.count(w) > 0;
        }
        if (!found) return false;
      }
    }
  return true;
}

/// Strong exchange: the witness j may be prescribed. Requires an
/// equigenerated ideal.
inline bool has_strong_exchange(const MonomialIdeal& I) {
  if (I.is_zero()) throw domain_error("strong exchange test on zero ideal");
  if (!I.is_equigenerated()) throw domain_error("strong exchange requires equigenerated ideal");
  std::set<std::vector<Exponent>> members;
  for (const Monomial& g : I.gens()) members.insert(g.exponents());
  const int n = I.vars();
  for (const Monomial& u : I.gens())
    for (const Monomial& v : I.gens())
      for (int i = 0; i < n; ++i) {
        if (u.deg(i) <= v.deg(i)) continue;
        for (int j = 0; j < n; ++j) {
          if (u.deg(j) >= v.deg(j)) continue;
          std::vector<Exponent> w = u.exponents();
          w[i] -= 1;
          w[j] += 1;
          if (!members.count(w)) return false;
        }
      }
  return true;
}

/// Split I = x_i * I1 + I2 along variable i, with I1 the x_i-divisible
/// generators divided by x_i and I2 the rest. For polymatroidal I with
/// alpha(I) >= 2 both parts are polymatroidal and I2 is contained in I1.
inline std::pair<MonomialIdeal, MonomialIdeal> split_polymatroidal(const MonomialIdeal& I,
                                                                   int i) {
  if (!is_polymatroidal(I)) throw domain_error("split requires a polymatroidal ideal");
  if (I.alpha() < 2) throw domain_error("split requires alpha(I) >= 2");
  std::vector<int> supp = I.support();
  if (!std::binary_search(supp.begin(), supp.end(), i))
    throw domain_error("split variable outside supp(I)");
  std::vector<Monomial> g1, g2;
  Monomial xi = Monomial::variable(I.vars(), i);
  for (const Monomial& g : I.gens()) {
    if (g.deg(i) > 0)
      g1.push_back(div(g, xi));
    else
      g2.push_back(g);
  }
  MonomialIdeal I1 = MonomialIdeal::make(I.vars(), std::move(g1));
  MonomialIdeal I2 = MonomialIdeal::make(I.vars(), std::move(g2));
  if (!contains(I1, I2)) throw domain_error("split containment I2 <= I1 failed");
  if (!I1.is_zero() && !is_polymatroidal(I1)) throw domain_error("split part I1 not polymatroidal");
  if (!I2.is_zero() && !is_polymatroidal(I2)) throw domain_error("split part I2 not polymatroidal");
  return {I1, I2};
}

namespace detail {

inline bool vertex_splittable_rec(const MonomialIdeal& I,
                                  std::map<std::string, bool>& memo) {
  if (I.is_zero() || I.is_unit() || I.num_gens() == 1) return true;
  std::string key = to_string(I);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  bool ok = false;
  // The candidate split at a variable is forced: I1 takes the x_i-divisible
  // generators divided by x_i, I2 the rest.
  for (int i : I.support()) {
    Monomial xi = Monomial::variable(I.vars(), i);
    std::vector<Monomial> g1, g2;
    for (const Monomial& g : I.gens()) {
      if (g.deg(i) > 0)
        g1.push_back(div(g, xi));
      else
        g2.push_back(g);
    }
    MonomialIdeal I1 = MonomialIdeal::make(I.vars(), std::move(g1));
    MonomialIdeal I2 = MonomialIdeal::make(I.vars(), std::move(g2));
    if (!contains(I1, I2)) continue;
    if (vertex_splittable_rec(I1, memo) && vertex_splittable_rec(I2, memo)) {
      ok = true;
      break;
    }
  }
  memo[key] = ok;
  return ok;
}

} // namespace detail

/// Recursive vertex-splittability test with memoization on the canonical
/// serialized form.
inline bool is_vertex_splittable(const MonomialIdeal& I) {
  std::map<std::string, bool> memo;
  return detail::vertex_splittable_rec(I, memo);
}

/// All matroidal ideals generated in degree d on n variables: antichains of
/// d-subsets filtered by the exchange property. Exact list, no isomorphism
/// reduction, deterministic order. Hard-capped at n <= 5.
inline std::vector<MonomialIdeal> enumerate_matroidal(int n, int d) {
  if (n > 5) throw domain_error("matroidal enumeration capped at n <= 5");
  if (d < 1 || d > n) return {};
  std::vector<Monomial> squarefree;
  std::vector<Exponent> cur(n, 0);
  std::function<void(int, int)> rec = [&](int i, int rem) {
    if (rem == 0) {
      squarefree.push_back(Monomial(cur));
      return;
    }
    if (i == n) return;
    cur[i] = 1;
    rec(i + 1, rem - 1);
    cur[i] = 0;
    if (n - i - 1 >= rem) rec(i + 1, rem);
  };
  rec(0, d);
  std::vector<MonomialIdeal> out;
  const std::size_t m = squarefree.size();
  for (std::uint64_t mask = 1; mask < (1ull << m); ++mask) {
    std::vector<Monomial> gens;
    for (std::size_t b = 0; b < m; ++b)
      if (mask & (1ull << b)) gens.push_back(squarefree[b]);
    MonomialIdeal I = MonomialIdeal::make(n, std::move(gens));
    if (is_polymatroidal(I)) out.push_back(I);
  }
  return out;
}

/// All polymatroidal ideals generated in degree d on n variables with
/// exponents capped by cap. Used by the small-variable conjecture sweeps.
inline std::vector<MonomialIdeal> enumerate_polymatroidal(int n, int d, Exponent cap) {
  if (n > 3) throw domain_error("polymatroidal enumeration capped at n <= 3");
  std::vector<Exponent> caps(n, std::min<Exponent>(cap, d));
  MonomialIdeal full = veronese_type({n, d, caps});
  const std::vector<Monomial>& monos = full.gens();
  const std::size_t m = monos.size();
  if (m > 25) throw domain_error("polymatroidal enumeration candidate set too large");
  std::vector<MonomialIdeal> out;
  for (std::uint64_t mask = 1; mask < (1ull << m); ++mask) {
    std::vector<Monomial> gens;
    for (std::size_t b = 0; b < m; ++b)
      if (mask & (1ull << b)) gens.push_back(monos[b]);
    MonomialIdeal I = MonomialIdeal::make(n, std::move(gens));
    if (is_polymatroidal(I)) out.push_back(I);
  }
  return out;
}

} // namespace sympow
