#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "format.hpp"
#include "primes.hpp"

namespace sympow {

/// Variables forced to 0 (drop incident generators) and to 1 (erase from
/// the surviving generators).
struct MinorAssignment {
  std::vector<int> zeros;
  std::vector<int> ones;
};

inline MonomialIdeal minor(const MonomialIdeal& I, const MinorAssignment& m) {
  if (!I.is_squarefree()) throw domain_error("minor of a non-squarefree ideal");
  std::vector<char> zero(I.vars(), 0), one(I.vars(), 0);
  for (int i : m.zeros) zero.at(i) = 1;
  for (int i : m.ones) {
    if (zero.at(i)) throw domain_error("minor assignment sets a variable to both 0 and 1");
    one.at(i) = 1;
  }
  std::vector<Monomial> gens;
  for (const Monomial& g : I.gens()) {
    bool killed = false;
    std::vector<Exponent> e = g.exponents();
    for (int i = 0; i < I.vars(); ++i) {
      if (e[i] == 0) continue;
      if (zero[i]) { killed = true; break; }
      if (one[i]) e[i] = 0;
    }
    if (!killed) gens.push_back(Monomial(e));
  }
  return MonomialIdeal::make(I.vars(), std::move(gens));
}

namespace detail {

inline bool koenig_search(const std::vector<Monomial>& gens, std::vector<Exponent>& used,
                          std::size_t from, int need) {
  if (need == 0) return true;
  for (std::size_t t = from; t < gens.size(); ++t) {
    bool coprime = true;
    for (int i : gens[t].support())
      if (used[i]) { coprime = false; break; }
    if (!coprime) continue;
    for (int i : gens[t].support()) used[i] = 1;
    if (koenig_search(gens, used, t + 1, need - 1)) return true;
    for (int i : gens[t].support()) used[i] = 0;
  }
  return false;
}

} // namespace detail

/// Koenig: some height(I)-many generators are pairwise coprime. Any monomial
/// regular sequence inside I can be replaced by generator divisors, so
/// searching generators is enough.
inline bool is_koenig(const MonomialIdeal& I) {
  if (!I.is_squarefree()) throw domain_error("koenig test needs a squarefree ideal");
  if (I.is_zero() || I.is_unit()) throw domain_error("koenig test on zero or unit ideal");
  int h = height(I);
  std::vector<Exponent> used(I.vars(), 0);
  return detail::koenig_search(I.gens(), used, 0, h);
}

/// Packed: every 0/1 minor (including the empty assignment) is Koenig.
/// Minors that collapse to the zero or unit ideal are skipped; distinct
/// assignments realizing the same minor are checked once.
inline bool is_packed(const MonomialIdeal& I, int var_cap = 16) {
  if (!I.is_squarefree()) throw domain_error("packed test needs a squarefree ideal");
  if (I.is_zero() || I.is_unit()) throw domain_error("packed test on zero or unit ideal");
  if (I.vars() > var_cap) throw resource_error("packed recursion above variable cap");
  std::map<std::string, bool> memo;
  std::vector<int> state(I.vars(), 0); // 0 free, 1 zero, 2 one
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == I.vars()) {
      MinorAssignment m;
      for (int v = 0; v < I.vars(); ++v) {
        if (state[v] == 1) m.zeros.push_back(v);
        if (state[v] == 2) m.ones.push_back(v);
      }
      MonomialIdeal M = minor(I, m);
      if (M.is_zero() || M.is_unit()) return true;
      std::string key = to_string(M);
      auto it = memo.find(key);
      if (it != memo.end()) return it->second;
      bool ok = is_koenig(M);
      memo[key] = ok;
      return ok;
    }
    for (int s = 0; s < 3; ++s) {
      state[i] = s;
      if (!rec(i + 1)) { state[i] = 0; return false; }
    }
    state[i] = 0;
    return true;
  };
  return rec(0);
}

namespace detail {

inline bool partitions_into(const std::vector<int>& supp, int t,
                            std::vector<std::vector<int>>& blocks, std::size_t at,
                            const MonomialIdeal& I) {
  if (at == supp.size()) {
    if (static_cast<int>(blocks.size()) != t) return false;
    std::vector<MonomialPrime> primes;
    MonomialIdeal prod = MonomialIdeal::unit(I.vars());
    for (const auto& B : blocks) prod = multiply(prod, prime_ideal(make_prime(B), I.vars()));
    return prod == I;
  }
  int v = supp[at];
  // index-based: the recursion may grow `blocks` and reallocate
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    blocks[b].push_back(v);
    if (partitions_into(supp, t, blocks, at + 1, I)) return true;
    blocks[b].pop_back();
  }
  if (static_cast<int>(blocks.size()) < t) {
    blocks.push_back({v});
    if (partitions_into(supp, t, blocks, at + 1, I)) return true;
    blocks.pop_back();
  }
  return false;
}

} // namespace detail

/// If I = P_{F_1} ... P_{F_t} with pairwise disjoint supports, return the
/// supports (unique up to order); otherwise nullopt. Searches partitions of
/// supp(I) into t = alpha(I) blocks and verifies by multiplying back.
inline std::optional<std::vector<std::vector<int>>> disjoint_prime_product_form(
    const MonomialIdeal& I) {
  if (!I.is_squarefree()) throw domain_error("disjoint form needs a squarefree ideal");
  if (I.is_zero() || I.is_unit()) throw domain_error("disjoint form of zero or unit ideal");
  if (!I.is_equigenerated()) return std::nullopt;
  int t = I.alpha();
  std::vector<int> supp = I.support();
  std::vector<std::vector<int>> blocks;
  if (!detail::partitions_into(supp, t, blocks, 0, I)) return std::nullopt;
  for (auto& B : blocks) std::sort(B.begin(), B.end());
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

} // namespace sympow
