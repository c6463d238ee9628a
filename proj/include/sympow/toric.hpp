#pragma once

#include <cstdlib>
#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <variant>
#include <vector>

#include "covers.hpp"

namespace sympow {

/// A monomial in T = K[x_1..x_n, y_1..y_m], one y per Rees generator.
struct MixedMonomial {
  std::vector<Exponent> x;
  std::vector<Exponent> y;

  bool operator==(const MixedMonomial& o) const { return x == o.x && y == o.y; }
};

/// Pure-difference relation lead - trail with equal image under
/// x_i -> x_i, y_j -> u_j t^{q_j}.
struct ToricBinomial {
  MixedMonomial lead;
  MixedMonomial trail;
};

namespace toric_detail {

using Vec = std::vector<Exponent>;

struct Env {
  int n = 0;
  int m = 0;
  std::vector<std::pair<Monomial, int>> gens; // (u_j, q_j), already in generator order
  std::vector<long long> weight;              // positive grading for saturation orders
};

inline Env make_env(int n, const std::vector<std::pair<Monomial, int>>& gens) {
  Env env;
  env.n = n;
  env.m = static_cast<int>(gens.size());
  env.gens = gens;
  env.weight.assign(n + env.m, 1);
  for (int j = 0; j < env.m; ++j)
    env.weight[n + j] = gens[j].first.degree() + gens[j].second;
  return env;
}

/// (orderT): y-parts by degree then reverse-lex with y_1 > ... > y_m; ties
/// broken by lex on the x-parts with x_1 > ... > x_n. Returns the sign of
/// A - B.
inline int cmp_orderT(const Env& env, const Vec& A, const Vec& B) {
  long long ya = 0, yb = 0;
  for (int j = env.n; j < env.n + env.m; ++j) {
    ya += A[j];
    yb += B[j];
  }
  if (ya != yb) return ya > yb ? 1 : -1;
  for (int j = env.n + env.m - 1; j >= env.n; --j) {
    int d = A[j] - B[j];
    if (d != 0) return d < 0 ? 1 : -1; // revlex: rightmost nonzero negative wins
  }
  for (int i = 0; i < env.n; ++i) {
    int d = A[i] - B[i];
    if (d != 0) return d > 0 ? 1 : -1;
  }
  return 0;
}

/// Weighted degrevlex with variable v cheapest, used for the per-variable
/// saturation rounds. The binomials are homogeneous for the weight, which is
/// what the divide-out-the-variable saturation step needs.
inline int cmp_saturation(const Env& env, int v, const Vec& A, const Vec& B) {
  long long wa = 0, wb = 0;
  for (std::size_t i = 0; i < A.size(); ++i) {
    wa += env.weight[i] * A[i];
    wb += env.weight[i] * B[i];
  }
  if (wa != wb) return wa > wb ? 1 : -1;
  int d = A[v] - B[v];
  if (d != 0) return d < 0 ? 1 : -1; // v sits last in the revlex sequence
  for (int i = static_cast<int>(A.size()) - 1; i >= 0; --i) {
    if (i == v) continue;
    d = A[i] - B[i];
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

using Cmp = std::function<int(const Vec&, const Vec&)>;

struct Bin {
  Vec lead, trail;
};

inline bool vec_divides(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Vec vec_lcm(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline bool vec_coprime(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

/// lead := lead - g.lead + g.trail, the one-step binomial reduction.
inline Vec rewrite(const Vec& t, const Vec& from, const Vec& to) {
  Vec r(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) r[i] = t[i] - from[i] + to[i];
  return r;
}

inline std::optional<Bin> orient(const Cmp& cmp, Vec a, Vec b) {
  int c = cmp(a, b);
  if (c == 0) return std::nullopt;
  if (c > 0) return Bin{std::move(a), std::move(b)};
  return Bin{std::move(b), std::move(a)};
}

struct GBCaps {
  long long max_basis = 200000;
  long long max_reductions = 200'000'000;
};

/// Full reduction of a binomial's lead against the basis; nullopt when it
/// drops to zero.
inline std::optional<Bin> reduce_lead(const Cmp& cmp, const std::vector<Bin>& basis, Bin h,
                                      long long& steps, const GBCaps& caps) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Bin& g : basis) {
      if (!vec_divides(g.lead, h.lead)) continue;
      if (++steps > caps.max_reductions) throw resource_error("groebner reduction cap exceeded");
      Vec t = rewrite(h.lead, g.lead, g.trail);
      auto o = orient(cmp, std::move(t), h.trail);
      if (!o) return std::nullopt;
      h = std::move(*o);
      changed = true;
      break;
    }
  }
  return h;
}

/// Buchberger with the normal pair-selection strategy (smallest lcm in the
/// current order, ties by creation index), the coprime-lead criterion and
/// the chain criterion. Pure-difference binomials are closed under every
/// step, so no coefficient arithmetic appears.
inline std::vector<Bin> buchberger(const Cmp& cmp, std::vector<Bin> input,
                                   const GBCaps& caps = {}) {
  std::vector<Bin> basis;
  for (Bin& b : input) {
    auto o = orient(cmp, std::move(b.lead), std::move(b.trail));
    if (o) basis.push_back(std::move(*o));
  }

  struct PairRec {
    Vec lcm;
    int i, j;
  };
  auto pair_less = [&](const PairRec& a, const PairRec& b) {
    int c = cmp(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::set<PairRec, decltype(pair_less)> queue(pair_less);
  std::set<std::pair<int, int>> pending;
  auto push_pair = [&](int i, int j) {
    queue.insert({vec_lcm(basis[i].lead, basis[j].lead), i, j});
    pending.insert({i, j});
  };
  for (int j = 1; j < static_cast<int>(basis.size()); ++j)
    for (int i = 0; i < j; ++i) push_pair(i, j);

  long long steps = 0;
  while (!queue.empty()) {
    PairRec rec = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({rec.i, rec.j});
    const Bin& f = basis[rec.i];
    const Bin& g = basis[rec.j];
    if (vec_coprime(f.lead, g.lead)) continue;
    bool chained = false;
    for (int k = 0; k < static_cast<int>(basis.size()) && !chained; ++k) {
      if (k == rec.i || k == rec.j) continue;
      if (!vec_divides(basis[k].lead, rec.lcm)) continue;
      std::pair<int, int> key1{std::min(rec.i, k), std::max(rec.i, k)};
      std::pair<int, int> key2{std::min(rec.j, k), std::max(rec.j, k)};
      if (!pending.count(key1) && !pending.count(key2)) chained = true;
    }
    if (chained) continue;
    Vec a = rewrite(rec.lcm, f.lead, f.trail);
    Vec b = rewrite(rec.lcm, g.lead, g.trail);
    auto s = orient(cmp, std::move(a), std::move(b));
    if (!s) continue;
    auto h = reduce_lead(cmp, basis, std::move(*s), steps, caps);
    if (!h) continue;
    basis.push_back(std::move(*h));
    if (static_cast<long long>(basis.size()) > caps.max_basis)
      throw resource_error("groebner basis cap exceeded");
    int idx = static_cast<int>(basis.size()) - 1;
    for (int i = 0; i < idx; ++i) push_pair(i, idx);
  }

  // Interreduce to the reduced basis: minimal leads, fully reduced trails.
  std::vector<Bin> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool covered = false;
    for (std::size_t j = 0; j < basis.size() && !covered; ++j) {
      if (i == j) continue;
      if (!vec_divides(basis[j].lead, basis[i].lead)) continue;
      if (basis[j].lead == basis[i].lead && j > i) continue; // keep first of equals
      covered = true;
    }
    if (!covered) minimal.push_back(basis[i]);
  }
  for (Bin& g : minimal) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Bin& r : minimal) {
        if (r.lead == g.lead) continue;
        if (!vec_divides(r.lead, g.trail)) continue;
        g.trail = rewrite(g.trail, r.lead, r.trail);
        changed = true;
        break;
      }
    }
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Bin& a, const Bin& b) { return cmp(a.lead, b.lead) < 0; });
  return minimal;
}

/// Z-basis of { v : q . v = 0 } via unimodular column reduction of q.
inline std::vector<std::vector<long long>> kernel_of_row(std::vector<long long> q) {
  const std::size_t m = q.size();
  std::vector<std::vector<long long>> cols(m, std::vector<long long>(m, 0));
  for (std::size_t j = 0; j < m; ++j) cols[j][j] = 1;
  while (true) {
    std::size_t piv = m;
    for (std::size_t j = 0; j < m; ++j)
      if (q[j] != 0 && (piv == m || std::llabs(q[j]) < std::llabs(q[piv]))) piv = j;
    if (piv == m) break;
    bool others = false;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == piv || q[j] == 0) continue;
      long long f = q[j] / q[piv];
      q[j] -= f * q[piv];
      for (std::size_t r = 0; r < m; ++r) cols[j][r] -= f * cols[piv][r];
      if (q[j] != 0) others = true;
    }
    if (!others) break;
  }
  std::vector<std::vector<long long>> basis;
  for (std::size_t j = 0; j < m; ++j)
    if (q[j] == 0) basis.push_back(cols[j]);
  return basis;
}

/// Lattice-basis binomials of Ker phi: vy ranges over a Z-basis of the
/// t-degree kernel, and the x-part is forced to vx = -U vy since the
/// x-columns of the configuration are unit vectors.
inline std::vector<Bin> lattice_basis(const Env& env) {
  std::vector<long long> q(env.m);
  for (int j = 0; j < env.m; ++j) q[j] = env.gens[j].second;
  std::vector<Bin> out;
  for (const auto& vy : kernel_of_row(q)) {
    Vec plus(env.n + env.m, 0), minus(env.n + env.m, 0);
    std::vector<long long> vx(env.n, 0);
    for (int j = 0; j < env.m; ++j)
      for (int i = 0; i < env.n; ++i)
        vx[i] -= static_cast<long long>(env.gens[j].first.deg(i)) * vy[j];
    for (int i = 0; i < env.n; ++i) {
      if (vx[i] > 0) plus[i] = static_cast<Exponent>(vx[i]);
      if (vx[i] < 0) minus[i] = static_cast<Exponent>(-vx[i]);
    }
    for (int j = 0; j < env.m; ++j) {
      if (vy[j] > 0) plus[env.n + j] = static_cast<Exponent>(vy[j]);
      if (vy[j] < 0) minus[env.n + j] = static_cast<Exponent>(-vy[j]);
    }
    out.push_back(Bin{std::move(plus), std::move(minus)});
  }
  return out;
}

/// One saturation round: Groebner basis under the order with v cheapest,
/// then divide the v-content out of every element.
inline std::vector<Bin> saturate_variable(const Env& env, std::vector<Bin> basis, int v,
                                          const GBCaps& caps) {
  Cmp cmp = [&env, v](const Vec& A, const Vec& B) { return cmp_saturation(env, v, A, B); };
  std::vector<Bin> gb = buchberger(cmp, std::move(basis), caps);
  for (Bin& g : gb) {
    Exponent e = std::min(g.lead[v], g.trail[v]);
    if (e > 0) {
      g.lead[v] -= e;
      g.trail[v] -= e;
    }
  }
  return gb;
}

inline MixedMonomial to_mixed(const Env& env, const Vec& v) {
  MixedMonomial mm;
  mm.x.assign(v.begin(), v.begin() + env.n);
  mm.y.assign(v.begin() + env.n, v.end());
  return mm;
}

inline Vec from_mixed(const Env& env, const MixedMonomial& mm) {
  if (static_cast<int>(mm.x.size()) != env.n || static_cast<int>(mm.y.size()) != env.m)
    throw structural_error("mixed monomial size mismatch");
  Vec v = mm.x;
  v.insert(v.end(), mm.y.begin(), mm.y.end());
  return v;
}

/// Image of a mixed monomial in S[t]: the x-exponent vector plus the
/// t-degree.
inline std::pair<std::vector<long long>, long long> phi_image(const Env& env, const Vec& v) {
  std::vector<long long> xs(env.n, 0);
  long long t = 0;
  for (int i = 0; i < env.n; ++i) xs[i] = v[i];
  for (int j = 0; j < env.m; ++j) {
    for (int i = 0; i < env.n; ++i)
      xs[i] += static_cast<long long>(env.gens[j].first.deg(i)) * v[env.n + j];
    t += static_cast<long long>(env.gens[j].second) * v[env.n + j];
  }
  return {xs, t};
}

} // namespace toric_detail

/// Total order (orderT) on mixed monomials; sign of A - B.
inline int order_compare(const MixedMonomial& A, const MixedMonomial& B, int n,
                         const std::vector<std::pair<Monomial, int>>& gens) {
  toric_detail::Env env = toric_detail::make_env(n, gens);
  return toric_detail::cmp_orderT(env, toric_detail::from_mixed(env, A),
                                  toric_detail::from_mixed(env, B));
}

struct ToricCaps {
  long long max_basis = 200000;
  long long max_reductions = 200'000'000;
};

/// Generating binomials of J = Ker phi: a lattice basis saturated with
/// respect to each variable in turn (x_1..x_n then y_1..y_m).
inline std::vector<ToricBinomial> toric_ideal(int n,
                                              const std::vector<std::pair<Monomial, int>>& gens,
                                              const ToricCaps& caps = {}) {
  using namespace toric_detail;
  if (gens.empty()) throw domain_error("toric ideal needs at least one generator");
  Env env = make_env(n, gens);
  std::vector<Bin> basis = lattice_basis(env);
  GBCaps gcaps{caps.max_basis, caps.max_reductions};
  for (int v = 0; v < env.n + env.m; ++v)
    basis = saturate_variable(env, std::move(basis), v, gcaps);
  std::vector<ToricBinomial> out;
  for (const Bin& b : basis) out.push_back({to_mixed(env, b.lead), to_mixed(env, b.trail)});
  return out;
}

/// Reduced Groebner basis of J under (orderT).
inline std::vector<ToricBinomial> groebner_basis(
    int n, const std::vector<std::pair<Monomial, int>>& gens,
    const std::vector<ToricBinomial>& J, const ToricCaps& caps = {}) {
  using namespace toric_detail;
  Env env = make_env(n, gens);
  std::vector<Bin> input;
  for (const ToricBinomial& b : J)
    input.push_back(Bin{from_mixed(env, b.lead), from_mixed(env, b.trail)});
  Cmp cmp = [&env](const Vec& A, const Vec& B) { return cmp_orderT(env, A, B); };
  GBCaps gcaps{caps.max_basis, caps.max_reductions};
  std::vector<Bin> gb = buchberger(cmp, std::move(input), gcaps);
  std::vector<ToricBinomial> out;
  for (const Bin& b : gb) out.push_back({to_mixed(env, b.lead), to_mixed(env, b.trail)});
  return out;
}

/// Leading monomials of a reduced basis: the minimal generators of in(J).
inline std::vector<MixedMonomial> initial_ideal(const std::vector<ToricBinomial>& GB) {
  std::vector<MixedMonomial> out;
  for (const ToricBinomial& b : GB) out.push_back(b.lead);
  return out;
}

struct XConditionReport {
  enum class Verdict { holds, fails, incomplete } verdict = Verdict::incomplete;
  std::optional<MixedMonomial> witness; // failing initial-ideal generator
  std::vector<std::pair<Monomial, int>> generators;
  std::vector<ToricBinomial> groebner;
};

/// x-condition: every minimal generator of in(J) has x-degree at most one.
/// "incomplete" reports that the Rees generator list could not be certified
/// stable at k_max.
inline XConditionReport check_x_condition(const MonomialIdeal& I, int k_max,
                                          const ToricCaps& caps = {},
                                          long long cover_cell_cap = 50'000'000) {
  XConditionReport rep;
  ReesGenerators rg = rees_generators(I, k_max, cover_cell_cap);
  rep.generators = rg.generators;
  if (!rg.stable) {
    rep.verdict = XConditionReport::Verdict::incomplete;
    return rep;
  }
  std::vector<ToricBinomial> J = toric_ideal(I.vars(), rg.generators, caps);
  rep.groebner = groebner_basis(I.vars(), rg.generators, J, caps);
  rep.verdict = XConditionReport::Verdict::holds;
  for (const MixedMonomial& lead : initial_ideal(rep.groebner)) {
    long long xdeg = 0;
    for (Exponent e : lead.x) xdeg += e;
    if (xdeg > 1) {
      rep.verdict = XConditionReport::Verdict::fails;
      rep.witness = lead;
      break;
    }
  }
  return rep;
}

/// Test helper: does a binomial reduce to zero against a reduced basis
/// under (orderT)? Used to spot-check saturation completeness.
inline bool reduces_to_zero(int n, const std::vector<std::pair<Monomial, int>>& gens,
                            const std::vector<ToricBinomial>& GB, const MixedMonomial& a,
                            const MixedMonomial& b) {
  using namespace toric_detail;
  Env env = make_env(n, gens);
  Cmp cmp = [&env](const Vec& A, const Vec& B) { return cmp_orderT(env, A, B); };
  std::vector<Bin> basis;
  for (const ToricBinomial& g : GB)
    basis.push_back(Bin{from_mixed(env, g.lead), from_mixed(env, g.trail)});
  auto h0 = orient(cmp, from_mixed(env, a), from_mixed(env, b));
  if (!h0) return true;
  // reduce lead repeatedly; when stuck, the binomial is in normal form
  Bin h = *h0;
  long long steps = 0;
  GBCaps caps;
  while (true) {
    bool hit = false;
    for (const Bin& g : basis) {
      if (!vec_divides(g.lead, h.lead)) continue;
      Vec t = rewrite(h.lead, g.lead, g.trail);
      auto o = orient(cmp, std::move(t), h.trail);
      if (!o) return true;
      h = std::move(*o);
      hit = true;
      break;
    }
    if (!hit) return false;
    if (++steps > caps.max_reductions) throw resource_error("reduction cap exceeded");
  }
}

} // namespace sympow
