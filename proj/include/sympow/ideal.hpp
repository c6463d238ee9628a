#pragma once

#include <algorithm>
#include <functional>
#include <utility>
#include <vector>

#include "monomial.hpp"

namespace sympow {

/// A monomial ideal, held as its unique minimal monomial generating set in
/// canonical order. The zero ideal has no generators; the unit ideal has the
/// single generator 1.
class MonomialIdeal {
public:
  MonomialIdeal() : n_(0) {}

  static MonomialIdeal zero(int n) { return MonomialIdeal(n, {}); }

  static MonomialIdeal unit(int n) { return MonomialIdeal(n, {Monomial::one(n)}); }

  /// Build from an arbitrary generating set: drops divisibility-redundant
  /// members, dedupes and sorts. Idempotent.
  static MonomialIdeal make(int n, std::vector<Monomial> gens) {
    for (const Monomial& g : gens)
      if (g.vars() != n) throw structural_error("generator has wrong variable count");
    std::sort(gens.begin(), gens.end(), canonical_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    for (const Monomial& g : gens) {
      bool redundant = false;
      for (const Monomial& h : kept) {
        if (h.degree() > g.degree()) break;
        if (divides(h, g)) { redundant = true; break; }
      }
      if (!redundant) kept.push_back(g);
    }
    MonomialIdeal I;
    I.n_ = n;
    I.gens_ = std::move(kept);
    return I;
  }

  int vars() const { return n_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  int num_gens() const { return static_cast<int>(gens_.size()); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
  bool is_proper() const { return !is_unit(); }

  /// alpha(I): minimal generator degree. Requires a nonzero ideal.
  int alpha() const {
    if (is_zero()) throw domain_error("alpha of zero ideal");
    return gens_.front().degree();
  }

  /// omega(I): maximal generator degree.
  int omega() const {
    if (is_zero()) throw domain_error("omega of zero ideal");
    return gens_.back().degree();
  }

  bool is_equigenerated() const { return is_zero() || alpha() == omega(); }

  bool is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Monomial& g) { return g.is_squarefree(); });
  }

  std::vector<int> support() const {
    std::vector<char> seen(n_, 0);
    for (const Monomial& g : gens_)
      for (int i : g.support()) seen[i] = 1;
    std::vector<int> s;
    for (int i = 0; i < n_; ++i)
      if (seen[i]) s.push_back(i);
    return s;
  }

  bool is_fully_supported() const { return static_cast<int>(support().size()) == n_; }

  /// Componentwise max of the generators (exponent of x_i in lcm G(I)).
  Monomial generator_lcm() const {
    if (is_zero()) throw domain_error("lcm of zero ideal");
    Monomial m = gens_.front();
    for (std::size_t i = 1; i < gens_.size(); ++i) m = lcm(m, gens_[i]);
    return m;
  }

  bool operator==(const MonomialIdeal& o) const { return n_ == o.n_ && gens_ == o.gens_; }
  bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

private:
  MonomialIdeal(int n, std::vector<Monomial> gens) : n_(n), gens_(std::move(gens)) {}

  int n_;
  std::vector<Monomial> gens_;
};

inline MonomialIdeal minimalize(int n, std::vector<Monomial> gens) {
  return MonomialIdeal::make(n, std::move(gens));
}

inline bool contains(const MonomialIdeal& I, const Monomial& m) {
  if (m.vars() != I.vars()) throw structural_error("ambient mismatch");
  for (const Monomial& g : I.gens())
    if (divides(g, m)) return true;
  return false;
}

/// I subseteq J, tested generator-wise.
inline bool contains(const MonomialIdeal& J, const MonomialIdeal& I) {
  for (const Monomial& g : I.gens())
    if (!contains(J, g)) return false;
  return true;
}

inline MonomialIdeal multiply(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.vars() != J.vars()) throw structural_error("ambient mismatch");
  if (I.is_zero() || J.is_zero()) return MonomialIdeal::zero(I.vars());
  std::vector<Monomial> prods;
  prods.reserve(I.gens().size() * J.gens().size());
  for (const Monomial& g : I.gens())
    for (const Monomial& h : J.gens()) prods.push_back(mul(g, h));
  return MonomialIdeal::make(I.vars(), std::move(prods));
}

inline MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.vars() != J.vars()) throw structural_error("ambient mismatch");
  if (I.is_zero() || J.is_zero()) return MonomialIdeal::zero(I.vars());
  std::vector<Monomial> meets;
  meets.reserve(I.gens().size() * J.gens().size());
  for (const Monomial& g : I.gens())
    for (const Monomial& h : J.gens()) meets.push_back(lcm(g, h));
  return MonomialIdeal::make(I.vars(), std::move(meets));
}

/// I : (m)  =  ({ g / gcd(g, m) : g in G(I) }).
inline MonomialIdeal colon(const MonomialIdeal& I, const Monomial& m) {
  if (m.vars() != I.vars()) throw structural_error("ambient mismatch");
  std::vector<Monomial> quots;
  quots.reserve(I.gens().size());
  for (const Monomial& g : I.gens()) quots.push_back(div(g, gcd(g, m)));
  return MonomialIdeal::make(I.vars(), std::move(quots));
}

/// k-th ordinary power by square-and-multiply; power(I, 0) is the unit ideal.
inline MonomialIdeal power(const MonomialIdeal& I, int k) {
  if (k < 0) throw domain_error("negative power");
  if (k == 0) return MonomialIdeal::unit(I.vars());
  MonomialIdeal base = I;
  MonomialIdeal acc = MonomialIdeal::unit(I.vars());
  int e = k;
  while (e > 0) {
    if (e & 1) acc = multiply(acc, base);
    e >>= 1;
    if (e > 0) base = multiply(base, base);
  }
  return acc;
}

/// Calls fn on every monomial of total degree d in n variables.
inline void for_each_monomial_of_degree(int n, int d,
                                        const std::function<void(const Monomial&)>& fn) {
  std::vector<Exponent> cur(n, 0);
  std::function<void(int, int)> rec = [&](int i, int rem) {
    if (i == n - 1) {
      cur[i] = rem;
      fn(Monomial(cur));
      cur[i] = 0;
      return;
    }
    for (int e = 0; e <= rem; ++e) {
      cur[i] = e;
      rec(i + 1, rem - e);
    }
    cur[i] = 0;
  };
  if (n == 0) {
    if (d == 0) fn(Monomial(std::vector<Exponent>{}));
    return;
  }
  rec(0, d);
}

/// I_<d>: the ideal generated by all degree-d monomials of I. Zero when
/// d < alpha(I).
inline MonomialIdeal graded_component(const MonomialIdeal& I, int d) {
  if (d < 0) throw domain_error("negative degree");
  if (I.is_zero()) return MonomialIdeal::zero(I.vars());
  std::vector<Monomial> out;
  for (const Monomial& g : I.gens()) {
    int rem = d - g.degree();
    if (rem < 0) continue;
    for_each_monomial_of_degree(I.vars(), rem,
                                [&](const Monomial& m) { out.push_back(mul(g, m)); });
  }
  return MonomialIdeal::make(I.vars(), std::move(out));
}

/// I^{<= a}: generated by the generators with exponent vector <= a.
/// Filtering generators suffices: any monomial of I below a is a multiple of
/// a generator that is also below a.
inline MonomialIdeal restrict_below(const MonomialIdeal& I, const Monomial& a) {
  if (a.vars() != I.vars()) throw structural_error("ambient mismatch");
  std::vector<Monomial> out;
  for (const Monomial& g : I.gens())
    if (divides(g, a)) out.push_back(g);
  return MonomialIdeal::make(I.vars(), std::move(out));
}

/// Squarefree part I^{<= 1}.
inline MonomialIdeal squarefree_part(const MonomialIdeal& I) {
  return restrict_below(I, Monomial(std::vector<Exponent>(I.vars(), 1)));
}

/// Factor I = u * J with u = gcd(G(I)) and gcd(J) = 1.
inline std::pair<Monomial, MonomialIdeal> gcd_factor(const MonomialIdeal& I) {
  if (I.is_zero()) throw domain_error("gcd_factor of zero ideal");
  Monomial u = I.gens().front();
  for (std::size_t i = 1; i < I.gens().size(); ++i) u = gcd(u, I.gens()[i]);
  std::vector<Monomial> quots;
  quots.reserve(I.gens().size());
  for (const Monomial& g : I.gens()) quots.push_back(div(g, u));
  return {u, MonomialIdeal::make(I.vars(), std::move(quots))};
}

/// Principal ideal (m).
inline MonomialIdeal principal(const Monomial& m) {
  return MonomialIdeal::make(m.vars(), {m});
}

/// Scale an ideal by a monomial: (u) * I.
inline MonomialIdeal scale(const Monomial& u, const MonomialIdeal& I) {
  std::vector<Monomial> out;
  out.reserve(I.gens().size());
  for (const Monomial& g : I.gens()) out.push_back(mul(u, g));
  return MonomialIdeal::make(I.vars(), std::move(out));
}

/// Ideal sum, minimalized.
inline MonomialIdeal add(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.vars() != J.vars()) throw structural_error("ambient mismatch");
  std::vector<Monomial> gens = I.gens();
  gens.insert(gens.end(), J.gens().begin(), J.gens().end());
  return MonomialIdeal::make(I.vars(), std::move(gens));
}

} // namespace sympow
