#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace sympow;
using testutil::ideal;
using testutil::mono;

namespace {

MixedMonomial mm(std::vector<Exponent> x, std::vector<Exponent> y) {
  return MixedMonomial{std::move(x), std::move(y)};
}

std::pair<std::vector<long long>, long long> image(
    int n, const std::vector<std::pair<Monomial, int>>& gens, const MixedMonomial& m) {
  std::vector<long long> xs(n, 0);
  long long t = 0;
  for (int i = 0; i < n; ++i) xs[i] = m.x[i];
  for (std::size_t j = 0; j < gens.size(); ++j) {
    for (int i = 0; i < n; ++i)
      xs[i] += static_cast<long long>(gens[j].first.deg(i)) * m.y[j];
    t += static_cast<long long>(gens[j].second) * m.y[j];
  }
  return {xs, t};
}

std::string mm_text(const MixedMonomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.x.size(); ++i)
    for (int e = 0; e < m.x[i]; ++e) s += "x" + std::to_string(i + 1);
  for (std::size_t j = 0; j < m.y.size(); ++j)
    for (int e = 0; e < m.y[j]; ++e) s += "y" + std::to_string(j + 1);
  return s.empty() ? "1" : s;
}

} // namespace

TEST_CASE("the block order on mixed monomials", "[toric]") {
  ReesGenerators R = rees_generators(squarefree_veronese(4, 3), 2);
  const auto& gens = R.generators;
  // y2*y3 beats x4*y1: higher y-degree
  CHECK(order_compare(mm({0, 0, 0, 0}, {0, 1, 1, 0, 0}), mm({0, 0, 0, 1}, {1, 0, 0, 0, 0}), 4,
                      gens) > 0);
  CHECK(order_compare(mm({1, 0, 0, 0}, {0, 0, 0, 0, 1}), mm({1, 0, 0, 0}, {0, 0, 0, 0, 1}), 4,
                      gens) == 0);
  // equal y-parts: lex tie-break on x with x1 > x2
  CHECK(order_compare(mm({1, 0, 0, 0}, {0, 0, 0, 0, 1}), mm({0, 1, 0, 0}, {0, 0, 0, 0, 1}), 4,
                      gens) > 0);
  // same total y-degree: revlex with y1 > ... > y5
  CHECK(order_compare(mm({0, 0, 0, 0}, {0, 0, 0, 1, 0}), mm({0, 0, 0, 0}, {0, 0, 0, 0, 1}), 4,
                      gens) > 0);
  // degree compatibility: higher y-degree always wins
  CHECK(order_compare(mm({0, 0, 0, 0}, {0, 0, 0, 0, 2}), mm({5, 5, 5, 5}, {1, 0, 0, 0, 0}), 4,
                      gens) > 0);
}

TEST_CASE("toric ideal of a prime", "[toric]") {
  ReesGenerators R = rees_generators(prime_ideal(make_prime({0, 1}), 2), 2);
  auto J = toric_ideal(2, R.generators);
  REQUIRE(J.size() == 1);
  auto GB = groebner_basis(2, R.generators, J);
  REQUIRE(GB.size() == 1);
  CHECK(GB[0].lead == mm({0, 1}, {1, 0}));  // x2 y1
  CHECK(GB[0].trail == mm({1, 0}, {0, 1})); // x1 y2
  auto init = initial_ideal(GB);
  REQUIRE(init.size() == 1);
  CHECK(init[0] == mm({0, 1}, {1, 0}));
}

TEST_CASE("single Rees generator gives the zero ideal", "[toric]") {
  MonomialIdeal I = ideal("x1*x2*x3");
  ReesGenerators R = rees_generators(I, 2);
  REQUIRE(R.generators.size() == 1);
  CHECK(toric_ideal(3, R.generators).empty());
  CHECK(groebner_basis(3, R.generators, {}).empty());
  CHECK(initial_ideal({}).empty());
}

TEST_CASE("golden initial ideal for the Veronese cube ideal", "[toric]") {
  ReesGenerators R = rees_generators(squarefree_veronese(4, 3), 2);
  auto J = toric_ideal(4, R.generators);
  auto GB = groebner_basis(4, R.generators, J);
  std::set<std::string> got;
  for (const MixedMonomial& m : initial_ideal(GB)) got.insert(mm_text(m));
  std::set<std::string> expect = {"x1y5y5", "x2y4", "x3y3", "x4y2", "y2y3",
                                  "y2y4",   "y2y5", "y3y4", "y3y5", "y4y5"};
  CHECK(got == expect);
}

TEST_CASE("kernel soundness and the Groebner fixed point", "[toric][property]") {
  for (const MonomialIdeal& I : {squarefree_veronese(4, 3), squarefree_veronese(3, 2)}) {
    ReesGenerators R = rees_generators(I, 3);
    auto J = toric_ideal(I.vars(), R.generators);
    for (const ToricBinomial& b : J)
      CHECK(image(I.vars(), R.generators, b.lead) == image(I.vars(), R.generators, b.trail));
    auto GB = groebner_basis(I.vars(), R.generators, J);
    for (const ToricBinomial& b : GB)
      CHECK(image(I.vars(), R.generators, b.lead) == image(I.vars(), R.generators, b.trail));
    // every S-pair of the reduced basis reduces to zero
    for (std::size_t i = 0; i < GB.size(); ++i)
      for (std::size_t j = i + 1; j < GB.size(); ++j) {
        MixedMonomial L;
        L.x.resize(I.vars());
        L.y.resize(R.generators.size());
        for (std::size_t t = 0; t < L.x.size(); ++t)
          L.x[t] = std::max(GB[i].lead.x[t], GB[j].lead.x[t]);
        for (std::size_t t = 0; t < L.y.size(); ++t)
          L.y[t] = std::max(GB[i].lead.y[t], GB[j].lead.y[t]);
        auto shift = [&](const ToricBinomial& b) {
          MixedMonomial s = L;
          for (std::size_t t = 0; t < s.x.size(); ++t)
            s.x[t] += b.trail.x[t] - b.lead.x[t];
          for (std::size_t t = 0; t < s.y.size(); ++t)
            s.y[t] += b.trail.y[t] - b.lead.y[t];
          return s;
        };
        CHECK(reduces_to_zero(I.vars(), R.generators, GB, shift(GB[i]), shift(GB[j])));
      }
  }
}

TEST_CASE("saturation completeness against random equal-image pairs", "[toric][property]") {
  std::mt19937_64 rng(61);
  for (auto [n, d] : std::vector<std::pair<int, int>>{{4, 3}, {4, 2}}) {
    MonomialIdeal I = squarefree_veronese(n, d);
    ReesGenerators R = rees_generators(I, n - d + 1);
    auto GB = groebner_basis(n, R.generators, toric_ideal(n, R.generators));
    const int m = static_cast<int>(R.generators.size());
    int tested = 0;
    for (int trial = 0; trial < 8000 && tested < 60; ++trial) {
      MixedMonomial a, b;
      a.x.resize(n);
      b.x.resize(n);
      a.y.resize(m);
      b.y.resize(m);
      for (int j = 0; j < m; ++j) {
        a.y[j] = rng() % 3;
        b.y[j] = rng() % 3;
      }
      auto ia = image(n, R.generators, a);
      auto ib = image(n, R.generators, b);
      if (ia.second != ib.second) continue;
      // pad the x parts to equalize the images
      for (int i = 0; i < n; ++i) {
        long long diff = ia.first[i] - ib.first[i];
        if (diff > 0)
          b.x[i] = static_cast<Exponent>(diff);
        else
          a.x[i] = static_cast<Exponent>(-diff);
      }
      ++tested;
      CHECK(reduces_to_zero(n, R.generators, GB, a, b));
    }
    CHECK(tested == 60);
  }
}

TEST_CASE("Rees relations of the maximal ideal are the generic 2x2 minors", "[toric]") {
  MonomialIdeal m3 = prime_ideal(make_prime({0, 1, 2}), 3);
  ReesGenerators R = rees_generators(m3, 2);
  REQUIRE(R.generators.size() == 3); // x_i t, ranked x1 t > x2 t > x3 t
  auto GB = groebner_basis(3, R.generators, toric_ideal(3, R.generators));
  REQUIRE(GB.size() == 3);
  std::set<std::string> got;
  for (const ToricBinomial& b : GB) got.insert(mm_text(b.lead) + "-" + mm_text(b.trail));
  std::set<std::string> expect = {"x2y1-x1y2", "x3y1-x1y3", "x3y2-x2y3"};
  CHECK(got == expect);
}

TEST_CASE("x-condition reports incompleteness below the stable horizon", "[toric]") {
  // at k_max = 1 the order-2 cover of I_{4,3} is still undiscovered
  XConditionReport r = check_x_condition(squarefree_veronese(4, 3), 1);
  CHECK(r.verdict == XConditionReport::Verdict::incomplete);
}

TEST_CASE("x-condition for small Veronese ideals", "[toric]") {
  XConditionReport r43 = check_x_condition(squarefree_veronese(4, 3), 2);
  CHECK(r43.verdict == XConditionReport::Verdict::holds);
  XConditionReport r32 = check_x_condition(squarefree_veronese(3, 2), 2);
  CHECK(r32.verdict == XConditionReport::Verdict::holds);
  XConditionReport r42 = check_x_condition(squarefree_veronese(4, 2), 3);
  CHECK(r42.verdict == XConditionReport::Verdict::holds);
}

TEST_CASE("initial generator shapes for small Veronese ideals", "[toric]") {
  // x_i y_j, y_j y_k, or x_i y_j y_k
  for (auto [n, d] : std::vector<std::pair<int, int>>{{3, 2}, {4, 3}, {4, 2}}) {
    MonomialIdeal I = squarefree_veronese(n, d);
    ReesGenerators R = rees_generators(I, n - d + 1);
    auto GB = groebner_basis(n, R.generators, toric_ideal(n, R.generators));
    for (const MixedMonomial& m : initial_ideal(GB)) {
      long long xd = 0, yd = 0;
      for (Exponent e : m.x) xd += e;
      for (Exponent e : m.y) yd += e;
      bool shape = (xd == 1 && yd == 1) || (xd == 0 && yd == 2) || (xd == 1 && yd == 2);
      CHECK(shape);
    }
  }
}
