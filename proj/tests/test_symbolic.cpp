#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace sympow;
using testutil::ideal;
using testutil::mono;

TEST_CASE("golden symbolic square of the Veronese cube ideal", "[symbolic]") {
  MonomialIdeal I = squarefree_veronese(4, 3);
  CHECK(to_string(symbolic_power(I, 2)) ==
        "x1*x2*x3*x4,x1^2*x2^2*x3^2,x1^2*x2^2*x4^2,x1^2*x3^2*x4^2,x2^2*x3^2*x4^2");
  CHECK(symbolic_power(I, 1) == I);
  MonomialIdeal T = transversal(3, {{0, 1}, {1, 2}});
  CHECK(symbolic_power(T, 3) == power(T, 3));
}

TEST_CASE("symbolic power rejects zero and unit ideals", "[symbolic]") {
  CHECK_THROWS_AS(symbolic_power(MonomialIdeal::zero(2), 1), domain_error);
  CHECK_THROWS_AS(symbolic_power(MonomialIdeal::unit(2), 1), domain_error);
  CHECK_THROWS_AS(symbolic_power(ideal("x1"), 0), domain_error);
}

TEST_CASE("powers coincide verdicts", "[symbolic]") {
  MonomialIdeal B = principal_borel(2, {0, 1, 1}); // B(x1 x2^2)
  for (auto [k, eq] : powers_coincide(B, 3)) CHECK(eq);

  auto verdicts = powers_coincide(squarefree_veronese(4, 3), 2);
  CHECK(verdicts[0] == std::pair<int, bool>{1, true});
  CHECK(verdicts[1] == std::pair<int, bool>{2, false});

  MonomialIdeal P2 = transversal(4, {{0, 1}, {2, 3}});
  for (auto [k, eq] : powers_coincide(P2, 3)) CHECK(eq);
}

TEST_CASE("generator degree sets", "[symbolic]") {
  CHECK(generator_degree_set(squarefree_veronese(4, 3), 2) == std::vector<int>{4, 6});
  CHECK(generator_degree_set(squarefree_veronese(5, 3), 4) == std::vector<int>{8, 10, 12});
  MonomialIdeal I = ideal("x1^2,x2*x3");
  CHECK(generator_degree_set(I, 1) == std::vector<int>{2});
}

TEST_CASE("pipeline agrees with the naive definition", "[symbolic][property]") {
  std::mt19937_64 rng(31);
  SymbolicOptions naive{true};
  for (int trial = 0; trial < 25; ++trial) {
    MonomialIdeal I = testutil::random_ideal(rng, 3, 4, 2);
    for (int k = 1; k <= 3; ++k)
      CHECK(symbolic_power(I, k) == symbolic_power(I, k, naive));
  }
  // include squarefree shapes on more variables
  for (int trial = 0; trial < 10; ++trial) {
    MonomialIdeal I = testutil::random_squarefree_ideal(rng, 4, 4);
    for (int k = 1; k <= 2; ++k)
      CHECK(symbolic_power(I, k) == symbolic_power(I, k, naive));
  }
}

TEST_CASE("containment and superadditivity", "[symbolic][property]") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 15; ++trial) {
    MonomialIdeal I = testutil::random_ideal(rng, 3, 4, 2);
    CHECK(symbolic_power(I, 1) == I);
    MonomialIdeal s1 = symbolic_power(I, 1);
    MonomialIdeal s2 = symbolic_power(I, 2);
    MonomialIdeal s3 = symbolic_power(I, 3);
    CHECK(contains(s2, power(I, 2)));
    CHECK(contains(s3, power(I, 3)));
    CHECK(contains(s3, multiply(s1, s2)));
  }
}

TEST_CASE("scaling and disjoint product laws against the naive route", "[symbolic][property]") {
  std::mt19937_64 rng(41);
  SymbolicOptions naive{true};
  for (int trial = 0; trial < 20; ++trial) {
    MonomialIdeal I = testutil::random_ideal(rng, 3, 3, 2);
    Monomial u = testutil::random_monomial(rng, 3, 2);
    for (int k = 1; k <= 2; ++k) {
      MonomialIdeal lhs = symbolic_power(scale(u, I), k, naive);
      MonomialIdeal rhs = scale(pow(u, k), symbolic_power(I, k, naive));
      CHECK(lhs == rhs);
    }
  }
  for (int trial = 0; trial < 12; ++trial) {
    // two random factors on disjoint variable blocks of a 4-variable ring
    MonomialIdeal A = testutil::random_ideal(rng, 2, 3, 2);
    MonomialIdeal B = testutil::random_ideal(rng, 2, 3, 2);
    std::vector<Monomial> ga, gb;
    for (const Monomial& g : A.gens())
      ga.push_back(mono({g.deg(0), g.deg(1), 0, 0}));
    for (const Monomial& g : B.gens())
      gb.push_back(mono({0, 0, g.deg(0), g.deg(1)}));
    MonomialIdeal A4 = MonomialIdeal::make(4, ga);
    MonomialIdeal B4 = MonomialIdeal::make(4, gb);
    MonomialIdeal prod = multiply(A4, B4);
    for (int k = 1; k <= 2; ++k) {
      MonomialIdeal lhs = symbolic_power(prod, k, naive);
      MonomialIdeal rhs = multiply(symbolic_power(A4, k, naive), symbolic_power(B4, k, naive));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("disjoint product factor finder", "[symbolic]") {
  CHECK(disjoint_product_factors(transversal(4, {{0, 1}, {2, 3}})).size() == 2);
  CHECK(disjoint_product_factors(transversal(3, {{0, 1}, {1, 2}})).size() == 1);
  CHECK(disjoint_product_factors(ideal("x1,x2*x3")).size() == 1);
  CHECK(disjoint_product_factors(ideal("x1*x2,x3*x4")).size() == 1);
  MonomialIdeal prod = multiply(squarefree_veronese_on(5, {0, 1, 2}, 2),
                                prime_ideal(make_prime({3, 4}), 5));
  auto factors = disjoint_product_factors(prod);
  REQUIRE(factors.size() == 2);
  MonomialIdeal back = MonomialIdeal::unit(5);
  for (const auto& F : factors) back = multiply(back, F);
  CHECK(back == prod);
}

TEST_CASE("generator lifting for minimal intersection type", "[symbolic][property]") {
  std::vector<MonomialIdeal> instances = {
      squarefree_veronese(4, 3), squarefree_veronese(4, 2), squarefree_veronese(5, 3),
      power(prime_ideal(make_prime({0, 1}), 3), 2),
      intersect(power(prime_ideal(make_prime({0, 1, 2}), 4), 2),
                prime_ideal(make_prime({0, 3}), 4)),
      transversal(4, {{0, 1}, {2, 3}})};
  for (const MonomialIdeal& I : instances) {
    REQUIRE(is_minimal_intersection_type(I).has_value());
    for (int k = 2; k <= 3; ++k) {
      MonomialIdeal S = symbolic_power(I, k);
      for (const Monomial& u : I.gens()) {
        Monomial uk = pow(u, k);
        bool found = false;
        for (const Monomial& g : S.gens()) found = found || g == uk;
        CHECK(found);
      }
      CHECK(S.omega() >= I.omega() * k);
    }
  }
}

TEST_CASE("Veronese closed forms for alpha and omega", "[symbolic]") {
  for (int n = 3; n <= 6; ++n)
    for (int d = 2; d <= n - 1; ++d) {
      MonomialIdeal I = squarefree_veronese(n, d);
      for (int k = 1; k <= 4; ++k) {
        MonomialIdeal S = symbolic_power(I, k);
        int m_low = (k + (n - d + 1) - 1) / (n - d + 1);
        CHECK(S.alpha() == (d - 1) * m_low + k);
        CHECK(S.omega() == d * k);
      }
    }
}

TEST_CASE("Veronese symbolic powers as sums of Veronese products", "[symbolic]") {
  for (int n = 4; n <= 6; n += 2) {
    int d = 3;
    MonomialIdeal I = squarefree_veronese(n, d);
    for (int k = 2; k <= 4; k += 2) {
      // sum over m and compositions s_1+...+s_m = k-m with 0 <= s_i <= n-d
      MonomialIdeal sum = MonomialIdeal::zero(n);
      for (int m = 1; m <= k; ++m) {
        std::vector<int> s(m, 0);
        std::function<void(int, int)> rec = [&](int pos, int rem) {
          if (pos == m) {
            if (rem != 0) return;
            MonomialIdeal prod = MonomialIdeal::unit(n);
            for (int i = 0; i < m; ++i) prod = multiply(prod, squarefree_veronese(n, d + s[i]));
            sum = add(sum, prod);
            return;
          }
          for (int v = 0; v <= std::min(n - d, rem); ++v) {
            s[pos] = v;
            rec(pos + 1, rem - v);
          }
        };
        rec(0, k - m);
      }
      CHECK(sum == symbolic_power(I, k));
    }
  }
}

TEST_CASE("edge-ideal symbolic powers match the explicit cover formula", "[symbolic]") {
  // I_{n,2} is the intersection of the P_{[n] minus i}, so
  // I_{n,2}^{(k)} is the intersection of their k-th powers
  for (int n = 4; n <= 5; ++n) {
    MonomialIdeal I = squarefree_veronese(n, 2);
    for (int k = 1; k <= 3; ++k) {
      std::vector<std::pair<MonomialPrime, int>> factors;
      for (int i = 0; i < n; ++i) {
        std::vector<int> supp;
        for (int v = 0; v < n; ++v)
          if (v != i) supp.push_back(v);
        factors.emplace_back(make_prime(supp), k);
      }
      CHECK(symbolic_power(I, k) == intersect_prime_powers(factors, n));
    }
  }
}

TEST_CASE("symbolic power report", "[symbolic]") {
  SymbolicPowerReport r = symbolic_power_report(squarefree_veronese(4, 3), 2);
  CHECK(r.k == 2);
  CHECK(r.alpha == 4);
  CHECK(r.omega == 6);
  CHECK(r.degrees == std::vector<int>{4, 6, 6, 6, 6});
  CHECK_FALSE(r.equals_ordinary);
}
