#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace sympow;
using testutil::ideal;
using testutil::mono;

TEST_CASE("minimalize drops divisible generators", "[core]") {
  CHECK(ideal("x1,x1*x2") == ideal("x1", 2));
  CHECK(MonomialIdeal::make(3, {}).is_zero());
  CHECK(ideal("x1*x2*x3,x1*x2*x4,x1*x3*x4,x2*x3*x4,x1*x2*x3*x4") ==
        squarefree_veronese(4, 3));
}

TEST_CASE("minimalize is idempotent and order independent", "[core][property]") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    std::vector<Monomial> gens;
    for (int t = 0; t < 8; ++t) gens.push_back(testutil::random_monomial(rng, n, 3));
    MonomialIdeal a = MonomialIdeal::make(n, gens);
    std::shuffle(gens.begin(), gens.end(), rng);
    MonomialIdeal b = MonomialIdeal::make(n, gens);
    CHECK(a == b);
    CHECK(MonomialIdeal::make(n, a.gens()) == a);
  }
}

TEST_CASE("containment of monomials", "[core]") {
  MonomialIdeal I43 = squarefree_veronese(4, 3);
  CHECK(contains(I43, mono({1, 1, 1, 0})));
  CHECK_FALSE(contains(I43, mono({2, 1, 0, 0})));
  CHECK_FALSE(contains(MonomialIdeal::zero(2), mono({5, 5})));
}

TEST_CASE("multiply", "[core]") {
  CHECK(multiply(ideal("x1,x2", 3), ideal("x3", 3)) == ideal("x1*x3,x2*x3"));
  CHECK(multiply(ideal("x1,x2"), ideal("x1,x2")) == ideal("x1^2,x1*x2,x2^2"));
  CHECK(transversal(4, {{0, 1}, {2, 3}}) == ideal("x1*x3,x1*x4,x2*x3,x2*x4"));
  CHECK(contains(multiply(ideal("x1,x2"), ideal("x1,x2")), mono({1, 1})));
}

TEST_CASE("intersect", "[core]") {
  CHECK(intersect(ideal("x1", 2), ideal("x2", 2)) == ideal("x1*x2"));
  MonomialIdeal I = ideal("x1^2,x2*x3");
  CHECK(intersect(I, MonomialIdeal::unit(3)) == I);
  MonomialIdeal meet = MonomialIdeal::unit(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      meet = intersect(meet, prime_ideal(make_prime({i, j}), 4));
  CHECK(meet == squarefree_veronese(4, 3));
}

TEST_CASE("colon", "[core]") {
  CHECK(colon(ideal("x1^3*x2*x3*x4"), mono({2, 2, 2, 0})) == ideal("x1*x4", 4));
  MonomialIdeal I = ideal("x1*x2^2,x3");
  CHECK(colon(I, mono({0, 0, 0})) == I);
  CHECK(colon(ideal("x1*x2,x1*x3"), mono({1, 0, 0})) == ideal("x2,x3", 3));
}

TEST_CASE("power", "[core]") {
  CHECK(power(ideal("x1,x2"), 2) == ideal("x1^2,x1*x2,x2^2"));
  CHECK(power(ideal("x1*x2*x3"), 3) == ideal("x1^3*x2^3*x3^3"));
  CHECK(power(ideal("x1,x2"), 0) == MonomialIdeal::unit(2));

  // I_{4,3}^2: sums of two squarefree degree-3 vectors, expanded directly
  MonomialIdeal I = squarefree_veronese(4, 3);
  std::vector<Monomial> sums;
  for (const Monomial& g : I.gens())
    for (const Monomial& h : I.gens()) sums.push_back(mul(g, h));
  CHECK(power(I, 2) == MonomialIdeal::make(4, sums));
}

TEST_CASE("graded component", "[core]") {
  MonomialIdeal L = graded_component(symbolic_power(squarefree_veronese(4, 3), 2), 6);
  CHECK(L.num_gens() == 14);
  CHECK(to_string(L) ==
        "x1^3*x2*x3*x4,x1^2*x2^2*x3^2,x1^2*x2^2*x3*x4,x1^2*x2^2*x4^2,x1^2*x2*x3^2*x4,"
        "x1^2*x2*x3*x4^2,x1^2*x3^2*x4^2,x1*x2^3*x3*x4,x1*x2^2*x3^2*x4,x1*x2^2*x3*x4^2,"
        "x1*x2*x3^3*x4,x1*x2*x3^2*x4^2,x1*x2*x3*x4^3,x2^2*x3^2*x4^2");
  MonomialIdeal I = squarefree_veronese(4, 3);
  CHECK(graded_component(I, 3) == I);
  CHECK(graded_component(ideal("x1", 2), 2) == ideal("x1^2,x1*x2"));
  CHECK(graded_component(I, 2).is_zero());
}

TEST_CASE("graded component recurrence", "[core][property]") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    MonomialIdeal I = testutil::random_ideal(rng, 3, 4, 3);
    for (int d = I.alpha(); d < I.alpha() + 2; ++d) {
      MonomialIdeal md = multiply(prime_ideal(make_prime({0, 1, 2}), 3),
                                  graded_component(I, d));
      std::vector<Monomial> extra;
      for (const Monomial& g : I.gens())
        if (g.degree() == d + 1) extra.push_back(g);
      MonomialIdeal rhs = add(md, MonomialIdeal::make(3, extra));
      CHECK(graded_component(I, d + 1) == graded_component(rhs, d + 1));
    }
  }
}

TEST_CASE("restrict below", "[core]") {
  MonomialIdeal prod = multiply(ideal("x1,x2", 3), ideal("x2,x3", 3));
  CHECK(restrict_below(prod, mono({1, 1, 1})) == ideal("x1*x2,x1*x3,x2*x3"));
  MonomialIdeal I = ideal("x1^2*x2,x3^3");
  CHECK(restrict_below(I, I.generator_lcm()) == I);
  CHECK(restrict_below(squarefree_veronese(4, 3), mono({1, 1, 1, 0})) == ideal("x1*x2*x3", 4));
}

TEST_CASE("gcd factor", "[core]") {
  auto [u, J] = gcd_factor(ideal("x1^2*x2,x1^2*x3"));
  CHECK(u == mono({2, 0, 0}));
  CHECK(J == ideal("x2,x3", 3));
  auto [v, K] = gcd_factor(squarefree_veronese(4, 3));
  CHECK(v.is_one());
  CHECK(K == squarefree_veronese(4, 3));
  // x1^{a1-1} x2^{a2-1} x3^{a3-1} (x1x2, x1x3, x2x3) with a = (3,2,2)
  MonomialIdeal I = veronese_type({3, 6, {3, 2, 2}});
  auto [w, M] = gcd_factor(I);
  CHECK(w == mono({2, 1, 1}));
  CHECK(M == ideal("x1*x2,x1*x3,x2*x3"));
  CHECK(scale(w, M) == I);
}

TEST_CASE("gcd factor round trip", "[core][property]") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    MonomialIdeal I = testutil::random_ideal(rng, 4, 5, 3);
    auto [u, J] = gcd_factor(I);
    CHECK(scale(u, J) == I);
    auto [u2, J2] = gcd_factor(J);
    CHECK(u2.is_one());
  }
}

TEST_CASE("membership oracles over a degree box", "[core][property]") {
  std::mt19937_64 rng(17);
  std::vector<Monomial> box = testutil::degree_box(3, 6);
  for (int trial = 0; trial < 15; ++trial) {
    MonomialIdeal I = testutil::random_ideal(rng, 3, 4, 2);
    MonomialIdeal J = testutil::random_ideal(rng, 3, 4, 2);
    MonomialIdeal meet = intersect(I, J);
    Monomial m0 = testutil::random_monomial(rng, 3, 2);
    MonomialIdeal quot = colon(I, m0);
    for (const Monomial& m : box) {
      CHECK(contains(meet, m) == (contains(I, m) && contains(J, m)));
      CHECK(contains(quot, m) == contains(I, mul(m, m0)));
    }
  }
}

TEST_CASE("text grammar round trip", "[core]") {
  CHECK(to_string(parse_ideal("0", 3)) == "0");
  CHECK(to_string(parse_ideal("1", 3)) == "1");
  CHECK(parse_ideal(" x2 ^ 2 * x1 , x3 ") == ideal("x1*x2^2,x3"));
  std::vector<const char*> samples = {"x1*x2^2,x3", "0", "1", "x1^5", "x1*x2,x1*x3,x2*x3"};
  for (const char* s : samples) {
    MonomialIdeal I = parse_ideal(s, 3);
    CHECK(parse_ideal(to_string(I), 3) == I);
    CHECK(to_string(parse_ideal(to_string(I), 3)) == to_string(I));
  }
  CHECK_THROWS_AS(parse_ideal("x0", 3), structural_error);
  CHECK_THROWS_AS(parse_ideal("x4", 3), structural_error);
  CHECK_THROWS_AS(parse_ideal("y1", 3), structural_error);
  CHECK_THROWS_AS(parse_ideal("", 3), structural_error);
}

TEST_CASE("json round trip", "[core]") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    MonomialIdeal I = testutil::random_ideal(rng, 4, 5, 3);
    nlohmann::json j = to_json(I);
    CHECK(ideal_from_json(j) == I);
    CHECK(to_json(ideal_from_json(j)).dump() == j.dump());
  }
}

TEST_CASE("exponent overflow is a hard error", "[core]") {
  Monomial big(std::vector<Exponent>{std::numeric_limits<Exponent>::max()});
  CHECK_THROWS_AS(mul(big, big), structural_error);
  CHECK_THROWS_AS(MonomialIdeal::make(2, {mono({1, 0}), mono({0, 1, 0})}), structural_error);
}
