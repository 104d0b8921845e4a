#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "quc/poly.hpp"

using namespace quc;

namespace {

RationalPoly poly(std::vector<long> coeffs) {
  std::vector<Rational> v;
  for (long c : coeffs) v.emplace_back(c);
  return RationalPoly(std::move(v));
}

RationalPoly random_poly(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 4);
  int d = deg(rng);
  std::vector<Rational> v(d + 1);
  for (auto& c : v) {
    c = Rational(num(rng), den(rng));
    c.canonicalize();
  }
  if (v.back() == 0) v.back() = 1;
  return RationalPoly(std::move(v));
}

}  // namespace

TEST_CASE("basic arithmetic and normalization") {
  RationalPoly a = poly({1, 2, 3});
  RationalPoly b = poly({0, -2, -3});
  CHECK((a + b) == poly({1}));
  CHECK((a + b).degree() == 0);
  CHECK((a - a).is_zero());
  CHECK((a - a).degree() == -1);
  CHECK(poly({-1, 1}) * poly({1, 1}) == poly({-1, 0, 1}));
  CHECK(a.eval(Rational(2)) == Rational(17));
}

TEST_CASE("divmod is Euclidean") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    RationalPoly p = random_poly(rng, 8);
    RationalPoly d = random_poly(rng, 4);
    auto [q, r] = p.divmod(d);
    CHECK(q * d + r == p);
    CHECK(r.degree() < d.degree());
  }
  CHECK_THROWS_AS(poly({1}).divmod(RationalPoly()), std::invalid_argument);
}

TEST_CASE("cyclotomic polynomials on known values") {
  CHECK(cyclotomic_poly(1) == poly({-1, 1}));
  CHECK(cyclotomic_poly(2) == poly({1, 1}));
  CHECK(cyclotomic_poly(6) == poly({1, -1, 1}));
  CHECK(cyclotomic_poly(8) == poly({1, 0, 0, 0, 1}));
  CHECK(cyclotomic_poly(10) == poly({1, -1, 1, -1, 1}));
}

TEST_CASE("cyclotomic polynomials are monic integer of degree phi") {
  for (int m = 1; m <= 120; ++m) {
    const auto& phi = cyclotomic_poly(m);
    CHECK(phi.is_monic());
    CHECK(phi.has_integer_coeffs());
    CHECK(phi.degree() == euler_phi(m));
  }
}

TEST_CASE("product of cyclotomics over divisors gives x^n - 1") {
  for (int n = 1; n <= 80; ++n) {
    RationalPoly prod = RationalPoly::constant(1);
    for (int m = 1; m <= n; ++m)
      if (n % m == 0) prod = prod * cyclotomic_poly(m);
    CHECK(prod == RationalPoly::power_minus_one(n));
  }
}

TEST_CASE("real part transform on known values") {
  // x - 1 -> (x - 1)^2
  CHECK(real_part_transform(poly({-1, 1})) == poly({1, -2, 1}));
  // x - 1/2 -> Phi_6
  CHECK(real_part_transform(RationalPoly({std::vector<Rational>{Rational(-1, 2), 1}})) ==
        cyclotomic_poly(6));
  // x^2 - x/2 - 1/4 -> Phi_10
  CHECK(real_part_transform(
            RationalPoly({std::vector<Rational>{Rational(-1, 4), Rational(-1, 2), 1}})) ==
        cyclotomic_poly(10));
  CHECK_THROWS_AS(real_part_transform(poly({1, 2})), std::invalid_argument);
}

TEST_CASE("real part transform is monic palindromic of doubled degree") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    RationalPoly f = random_poly(rng, 6);
    // force monic
    std::vector<Rational> c = f.coeffs();
    c.back() = 1;
    f = RationalPoly(std::move(c));
    RationalPoly g = real_part_transform(f);
    CHECK(g.is_monic());
    CHECK(g.is_palindromic());
    CHECK(g.degree() == 2 * f.degree());
  }
}

TEST_CASE("kronecker test on known values") {
  CHECK(kronecker_cyclotomic_test(poly({1, -1, 1})) == std::vector<int>{6});
  CHECK(kronecker_cyclotomic_test(
            RationalPoly({std::vector<Rational>{1, Rational(-2, 3), 1}})) == std::nullopt);
  CHECK(kronecker_cyclotomic_test(poly({1, -1, 1, -1, 1})) == std::vector<int>{10});
}

TEST_CASE("kronecker test recovers random cyclotomic products") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> pick(1, 20);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<int> indices;
    RationalPoly g = RationalPoly::constant(1);
    int count = 1 + trial % 4;
    for (int i = 0; i < count; ++i) {
      int m = pick(rng);
      indices.push_back(m);
      g = g * cyclotomic_poly(m);
    }
    std::sort(indices.begin(), indices.end());
    auto found = kronecker_cyclotomic_test(g);
    REQUIRE(found.has_value());
    std::sort(found->begin(), found->end());
    CHECK(*found == indices);
  }
}

TEST_CASE("kronecker test rejects a cyclotomic product with a stray factor") {
  RationalPoly g = cyclotomic_poly(5) * poly({3, 1});  // (x + 3) never cyclotomic
  CHECK(kronecker_cyclotomic_test(g) == std::nullopt);
}

TEST_CASE("rational cosines in R are exactly 0, 1/2, 1") {
  // Via the transform: x - mu maps into a cyclotomic product iff
  // mu in {0, +-1/2, +-1} (Niven).
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 50);
  int accepted = 0;
  for (int trial = 0; trial < 1200; ++trial) {
    Rational mu(num(rng), den(rng));
    mu.canonicalize();
    while (mu < -1 || mu > 1) {
      mu = Rational(num(rng), den(rng));
      mu.canonicalize();
    }
    RationalPoly f(std::vector<Rational>{-mu, 1});
    bool in_R = kronecker_cyclotomic_test(real_part_transform(f)).has_value();
    bool expected = mu == 0 || mu == 1 || mu == -1 || mu == Rational(1, 2) || mu == Rational(-1, 2);
    CHECK(in_R == expected);
    accepted += in_R;
  }
  CHECK(accepted > 0);
}
