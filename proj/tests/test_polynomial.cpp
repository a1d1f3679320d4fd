#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "franel/arith.hpp"
#include "franel/polynomial.hpp"

using franel::Integer;
using franel::IntPoly;

namespace {

IntPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(-1, 6);
  std::uniform_int_distribution<long> coef(-9, 9);
  int d = deg(rng);
  std::vector<Integer> cs;
  for (int i = 0; i <= d; ++i) cs.emplace_back(coef(rng));
  return IntPoly(std::move(cs));
}

// Straightforward power-basis evaluation, independent of Horner.
Integer eval_naive(const IntPoly& p, const Integer& x) {
  Integer acc = 0;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    acc += p.coeffs()[i] * franel::int_pow(x, i);
  return acc;
}

}  // namespace

TEST_CASE("construction normalizes trailing zeros") {
  IntPoly p({Integer(1), Integer(2), Integer(0), Integer(0)});
  CHECK(p.degree() == 1);
  CHECK(p.coeffs().size() == 2);

  IntPoly z({Integer(0), Integer(0)});
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK(z == IntPoly());

  CHECK(IntPoly::constant(0).is_zero());
  CHECK(IntPoly::constant(7).degree() == 0);
  IntPoly m = IntPoly::monomial(3, 4);
  CHECK(m.degree() == 4);
  CHECK(m.coeff(4) == 3);
  CHECK(m.coeff(2) == 0);
  CHECK(m.coeff(9) == 0);  // beyond the degree reads as zero
  CHECK(IntPoly::monomial(0, 5).is_zero());
}

TEST_CASE("ring laws hold on random polynomials") {
  std::mt19937 rng(900718);
  for (int trial = 0; trial < 200; ++trial) {
    IntPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(poly_add(a, b) == poly_add(b, a));
    CHECK(poly_mul(a, b) == poly_mul(b, a));
    CHECK(poly_add(poly_add(a, b), c) == poly_add(a, poly_add(b, c)));
    CHECK(poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c)));
    CHECK(poly_mul(a, poly_add(b, c)) == poly_add(poly_mul(a, b), poly_mul(a, c)));
    CHECK(poly_add(a, IntPoly()) == a);
    CHECK(poly_mul(a, IntPoly::constant(1)) == a);
    CHECK(poly_mul(a, IntPoly()).is_zero());
    CHECK(poly_scale(a, -3) == poly_mul(a, IntPoly::constant(-3)));
    CHECK(poly_scale(a, 0).is_zero());
  }
}

TEST_CASE("poly_pow is iterated multiplication") {
  std::mt19937 rng(62);
  for (int trial = 0; trial < 60; ++trial) {
    IntPoly a = random_poly(rng);
    IntPoly acc = IntPoly::constant(1);
    for (unsigned long e = 0; e <= 5; ++e) {
      CHECK(poly_pow(a, e) == acc);
      acc = poly_mul(acc, a);
    }
  }
  CHECK(poly_pow(IntPoly(), 0) == IntPoly::constant(1));  // 0^0 convention
  CHECK(poly_pow(IntPoly(), 3).is_zero());
}

TEST_CASE("(1+x)^n has binomial coefficients") {
  IntPoly one_plus_x({Integer(1), Integer(1)});
  for (unsigned long n : {0ul, 1ul, 5ul, 17ul, 40ul}) {
    IntPoly p = poly_pow(one_plus_x, n);
    REQUIRE(p.degree() == static_cast<long>(n));
    for (std::size_t k = 0; k <= n; ++k)
      CHECK(p.coeff(k) == franel::binomial(static_cast<long>(n), static_cast<long>(k)));
  }
}

TEST_CASE("derivative is linear and satisfies the Leibniz rule") {
  std::mt19937 rng(271828);
  for (int trial = 0; trial < 150; ++trial) {
    IntPoly p = random_poly(rng), q = random_poly(rng);
    IntPoly lhs = poly_derivative(poly_mul(p, q));
    IntPoly rhs = poly_add(poly_mul(poly_derivative(p), q), poly_mul(p, poly_derivative(q)));
    CHECK(lhs == rhs);
    CHECK(poly_derivative(poly_add(p, q)) ==
          poly_add(poly_derivative(p), poly_derivative(q)));
  }
  CHECK(poly_derivative(IntPoly::constant(5)).is_zero());
  CHECK(poly_derivative(IntPoly()).is_zero());
  CHECK(poly_derivative(IntPoly::monomial(2, 3)) == IntPoly::monomial(6, 2));
}

TEST_CASE("poly_eval is a ring homomorphism and matches naive evaluation") {
  std::mt19937 rng(161803);
  std::uniform_int_distribution<long> xs(-12, 12);
  for (int trial = 0; trial < 150; ++trial) {
    IntPoly p = random_poly(rng), q = random_poly(rng);
    Integer x = xs(rng);
    CHECK(poly_eval(p, x) == eval_naive(p, x));
    CHECK(poly_eval(poly_add(p, q), x) == poly_eval(p, x) + poly_eval(q, x));
    CHECK(poly_eval(poly_mul(p, q), x) == poly_eval(p, x) * poly_eval(q, x));
  }
  CHECK(poly_eval(IntPoly(), 123) == 0);
}

TEST_CASE("foata_lhs lists the cubed row coefficients") {
  for (long n = 0; n <= 30; ++n) {
    IntPoly p = franel::foata_lhs(n);
    REQUIRE(p.degree() == n);
    for (long k = 0; k <= n; ++k) {
      Integer c = franel::binomial(n, k);
      CHECK(p.coeff(k) == c * c * c);
    }
  }
}

TEST_CASE("foata_rhs at n = 2 is 1 + 8x + x^2") {
  IntPoly p = franel::foata_rhs(2);
  CHECK(p == IntPoly({Integer(1), Integer(8), Integer(1)}));
}

TEST_CASE("the two cube-sum polynomial forms agree coefficientwise") {
  for (long n = 0; n <= 25; ++n) CHECK(franel::foata_lhs(n) == franel::foata_rhs(n));
}

TEST_CASE("evaluating either form at 1 sums the cubed row") {
  for (long n = 0; n <= 25; ++n) {
    Integer cubes = 0;
    for (long k = 0; k <= n; ++k) {
      Integer c = franel::binomial(n, k);
      cubes += c * c * c;
    }
    CHECK(poly_eval(franel::foata_lhs(n), 1) == cubes);
    CHECK(poly_eval(franel::foata_rhs(n), 1) == cubes);
  }
}

TEST_CASE("foata polynomials reject negative n") {
  CHECK_THROWS_AS((void)franel::foata_lhs(-1), std::invalid_argument);
  CHECK_THROWS_AS((void)franel::foata_rhs(-2), std::invalid_argument);
}
