#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "rigidroots/errors.hpp"
#include "rigidroots/exact_algebra.hpp"

using namespace rigid;

namespace {

double two_cos(int M) { return 2.0 * std::cos(std::numbers::pi / M); }

double to_double(const AlgebraicElement& e) {
  const double x = two_cos(e.field_m());
  double acc = 0;
  const auto cs = e.coefficients();
  for (std::size_t i = cs.size(); i-- > 0;) acc = acc * x + cs[i].get_d();
  return acc;
}

AlgebraicElement random_element(int M) {
  const int deg = minimal_polynomial(M).degree();
  std::vector<BigRational> cs;
  for (int i = 0; i < deg; ++i) {
    BigRational c(oracle::uniform(-9, 9), oracle::uniform(1, 4));
    c.canonicalize();
    cs.push_back(c);
  }
  return AlgebraicElement::from_coefficients(M, cs);
}

}  // namespace

TEST_CASE("small minimal polynomials") {
  CHECK(minimal_polynomial(2).poly == IntPolynomial{0, 1});
  CHECK(minimal_polynomial(3).poly == IntPolynomial{-1, 1});
  CHECK(minimal_polynomial(4).poly == IntPolynomial{-2, 0, 1});
  CHECK(minimal_polynomial(5).poly == IntPolynomial{-1, -1, 1});
  CHECK(minimal_polynomial(6).poly == IntPolynomial{-3, 0, 1});
  CHECK(minimal_polynomial(8).poly == IntPolynomial{2, 0, -4, 0, 1});
}

TEST_CASE("cyclotomic and chebyshev helpers") {
  CHECK(cyclotomic_polynomial(1) == IntPolynomial{-1, 1});
  CHECK(cyclotomic_polynomial(12) == IntPolynomial{1, 0, -1, 0, 1});
  CHECK(cyclotomic_polynomial(9) == IntPolynomial{1, 0, 0, 1, 0, 0, 1});
  CHECK(chebyshev_two_cos(0) == IntPolynomial{2});
  CHECK(chebyshev_two_cos(3) == IntPolynomial{0, -3, 0, 1});
  for (int n = 1; n <= 60; ++n) CHECK(euler_phi(n) == oracle::euler_phi(n));
}

TEST_CASE("minimal polynomial degree and certified annihilation for M <= 50") {
  for (int M = 2; M <= 50; ++M) {
    CAPTURE(M);
    const auto& mp = minimal_polynomial(M);
    CHECK(mp.degree() == oracle::euler_phi(2 * M) / 2);
    CHECK(mp.poly.coeffs().back() == 1);
    const Interval iv = evaluate_interval(mp.poly, M, 256);
    CHECK(iv.contains_zero());
    CHECK(iv.width_at_most_pow2(-64));
    // Double-precision oracle: the numeric value is tiny relative to the coefficient size.
    double acc = 0, scale = 0;
    const double x = two_cos(M);
    for (std::size_t i = mp.poly.coeffs().size(); i-- > 0;) {
      acc = acc * x + mp.poly.coeffs()[i].get_d();
      scale = scale * std::abs(x) + std::abs(mp.poly.coeffs()[i].get_d());
    }
    CHECK(std::abs(acc) <= 1e-9 * std::max(1.0, scale));
  }
}

TEST_CASE("minimal polynomial rejects M < 2") {
  CHECK_THROWS_AS(minimal_polynomial(1), UsageError);
  CHECK_THROWS_AS(minimal_polynomial(0), UsageError);
}

TEST_CASE("field identities") {
  const auto x4 = AlgebraicElement::generator(4);
  CHECK(x4 * x4 == AlgebraicElement::from_integer(4, 2));
  const auto x5 = AlgebraicElement::generator(5);
  CHECK(x5 * x5 == x5 + AlgebraicElement::from_integer(5, 1));  // golden ratio
  const auto x3 = AlgebraicElement::generator(3);
  CHECK(x3.is_integer());
  CHECK(x3 == AlgebraicElement::from_integer(3, 1));
  CHECK(AlgebraicElement::generator(2).is_zero());
  // 2cos(pi/3) inside Q(2cos(pi/6)) is 1; 2cos(pi/2) = 0.
  CHECK(two_cos_pi_over(3, 6) == AlgebraicElement::from_integer(6, 1));
  CHECK(two_cos_pi_over(2, 6).is_zero());
  CHECK(two_cos_pi_over(6, 6) == AlgebraicElement::generator(6));
  CHECK_THROWS_AS(two_cos_pi_over(4, 6), UsageError);
}

TEST_CASE("ring axioms on random elements") {
  for (int M : {3, 4, 5, 7, 8, 9, 12, 15}) {
    CAPTURE(M);
    for (int trial = 0; trial < 40; ++trial) {
      const auto a = random_element(M), b = random_element(M), c = random_element(M);
      const auto zero = AlgebraicElement(M), one = AlgebraicElement::from_integer(M, 1);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + zero == a);
      CHECK(a * one == a);
      CHECK((a - a).is_zero());
      CHECK(a + (-a) == zero);
      // Double oracle agrees with the exact product.
      const double expect = to_double(a) * to_double(b);
      CHECK(std::abs(to_double(a * b) - expect) <= 1e-7 * (1 + std::abs(expect)));
    }
  }
}

TEST_CASE("sign agrees with numeric value") {
  for (int M : {4, 5, 7, 10, 24}) {
    for (int trial = 0; trial < 60; ++trial) {
      const auto a = random_element(M);
      const double v = to_double(a);
      if (std::abs(v) < 1e-6) continue;
      CHECK(a.sign() == (v > 0 ? 1 : -1));
    }
  }
  CHECK(AlgebraicElement(7).sign() == 0);
  // x - 1 > 0 for M = 4, x^2 - 2 == 0 exactly.
  const auto x = AlgebraicElement::generator(4);
  CHECK((x - AlgebraicElement::from_integer(4, 1)).sign() == 1);
  CHECK((x * x - AlgebraicElement::from_integer(4, 2)).sign() == 0);
  // Nearly cancelling: F_k ratio approximations of the golden ratio x for M = 5.
  auto x5 = AlgebraicElement::generator(5);
  x5.scale(832040);
  CHECK((x5 - AlgebraicElement::from_integer(5, 1346269)).sign() == -1);
  x5 = AlgebraicElement::generator(5);
  x5.scale(1346269);
  CHECK((x5 - AlgebraicElement::from_integer(5, 2178309)).sign() == 1);
}

TEST_CASE("mixing fields is rejected") {
  const auto a = AlgebraicElement::generator(4), b = AlgebraicElement::generator(5);
  CHECK_THROWS_AS(a + b, UsageError);
  CHECK_THROWS_AS(a * b, UsageError);
}

TEST_CASE("text forms") {
  CHECK(IntPolynomial{-1, 0, 2, 0, 3, 0, 1}.to_string() == "x^6 + 3*x^4 + 2*x^2 - 1");
  CHECK(IntPolynomial{}.to_string() == "0");
  auto x = AlgebraicElement::generator(4);
  CHECK(x.scale(3).to_poly_string() == "3*x");
  CHECK(AlgebraicElement::from_integer(4, 6).to_poly_string() == "6");
  CHECK(AlgebraicElement::from_rational(5, BigRational(1, 2)).decimal() == "0.5");
}

TEST_CASE("rational elements round trip") {
  const BigRational r(-7, 3);
  const auto e = AlgebraicElement::from_rational(9, r);
  CHECK(e.is_rational());
  CHECK(!e.is_integer());
  CHECK(e.rational_value() == r);
  CHECK(e.denominator() == 3);
}

TEST_CASE("degree-three field") {
  CHECK(minimal_polynomial(7).poly == IntPolynomial{1, -2, -1, 1});
  CHECK(std::abs(evaluate_interval(IntPolynomial::x(), 7, 64).midpoint() - 1.8019377358048383) < 1e-12);
}

TEST_CASE("signs of specialised polynomials") {
  const IntPolynomial p{-1, 0, 2, 0, 3, 0, 1};
  CHECK(specialize(p, 4) == AlgebraicElement::from_integer(4, 23));  // 8 + 12 + 4 - 1
  CHECK(specialize(p, 4).sign() == 1);
  CHECK(AlgebraicElement::generator(3).sign() == 1);
  CHECK(specialize(IntPolynomial{0, 1, 0, 1}, 2).sign() == 0);
}

TEST_CASE("ring axioms with large coefficients") {
  for (int M : {5, 11, 20}) {
    const int deg = minimal_polynomial(M).degree();
    auto big = [&] {
      std::vector<BigRational> cs;
      for (int i = 0; i < deg; ++i) {
        BigRational c(oracle::uniform(-1000000, 1000000), oracle::uniform(1, 1000000));
        c.canonicalize();
        cs.push_back(c);
      }
      return AlgebraicElement::from_coefficients(M, cs);
    };
    for (int t = 0; t < 20; ++t) {
      const auto a = big(), b = big(), c = big();
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a - b == -(b - a));
    }
  }
}

TEST_CASE("signs agree with an independent 128-bit evaluation") {
  int compared = 0;
  for (int t = 0; t < 400; ++t) {
    const int M = static_cast<int>(oracle::uniform(2, 30));
    const int deg = static_cast<int>(oracle::uniform(0, 12));
    std::vector<BigInt> cs;
    for (int i = 0; i <= deg; ++i) cs.emplace_back(oracle::uniform(-50, 50));
    const IntPolynomial p(cs);
    // oracle: round-to-nearest Horner at 128 bits on the unreduced polynomial
    mpfr_t x, acc, theta;
    mpfr_inits2(128, x, acc, theta, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(theta, MPFR_RNDN);
    mpfr_div_ui(theta, theta, static_cast<unsigned long>(M), MPFR_RNDN);
    mpfr_cos(x, theta, MPFR_RNDN);
    mpfr_mul_2ui(x, x, 1, MPFR_RNDN);
    mpfr_set_ui(acc, 0, MPFR_RNDN);
    for (std::size_t i = cs.size(); i-- > 0;) {
      mpfr_mul(acc, acc, x, MPFR_RNDN);
      mpfr_add_z(acc, acc, cs[i].get_mpz_t(), MPFR_RNDN);
    }
    const double numeric = mpfr_get_d(acc, MPFR_RNDN);
    mpfr_clears(x, acc, theta, static_cast<mpfr_ptr>(nullptr));
    const AlgebraicElement e = specialize(p, M);
    CAPTURE(M);
    CAPTURE(p.to_string());
    if (e.is_zero()) {
      CHECK(std::abs(numeric) < 1e-25);
    } else if (std::abs(numeric) > 1e-20) {
      CHECK(e.sign() == (numeric > 0 ? 1 : -1));
      ++compared;
    }
  }
  CHECK(compared > 300);
}
