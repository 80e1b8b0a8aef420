#pragma once

// Exact arithmetic in the real cyclotomic field Q(x), x = 2cos(pi/M).
//
// Elements are stored as integer polynomials in x over a common positive
// denominator, reduced modulo the (monic, integral) minimal polynomial of x.
// Because the minimal polynomial is irreducible, two elements are equal as
// real numbers exactly when their canonical forms agree.

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rigid {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Dense polynomial over Z in ascending degree, trailing zeros trimmed.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial x();

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(int i) const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Human form, e.g. "x^6 + 3*x^4 + 2*x^2 - 1".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Integer polynomial in x with x left generic (no modulus applied).
using SymbolicPolynomial = IntPolynomial;

/// Exact quotient num / den for a monic divisor; throws InvariantError if
/// the division leaves a remainder.
IntPolynomial exact_divide(const IntPolynomial& num, const IntPolynomial& den);

/// Remainder of p modulo a monic polynomial.
IntPolynomial remainder_monic(IntPolynomial p, const IntPolynomial& modulus);

int euler_phi(int n);

/// n-th cyclotomic polynomial, built by dividing y^n - 1 by Phi_d for every
/// proper divisor d of n.
IntPolynomial cyclotomic_polynomial(int n);

/// C_k with C_0 = 2, C_1 = x, C_{k+1} = x C_k - C_{k-1}; C_k(2cos t) = 2cos(kt).
IntPolynomial chebyshev_two_cos(int k);

struct MinimalPolynomial {
  int m = 0;
  IntPolynomial poly;  // monic, degree phi(2m)/2

  int degree() const { return poly.degree(); }
};

/// Minimal polynomial of 2cos(pi/M) over Q. Cached per M; safe to call from
/// several threads. Throws UsageError for M < 2.
const MinimalPolynomial& minimal_polynomial(int M);

/// Owning RAII wrapper around an mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 64);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

 private:
  mpfr_t value_;
};

/// Closed interval [lo, hi] with outward-rounded endpoints.
struct Interval {
  BigFloat lo;
  BigFloat hi;

  explicit Interval(mpfr_prec_t prec) : lo(prec), hi(prec) {}

  bool contains_zero() const;
  /// +1 / -1 when the interval lies strictly on one side of zero, else 0.
  int certain_sign() const;
  /// True when hi - lo <= 2^exponent.
  bool width_at_most_pow2(long exponent) const;
  double midpoint() const;
};

/// Certified enclosure of 2cos(pi/M).
Interval x_interval(int M, mpfr_prec_t prec);

/// Certified enclosure of p(2cos(pi/M)).
Interval evaluate_interval(const IntPolynomial& p, int M, mpfr_prec_t prec);

class AlgebraicElement {
 public:
  /// Zero of Q(2cos(pi/M)).
  explicit AlgebraicElement(int M);

  static AlgebraicElement from_integer(int M, long value);
  static AlgebraicElement from_rational(int M, const BigRational& value);
  /// x itself.
  static AlgebraicElement generator(int M);
  /// Polynomial with rational coefficients, reduced modulo the minimal polynomial.
  static AlgebraicElement from_coefficients(int M, const std::vector<BigRational>& coeffs);
  static AlgebraicElement from_polynomial(int M, const IntPolynomial& p, const BigInt& den = 1);

  int field_m() const { return field_->m; }
  const MinimalPolynomial& field() const { return *field_; }

  /// Rational coefficients in ascending degree; empty for zero.
  std::vector<BigRational> coefficients() const;
  const std::vector<BigInt>& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const { return num_.empty(); }
  bool is_rational() const { return num_.size() <= 1; }
  bool is_integer() const { return is_rational() && den_ == 1; }
  /// Only meaningful when is_rational().
  BigRational rational_value() const;

  AlgebraicElement operator-() const;
  AlgebraicElement& operator+=(const AlgebraicElement& o);
  AlgebraicElement& operator-=(const AlgebraicElement& o);
  AlgebraicElement& operator*=(const AlgebraicElement& o);
  friend AlgebraicElement operator+(AlgebraicElement a, const AlgebraicElement& b) { return a += b; }
  friend AlgebraicElement operator-(AlgebraicElement a, const AlgebraicElement& b) { return a -= b; }
  friend AlgebraicElement operator*(AlgebraicElement a, const AlgebraicElement& b) { return a *= b; }
  friend bool operator==(const AlgebraicElement& a, const AlgebraicElement& b);
  friend bool operator!=(const AlgebraicElement& a, const AlgebraicElement& b) { return !(a == b); }

  /// Multiply by an integer without going through the general product.
  AlgebraicElement& scale(long factor);

  /// Sign of the real number, decided exactly (interval refinement).
  int sign() const;

  Interval enclosure(mpfr_prec_t prec) const;
  /// 12 significant digits.
  std::string decimal() const;
  /// Canonical text: "[c0, c1, ...] ~ 12-digit decimal".
  std::string to_text() const;
  /// Polynomial in x, e.g. "3*x", "1/2*x^2 - 1".
  std::string to_poly_string() const;

 private:
  AlgebraicElement(const MinimalPolynomial* field) : field_(field), den_(1) {}
  void check_field(const AlgebraicElement& o) const;
  void reduce();
  void normalize();

  const MinimalPolynomial* field_;
  std::vector<BigInt> num_;
  BigInt den_;
};

inline int sign(const AlgebraicElement& a) { return a.sign(); }

/// Reduce an integer polynomial in generic x into Q(2cos(pi/M)).
AlgebraicElement specialize(const SymbolicPolynomial& p, int M);

/// 2cos(pi/label) inside Q(2cos(pi/M)); label must divide M.
AlgebraicElement two_cos_pi_over(int label, int M);

}  // namespace rigid
