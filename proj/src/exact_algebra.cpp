#include "rigidroots/exact_algebra.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "rigidroots/errors.hpp"

namespace rigid {

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::x() { return IntPolynomial{0, 1}; }

BigInt IntPolynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
  }
  return IntPolynomial(std::move(r));
}

namespace {

// Shared by IntPolynomial and AlgebraicElement rendering.
template <class Coeff>
std::string render_polynomial(const std::vector<Coeff>& coeffs) {
  std::ostringstream out;
  bool first = true;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    const Coeff& c = coeffs[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Coeff mag = c < 0 ? Coeff(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << "x";
    if (i > 1) out << "^" << i;
  }
  if (first) return "0";
  return out.str();
}

}  // namespace

std::string IntPolynomial::to_string() const { return render_polynomial(coeffs_); }

IntPolynomial remainder_monic(IntPolynomial p, const IntPolynomial& modulus) {
  const int d = modulus.degree();
  if (d < 0 || modulus.coeffs().back() != 1) throw InvariantError("remainder_monic: modulus not monic");
  std::vector<BigInt> r = p.coeffs();
  const auto& m = modulus.coeffs();
  for (int i = static_cast<int>(r.size()) - 1; i >= d; --i) {
    BigInt c = r[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    for (int j = 0; j < d; ++j)
      mpz_submul(r[static_cast<std::size_t>(i - d + j)].get_mpz_t(), c.get_mpz_t(),
                 m[static_cast<std::size_t>(j)].get_mpz_t());
    r[static_cast<std::size_t>(i)] = 0;
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial exact_divide(const IntPolynomial& num, const IntPolynomial& den) {
  const int dd = den.degree();
  if (dd < 0 || den.coeffs().back() != 1) throw InvariantError("exact_divide: divisor not monic");
  if (num.degree() < dd) {
    if (!num.is_zero()) throw InvariantError("exact_divide: non-zero remainder");
    return {};
  }
  std::vector<BigInt> r = num.coeffs();
  std::vector<BigInt> q(static_cast<std::size_t>(num.degree() - dd + 1));
  const auto& dc = den.coeffs();
  for (int i = num.degree(); i >= dd; --i) {
    BigInt c = r[static_cast<std::size_t>(i)];
    q[static_cast<std::size_t>(i - dd)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j)
      mpz_submul(r[static_cast<std::size_t>(i - dd + j)].get_mpz_t(), c.get_mpz_t(),
                 dc[static_cast<std::size_t>(j)].get_mpz_t());
  }
  for (const auto& c : r)
    if (c != 0) throw InvariantError("exact_divide: non-zero remainder");
  return IntPolynomial(std::move(q));
}

int euler_phi(int n) {
  if (n < 1) throw UsageError("euler_phi: n must be positive");
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

IntPolynomial cyclotomic_memo(int n, std::map<int, IntPolynomial>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
  c.front() = -1;
  c.back() = 1;
  IntPolynomial p(std::move(c));
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = exact_divide(p, cyclotomic_memo(d, memo));
  memo.emplace(n, p);
  return p;
}

}  // namespace

IntPolynomial cyclotomic_polynomial(int n) {
  if (n < 1) throw UsageError("cyclotomic_polynomial: n must be positive");
  std::map<int, IntPolynomial> memo;
  return cyclotomic_memo(n, memo);
}

IntPolynomial chebyshev_two_cos(int k) {
  if (k < 0) throw UsageError("chebyshev_two_cos: k must be non-negative");
  IntPolynomial prev{2};
  if (k == 0) return prev;
  IntPolynomial cur = IntPolynomial::x();
  for (int i = 1; i < k; ++i) {
    IntPolynomial next = IntPolynomial::x() * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

namespace {

MinimalPolynomial build_minimal_polynomial(int M) {
  // Phi_{2M}(y) is palindromic of degree 2d; Phi/y^d = phi_d + sum_k phi_{d+k} (y^k + y^-k)
  // and y^k + y^-k = C_k(y + 1/y).
  const IntPolynomial phi = cyclotomic_polynomial(2 * M);
  const int d = phi.degree() / 2;
  IntPolynomial result = IntPolynomial::constant(phi.coeff(d));
  for (int k = 1; k <= d; ++k) {
    BigInt c = phi.coeff(d + k);
    if (c != phi.coeff(d - k)) throw InvariantError("cyclotomic polynomial is not palindromic");
    if (c == 0) continue;
    result += IntPolynomial::constant(c) * chebyshev_two_cos(k);
  }
  return MinimalPolynomial{M, std::move(result)};
}

}  // namespace

const MinimalPolynomial& minimal_polynomial(int M) {
  if (M < 2) throw UsageError("minimal_polynomial: M must be at least 2, got " + std::to_string(M));
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<MinimalPolynomial>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[M];
  if (!slot) slot = std::make_unique<MinimalPolynomial>(build_minimal_polynomial(M));
  return *slot;
}

// ---------------------------------------------------------------------------
// BigFloat / Interval

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(value_, mpfr_get_prec(o.value_));
  mpfr_set(value_, o.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(value_, mpfr_get_prec(o.value_));
  mpfr_swap(value_, o.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(value_, mpfr_get_prec(o.value_));
    mpfr_set(value_, o.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  if (this != &o) mpfr_swap(value_, o.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

bool Interval::contains_zero() const { return mpfr_sgn(lo.get()) <= 0 && mpfr_sgn(hi.get()) >= 0; }

int Interval::certain_sign() const {
  if (mpfr_sgn(lo.get()) > 0) return 1;
  if (mpfr_sgn(hi.get()) < 0) return -1;
  return 0;
}

bool Interval::width_at_most_pow2(long exponent) const {
  BigFloat w(std::max(lo.precision(), hi.precision()) + 8);
  mpfr_sub(w.get(), hi.get(), lo.get(), MPFR_RNDU);
  return mpfr_cmp_ui_2exp(w.get(), 1, exponent) <= 0;
}

double Interval::midpoint() const {
  BigFloat m(lo.precision() + 1);
  mpfr_add(m.get(), lo.get(), hi.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return mpfr_get_d(m.get(), MPFR_RNDN);
}

namespace {

void interval_mul(Interval& acc, const Interval& by, mpfr_prec_t prec) {
  BigFloat p[4] = {BigFloat(prec), BigFloat(prec), BigFloat(prec), BigFloat(prec)};
  BigFloat q[4] = {BigFloat(prec), BigFloat(prec), BigFloat(prec), BigFloat(prec)};
  const mpfr_srcptr a[2] = {acc.lo.get(), acc.hi.get()};
  const mpfr_srcptr b[2] = {by.lo.get(), by.hi.get()};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      mpfr_mul(p[2 * i + j].get(), a[i], b[j], MPFR_RNDD);
      mpfr_mul(q[2 * i + j].get(), a[i], b[j], MPFR_RNDU);
    }
  mpfr_min(acc.lo.get(), p[0].get(), p[1].get(), MPFR_RNDD);
  mpfr_min(acc.lo.get(), acc.lo.get(), p[2].get(), MPFR_RNDD);
  mpfr_min(acc.lo.get(), acc.lo.get(), p[3].get(), MPFR_RNDD);
  mpfr_max(acc.hi.get(), q[0].get(), q[1].get(), MPFR_RNDU);
  mpfr_max(acc.hi.get(), acc.hi.get(), q[2].get(), MPFR_RNDU);
  mpfr_max(acc.hi.get(), acc.hi.get(), q[3].get(), MPFR_RNDU);
}

Interval horner(const std::vector<BigInt>& coeffs, int M, mpfr_prec_t prec) {
  Interval acc(prec);
  if (coeffs.empty()) return acc;
  mpfr_set_z(acc.lo.get(), coeffs.back().get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(acc.hi.get(), coeffs.back().get_mpz_t(), MPFR_RNDU);
  if (coeffs.size() == 1) return acc;
  const Interval x = x_interval(M, prec);
  for (int i = static_cast<int>(coeffs.size()) - 2; i >= 0; --i) {
    interval_mul(acc, x, prec);
    mpfr_add_z(acc.lo.get(), acc.lo.get(), coeffs[static_cast<std::size_t>(i)].get_mpz_t(), MPFR_RNDD);
    mpfr_add_z(acc.hi.get(), acc.hi.get(), coeffs[static_cast<std::size_t>(i)].get_mpz_t(), MPFR_RNDU);
  }
  return acc;
}

}  // namespace

Interval x_interval(int M, mpfr_prec_t prec) {
  if (M < 2) throw UsageError("x_interval: M must be at least 2");
  Interval r(prec);
  BigFloat theta(prec + 16);
  // cos is decreasing on [0, pi/2], so an upper bound on the angle gives a lower bound on x.
  mpfr_const_pi(theta.get(), MPFR_RNDU);
  mpfr_div_ui(theta.get(), theta.get(), static_cast<unsigned long>(M), MPFR_RNDU);
  mpfr_cos(r.lo.get(), theta.get(), MPFR_RNDD);
  mpfr_const_pi(theta.get(), MPFR_RNDD);
  mpfr_div_ui(theta.get(), theta.get(), static_cast<unsigned long>(M), MPFR_RNDD);
  mpfr_cos(r.hi.get(), theta.get(), MPFR_RNDU);
  mpfr_mul_2ui(r.lo.get(), r.lo.get(), 1, MPFR_RNDD);
  mpfr_mul_2ui(r.hi.get(), r.hi.get(), 1, MPFR_RNDU);
  return r;
}

Interval evaluate_interval(const IntPolynomial& p, int M, mpfr_prec_t prec) {
  return horner(p.coeffs(), M, prec);
}

// ---------------------------------------------------------------------------
// AlgebraicElement

AlgebraicElement::AlgebraicElement(int M) : field_(&minimal_polynomial(M)), den_(1) {}

AlgebraicElement AlgebraicElement::from_integer(int M, long value) {
  AlgebraicElement r(M);
  if (value != 0) r.num_.emplace_back(value);
  return r;
}

AlgebraicElement AlgebraicElement::from_rational(int M, const BigRational& value) {
  return from_coefficients(M, {value});
}

AlgebraicElement AlgebraicElement::generator(int M) { return from_polynomial(M, IntPolynomial::x()); }

AlgebraicElement AlgebraicElement::from_coefficients(int M, const std::vector<BigRational>& coeffs) {
  AlgebraicElement r(M);
  BigInt den = 1;
  for (const auto& c : coeffs) den = lcm(den, BigInt(c.get_den()));
  r.num_.reserve(coeffs.size());
  for (const auto& c : coeffs) r.num_.push_back(BigInt(c.get_num()) * (den / BigInt(c.get_den())));
  r.den_ = den;
  r.reduce();
  r.normalize();
  return r;
}

AlgebraicElement AlgebraicElement::from_polynomial(int M, const IntPolynomial& p, const BigInt& den) {
  if (den <= 0) throw UsageError("AlgebraicElement: denominator must be positive");
  AlgebraicElement r(M);
  r.num_ = p.coeffs();
  r.den_ = den;
  r.reduce();
  r.normalize();
  return r;
}

std::vector<BigRational> AlgebraicElement::coefficients() const {
  std::vector<BigRational> out;
  out.reserve(num_.size());
  for (const auto& c : num_) {
    BigRational q(c, den_);
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

BigRational AlgebraicElement::rational_value() const {
  if (!is_rational()) throw UsageError("rational_value: element is irrational");
  if (num_.empty()) return 0;
  BigRational q(num_[0], den_);
  q.canonicalize();
  return q;
}

void AlgebraicElement::check_field(const AlgebraicElement& o) const {
  if (field_ != o.field_)
    throw UsageError("field mismatch: Q(2cos(pi/" + std::to_string(field_->m) + ")) vs Q(2cos(pi/" +
                     std::to_string(o.field_->m) + "))");
}

void AlgebraicElement::reduce() {
  const auto& m = field_->poly.coeffs();
  const int d = field_->poly.degree();
  for (int i = static_cast<int>(num_.size()) - 1; i >= d; --i) {
    mpz_class& top = num_[static_cast<std::size_t>(i)];
    if (top != 0) {
      for (int j = 0; j < d; ++j)
        mpz_submul(num_[static_cast<std::size_t>(i - d + j)].get_mpz_t(), top.get_mpz_t(),
                   m[static_cast<std::size_t>(j)].get_mpz_t());
    }
  }
  if (static_cast<int>(num_.size()) > d) num_.resize(static_cast<std::size_t>(d));
}

void AlgebraicElement::normalize() {
  while (!num_.empty() && num_.back() == 0) num_.pop_back();
  if (num_.empty()) {
    den_ = 1;
    return;
  }
  if (den_ == 1) return;
  BigInt g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (g != 1) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

AlgebraicElement AlgebraicElement::operator-() const {
  AlgebraicElement r = *this;
  for (auto& c : r.num_) mpz_neg(c.get_mpz_t(), c.get_mpz_t());
  return r;
}

AlgebraicElement& AlgebraicElement::operator+=(const AlgebraicElement& o) {
  check_field(o);
  if (o.num_.empty()) return *this;
  if (den_ == o.den_) {
    if (o.num_.size() > num_.size()) num_.resize(o.num_.size());
    for (std::size_t i = 0; i < o.num_.size(); ++i) num_[i] += o.num_[i];
  } else {
    for (auto& c : num_) c *= o.den_;
    if (o.num_.size() > num_.size()) num_.resize(o.num_.size());
    for (std::size_t i = 0; i < o.num_.size(); ++i)
      mpz_addmul(num_[i].get_mpz_t(), o.num_[i].get_mpz_t(), den_.get_mpz_t());
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

AlgebraicElement& AlgebraicElement::operator-=(const AlgebraicElement& o) { return *this += -o; }

AlgebraicElement& AlgebraicElement::operator*=(const AlgebraicElement& o) {
  check_field(o);
  if (num_.empty()) return *this;
  if (o.num_.empty()) {
    num_.clear();
    den_ = 1;
    return *this;
  }
  std::vector<BigInt> r(num_.size() + o.num_.size() - 1);
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    for (std::size_t j = 0; j < o.num_.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), num_[i].get_mpz_t(), o.num_[j].get_mpz_t());
  }
  num_ = std::move(r);
  den_ *= o.den_;
  reduce();
  normalize();
  return *this;
}

AlgebraicElement& AlgebraicElement::scale(long factor) {
  if (factor == 0) {
    num_.clear();
    den_ = 1;
    return *this;
  }
  for (auto& c : num_) c *= factor;
  normalize();
  return *this;
}

bool operator==(const AlgebraicElement& a, const AlgebraicElement& b) {
  a.check_field(b);
  return a.den_ == b.den_ && a.num_ == b.num_;
}

Interval AlgebraicElement::enclosure(mpfr_prec_t prec) const {
  Interval r = horner(num_, field_->m, prec);
  if (den_ != 1) {
    mpfr_div_z(r.lo.get(), r.lo.get(), den_.get_mpz_t(), MPFR_RNDD);
    mpfr_div_z(r.hi.get(), r.hi.get(), den_.get_mpz_t(), MPFR_RNDU);
  }
  return r;
}

int AlgebraicElement::sign() const {
  if (num_.empty()) return 0;
  if (num_.size() == 1) return sgn(num_[0]);
  // Non-zero canonical form means a non-zero real, so refinement terminates.
  for (mpfr_prec_t prec = 64; prec <= (mpfr_prec_t{1} << 24); prec *= 2) {
    const int s = horner(num_, field_->m, prec).certain_sign();
    if (s != 0) return s;
  }
  throw InvariantError("sign: interval refinement did not separate a non-zero element from 0");
}

std::string AlgebraicElement::decimal() const {
  if (num_.empty()) return "0";
  for (mpfr_prec_t prec = 128;; prec *= 2) {
    Interval e = enclosure(prec);
    BigFloat mid(prec + 1);
    mpfr_add(mid.get(), e.lo.get(), e.hi.get(), MPFR_RNDN);
    mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
    BigFloat width(prec + 1);
    mpfr_sub(width.get(), e.hi.get(), e.lo.get(), MPFR_RNDU);
    BigFloat tol(prec + 1);
    mpfr_abs(tol.get(), mid.get(), MPFR_RNDD);
    mpfr_div_2ui(tol.get(), tol.get(), 60, MPFR_RNDD);
    if (mpfr_cmp(width.get(), tol.get()) <= 0 || prec > (mpfr_prec_t{1} << 20)) {
      char* buf = nullptr;
      mpfr_asprintf(&buf, "%.12Rg", mid.get());
      std::string s(buf);
      mpfr_free_str(buf);
      return s;
    }
  }
}

std::string AlgebraicElement::to_text() const {
  std::ostringstream out;
  out << "[";
  const auto cs = coefficients();
  if (cs.empty()) out << "0";
  for (std::size_t i = 0; i < cs.size(); ++i) out << (i ? ", " : "") << cs[i].get_str();
  out << "] ~ " << decimal();
  return out.str();
}

std::string AlgebraicElement::to_poly_string() const { return render_polynomial(coefficients()); }

AlgebraicElement specialize(const SymbolicPolynomial& p, int M) { return AlgebraicElement::from_polynomial(M, p); }

AlgebraicElement two_cos_pi_over(int label, int M) {
  if (label < 1 || M % label != 0) throw UsageError("two_cos_pi_over: label must divide M");
  return AlgebraicElement::from_polynomial(M, chebyshev_two_cos(M / label));
}

}  // namespace rigid
