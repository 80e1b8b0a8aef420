#pragma once

// Independent reference computations used to cross-check the library.
// They use plain doubles or rationals and share no code with the
// implementation under test.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using Mat3 = std::array<std::array<double, 3>, 3>;

inline Mat3 identity3() {
  Mat3 r{};
  for (int i = 0; i < 3; ++i) r[i][i] = 1.0;
  return r;
}

inline Mat3 mul(const Mat3& a, const Mat3& b) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

/// Cosine form of W(m): B(a1,a2) = B(a2,a3) = -cos(pi/m), B(a1,a3) = -1.
inline Mat3 form_w(int m) {
  const double c = std::cos(std::numbers::pi / m);
  return Mat3{{{1.0, -c, -1.0}, {-c, 1.0, -c}, {-1.0, -c, 1.0}}};
}

/// s_i(a_j) = a_j - 2B(a_j, a_i) a_i, so column j of s_i differs from e_j in row i only.
inline Mat3 generator(const Mat3& form, int i) {
  Mat3 s = identity3();
  for (int j = 0; j < 3; ++j) s[i - 1][j] -= 2.0 * form[j][i - 1];
  return s;
}

inline Mat3 eval(const std::string& word, int m) {
  const Mat3 form = form_w(m);
  Mat3 r = identity3();
  for (char ch : word) r = mul(r, generator(form, ch - '0'));
  return r;
}

inline double max_abs_diff(const Mat3& a, const Mat3& b) {
  double d = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
  return d;
}

/// Crossing word by merging the three sorted crossing-time lists with exact rationals.
inline std::string crossing_word(std::int64_t a, std::int64_t b) {
  struct Event {
    mpq_class t;
    char letter;
  };
  std::vector<Event> ev;
  for (std::int64_t k = 1; k < b; ++k) ev.push_back({mpq_class(k, b), '1'});
  for (std::int64_t k = 1; k < a + b; ++k) ev.push_back({mpq_class(k, a + b), '2'});
  for (std::int64_t k = 1; k < a; ++k) ev.push_back({mpq_class(k, a), '3'});
  for (auto& e : ev) e.t.canonicalize();
  std::stable_sort(ev.begin(), ev.end(), [](const Event& x, const Event& y) { return x.t < y.t; });
  std::string s;
  for (const auto& e : ev) s.push_back(e.letter);
  return s;
}

inline std::int64_t q(std::int64_t a, std::int64_t b, int m) { return a * a + b * b - m * a * b; }

inline std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline int euler_phi(int n) {
  int c = 0;
  for (int k = 1; k <= n; ++k) c += gcd(k, n) == 1;
  return c;
}

/// Fixed-seed generator so failures reproduce.
inline std::mt19937_64& rng() {
  static std::mt19937_64 g(0x5eed1234ULL);
  return g;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

}  // namespace oracle
