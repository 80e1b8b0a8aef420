#include "rigidroots/rank2_roots.hpp"

#include <numeric>
#include <stdexcept>

#include "rigidroots/errors.hpp"

namespace rigid {

namespace {

void check_m(int m) {
  if (m < 2) throw UsageError("m must be at least 2, got " + std::to_string(m));
}

std::int64_t narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("lattice arithmetic overflows int64");
  return static_cast<std::int64_t>(v);
}

}  // namespace

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

bool in_positive_primitive(const LatticeVector& v) { return v.a > 0 && v.b > 0 && std::gcd(v.a, v.b) == 1; }

std::int64_t q_form(const LatticeVector& v, int m) {
  const __int128 a = v.a, b = v.b;
  return narrow(a * a + b * b - static_cast<__int128>(m) * a * b);
}

std::string to_string(RootKind k) {
  switch (k) {
    case RootKind::RealRoot: return "real";
    case RootKind::ImaginaryRoot: return "imaginary";
    case RootKind::NotRoot: return "not_root";
  }
  return "?";
}

RootClass classify(const LatticeVector& v, int m) {
  check_m(m);
  RootClass rc;
  rc.reduced = v.a != 0 && v.b != 0 && std::gcd(v.a, v.b) == 1;
  if (v.a == 0 && v.b == 0) {
    rc.kind = RootKind::NotRoot;
  } else {
    const std::int64_t q = q_form(v, m);
    rc.kind = q == 1 ? RootKind::RealRoot : q <= 0 ? RootKind::ImaginaryRoot : RootKind::NotRoot;
  }
  // "reduced" is a property of roots only
  if (!rc.is_root()) rc.reduced = false;
  return rc;
}

LatticeVector sigma1(const LatticeVector& v, int m) {
  return {narrow(-static_cast<__int128>(v.a) + static_cast<__int128>(m) * v.b), v.b};
}

LatticeVector sigma2(const LatticeVector& v, int m) {
  return {v.a, narrow(-static_cast<__int128>(v.b) + static_cast<__int128>(m) * v.a)};
}

namespace {

std::vector<std::int64_t> recurrence(int m, int count, std::int64_t x0, std::int64_t x1) {
  check_m(m);
  if (count < 2) throw UsageError("sequence length must be at least 2");
  std::vector<std::int64_t> out{x0, x1};
  out.reserve(static_cast<std::size_t>(count));
  while (static_cast<int>(out.size()) < count) {
    const std::size_t n = out.size();
    out.push_back(narrow(static_cast<__int128>(m) * out[n - 1] - out[n - 2]));
  }
  return out;
}

}  // namespace

std::vector<std::int64_t> f_sequence(int m, int count) { return recurrence(m, count, 0, 1); }

std::vector<std::int64_t> e_sequence(int m, int count) { return recurrence(m, count, 1, 1); }

std::vector<LatticeVector> enumerate_reduced_positive(int m, std::int64_t bound) {
  check_m(m);
  if (bound < 1) throw UsageError("bound must be at least 1");
  std::vector<LatticeVector> out;
  for (std::int64_t a = 1; a <= bound; ++a)
    for (std::int64_t b = 1; b <= bound; ++b) {
      const LatticeVector v{a, b};
      if (std::gcd(a, b) == 1 && q_form(v, m) <= 1) out.push_back(v);
    }
  return out;
}

std::vector<LatticeVector> enumerate_positive_primitive(std::int64_t bound) {
  if (bound < 1) throw UsageError("bound must be at least 1");
  std::vector<LatticeVector> out;
  for (std::int64_t a = 1; a <= bound; ++a)
    for (std::int64_t b = 1; b <= bound; ++b)
      if (std::gcd(a, b) == 1) out.push_back({a, b});
  return out;
}

}  // namespace rigid
