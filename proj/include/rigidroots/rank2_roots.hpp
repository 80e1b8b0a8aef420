#pragma once

// Root lattice of the rank-2 Kac-Moody algebra H(m) with Cartan matrix
// ((2, -m), (-m, 2)). [a, b] is a root exactly when a^2 + b^2 - mab <= 1.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace rigid {

struct LatticeVector {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
  std::string to_string() const { return "[" + std::to_string(a) + "," + std::to_string(b) + "]"; }
  LatticeVector swapped() const { return {b, a}; }
};

/// a > 0, b > 0, gcd(a, b) = 1.
bool in_positive_primitive(const LatticeVector& v);

std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Q([a,b]) = a^2 + b^2 - m a b. Throws std::overflow_error outside int64.
std::int64_t q_form(const LatticeVector& v, int m);

enum class RootKind { RealRoot, ImaginaryRoot, NotRoot };

struct RootClass {
  RootKind kind = RootKind::NotRoot;
  bool reduced = false;

  bool is_root() const { return kind != RootKind::NotRoot; }
  friend bool operator==(const RootClass&, const RootClass&) = default;
};

std::string to_string(RootKind k);

RootClass classify(const LatticeVector& v, int m);

LatticeVector sigma1(const LatticeVector& v, int m);
LatticeVector sigma2(const LatticeVector& v, int m);

/// F_0 = 0, F_1 = 1, F_n = m F_{n-1} - F_{n-2}; first `count` terms.
std::vector<std::int64_t> f_sequence(int m, int count);
/// E_0 = E_1 = 1, E_n = m E_{n-1} - E_{n-2}.
std::vector<std::int64_t> e_sequence(int m, int count);

/// Every reduced positive root with 1 <= a, b <= bound, lexicographic.
std::vector<LatticeVector> enumerate_reduced_positive(int m, std::int64_t bound);

/// Every element of P+ with 1 <= a, b <= bound, lexicographic.
std::vector<LatticeVector> enumerate_positive_primitive(std::int64_t bound);

}  // namespace rigid
