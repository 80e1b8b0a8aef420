#pragma once

// Reduction of P+ to reduced positive roots of H(m).
//
// For [a,b] in P+ that is not a root (a > b), locate n with
// F_{n-1}/F_n < b/a < F_n/F_{n+1} and move to one of
//   [a,b] - m kappa [F_n, F_{n-1}],          kappa  = -F_{n-1} a + F_n b > 0
//   [a,b] + m kappa' [F_{n+1}, F_n],         kappa' = -F_n a + F_{n+1} b < 0
// whichever lies in P+. Both moves preserve the reflection s([a,b]) and
// strictly decrease Q, so iteration ends at a root.

#include <cstdint>
#include <vector>

#include "rigidroots/rank2_roots.hpp"

namespace rigid {

enum class Branch { SubtractFn = 1, SubtractFn1 = 2 };

struct ReductionStep {
  LatticeVector input;
  int n = 0;
  std::int64_t kappa = 0;       // -F_{n-1} a + F_n b (on the a > b orientation)
  std::int64_t kappa_next = 0;  // -F_n a + F_{n+1} b
  Branch branch = Branch::SubtractFn;
  LatticeVector output;
  std::int64_t q_before = 0;
  std::int64_t q_after = 0;
  bool swapped = false;     // step ran on [b,a] under the 1 <-> 3 mirror
  bool both_valid = false;  // both candidates were in P+

  /// The kappa of the move actually taken, as a positive count.
  std::int64_t applied_kappa() const { return branch == Branch::SubtractFn ? kappa : -kappa_next; }
  friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

struct ReductionTrace {
  int m = 0;
  LatticeVector start;
  std::vector<ReductionStep> steps;
  LatticeVector result;
  RootClass result_class;

  /// Whether s(result) equals s(start) only after the 1 <-> 3 relabelling.
  /// Every swapped step is mirrored back, so this is always false.
  bool net_relabel() const { return false; }
  friend bool operator==(const ReductionTrace&, const ReductionTrace&) = default;
};

/// Tie rule when both candidates lie in P+.
enum class ChoicePolicy {
  SmallerQ,   // smaller Q, then branch 1
  Alternate,  // the candidate SmallerQ would reject
};

/// The n with F_{n-1}/F_n < b/a < F_n/F_{n+1}; requires a > b and v not a root.
int locate_interval(const LatticeVector& v, int m);

ReductionStep reduce_step(const LatticeVector& v, int m, ChoicePolicy policy = ChoicePolicy::SmallerQ);

ReductionTrace reduce(const LatticeVector& v, int m, ChoicePolicy policy = ChoicePolicy::SmallerQ);

/// [a + j m b, b] for the least j >= 0 giving a first coordinate >= 1.
LatticeVector shift_normalize(const LatticeVector& v, int m);

}  // namespace rigid
