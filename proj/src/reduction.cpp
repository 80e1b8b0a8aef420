#include "rigidroots/reduction.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "rigidroots/errors.hpp"

namespace rigid {

namespace {

std::int64_t narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("reduction arithmetic overflows int64");
  return static_cast<std::int64_t>(v);
}

void require_positive_primitive(const LatticeVector& v, const char* who) {
  if (!in_positive_primitive(v))
    throw UsageError(std::string(who) + ": " + v.to_string() + " is not a primitive positive vector");
}

struct FTriple {
  std::int64_t u, v, w;  // F_{n-1}, F_n, F_{n+1}
};

FTriple f_triple(int n, int m) {
  const auto f = f_sequence(m, n + 2);
  return {f[static_cast<std::size_t>(n - 1)], f[static_cast<std::size_t>(n)], f[static_cast<std::size_t>(n + 1)]};
}

}  // namespace

int locate_interval(const LatticeVector& v, int m) {
  require_positive_primitive(v, "locate_interval");
  if (v.a <= v.b) throw UsageError("locate_interval: requires a > b, got " + v.to_string());
  if (classify(v, m).is_root()) throw UsageError("locate_interval: " + v.to_string() + " is already a root");
  const __int128 a = v.a, b = v.b;
  // b/a > F_0/F_1 = 0 always; walk up until b/a < F_n/F_{n+1}.
  __int128 prev = 0, cur = 1;  // F_{n-1}, F_n
  for (int n = 1;; ++n) {
    const __int128 next = static_cast<__int128>(m) * cur - prev;  // F_{n+1}
    const __int128 lhs = b * next, rhs = cur * a;
    if (lhs < rhs) return n;
    if (lhs == rhs)
      throw InvariantError("locate_interval: b/a equals F_n/F_{n+1}, which forces Q = 1 for " + v.to_string());
    // F grows at least linearly; past this size b/a must sit above the limit ratio, i.e. Q <= 0.
    if (next > (static_cast<__int128>(1) << 62))
      throw InvariantError("locate_interval: b/a is not below the limit ratio although " + v.to_string() +
                           " is not a root");
    prev = cur;
    cur = next;
  }
}

ReductionStep reduce_step(const LatticeVector& v, int m, ChoicePolicy policy) {
  require_positive_primitive(v, "reduce_step");
  if (classify(v, m).is_root()) throw UsageError("reduce_step: " + v.to_string() + " is already a root");
  ReductionStep step;
  step.input = v;
  step.swapped = v.a < v.b;
  const LatticeVector x = step.swapped ? v.swapped() : v;
  // a == b only for [1,1], which is always a root.
  step.n = locate_interval(x, m);
  const auto [u, fv, w] = f_triple(step.n, m);
  const __int128 a = x.a, b = x.b, mm = m;
  step.kappa = narrow(-u * a + fv * b);
  step.kappa_next = narrow(-fv * a + w * b);
  const LatticeVector cand1{narrow(a - mm * step.kappa * fv), narrow(b - mm * step.kappa * u)};
  const LatticeVector cand2{narrow(a + mm * step.kappa_next * w), narrow(b + mm * step.kappa_next * fv)};
  const bool ok1 = cand1.a > 0 && cand1.b > 0;
  const bool ok2 = cand2.a > 0 && cand2.b > 0;
  if (!ok1 && !ok2)
    throw InvariantError("reduce_step: neither candidate lies in P+ for " + x.to_string() + " (m=" +
                         std::to_string(m) + ")");
  step.both_valid = ok1 && ok2;
  bool take_first = ok1;
  if (step.both_valid) {
    const std::int64_t q1 = q_form(cand1, m), q2 = q_form(cand2, m);
    take_first = q1 <= q2;
    if (policy == ChoicePolicy::Alternate) take_first = !take_first;
  }
  step.branch = take_first ? Branch::SubtractFn : Branch::SubtractFn1;
  const LatticeVector out = take_first ? cand1 : cand2;
  step.output = step.swapped ? out.swapped() : out;
  step.q_before = q_form(v, m);
  step.q_after = q_form(step.output, m);
  if (step.q_after >= step.q_before)
    throw InvariantError("reduce_step: Q did not decrease at " + v.to_string());
  if (std::gcd(step.output.a, step.output.b) != 1)
    throw InvariantError("reduce_step: output " + step.output.to_string() + " is not primitive");
  return step;
}

ReductionTrace reduce(const LatticeVector& v, int m, ChoicePolicy policy) {
  require_positive_primitive(v, "reduce");
  ReductionTrace trace;
  trace.m = m;
  trace.start = v;
  LatticeVector cur = v;
  while (!classify(cur, m).is_root()) {
    trace.steps.push_back(reduce_step(cur, m, policy));
    cur = trace.steps.back().output;
  }
  trace.result = cur;
  trace.result_class = classify(cur, m);
  return trace;
}

LatticeVector shift_normalize(const LatticeVector& v, int m) {
  if (m < 2) throw UsageError("shift_normalize: m must be at least 2");
  if (v.b <= 0) throw UsageError("shift_normalize: second coordinate must be positive, got " + v.to_string());
  if (std::gcd(v.a, v.b) != 1) throw UsageError("shift_normalize: " + v.to_string() + " is not primitive");
  if (v.a >= 1) return v;
  const __int128 step = static_cast<__int128>(m) * v.b;
  // least j with a + j*step >= 1
  const __int128 j = (1 - static_cast<__int128>(v.a) + step - 1) / step;
  return {narrow(v.a + j * step), v.b};
}

}  // namespace rigid
