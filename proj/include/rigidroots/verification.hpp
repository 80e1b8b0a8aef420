#pragma once

// Batch drivers: the surjectivity sweep with its image census, and the
// lemma identity suites. All results are deterministic in ordering.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rigidroots/coxeter.hpp"
#include "rigidroots/rank2_roots.hpp"
#include "rigidroots/reduction.hpp"

namespace rigid {

struct VerificationReport {
  int m = 0;
  std::int64_t bound = 0;
  std::int64_t pairs_checked = 0;
  std::vector<LatticeVector> surjectivity_failures;
  std::int64_t reduced_roots = 0;
  std::int64_t image_size = 0;
  std::vector<std::pair<LatticeVector, LatticeVector>> collisions;
  double elapsed_seconds = 0.0;

  // step certificates gathered during the sweep
  std::int64_t steps_checked = 0;
  std::vector<LatticeVector> descent_violations;
  // inputs where both reduction candidates were valid at some step, and
  // those where the alternative choice led to a different reduced root
  std::int64_t both_valid_inputs = 0;
  std::vector<LatticeVector> choice_disagreements;

  bool surjectivity_ok() const { return surjectivity_failures.empty() && descent_violations.empty(); }
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Sweep P+ up to `bound`, reducing each vector and comparing reflections,
/// then census the images of the reduced positive roots up to `bound`.
/// threads == 0 picks the hardware concurrency.
VerificationReport run_check(int m, std::int64_t bound, unsigned threads = 0);

/// Reflection of s([a,b]) in W(m), evaluated from its crossing word.
GroupMatrix reflection_of(const CoxeterGroup& g, const LatticeVector& v);

/// For m = 2: s([n,n+1]) = s1 (s3 s1)^{n-1}, s([n+1,n]) = s3 (s1 s3)^{n-1}, s([1,1]) = s2.
Word m2_family_word(const LatticeVector& v);

struct LemmaResult {
  std::string name;
  std::int64_t checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

struct LemmaOptions {
  int depth = 6;              // largest n for the F/E identities
  std::int64_t sab_bound = 25;  // largest a for the Dyck-word identities
  int shift_max_j = 5;        // largest j for s([a+jmb,b]) = s([a,b])
  std::int64_t shift_bound = 10;
};

/// The Dyck-word identities, the F/E closed forms and order-m identities,
/// and the shift identity, all checked as matrices in W(m).
std::vector<LemmaResult> run_lemmas(int m, const LemmaOptions& opts);

/// Closed forms for s^{F_n x F_{n-1}} and s^{E_n x E_{n-1}} (n >= 2).
Word closed_form_f(int n);
Word closed_form_e(int n);

}  // namespace rigid
