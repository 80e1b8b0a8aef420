#include "rigidroots/verification.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "rigidroots/errors.hpp"
#include "rigidroots/lattice_words.hpp"

namespace rigid {

namespace {

// Runs fn(i) for i in [0, count) on a bounded pool; fn writes only to its own slot.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

struct SweepItem {
  bool matched = false;
  bool descent_ok = true;
  std::int64_t steps = 0;
  bool both_valid = false;
  bool choice_agrees = true;
};

}  // namespace

GroupMatrix reflection_of(const CoxeterGroup& g, const LatticeVector& v) { return g.eval_word(crossing_word(v)); }

Word m2_family_word(const LatticeVector& v) {
  if (v == LatticeVector{1, 1}) return "2"_w;
  if (v.b == v.a + 1) return "1"_w + "31"_w.power(static_cast<int>(v.a - 1));
  if (v.a == v.b + 1) return "3"_w + "13"_w.power(static_cast<int>(v.b - 1));
  throw UsageError("m2_family_word: " + v.to_string() + " is not a reduced positive root of H(2)");
}

VerificationReport run_check(int m, std::int64_t bound, unsigned threads) {
  if (m < 2) throw UsageError("check: m must be at least 2");
  if (bound < 1) throw UsageError("check: bound must be at least 1");
  const auto t0 = std::chrono::steady_clock::now();
  const CoxeterGroup group(CoxeterPresentation::w(m));
  VerificationReport rep;
  rep.m = m;
  rep.bound = bound;

  // Images of reduced roots are shared by many inputs; compute each once.
  const auto roots = enumerate_reduced_positive(m, bound);
  std::vector<std::string> root_keys(roots.size());
  parallel_for(roots.size(), threads, [&](std::size_t i) { root_keys[i] = reflection_of(group, roots[i]).key(); });
  std::map<LatticeVector, std::size_t> root_index;
  for (std::size_t i = 0; i < roots.size(); ++i) root_index.emplace(roots[i], i);
  std::mutex extra_mutex;
  std::map<LatticeVector, std::string> extra_keys;  // reduced roots beyond the bound (not expected)
  auto key_of_root = [&](const LatticeVector& r) -> std::string {
    if (auto it = root_index.find(r); it != root_index.end()) return root_keys[it->second];
    {
      std::lock_guard<std::mutex> lock(extra_mutex);
      if (auto it = extra_keys.find(r); it != extra_keys.end()) return it->second;
    }
    std::string k = reflection_of(group, r).key();
    std::lock_guard<std::mutex> lock(extra_mutex);
    extra_keys.emplace(r, k);
    return k;
  };

  const auto inputs = enumerate_positive_primitive(bound);
  std::vector<SweepItem> items(inputs.size());
  parallel_for(inputs.size(), threads, [&](std::size_t i) {
    const LatticeVector& v = inputs[i];
    SweepItem& it = items[i];
    const ReductionTrace tr = reduce(v, m);
    it.steps = static_cast<std::int64_t>(tr.steps.size());
    for (const auto& st : tr.steps) {
      it.descent_ok &= st.q_after < st.q_before && std::gcd(st.output.a, st.output.b) == 1 && st.output.a > 0 &&
                       st.output.b > 0;
      it.both_valid |= st.both_valid;
    }
    it.descent_ok &= tr.result_class.is_root() && tr.result_class.reduced;
    const std::string input_key =
        tr.steps.empty() ? key_of_root(v) : reflection_of(group, v).key();
    // a relabelled comparison would be needed if net_relabel() were ever true
    const std::string result_key = tr.net_relabel() ? group.eval_word(crossing_word(tr.result).relabeled(1, 3)).key()
                                                    : key_of_root(tr.result);
    it.matched = input_key == result_key;
    if (it.both_valid) {
      const ReductionTrace alt = reduce(v, m, ChoicePolicy::Alternate);
      it.choice_agrees = alt.result == tr.result;
    }
  });

  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const SweepItem& it = items[i];
    ++rep.pairs_checked;
    rep.steps_checked += it.steps;
    if (!it.matched) rep.surjectivity_failures.push_back(inputs[i]);
    if (!it.descent_ok) rep.descent_violations.push_back(inputs[i]);
    if (it.both_valid) ++rep.both_valid_inputs;
    if (!it.choice_agrees) rep.choice_disagreements.push_back(inputs[i]);
  }

  rep.reduced_roots = static_cast<std::int64_t>(roots.size());
  std::map<std::string, std::size_t> first_with_image;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    auto [pos, inserted] = first_with_image.emplace(root_keys[i], i);
    if (!inserted) rep.collisions.emplace_back(roots[pos->second], roots[i]);
  }
  rep.image_size = static_cast<std::int64_t>(first_with_image.size());
  rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

// ---------------------------------------------------------------------------
// Lemma suites

Word closed_form_f(int n) {
  if (n < 2) throw UsageError("closed_form_f: n must be at least 2");
  if (n == 2) return "21"_w;
  if (n % 2 == 1) {
    const int k = (n - 3) / 2;
    return "1"_w + "321"_w.power(k) + "23"_w + "123"_w.power(k) + "1"_w;
  }
  const int k = (n - 4) / 2;
  return "1"_w + "321"_w.power(k) + "3123"_w + "123"_w.power(k) + "1"_w;
}

Word closed_form_e(int n) {
  if (n < 2) throw UsageError("closed_form_e: n must be at least 2");
  if (n == 2) return "31"_w;
  if (n % 2 == 1) {
    const int k = (n - 3) / 2;
    return "1"_w + "321"_w.power(k) + "2123"_w + "123"_w.power(k) + "1"_w;
  }
  const int k = (n - 4) / 2;
  return "1"_w + "321"_w.power(k) + "323123"_w + "123"_w.power(k) + "1"_w;
}

namespace {

GroupMatrix matrix_power(const GroupMatrix& g, int k) {
  GroupMatrix r = GroupMatrix::identity(g.size(), g(0, 0).field_m());
  for (int i = 0; i < k; ++i) r = r * g;
  return r;
}

}  // namespace

std::vector<LemmaResult> run_lemmas(int m, const LemmaOptions& opts) {
  if (m < 2) throw UsageError("lemmas: m must be at least 2");
  if (opts.depth < 2) throw UsageError("lemmas: depth must be at least 2");
  const CoxeterGroup g(CoxeterPresentation::w(m));
  const GroupMatrix id = GroupMatrix::identity(3, g.field_m());
  std::vector<LemmaResult> out;

  LemmaResult sab1{"dyck_factorisation s([a,b]) = s3 s2 s^{axb} s1", 0, {}};
  LemmaResult sab2{"dyck_conjugation s1 s3 s2 s^{axb} s2 s3 s1 = s^{cxd}", 0, {}};
  LemmaResult sab3{"spiral_conjugation s3 s2 s1 s([a,b]) s1 s2 s3 = s([c,d])", 0, {}};
  for (std::int64_t a = 1; a <= opts.sab_bound; ++a)
    for (std::int64_t b = 1; b <= a; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const LatticeVector v{a, b};
      const Word dw = dyck_word(a, b);
      const LatticeVector cd = sigma1(sigma2(v, m), m);
      ++sab1.checked;
      if (g.eval_word(crossing_word(v)) != g.eval_word("32"_w + dw + "1"_w)) sab1.failures.push_back(v.to_string());
      ++sab2.checked;
      if (g.eval_word("132"_w + dw + "231"_w) != g.eval_word(dyck_word(cd.a, cd.b)))
        sab2.failures.push_back(v.to_string());
      ++sab3.checked;
      if (!sigma_conjugate_check(v, m).holds) sab3.failures.push_back(v.to_string());
    }
  out.push_back(std::move(sab1));
  out.push_back(std::move(sab2));
  out.push_back(std::move(sab3));

  const auto f = f_sequence(m, opts.depth + 1);
  const auto e = e_sequence(m, opts.depth + 1);
  LemmaResult closed{"closed_forms s^{F_n x F_n-1}, s^{E_n x E_n-1}", 0, {}};
  LemmaResult order{"order_m (s3 s2 s1 s([F_n,F_n-1]))^m = (s1 s2 s3 s([F_n,F_n-1]))^m = e", 0, {}};
  for (int n = 2; n <= opts.depth; ++n) {
    const auto fn = f[static_cast<std::size_t>(n)], fn1 = f[static_cast<std::size_t>(n - 1)];
    const auto en = e[static_cast<std::size_t>(n)], en1 = e[static_cast<std::size_t>(n - 1)];
    ++closed.checked;
    if (g.eval_word(dyck_word(fn, fn1)) != g.eval_word(closed_form_f(n)))
      closed.failures.push_back("F n=" + std::to_string(n));
    ++closed.checked;
    if (g.eval_word(dyck_word(en, en1)) != g.eval_word(closed_form_e(n)))
      closed.failures.push_back("E n=" + std::to_string(n));
    const Word cw = crossing_word({fn, fn1});
    ++order.checked;
    if (matrix_power(g.eval_word("321"_w + cw), m) != id) order.failures.push_back("321 n=" + std::to_string(n));
    ++order.checked;
    if (matrix_power(g.eval_word("123"_w + cw), m) != id) order.failures.push_back("123 n=" + std::to_string(n));
  }
  out.push_back(std::move(closed));
  out.push_back(std::move(order));

  LemmaResult shift_id{"shift s([a+jmb,b]) = s([a,b])", 0, {}};
  for (std::int64_t a = 1; a <= opts.shift_bound; ++a)
    for (std::int64_t b = 1; b <= opts.shift_bound; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const LatticeVector v{a, b};
      const GroupMatrix base = reflection_of(g, v);
      for (int j = 1; j <= opts.shift_max_j; ++j) {
        ++shift_id.checked;
        if (reflection_of(g, shift(v, j, m)) != base)
          shift_id.failures.push_back(v.to_string() + " j=" + std::to_string(j));
      }
    }
  out.push_back(std::move(shift_id));
  return out;
}

}  // namespace rigid
