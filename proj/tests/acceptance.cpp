// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "cli_app.hpp"
#include "rigidroots/lattice_words.hpp"
#include "rigidroots/report.hpp"
#include "rigidroots/verification.hpp"

using namespace rigid;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

std::string cli_out(std::vector<std::string> args) {
  std::ostringstream out, err;
  cli::run(args, out, err);
  return out.str();
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

RootVector ints(int M, std::initializer_list<long> cs) {
  RootVector r;
  for (long c : cs) r.push_back(AlgebraicElement::from_integer(M, c));
  return r;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome reduction_regressions() {
  const auto t0 = std::chrono::steady_clock::now();
  const ReductionTrace one = reduce({487, 186}, 3);
  const ReductionTrace three = reduce({1789, 683}, 3);
  bool ok = one.steps.size() == 1 && one.result == LatticeVector{55, 21};
  ok &= three.steps.size() == 3 && three.steps[0].output == LatticeVector{1129, 431} &&
        three.steps[1].output == LatticeVector{469, 179} && three.result == LatticeVector{28, 11};
  ok &= cli_out({"root", "-m", "3", "55", "21"}) == "6, 8, 17\n";
  ok &= cli_out({"root", "-m", "3", "28", "11"}) == "55, 55, 144\n";
  ok &= contains(cli_out({"reduce", "-m", "3", "1789", "683"}), "result [28,11]");
  const double t = seconds_since(t0);
  ok &= t < 1.0;
  return {ok, "reductions of [487,186] and [1789,683], roots 6,8,17 and 55,55,144 in " + std::to_string(t) + " s"};
}

Outcome section_two_examples() {
  bool ok = crossing_word({5, 3}) == "2321232321232"_w && crossing_word({4, 1}) == "2323232"_w &&
            crossing_word({2, 1}) == "232"_w && crossing_word({1, 1}) == "2"_w;
  const CoxeterGroup w3(CoxeterPresentation::w(3)), w4(CoxeterPresentation::w(4));
  ok &= w3.eval_word(crossing_word({30, 11})) == w3.eval_word(crossing_word({3, 2}));
  ok &= w3.reflection_root(crossing_word({30, 11})) == ints(3, {1, 3, 3});
  ok &= w3.eval_word(crossing_word({4, 1})) == w3.eval_word("2"_w);
  ok &= w4.eval_word(crossing_word({5, 2})) == w4.eval_word(crossing_word({13, 2}));
  auto three_x = AlgebraicElement::generator(4);
  three_x.scale(3);
  const RootVector beta4{AlgebraicElement::from_integer(4, 1), three_x, AlgebraicElement::from_integer(4, 6)};
  ok &= w4.reflection_root(crossing_word({5, 2})) == beta4;
  ok &= (three_x * three_x) == AlgebraicElement::from_integer(4, 18);
  const auto sym = reflection_root_symbolic(crossing_word({5, 3}));
  ok &= sym[0] == IntPolynomial{0, 1, 0, 1} && sym[1] == IntPolynomial{-1, 0, 2, 0, 3, 0, 1} &&
        sym[2] == IntPolynomial{0, 2, 0, 3, 0, 1};
  return {ok, "crossing words, s([30,11]) = s([3,2]), s([5,2]) = s([13,2]), symbolic root of [5,3]"};
}

Outcome spiral_root_example() {
  const CoxeterGroup g(CoxeterPresentation::universal(3));
  // The curve's middle segment is the [5,3] word 2321232321232.
  const Word w = "321"_w.power(4) + "2321232321232"_w + "123"_w.power(4);
  const RootVector r = g.reflection_root(w);
  const bool ok = r == ints(2, {1662490, 4352663, 11395212});
  const RootVector short_middle = g.reflection_root("321"_w.power(4) + "2321232"_w + "123"_w.power(4));
  return {ok, "root of (321)^4 2321232321232 (123)^4 in the free rank-3 group = " + root_to_string(r) +
                  " (with middle 2321232 instead: " + root_to_string(short_middle) + ")"};
}

Outcome m2_bijection() {
  const CoxeterGroup g(CoxeterPresentation::w(2));
  std::set<std::string> images, family;
  for (const auto& v : enumerate_positive_primitive(30)) images.insert(reflection_of(g, v).key());
  bool beta_ok = true;
  family.insert(g.eval_word("2"_w).key());
  for (int n = 1; n <= 29; ++n) {
    family.insert(g.eval_word("1"_w + "31"_w.power(n - 1)).key());
    family.insert(g.eval_word("3"_w + "13"_w.power(n - 1)).key());
    beta_ok &= g.reflection_root(crossing_word({n, n + 1})) == ints(2, {n, 0, n - 1});
    beta_ok &= g.reflection_root(crossing_word({n + 1, n})) == ints(2, {n - 1, 0, n});
  }
  beta_ok &= g.reflection_root(crossing_word({1, 1})) == ints(2, {0, 1, 0});
  const VerificationReport r = run_check(2, 30);
  const bool ok = images == family && beta_ok && r.surjectivity_ok() && r.collisions.empty() &&
                  r.image_size == r.reduced_roots;
  return {ok, std::to_string(images.size()) + " images over P+ up to 30, " + std::to_string(r.reduced_roots) +
                  " reduced roots, " + std::to_string(r.collisions.size()) + " collisions"};
}

std::vector<VerificationReport> g_sweeps;

Outcome desk_scale_sweep() {
  const auto t0 = std::chrono::steady_clock::now();
  std::int64_t pairs = 0, failures = 0;
  for (int m : {2, 3, 4, 5}) {
    g_sweeps.push_back(run_check(m, 200));
    pairs += g_sweeps.back().pairs_checked;
    failures += static_cast<std::int64_t>(g_sweeps.back().surjectivity_failures.size());
  }
  const double t = seconds_since(t0);
  return {failures == 0 && t <= 300.0, std::to_string(pairs) + " pairs for m = 2..5, a,b <= 200, " +
                                           std::to_string(failures) + " failures in " + std::to_string(t) + " s"};
}

Outcome lemma_suites() {
  LemmaOptions opts;
  opts.depth = 8;
  opts.sab_bound = 25;
  opts.shift_max_j = 5;
  opts.shift_bound = 10;
  std::int64_t checked = 0, failed = 0;
  for (int m : {2, 3, 4})
    for (const auto& r : run_lemmas(m, opts)) {
      checked += r.checked;
      failed += static_cast<std::int64_t>(r.failures.size());
    }
  return {failed == 0, std::to_string(checked) + " identities for m = 2,3,4, " + std::to_string(failed) + " failures"};
}

Outcome descent() {
  std::int64_t steps = 0, violations = 0;
  for (const auto& r : g_sweeps) {
    steps += r.steps_checked;
    violations += static_cast<std::int64_t>(r.descent_violations.size());
  }
  return {!g_sweeps.empty() && violations == 0,
          std::to_string(steps) + " steps checked, " + std::to_string(violations) + " violations"};
}

Outcome injectivity_probe(const std::string& report_dir) {
  bool ok = true;
  std::string detail;
  for (int m : {3, 4}) {
    const VerificationReport r = run_check(m, 60);
    std::ofstream(report_dir + "/injectivity_m" + std::to_string(m) + ".json") << nlohmann::json(r).dump(2) << "\n";
    ok &= r.collisions.empty() && r.surjectivity_ok();
    detail += "m=" + std::to_string(m) + ": " + std::to_string(r.reduced_roots) + " roots, " +
              std::to_string(r.collisions.size()) + " collisions; ";
  }
  return {ok, detail + "reports in " + report_dir};
}

Outcome exact_algebra_suite() {
  bool ok = true;
  for (int M = 2; M <= 50; ++M) {
    const auto& mp = minimal_polynomial(M);
    ok &= mp.degree() == euler_phi(2 * M) / 2;
    const Interval iv = evaluate_interval(mp.poly, M, 256);
    ok &= iv.contains_zero() && iv.width_at_most_pow2(-64);
  }
  std::mt19937_64 gen(20261019);
  std::uniform_int_distribution<long> coef(-20, 20), den(1, 6);
  int trials = 0;
  for (int M : {3, 5, 7, 8, 12, 16, 21, 30}) {
    const int deg = minimal_polynomial(M).degree();
    auto rand_elem = [&] {
      std::vector<BigRational> cs;
      for (int i = 0; i < deg; ++i) {
        BigRational c(coef(gen), den(gen));
        c.canonicalize();
        cs.push_back(c);
      }
      return AlgebraicElement::from_coefficients(M, cs);
    };
    for (int t = 0; t < 50; ++t, ++trials) {
      const auto a = rand_elem(), b = rand_elem(), c = rand_elem();
      ok &= (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c && a + b == b + a && a * b == b * a &&
            (a - a).is_zero();
    }
  }
  return {ok, "minimal polynomials for M <= 50 certified to 2^-64, " + std::to_string(trials) + " ring-axiom trials"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string report_dir = argc > 1 ? argv[1] : ".";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"reduction regressions", reduction_regressions},
      {"word and root examples", section_two_examples},
      {"spiral root in the free group", spiral_root_example},
      {"m = 2 bijection", m2_bijection},
      {"reduction preserves reflections (a,b <= 200)", desk_scale_sweep},
      {"lemma identity suites", lemma_suites},
      {"descent certificates", descent},
      {"injectivity probe for m = 3, 4", [&] { return injectivity_probe(report_dir); }},
      {"exact algebra", exact_algebra_suite},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o{false, ""};
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.ok;
    std::cout << "criterion " << i + 1 << " " << (o.ok ? "PASS" : "FAIL") << "  " << criteria[i].first << ": "
              << o.detail << std::endl;
  }
  std::cout << (failed ? "acceptance: " + std::to_string(failed) + " failed" : std::string("acceptance: all passed"))
            << std::endl;
  return failed ? 1 : 0;
}
