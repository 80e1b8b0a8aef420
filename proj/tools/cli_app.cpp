#include "cli_app.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>

#include "rigidroots/errors.hpp"
#include "rigidroots/lattice_words.hpp"
#include "rigidroots/reduction.hpp"
#include "rigidroots/report.hpp"
#include "rigidroots/verification.hpp"

namespace rigid::cli {

namespace {

struct Options {
  int m = 3;
  std::int64_t bound = 0;
  int depth = 6;
  bool symbolic = false;
  bool matrix = false;
  unsigned threads = 0;
  std::string out_path;
  std::string json_path;
  std::vector<std::int64_t> ab;
};

LatticeVector target(const Options& o) {
  if (o.ab.size() != 2) throw UsageError("expected two integers a b");
  return {o.ab[0], o.ab[1]};
}

void require_p_plus(const LatticeVector& v) {
  if (!in_positive_primitive(v)) throw UsageError(v.to_string() + " is not a primitive positive vector");
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
  if (!f.flush()) throw UsageError("cannot write '" + path + "'");
}

void write_json(const std::string& path, const nlohmann::json& j, std::ostream& out) {
  if (path == "-")
    out << j.dump(2) << "\n";
  else
    write_file(path, j.dump(2) + "\n");
}

int cmd_word(const Options& o, std::ostream& out) {
  const LatticeVector v = target(o);
  require_p_plus(v);
  const Word w = crossing_word(v);
  out << w.to_string() << "\n";
  if (o.matrix) out << CoxeterGroup(CoxeterPresentation::w(o.m)).eval_word(w).to_string();
  return kExitOk;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const LatticeVector v = target(o);
  require_p_plus(v);
  const ReductionTrace t = reduce(v, o.m);
  if (o.json_path == "-") {
    write_json("-", t, out);
    return kExitOk;
  }
  out << format_trace(t);
  if (!o.json_path.empty()) write_json(o.json_path, t, out);
  return kExitOk;
}

int cmd_root(const Options& o, std::ostream& out) {
  const LatticeVector v = target(o);
  require_p_plus(v);
  const Word w = crossing_word(v);
  if (o.symbolic) {
    const auto r = reflection_root_symbolic(w);
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? ", " : "") << r[i].to_string();
    out << "\n";
    return kExitOk;
  }
  out << root_to_string(CoxeterGroup(CoxeterPresentation::w(o.m)).reflection_root(w)) << "\n";
  return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  if (o.bound < 1) throw UsageError("check needs --bound >= 1");
  const VerificationReport r = run_check(o.m, o.bound, o.threads);
  out << "m=" << r.m << " bound=" << r.bound << " pairs=" << r.pairs_checked << " steps=" << r.steps_checked
      << " failures=" << r.surjectivity_failures.size() << " descent_violations=" << r.descent_violations.size()
      << "\n";
  out << "reduced_roots=" << r.reduced_roots << " images=" << r.image_size << " collisions=" << r.collisions.size()
      << " both_valid_inputs=" << r.both_valid_inputs << " choice_disagreements=" << r.choice_disagreements.size()
      << "\n";
  for (const auto& [u, v] : r.collisions) out << "collision " << u.to_string() << " " << v.to_string() << "\n";
  const std::string path = !o.json_path.empty() ? o.json_path : o.out_path;
  if (!path.empty()) write_json(path, r, out);
  const bool ok = r.surjectivity_ok() && (o.m != 2 || r.collisions.empty());
  out << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kExitOk : kExitFailure;
}

int cmd_lemmas(const Options& o, std::ostream& out) {
  LemmaOptions opts;
  opts.depth = o.depth;
  if (o.bound > 0) opts.sab_bound = o.bound;
  const auto results = run_lemmas(o.m, opts);
  bool ok = true;
  for (const auto& r : results) {
    ok &= r.ok();
    out << (r.ok() ? "pass " : "FAIL ") << r.name << " (" << r.checked << " checked";
    if (!r.ok()) out << ", " << r.failures.size() << " failed, first " << r.failures.front();
    out << ")\n";
  }
  return ok ? kExitOk : kExitFailure;
}

int cmd_svg(const Options& o, std::ostream& out) {
  const LatticeVector v = target(o);
  require_p_plus(v);
  const std::string svg = crossing_svg(v);
  if (o.out_path.empty() || o.out_path == "-")
    out << svg;
  else
    write_file(o.out_path, svg);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rigid reflections of W(m) and reduced roots of H(m)", "rigidroots"};
  app.require_subcommand(1);
  Options o;

  auto add_m = [&](CLI::App* c) { c->add_option("-m", o.m, "label m >= 2 of W(m)")->check(CLI::Range(2, 1 << 20)); };
  auto add_ab = [&](CLI::App* c) { c->add_option("ab", o.ab, "a b")->required()->expected(2); };

  auto* word = app.add_subcommand("word", "crossing word of the segment to [a,b]");
  add_m(word);
  word->add_flag("--matrix", o.matrix, "also print the element of W(m)");
  add_ab(word);

  auto* red = app.add_subcommand("reduce", "reduce [a,b] to a reduced positive root of H(m)");
  add_m(red);
  red->add_option("--json", o.json_path, "write the trace as JSON ('-' for stdout)");
  add_ab(red);

  auto* root = app.add_subcommand("root", "positive root of the reflection s([a,b])");
  add_m(root);
  root->add_flag("--symbolic", o.symbolic, "coordinates as integer polynomials in x = 2cos(pi/m)");
  add_ab(root);

  auto* check = app.add_subcommand("check", "reduce-and-compare sweep and image census");
  add_m(check);
  check->add_option("--bound", o.bound, "largest coordinate")->required();
  check->add_option("--json", o.json_path, "report path ('-' for stdout)");
  check->add_option("-o", o.out_path, "report path");
  check->add_option("--threads", o.threads, "worker count (0 = hardware)");

  auto* lemmas = app.add_subcommand("lemmas", "matrix identity suites");
  add_m(lemmas);
  lemmas->add_option("--depth", o.depth, "largest n for the F/E identities")->check(CLI::Range(2, 64));
  lemmas->add_option("--bound", o.bound, "largest a for the Dyck-word identities");

  auto* svg = app.add_subcommand("svg", "SVG of the segment to [a,b] on the triangulated grid");
  add_m(svg);
  svg->add_option("-o", o.out_path, "output file ('-' or omitted for stdout)");
  add_ab(svg);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*word) return cmd_word(o, out);
    if (*red) return cmd_reduce(o, out);
    if (*root) return cmd_root(o, out);
    if (*check) return cmd_check(o, out);
    if (*lemmas) return cmd_lemmas(o, out);
    if (*svg) return cmd_svg(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace rigid::cli
