#include "rigidroots/report.hpp"

#include <sstream>

#include "rigidroots/errors.hpp"

namespace rigid {

using nlohmann::json;

void to_json(json& j, const LatticeVector& v) { j = json::array({v.a, v.b}); }

void from_json(const json& j, LatticeVector& v) {
  if (!j.is_array() || j.size() != 2) throw UsageError("lattice vector must be a two-element array");
  v.a = j.at(0).get<std::int64_t>();
  v.b = j.at(1).get<std::int64_t>();
}

namespace {

RootKind parse_kind(const std::string& s) {
  if (s == "real") return RootKind::RealRoot;
  if (s == "imaginary") return RootKind::ImaginaryRoot;
  if (s == "not_root") return RootKind::NotRoot;
  throw UsageError("unknown root kind '" + s + "'");
}

}  // namespace

void to_json(json& j, const RootClass& c) { j = json{{"kind", to_string(c.kind)}, {"reduced", c.reduced}}; }

void from_json(const json& j, RootClass& c) {
  c.kind = parse_kind(j.at("kind").get<std::string>());
  c.reduced = j.at("reduced").get<bool>();
}

std::string branch_name(Branch b) { return b == Branch::SubtractFn ? "subtract_Fn" : "subtract_Fn1"; }

Branch parse_branch(const std::string& s) {
  if (s == "subtract_Fn") return Branch::SubtractFn;
  if (s == "subtract_Fn1") return Branch::SubtractFn1;
  throw UsageError("unknown branch '" + s + "'");
}

void to_json(json& j, const ReductionStep& s) {
  j = json{{"input", s.input},       {"n", s.n},
           {"kappa", s.kappa},       {"kappa_next", s.kappa_next},
           {"branch", branch_name(s.branch)},
           {"swapped", s.swapped},   {"both_valid", s.both_valid},
           {"output", s.output},     {"q_before", s.q_before},
           {"q_after", s.q_after}};
}

void from_json(const json& j, ReductionStep& s) {
  s.input = j.at("input").get<LatticeVector>();
  s.n = j.at("n").get<int>();
  s.kappa = j.at("kappa").get<std::int64_t>();
  s.kappa_next = j.value("kappa_next", std::int64_t{0});
  s.branch = parse_branch(j.at("branch").get<std::string>());
  s.swapped = j.at("swapped").get<bool>();
  s.both_valid = j.value("both_valid", false);
  s.output = j.at("output").get<LatticeVector>();
  s.q_before = j.at("q_before").get<std::int64_t>();
  s.q_after = j.at("q_after").get<std::int64_t>();
}

void to_json(json& j, const ReductionTrace& t) {
  j = json{{"m", t.m},           {"start", t.start},   {"steps", t.steps},
           {"result", t.result}, {"result_class", t.result_class}};
}

void from_json(const json& j, ReductionTrace& t) {
  t.m = j.at("m").get<int>();
  t.start = j.at("start").get<LatticeVector>();
  t.steps = j.at("steps").get<std::vector<ReductionStep>>();
  t.result = j.at("result").get<LatticeVector>();
  t.result_class = j.at("result_class").get<RootClass>();
}

void to_json(json& j, const VerificationReport& r) {
  json collisions = json::array();
  for (const auto& [u, v] : r.collisions) collisions.push_back(json::array({u, v}));
  j = json{{"m", r.m},
           {"bound", r.bound},
           {"pairs_checked", r.pairs_checked},
           {"surjectivity_failures", r.surjectivity_failures},
           {"reduced_roots", r.reduced_roots},
           {"image_size", r.image_size},
           {"collisions", collisions},
           {"elapsed_seconds", r.elapsed_seconds},
           {"steps_checked", r.steps_checked},
           {"descent_violations", r.descent_violations},
           {"both_valid_inputs", r.both_valid_inputs},
           {"choice_disagreements", r.choice_disagreements}};
}

void from_json(const json& j, VerificationReport& r) {
  r.m = j.at("m").get<int>();
  r.bound = j.at("bound").get<std::int64_t>();
  r.pairs_checked = j.at("pairs_checked").get<std::int64_t>();
  r.surjectivity_failures = j.at("surjectivity_failures").get<std::vector<LatticeVector>>();
  r.reduced_roots = j.at("reduced_roots").get<std::int64_t>();
  r.image_size = j.at("image_size").get<std::int64_t>();
  r.collisions.clear();
  for (const auto& p : j.at("collisions")) r.collisions.emplace_back(p.at(0).get<LatticeVector>(), p.at(1).get<LatticeVector>());
  r.elapsed_seconds = j.at("elapsed_seconds").get<double>();
  r.steps_checked = j.value("steps_checked", std::int64_t{0});
  r.descent_violations = j.value("descent_violations", std::vector<LatticeVector>{});
  r.both_valid_inputs = j.value("both_valid_inputs", std::int64_t{0});
  r.choice_disagreements = j.value("choice_disagreements", std::vector<LatticeVector>{});
}

std::string format_trace(const ReductionTrace& t) {
  std::ostringstream out;
  out << "m=" << t.m << " start " << t.start.to_string() << " Q=" << q_form(t.start, t.m) << "\n";
  for (const auto& s : t.steps) {
    out << "  " << s.input.to_string() << " -> " << s.output.to_string() << "  n=" << s.n << " kappa=" << s.kappa
        << " " << branch_name(s.branch) << (s.swapped ? " swapped" : "") << (s.both_valid ? " both_valid" : "")
        << "  Q " << s.q_before << " -> " << s.q_after << "\n";
  }
  out << "result " << t.result.to_string() << " (" << to_string(t.result_class.kind) << ", " << t.steps.size()
      << (t.steps.size() == 1 ? " step" : " steps") << ")\n";
  return out.str();
}

}  // namespace rigid
