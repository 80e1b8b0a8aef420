#include "rigidroots/lattice_words.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "rigidroots/errors.hpp"
#include "rigidroots/reduction.hpp"

namespace rigid {

namespace {

void require_positive_primitive(const LatticeVector& v, const char* who) {
  if (!in_positive_primitive(v))
    throw UsageError(std::string(who) + ": " + v.to_string() + " is not a primitive positive vector");
}

// Lines value = k strictly between 0 and `end` cross at t = k / end.
void add_family(std::vector<Crossing>& out, std::int64_t end, int letter) {
  const std::int64_t sign = end < 0 ? -1 : 1;
  const std::int64_t den = end * sign;
  for (std::int64_t k = 1; k < den; ++k) out.push_back({k, den, letter});
}

}  // namespace

std::vector<Crossing> segment_crossings(std::int64_t c, std::int64_t d) {
  if (c == 0 || d == 0 || c + d == 0)
    throw UsageError("segment (0,0)->(" + std::to_string(c) + "," + std::to_string(d) + ") runs along a grid line");
  if (std::gcd(c, d) != 1)
    throw UsageError("segment endpoint (" + std::to_string(c) + "," + std::to_string(d) + ") is not primitive");
  std::vector<Crossing> out;
  out.reserve(static_cast<std::size_t>(std::abs(c) + std::abs(d) + std::abs(c + d)));
  add_family(out, d, 1);
  add_family(out, c + d, 2);
  add_family(out, c, 3);
  auto less = [](const Crossing& x, const Crossing& y) {
    return static_cast<__int128>(x.num) * y.den < static_cast<__int128>(y.num) * x.den;
  };
  std::sort(out.begin(), out.end(), less);
  for (std::size_t i = 1; i < out.size(); ++i)
    if (!less(out[i - 1], out[i]))
      throw InvariantError("segment_crossings: two crossings coincide; the segment meets a lattice point");
  return out;
}

Word segment_word(std::int64_t c, std::int64_t d) {
  const auto cr = segment_crossings(c, d);
  std::vector<int> letters;
  letters.reserve(cr.size());
  for (const auto& x : cr) letters.push_back(x.letter);
  return Word(std::move(letters));
}

Word crossing_word(const LatticeVector& v) {
  require_positive_primitive(v, "crossing_word");
  return segment_word(v.a, v.b);
}

// ---------------------------------------------------------------------------
// Dyck paths

std::string DyckPath::to_string() const {
  std::string s;
  s.reserve(steps.size());
  for (Step st : steps) s.push_back(static_cast<char>(st));
  return s;
}

std::vector<LatticeVector> DyckPath::vertices() const {
  std::vector<LatticeVector> out{{0, 0}};
  for (Step st : steps) {
    LatticeVector p = out.back();
    (st == Step::H ? p.a : p.b) += 1;
    out.push_back(p);
  }
  return out;
}

DyckPath dyck_path(std::int64_t a1, std::int64_t a2) {
  if (a2 < 1 || a1 < a2)
    throw UsageError("dyck_path: requires a1 >= a2 >= 1, got " + std::to_string(a1) + "x" + std::to_string(a2));
  DyckPath p{a1, a2, {}};
  p.steps.reserve(static_cast<std::size_t>(a1 + a2));
  std::int64_t height = 0;
  for (std::int64_t i = 1; i <= a1; ++i) {
    p.steps.push_back(Step::H);
    const auto target = static_cast<std::int64_t>(static_cast<__int128>(i) * a2 / a1);
    for (; height < target; ++height) p.steps.push_back(Step::V);
  }
  return p;
}

Word dyck_word(std::int64_t a1, std::int64_t a2) {
  const DyckPath p = dyck_path(a1, a2);
  std::vector<int> letters;
  letters.reserve(2 * p.steps.size());
  for (Step st : p.steps) {
    letters.push_back(2);
    letters.push_back(st == Step::H ? 3 : 1);
  }
  return Word(std::move(letters));
}

LatticeVector shift(const LatticeVector& v, std::int64_t j, int m) {
  if (m < 2) throw UsageError("shift: m must be at least 2");
  if (j < 0) throw UsageError("shift: j must be non-negative");
  const __int128 a = static_cast<__int128>(v.a) + static_cast<__int128>(j) * m * v.b;
  if (a > INT64_MAX) throw std::overflow_error("shift overflows int64");
  return {static_cast<std::int64_t>(a), v.b};
}

// ---------------------------------------------------------------------------
// Spiral forms

namespace {

void check_spiral(const SpiralForm& f) {
  if (f.depth < 0) throw UsageError("spiral form: depth must be non-negative");
  if (f.d < 1) throw UsageError("spiral form: endpoint d must be positive");
  if (std::gcd(f.c, f.d) != 1) throw UsageError("spiral form: endpoint must be primitive");
  switch (f.variant) {
    case SpiralVariant::Plain:
      if (f.c < 1) throw UsageError("spiral form: plain variant needs c >= 1");
      break;
    case SpiralVariant::Three:
      // the segment leaves the origin across the horizontal line y = 1
      if (!(f.c < 0 && f.c + f.d > 0)) throw UsageError("spiral form: 'three' variant needs -d < c < 0");
      break;
    case SpiralVariant::ThreeTwo:
      if (!(f.c < 0 && f.c + f.d < 0)) throw UsageError("spiral form: 'threetwo' variant needs c < -d");
      break;
  }
}

Word counterclockwise_word(SpiralForm f) {
  Word middle = segment_word(f.c, f.d);
  switch (f.variant) {
    case SpiralVariant::Plain: break;
    case SpiralVariant::Three: middle = "3"_w + middle + "3"_w; break;
    case SpiralVariant::ThreeTwo: middle = "32"_w + middle + "23"_w; break;
  }
  return "321"_w.power(f.depth) + middle + "123"_w.power(f.depth);
}

LatticeVector counterclockwise_normalize(const SpiralForm& f, int m) {
  LatticeVector v{f.c, f.d};
  switch (f.variant) {
    case SpiralVariant::Plain: break;
    case SpiralVariant::Three: v.a += static_cast<std::int64_t>(m) * f.d; break;
    case SpiralVariant::ThreeTwo:
      while (v.a + static_cast<std::int64_t>(m) * v.b <= 0) v.a += static_cast<std::int64_t>(m) * v.b;
      v.a += static_cast<std::int64_t>(m) * v.b;
      break;
  }
  // a >= b, needed before conjugating by the spiral
  if (v.a < v.b) {
    const std::int64_t step = static_cast<std::int64_t>(m) * v.b;
    v = shift(v, (v.b - v.a + step - 1) / step, m);
  }
  for (int k = 0; k < f.depth; ++k) v = sigma1(sigma2(v, m), m);
  return v;
}

// Parameters of a clockwise form are read in the mirrored frame.
SpiralForm mirrored(const SpiralForm& f) {
  SpiralForm g = f;
  g.orientation = Orientation::CounterClockwise;
  return g;
}

}  // namespace

Word spiral_word(const SpiralForm& f) {
  if (f.orientation == Orientation::Clockwise) {
    // Reflection in the diagonal exchanges T1 and T3 and reverses the spiral.
    const SpiralForm g = mirrored(f);
    check_spiral(g);
    return counterclockwise_word(g).relabeled(1, 3);
  }
  check_spiral(f);
  return counterclockwise_word(f);
}

LatticeVector spiral_normalize(const SpiralForm& f, int m) {
  if (m < 2) throw UsageError("spiral_normalize: m must be at least 2");
  if (f.orientation == Orientation::Clockwise) {
    const SpiralForm g = mirrored(f);
    check_spiral(g);
    return counterclockwise_normalize(g, m).swapped();
  }
  check_spiral(f);
  return counterclockwise_normalize(f, m);
}

ConjugateCheck sigma_conjugate_check(const LatticeVector& v, int m) {
  require_positive_primitive(v, "sigma_conjugate_check");
  if (v.a < v.b) throw UsageError("sigma_conjugate_check: requires a >= b");
  ConjugateCheck r{sigma1(sigma2(v, m), m), false};
  const CoxeterGroup g(CoxeterPresentation::w(m));
  const GroupMatrix lhs = g.eval_word("321"_w + crossing_word(v) + "123"_w);
  r.holds = elements_equal(lhs, g.eval_word(crossing_word(r.image)));
  return r;
}

// ---------------------------------------------------------------------------
// SVG

namespace {

constexpr int kUnit = 40;
constexpr int kMargin = 24;

std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string crossing_svg(const LatticeVector& v) {
  require_positive_primitive(v, "crossing_svg");
  const std::int64_t a = v.a, b = v.b;
  const std::int64_t width = a * kUnit + 2 * kMargin, height = b * kUnit + 2 * kMargin;
  auto px = [&](std::int64_t x) { return kMargin + x * kUnit; };
  auto py = [&](std::int64_t y) { return kMargin + (b - y) * kUnit; };
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  out << "<g id=\"T1\" stroke=\"#4a7bd0\" stroke-width=\"1\">\n";
  for (std::int64_t y = 0; y <= b; ++y)
    out << "<line x1=\"" << px(0) << "\" y1=\"" << py(y) << "\" x2=\"" << px(a) << "\" y2=\"" << py(y) << "\"/>\n";
  out << "</g>\n<g id=\"T3\" stroke=\"#3c9a5f\" stroke-width=\"1\">\n";
  for (std::int64_t x = 0; x <= a; ++x)
    out << "<line x1=\"" << px(x) << "\" y1=\"" << py(0) << "\" x2=\"" << px(x) << "\" y2=\"" << py(b) << "\"/>\n";
  out << "</g>\n<g id=\"T2\" stroke=\"#999999\" stroke-width=\"1\">\n";
  for (std::int64_t k = 1; k < a + b; ++k) {
    const std::int64_t x1 = std::max<std::int64_t>(0, k - b), y1 = k - x1;
    const std::int64_t x2 = std::min(k, a), y2 = k - x2;
    out << "<line x1=\"" << px(x1) << "\" y1=\"" << py(y1) << "\" x2=\"" << px(x2) << "\" y2=\"" << py(y2)
        << "\"/>\n";
  }
  out << "</g>\n";
  out << "<line id=\"segment\" x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(a) << "\" y2=\"" << py(b)
      << "\" stroke=\"#d03030\" stroke-width=\"2\"/>\n";
  out << "<g id=\"crossings\" font-family=\"monospace\" font-size=\"12\">\n";
  for (const auto& c : segment_crossings(a, b)) {
    const double t = static_cast<double>(c.num) / static_cast<double>(c.den);
    const std::string cx = fixed3(kMargin + t * static_cast<double>(a * kUnit));
    const std::string cy = fixed3(kMargin + (1.0 - t) * static_cast<double>(b * kUnit));
    out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"3\" fill=\"#d03030\"/>";
    out << "<text x=\"" << fixed3(kMargin + t * static_cast<double>(a * kUnit) + 4.0) << "\" y=\""
        << fixed3(kMargin + (1.0 - t) * static_cast<double>(b * kUnit) - 4.0) << "\">" << c.letter << "</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace rigid
