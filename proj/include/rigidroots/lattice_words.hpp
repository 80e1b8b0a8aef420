#pragma once

// Rank-3 torus geometry. The universal cover of the torus is triangulated by
// the horizontal lines y = j (label 1), the vertical lines x = i (label 3) and
// the anti-diagonals x + y = k (label 2). A segment from the origin reads off
// the labels of the lines it crosses, in order.

#include <cstdint>
#include <string>
#include <vector>

#include "rigidroots/coxeter.hpp"
#include "rigidroots/rank2_roots.hpp"

namespace rigid {

/// One crossing of a segment with a grid line, at parameter t = num/den.
struct Crossing {
  std::int64_t num;
  std::int64_t den;  // > 0
  int letter;
};

/// Crossings of the open segment (0,0) -> (c,d), sorted by t. The segment
/// must be primitive and must not run along a grid line.
std::vector<Crossing> segment_crossings(std::int64_t c, std::int64_t d);

/// Word read off the segment (0,0) -> (c,d) for any admissible direction.
Word segment_word(std::int64_t c, std::int64_t d);

/// Word of the segment to v in P+: odd palindrome of length 2(a+b)-3.
Word crossing_word(const LatticeVector& v);

enum class Step : char { H = 'H', V = 'V' };

struct DyckPath {
  std::int64_t width = 0;
  std::int64_t height = 0;
  std::vector<Step> steps;

  std::string to_string() const;
  /// Corners of the path, starting at (0,0).
  std::vector<LatticeVector> vertices() const;
};

/// Maximal lattice path from (0,0) to (a1,a2) weakly below the diagonal.
DyckPath dyck_path(std::int64_t a1, std::int64_t a2);

/// "23" per horizontal step, "21" per vertical step.
Word dyck_word(std::int64_t a1, std::int64_t a2);

/// [a + j m b, b].
LatticeVector shift(const LatticeVector& v, std::int64_t j, int m);

enum class SpiralVariant { Plain, Three, ThreeTwo };
enum class Orientation { CounterClockwise, Clockwise };

/// A curve given as a spiral around the origin, a segment, and the opposite
/// spiral: (321)^n X (123)^n with X one of s(nu), 3 s(nu) 3, 32 s(nu) 23.
/// Domains: plain c >= 1; three -d < c < 0; threetwo c < -d. A clockwise form
/// is the diagonal mirror of the counterclockwise form with the same fields:
/// its word has 1 and 3 exchanged and its vector has a and b exchanged.
struct SpiralForm {
  int depth = 0;
  SpiralVariant variant = SpiralVariant::Plain;
  std::int64_t c = 0;
  std::int64_t d = 1;
  Orientation orientation = Orientation::CounterClockwise;
};

/// The word read off the curve described by the form.
Word spiral_word(const SpiralForm& f);

/// A vector [a,b] in P+ (a >= b for counterclockwise forms, a <= b for clockwise) with
/// s(spiral_word(f)) = s([a,b]) in W(m).
LatticeVector spiral_normalize(const SpiralForm& f, int m);

struct ConjugateCheck {
  LatticeVector image;  // sigma1 sigma2 v
  bool holds;           // 321 s(v) 123 == s(image) as matrices
};

/// Conjugation by s3 s2 s1 moves s([a,b]) to s(sigma1 sigma2 [a,b]) (a >= b).
ConjugateCheck sigma_conjugate_check(const LatticeVector& v, int m);

/// Deterministic SVG of the unit grid over [0,a]x[0,b], the three line
/// families, the segment, and each crossing labelled with its letter.
std::string crossing_svg(const LatticeVector& v);

}  // namespace rigid
