#pragma once

// Coxeter presentations and their geometric representation.
//
// Generators are 1-based as in the usual notation; s_i acts on the span of the
// simple roots by s_i(v) = v - 2B(v, alpha_i) alpha_i. Group equality is
// matrix equality (the representation is faithful).

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rigidroots/exact_algebra.hpp"

namespace rigid {

/// Off-diagonal label value meaning "no relation" (m_ij = infinity).
inline constexpr int kInfinity = 0;

class CoxeterPresentation {
 public:
  /// labels is n*n row-major; diagonal entries are ignored, off-diagonal
  /// entries must be >= 2 or kInfinity, and the array must be symmetric.
  CoxeterPresentation(int rank, std::vector<int> labels);

  /// W(m): m_12 = m_23 = m, m_13 = infinity.
  static CoxeterPresentation w(int m);
  /// Rank-n presentation with every off-diagonal label infinite.
  static CoxeterPresentation universal(int rank);

  int rank() const { return rank_; }
  /// 1-based generator indices.
  int label(int i, int j) const;
  /// The M of the common coefficient field Q(2cos(pi/M)): lcm of the finite
  /// labels, or 2 (the field Q) when there are none.
  int field_m() const { return field_m_; }

  friend bool operator==(const CoxeterPresentation& a, const CoxeterPresentation& b) {
    return a.rank_ == b.rank_ && a.labels_ == b.labels_;
  }

 private:
  int rank_;
  std::vector<int> labels_;
  int field_m_;
};

/// A word over the generators 1..n; the empty word is the identity.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}
  /// Digit string such as "2321232" (one generator per character).
  static Word parse(std::string_view digits);
  /// Comma-separated integers, for ranks above 9.
  static Word parse_list(std::string_view text);

  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }

  Word reversed() const;
  /// Exchange two generator labels (e.g. the 1 <-> 3 mirror).
  Word relabeled(int a, int b) const;
  Word power(int k) const;
  Word& operator+=(const Word& o);
  friend Word operator+(Word a, const Word& b) { return a += b; }
  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }

  /// Digits for rank <= 9, comma-separated otherwise.
  std::string to_string(int rank = 3) const;

 private:
  std::vector<int> letters_;
};

inline Word operator""_w(const char* s, std::size_t n) { return Word::parse(std::string_view(s, n)); }

/// Square matrix over Q(2cos(pi/M)), row-major, in the simple-root basis.
class GroupMatrix {
 public:
  static GroupMatrix identity(int n, int M);
  GroupMatrix(int n, std::vector<AlgebraicElement> entries);

  int size() const { return n_; }
  const AlgebraicElement& operator()(int r, int c) const { return entries_[static_cast<std::size_t>(r * n_ + c)]; }
  AlgebraicElement& operator()(int r, int c) { return entries_[static_cast<std::size_t>(r * n_ + c)]; }
  const std::vector<AlgebraicElement>& entries() const { return entries_; }

  GroupMatrix transposed() const;
  friend GroupMatrix operator*(const GroupMatrix& a, const GroupMatrix& b);
  friend bool operator==(const GroupMatrix& a, const GroupMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const GroupMatrix& a, const GroupMatrix& b) { return !(a == b); }

  /// Stable text form, one row per line.
  std::string to_string() const;
  /// Compact exact key, usable for hashing/ordering images.
  std::string key() const;

 private:
  int n_;
  std::vector<AlgebraicElement> entries_;
};

/// Coordinates on alpha_1..alpha_n.
using RootVector = std::vector<AlgebraicElement>;

/// A presentation together with its cached form and generator data.
class CoxeterGroup {
 public:
  explicit CoxeterGroup(CoxeterPresentation p);

  const CoxeterPresentation& presentation() const { return presentation_; }
  int rank() const { return presentation_.rank(); }
  int field_m() const { return presentation_.field_m(); }

  /// B(alpha_i, alpha_j) = -cos(pi/m_ij); 0-based indices.
  const GroupMatrix& bilinear_form() const { return form_; }
  AlgebraicElement form(const RootVector& u, const RootVector& v) const;

  /// Matrix of s_i (1-based).
  GroupMatrix generator_matrix(int i) const;
  /// Product of generator matrices in word order.
  GroupMatrix eval_word(const Word& w) const;
  /// In-place s_i applied to a vector (1-based).
  void apply_generator(int i, RootVector& v) const;
  /// In-place s_i * M (left multiplication touches row i only).
  void left_multiply(int i, GroupMatrix& m) const;
  RootVector apply(const GroupMatrix& g, const RootVector& v) const;

  RootVector simple_root(int i) const;
  /// Positive root of the reflection given by an odd palindrome: the prefix
  /// applied to the central simple root, normalised to non-negative coordinates.
  RootVector reflection_root(const Word& w) const;
  /// Reflection in a root r with B(r, r) = 1: v -> v - 2B(v, r) r.
  GroupMatrix reflection_matrix(const RootVector& r) const;

 private:
  void check_letter(int i) const;

  CoxeterPresentation presentation_;
  GroupMatrix form_;
  // 2B(alpha_i, alpha_j), row-major, 0-based.
  std::vector<AlgebraicElement> two_form_;
};

bool elements_equal(const GroupMatrix& a, const GroupMatrix& b);

/// Odd-length palindrome test.
bool is_reflection_word(const Word& w);

/// Reflection root for W(m) with the finite label kept generic: coordinates
/// are integer polynomials in x = 2cos(pi/m), unreduced. Not sign-normalised.
std::vector<SymbolicPolynomial> reflection_root_symbolic(const Word& w);

/// Sign-normalise: all-non-positive vectors are negated; mixed signs throw
/// InvariantError.
RootVector normalize_root_sign(RootVector r);

std::string root_to_string(const RootVector& r);

}  // namespace rigid
