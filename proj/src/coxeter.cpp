#include "rigidroots/coxeter.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "rigidroots/errors.hpp"

namespace rigid {

// ---------------------------------------------------------------------------
// CoxeterPresentation

CoxeterPresentation::CoxeterPresentation(int rank, std::vector<int> labels)
    : rank_(rank), labels_(std::move(labels)), field_m_(2) {
  if (rank < 1) throw UsageError("CoxeterPresentation: rank must be positive");
  if (labels_.size() != static_cast<std::size_t>(rank) * static_cast<std::size_t>(rank))
    throw UsageError("CoxeterPresentation: label array must be rank*rank");
  int lcm_labels = 1;
  for (int i = 0; i < rank; ++i) {
    labels_[static_cast<std::size_t>(i * rank + i)] = 1;
    for (int j = 0; j < rank; ++j) {
      if (i == j) continue;
      const int l = labels_[static_cast<std::size_t>(i * rank + j)];
      if (l != labels_[static_cast<std::size_t>(j * rank + i)])
        throw UsageError("CoxeterPresentation: labels must be symmetric");
      if (l != kInfinity && l < 2) throw UsageError("CoxeterPresentation: labels must be >= 2 or infinity");
      if (l != kInfinity) lcm_labels = std::lcm(lcm_labels, l);
    }
  }
  field_m_ = std::max(lcm_labels, 2);
}

CoxeterPresentation CoxeterPresentation::w(int m) {
  if (m < 2) throw UsageError("W(m) requires m >= 2, got " + std::to_string(m));
  return CoxeterPresentation(3, {1, m, kInfinity, m, 1, m, kInfinity, m, 1});
}

CoxeterPresentation CoxeterPresentation::universal(int rank) {
  std::vector<int> labels(static_cast<std::size_t>(rank) * static_cast<std::size_t>(rank), kInfinity);
  return CoxeterPresentation(rank, std::move(labels));
}

int CoxeterPresentation::label(int i, int j) const {
  if (i < 1 || i > rank_ || j < 1 || j > rank_) throw UsageError("label: generator index out of range");
  return labels_[static_cast<std::size_t>((i - 1) * rank_ + (j - 1))];
}

// ---------------------------------------------------------------------------
// Word

Word Word::parse(std::string_view digits) {
  std::vector<int> letters;
  letters.reserve(digits.size());
  for (char c : digits) {
    if (c < '1' || c > '9') throw UsageError("Word::parse: invalid letter '" + std::string(1, c) + "'");
    letters.push_back(c - '0');
  }
  return Word(std::move(letters));
}

Word Word::parse_list(std::string_view text) {
  std::vector<int> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 1)
      throw UsageError("Word::parse_list: invalid letter '" + std::string(tok) + "'");
    letters.push_back(v);
    pos = end + 1;
  }
  return Word(std::move(letters));
}

Word Word::reversed() const { return Word(std::vector<int>(letters_.rbegin(), letters_.rend())); }

Word Word::relabeled(int a, int b) const {
  Word r = *this;
  for (int& l : r.letters_) {
    if (l == a)
      l = b;
    else if (l == b)
      l = a;
  }
  return r;
}

Word Word::power(int k) const {
  Word r;
  r.letters_.reserve(letters_.size() * static_cast<std::size_t>(std::max(k, 0)));
  for (int i = 0; i < k; ++i) r += *this;
  return r;
}

Word& Word::operator+=(const Word& o) {
  letters_.insert(letters_.end(), o.letters_.begin(), o.letters_.end());
  return *this;
}

std::string Word::to_string(int rank) const {
  std::string s;
  if (rank <= 9) {
    s.reserve(letters_.size());
    for (int l : letters_) s.push_back(static_cast<char>('0' + l));
    return s;
  }
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(letters_[i]);
  }
  return s;
}

bool is_reflection_word(const Word& w) {
  const auto& l = w.letters();
  return l.size() % 2 == 1 && std::equal(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(l.size() / 2), l.rbegin());
}

// ---------------------------------------------------------------------------
// GroupMatrix

GroupMatrix::GroupMatrix(int n, std::vector<AlgebraicElement> entries) : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw UsageError("GroupMatrix: entry count must be n*n");
}

GroupMatrix GroupMatrix::identity(int n, int M) {
  std::vector<AlgebraicElement> e(static_cast<std::size_t>(n * n), AlgebraicElement(M));
  for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i * n + i)] = AlgebraicElement::from_integer(M, 1);
  return GroupMatrix(n, std::move(e));
}

GroupMatrix GroupMatrix::transposed() const {
  GroupMatrix t = *this;
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) t(r, c) = (*this)(c, r);
  return t;
}

GroupMatrix operator*(const GroupMatrix& a, const GroupMatrix& b) {
  if (a.n_ != b.n_) throw UsageError("GroupMatrix: size mismatch");
  const int n = a.n_;
  const int M = a.entries_.front().field_m();
  std::vector<AlgebraicElement> e(static_cast<std::size_t>(n * n), AlgebraicElement(M));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      AlgebraicElement acc(M);
      for (int k = 0; k < n; ++k) acc += a(r, k) * b(k, c);
      e[static_cast<std::size_t>(r * n + c)] = std::move(acc);
    }
  return GroupMatrix(n, std::move(e));
}

std::string GroupMatrix::to_string() const {
  std::ostringstream out;
  for (int r = 0; r < n_; ++r) {
    out << "[";
    for (int c = 0; c < n_; ++c) out << (c ? ", " : "") << (*this)(r, c).to_poly_string();
    out << "]\n";
  }
  return out.str();
}

std::string GroupMatrix::key() const {
  std::string k;
  for (const auto& e : entries_) {
    for (const auto& c : e.numerator()) {
      k += c.get_str(16);
      k += ',';
    }
    k += '/';
    k += e.denominator().get_str(16);
    k += ';';
  }
  return k;
}

bool elements_equal(const GroupMatrix& a, const GroupMatrix& b) { return a == b; }

// ---------------------------------------------------------------------------
// CoxeterGroup

namespace {

GroupMatrix build_form(const CoxeterPresentation& p) {
  const int n = p.rank();
  const int M = p.field_m();
  std::vector<AlgebraicElement> e;
  e.reserve(static_cast<std::size_t>(n * n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) {
        e.push_back(AlgebraicElement::from_integer(M, 1));
        continue;
      }
      const int l = p.label(i, j);
      if (l == kInfinity) {
        e.push_back(AlgebraicElement::from_integer(M, -1));
      } else {
        // -cos(pi/l) = -C_{M/l}(x) / 2
        AlgebraicElement half = AlgebraicElement::from_rational(M, BigRational(-1, 2));
        e.push_back(half * two_cos_pi_over(l, M));
      }
    }
  return GroupMatrix(n, std::move(e));
}

}  // namespace

CoxeterGroup::CoxeterGroup(CoxeterPresentation p) : presentation_(std::move(p)), form_(build_form(presentation_)) {
  two_form_ = form_.entries();
  for (auto& e : two_form_) e.scale(2);
}

void CoxeterGroup::check_letter(int i) const {
  if (i < 1 || i > rank())
    throw UsageError("generator index " + std::to_string(i) + " out of range 1.." + std::to_string(rank()));
}

AlgebraicElement CoxeterGroup::form(const RootVector& u, const RootVector& v) const {
  const int n = rank();
  AlgebraicElement acc(field_m());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (u[static_cast<std::size_t>(i)].is_zero() || v[static_cast<std::size_t>(j)].is_zero()) continue;
      acc += u[static_cast<std::size_t>(i)] * form_(i, j) * v[static_cast<std::size_t>(j)];
    }
  return acc;
}

namespace {

// target -= coeff * source, with the common integer cases done by scaling.
void subtract_scaled(AlgebraicElement& target, const AlgebraicElement& coeff, const AlgebraicElement& source) {
  if (coeff.is_zero() || source.is_zero()) return;
  if (coeff.is_integer()) {
    const long c = coeff.rational_value().get_num().get_si();
    if (c == -1) {
      target += source;
      return;
    }
    AlgebraicElement t = source;
    t.scale(-c);
    target += t;
    return;
  }
  target -= coeff * source;
}

}  // namespace

void CoxeterGroup::apply_generator(int i, RootVector& v) const {
  check_letter(i);
  const int n = rank();
  const std::size_t ii = static_cast<std::size_t>(i - 1);
  // s_i changes coordinate i only: v_i <- -v_i - sum_{k != i} 2B_ik v_k.
  AlgebraicElement next = -v[ii];
  for (int k = 0; k < n; ++k) {
    if (k == i - 1) continue;
    subtract_scaled(next, two_form_[ii * static_cast<std::size_t>(n) + static_cast<std::size_t>(k)],
                    v[static_cast<std::size_t>(k)]);
  }
  v[ii] = std::move(next);
}

void CoxeterGroup::left_multiply(int i, GroupMatrix& m) const {
  check_letter(i);
  const int n = rank();
  for (int c = 0; c < n; ++c) {
    AlgebraicElement next = -m(i - 1, c);
    for (int k = 0; k < n; ++k) {
      if (k == i - 1) continue;
      subtract_scaled(next, two_form_[static_cast<std::size_t>((i - 1) * n + k)], m(k, c));
    }
    m(i - 1, c) = std::move(next);
  }
}

GroupMatrix CoxeterGroup::generator_matrix(int i) const {
  check_letter(i);
  GroupMatrix g = GroupMatrix::identity(rank(), field_m());
  left_multiply(i, g);
  return g;
}

GroupMatrix CoxeterGroup::eval_word(const Word& w) const {
  GroupMatrix g = GroupMatrix::identity(rank(), field_m());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) left_multiply(*it, g);
  return g;
}

RootVector CoxeterGroup::apply(const GroupMatrix& g, const RootVector& v) const {
  const int n = rank();
  RootVector out(static_cast<std::size_t>(n), AlgebraicElement(field_m()));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out[static_cast<std::size_t>(r)] += g(r, c) * v[static_cast<std::size_t>(c)];
  return out;
}

RootVector CoxeterGroup::simple_root(int i) const {
  check_letter(i);
  RootVector v(static_cast<std::size_t>(rank()), AlgebraicElement(field_m()));
  v[static_cast<std::size_t>(i - 1)] = AlgebraicElement::from_integer(field_m(), 1);
  return v;
}

RootVector CoxeterGroup::reflection_root(const Word& w) const {
  if (!is_reflection_word(w)) throw UsageError("reflection_root: word is not an odd palindrome");
  const std::size_t half = w.size() / 2;
  RootVector v = simple_root(w[half]);
  for (std::size_t j = half; j-- > 0;) apply_generator(w[j], v);
  return normalize_root_sign(std::move(v));
}

GroupMatrix CoxeterGroup::reflection_matrix(const RootVector& r) const {
  const int n = rank();
  const int M = field_m();
  // (B r)_j
  RootVector br(static_cast<std::size_t>(n), AlgebraicElement(M));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) br[static_cast<std::size_t>(j)] += form_(j, k) * r[static_cast<std::size_t>(k)];
  GroupMatrix g = GroupMatrix::identity(n, M);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      AlgebraicElement t = br[static_cast<std::size_t>(j)] * r[static_cast<std::size_t>(i)];
      t.scale(2);
      g(i, j) -= t;
    }
  return g;
}

RootVector normalize_root_sign(RootVector r) {
  bool pos = false, neg = false;
  for (const auto& c : r) {
    const int s = c.sign();
    pos |= s > 0;
    neg |= s < 0;
  }
  if (pos && neg) throw InvariantError("root has coordinates of mixed sign");
  if (neg)
    for (auto& c : r) c = -c;
  return r;
}

std::string root_to_string(const RootVector& r) {
  std::string s;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) s += ", ";
    s += r[i].to_poly_string();
  }
  return s;
}

std::vector<SymbolicPolynomial> reflection_root_symbolic(const Word& w) {
  if (!is_reflection_word(w)) throw UsageError("reflection_root_symbolic: word is not an odd palindrome");
  for (int l : w.letters())
    if (l < 1 || l > 3) throw UsageError("reflection_root_symbolic: W(m) words use letters 1..3");
  // 2B for W(m) with generic x: off-diagonal (1,2),(2,3) = -x, (1,3) = -2.
  const SymbolicPolynomial neg_x{0, -1};
  const SymbolicPolynomial neg_two{-2};
  auto two_b = [&](int i, int k) -> const SymbolicPolynomial& {
    return (i + k == 4) ? neg_two : neg_x;  // {1,3} sums to 4; {1,2},{2,3} do not
  };
  std::vector<SymbolicPolynomial> v(3);
  const std::size_t half = w.size() / 2;
  v[static_cast<std::size_t>(w[half] - 1)] = SymbolicPolynomial{1};
  for (std::size_t j = half; j-- > 0;) {
    const int i = w[j];
    SymbolicPolynomial next = -v[static_cast<std::size_t>(i - 1)];
    for (int k = 1; k <= 3; ++k) {
      if (k == i) continue;
      next -= two_b(i, k) * v[static_cast<std::size_t>(k - 1)];
    }
    v[static_cast<std::size_t>(i - 1)] = std::move(next);
  }
  return v;
}

}  // namespace rigid
