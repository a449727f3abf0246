#ifndef SYMRES_FREELIE_HPP
#define SYMRES_FREELIE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symres/rational.hpp"

namespace symres {

/// Words over the alphabet {1..m}, stored as strings of digit characters so
/// that string order is the lexicographic word order. Degree = length.
using Word = std::string;

/// A word is Lyndon iff it is strictly smaller than every proper rotation.
bool is_lyndon(const Word& w);

/// All Lyndon words of length d over m letters, in lexicographic order
/// (Duval generation). Requires 0 <= m <= 9.
std::vector<Word> lyndon_words(int m, int d);

/// Witt number (1/d) sum_{e|d} mobius(e) m^{d/e}; the dimension of the
/// degree-d component of the free Lie algebra on m letters.
long long witt_dim(int m, int d);

/// Sparse element of the degree-truncated tensor algebra.
struct TensorElt {
  std::map<Word, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const Word& w, const Rational& c);
};

/// Exact element of the free Lie algebra: coordinates in the bracketed
/// Lyndon basis plus the cached tensor-algebra image.
struct LieElement {
  std::map<Word, Rational> coords;
  TensorElt image;

  bool is_zero() const { return coords.empty(); }
};

/// The free Lie algebra on m letters, truncated above degree D. Basis
/// images (standard bracketings expanded in the tensor algebra) are built
/// once at construction; brackets are computed in the associative algebra
/// and re-expressed by a leading-term triangular solve.
class FreeLie {
 public:
  FreeLie(int m, int D);

  int m() const { return m_; }
  int max_degree() const { return D_; }

  const std::vector<Word>& words(int d) const;  // Lyndon words of degree d <= D
  const std::vector<Word>& all_words() const { return all_words_; }

  /// Tensor image of the right-standard bracketing of a Lyndon word; its
  /// lexicographically smallest term is the word itself with coefficient 1.
  const TensorElt& bracket_image(const Word& w) const;

  LieElement basis_element(const Word& w) const;

  /// Commutator of tensor images, truncated above D, re-expressed in the
  /// Lyndon basis. Throws std::logic_error if the image fails to resolve
  /// (which would indicate internal corruption).
  LieElement bracket(const LieElement& a, const LieElement& b) const;

  LieElement from_tensor(TensorElt t) const;

 private:
  int m_, D_;
  std::vector<std::vector<Word>> words_by_degree_;  // [0..D]
  std::vector<Word> all_words_;                     // (degree, lex) order
  std::map<Word, TensorElt> images_;
};

/// Basis vector of g = L tensor C^n: a Lyndon word in one of n copies.
struct GVector {
  Word word;
  int copy;  // 1..n
  friend bool operator==(const GVector&, const GVector&) = default;
};

/// The graded Lie algebra g = L^{(+) n} truncated above degree D, with an
/// indexed basis ordered by (degree, word, copy) and a precomputed bracket
/// table. Brackets across distinct copies vanish; S_n permutes the copies.
class GAlgebra {
 public:
  GAlgebra(int m, int n, int D);

  int m() const { return m_; }
  int copies() const { return n_; }
  int max_degree() const { return D_; }
  const FreeLie& lie() const { return lie_; }

  int dim() const { return static_cast<int>(basis_.size()); }
  const GVector& vec(int idx) const { return basis_[static_cast<size_t>(idx)]; }
  int degree(int idx) const { return static_cast<int>(basis_[static_cast<size_t>(idx)].word.size()); }
  int index_of(const Word& w, int copy) const;

  /// [basis_i, basis_j] as a sparse vector over basis indices; brackets of
  /// degree > D are truncated away.
  std::vector<std::pair<int, Rational>> bracket(int i, int j) const;

  /// Letter-content weight (counts of each letter 1..m).
  std::vector<int> weight(int idx) const;

  /// Index permutation induced by relabeling copy c as sigma[c-1].
  std::vector<int> copy_relabel_permutation(const std::vector<int>& sigma) const;

 private:
  int m_, n_, D_;
  FreeLie lie_;
  std::vector<GVector> basis_;
  std::map<std::pair<Word, Word>, std::vector<std::pair<Word, Rational>>> word_brackets_;
};

}  // namespace symres

#endif
