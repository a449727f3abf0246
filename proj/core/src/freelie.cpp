#include "symres/freelie.hpp"

#include <algorithm>
#include <stdexcept>

#include "symres/symfunc.hpp"  // mobius

namespace symres {

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (size_t r = 1; r < w.size(); ++r) {
    Word rot = w.substr(r) + w.substr(0, r);
    if (rot <= w) return false;
  }
  return true;
}

namespace {

void check_alphabet(int m) {
  if (m < 0 || m > 9) throw std::invalid_argument("alphabet size must be between 0 and 9");
}

// Duval's algorithm: all Lyndon words of length <= max_len over m letters,
// in lexicographic order.
std::vector<Word> duval(int m, int max_len) {
  std::vector<Word> out;
  if (m == 0 || max_len == 0) return out;
  std::string w = "1";
  while (true) {
    if (static_cast<int>(w.size()) <= max_len) out.push_back(w);
    // extend periodically to max_len, then increment the last letter
    std::string t = w;
    while (static_cast<int>(t.size()) < max_len) t += t[t.size() % w.size()];
    t.resize(static_cast<size_t>(max_len));
    while (!t.empty() && t.back() == '0' + m) t.pop_back();
    if (t.empty()) break;
    ++t.back();
    w = std::move(t);
  }
  return out;
}

}  // namespace

std::vector<Word> lyndon_words(int m, int d) {
  check_alphabet(m);
  if (d < 1) throw std::invalid_argument("lyndon_words: degree must be positive");
  std::vector<Word> out;
  for (Word& w : duval(m, d))
    if (static_cast<int>(w.size()) == d) out.push_back(std::move(w));
  return out;
}

long long witt_dim(int m, int d) {
  check_alphabet(m);
  if (d < 1) throw std::invalid_argument("witt_dim: degree must be positive");
  Integer sum = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e) continue;
    int mu = mobius(e);
    if (mu) sum += mu * int_pow(m, d / e);
  }
  return to_int64(Integer(sum / d));
}

void TensorElt::add(const Word& w, const Rational& c) {
  if (c == 0) return;
  Rational& slot = terms[w];
  slot += c;
  if (slot == 0) terms.erase(w);
}

namespace {

// a (x) b - b (x) a by word concatenation, dropping words longer than cap.
TensorElt commutator(const TensorElt& a, const TensorElt& b, int cap) {
  TensorElt out;
  for (const auto& [u, x] : a.terms) {
    for (const auto& [v, y] : b.terms) {
      if (static_cast<int>(u.size() + v.size()) > cap) continue;
      Rational c = x * y;
      out.add(u + v, c);
      out.add(v + u, -c);
    }
  }
  return out;
}

// Longest proper Lyndon suffix = right factor of the standard factorization.
size_t standard_split(const Word& w) {
  for (size_t start = 1; start < w.size(); ++start)
    if (is_lyndon(w.substr(start))) return start;
  throw std::logic_error("standard_split: no Lyndon suffix in '" + w + "'");
}

}  // namespace

FreeLie::FreeLie(int m, int D) : m_(m), D_(D) {
  check_alphabet(m);
  if (D < 0) throw std::invalid_argument("FreeLie: negative truncation degree");
  words_by_degree_.resize(static_cast<size_t>(D) + 1);
  for (Word& w : duval(m, D)) words_by_degree_[w.size()].push_back(std::move(w));
  for (int d = 1; d <= D; ++d)
    for (const Word& w : words_by_degree_[static_cast<size_t>(d)]) all_words_.push_back(w);

  // Standard bracketing images, shortest words first so factors exist.
  for (const Word& w : all_words_) {
    TensorElt img;
    if (w.size() == 1) {
      img.add(w, 1);
    } else {
      size_t split = standard_split(w);
      img = commutator(images_.at(w.substr(0, split)), images_.at(w.substr(split)), D_);
    }
    images_.emplace(w, std::move(img));
  }
}

const std::vector<Word>& FreeLie::words(int d) const {
  if (d < 0 || d > D_) throw std::invalid_argument("FreeLie::words: degree out of range");
  return words_by_degree_[static_cast<size_t>(d)];
}

const TensorElt& FreeLie::bracket_image(const Word& w) const {
  auto it = images_.find(w);
  if (it == images_.end())
    throw std::invalid_argument("bracket_image: '" + w + "' is not a Lyndon basis word here");
  return it->second;
}

LieElement FreeLie::basis_element(const Word& w) const {
  LieElement e;
  e.coords[w] = 1;
  e.image = bracket_image(w);
  return e;
}

LieElement FreeLie::from_tensor(TensorElt t) const {
  LieElement out;
  out.image = t;
  // Per degree, repeatedly strip the lexicographically smallest word; it
  // must be Lyndon with the basis image contributing it with coefficient 1.
  for (int d = 1; d <= D_; ++d) {
    std::map<Word, Rational> layer;
    for (const auto& [w, c] : t.terms)
      if (static_cast<int>(w.size()) == d) layer.emplace(w, c);
    while (!layer.empty()) {
      const Word w = layer.begin()->first;
      const Rational c = layer.begin()->second;
      if (!std::binary_search(words_by_degree_[static_cast<size_t>(d)].begin(),
                              words_by_degree_[static_cast<size_t>(d)].end(), w))
        throw std::logic_error("from_tensor: leading word '" + w +
                               "' is not Lyndon; tensor image is corrupt");
      out.coords[w] = c;
      for (const auto& [u, x] : bracket_image(w).terms) {
        auto it = layer.find(u);
        Rational& slot = it == layer.end() ? layer[u] : it->second;
        slot -= c * x;
        if (slot == 0) layer.erase(u);
      }
    }
  }
  return out;
}

LieElement FreeLie::bracket(const LieElement& a, const LieElement& b) const {
  return from_tensor(commutator(a.image, b.image, D_));
}

GAlgebra::GAlgebra(int m, int n, int D) : m_(m), n_(n), D_(D), lie_(m, D) {
  if (n < 1) throw std::invalid_argument("GAlgebra: need at least one copy");
  for (int d = 1; d <= D; ++d)
    for (const Word& w : lie_.words(d))
      for (int c = 1; c <= n; ++c) basis_.push_back(GVector{w, c});

  // Bracket table on Lyndon words, keyed and evaluated on the canonical
  // lexicographic pair (u < v); the flipped order is derived by antisymmetry.
  const auto& words = lie_.all_words();
  for (size_t i = 0; i < words.size(); ++i) {
    for (size_t j = i + 1; j < words.size(); ++j) {
      const Word& u = std::min(words[i], words[j]);
      const Word& v = std::max(words[i], words[j]);
      if (static_cast<int>(u.size() + v.size()) > D) continue;
      LieElement br = lie_.bracket(lie_.basis_element(u), lie_.basis_element(v));
      std::vector<std::pair<Word, Rational>> entry(br.coords.begin(), br.coords.end());
      word_brackets_.emplace(std::make_pair(u, v), std::move(entry));
    }
  }
}

int GAlgebra::index_of(const Word& w, int copy) const {
  GVector probe{w, copy};
  auto cmp = [](const GVector& a, const GVector& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    if (a.word != b.word) return a.word < b.word;
    return a.copy < b.copy;
  };
  auto it = std::lower_bound(basis_.begin(), basis_.end(), probe, cmp);
  if (it == basis_.end() || !(*it == probe))
    throw std::invalid_argument("GAlgebra::index_of: no such basis vector");
  return static_cast<int>(it - basis_.begin());
}

std::vector<std::pair<int, Rational>> GAlgebra::bracket(int i, int j) const {
  const GVector& a = vec(i);
  const GVector& b = vec(j);
  if (a.copy != b.copy || a.word == b.word) return {};
  if (static_cast<int>(a.word.size() + b.word.size()) > D_) return {};
  bool flipped = a.word > b.word;
  const auto& entry =
      word_brackets_.at(std::make_pair(std::min(a.word, b.word), std::max(a.word, b.word)));
  std::vector<std::pair<int, Rational>> out;
  out.reserve(entry.size());
  for (const auto& [w, c] : entry)
    out.emplace_back(index_of(w, a.copy), flipped ? -c : c);
  return out;
}

std::vector<int> GAlgebra::weight(int idx) const {
  std::vector<int> w(static_cast<size_t>(m_), 0);
  for (char ch : vec(idx).word) ++w[static_cast<size_t>(ch - '1')];
  return w;
}

std::vector<int> GAlgebra::copy_relabel_permutation(const std::vector<int>& sigma) const {
  if (static_cast<int>(sigma.size()) != n_)
    throw std::invalid_argument("copy_relabel_permutation: sigma must list all copies");
  std::vector<int> perm(basis_.size());
  for (int i = 0; i < dim(); ++i)
    perm[static_cast<size_t>(i)] =
        index_of(vec(i).word, sigma[static_cast<size_t>(vec(i).copy - 1)]);
  return perm;
}

}  // namespace symres
