#include "symres/cecomplex.hpp"

#include <algorithm>
#include <stdexcept>

#include "symres/characters.hpp"

namespace symres {

namespace {

void enumerate_wedges(const GAlgebra& g, int k, int i, int start, std::vector<int>& chosen,
                      int sum, std::vector<WedgeVector>& out) {
  if (static_cast<int>(chosen.size()) == k) {
    if (sum == i) out.push_back(WedgeVector{chosen});
    return;
  }
  const int need = k - static_cast<int>(chosen.size());
  for (int t = start; t < g.dim(); ++t) {
    // indices are sorted by degree, so everything from t on has degree >= d
    int d = g.degree(t);
    if (sum + d * need > i) break;
    if (g.dim() - t < need) break;
    chosen.push_back(t);
    enumerate_wedges(g, k, i, t + 1, chosen, sum + d, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<WedgeVector> chain_basis(const GAlgebra& g, int k, int i) {
  if (k < 0 || i < 0) throw std::invalid_argument("chain_basis: negative arguments");
  std::vector<WedgeVector> out;
  std::vector<int> chosen;
  enumerate_wedges(g, k, i, 0, chosen, 0, out);
  return out;
}

SparseMatrix boundary_matrix(const GAlgebra& g, int k, int i) {
  CESlice slice(g, i);
  return slice.boundary(k);
}

CESlice::CESlice(const GAlgebra& g, int i) : g_(&g), i_(i) {
  if (i < 0) throw std::invalid_argument("CESlice: negative degree");
  if (g.max_degree() < i)
    throw std::invalid_argument("CESlice: algebra truncated below the requested degree");
  bases_.resize(static_cast<size_t>(i) + 1);
  index_.resize(static_cast<size_t>(i) + 1);
  for (int k = 0; k <= i; ++k) {
    bases_[static_cast<size_t>(k)] = chain_basis(g, k, i);
    auto& map = index_[static_cast<size_t>(k)];
    for (size_t pos = 0; pos < bases_[static_cast<size_t>(k)].size(); ++pos)
      map.emplace(bases_[static_cast<size_t>(k)][pos].idx, static_cast<int>(pos));
  }

  boundaries_.reserve(static_cast<size_t>(i));
  for (int k = 1; k <= i; ++k) {
    const auto& domain = bases_[static_cast<size_t>(k)];
    SparseMatrix d(dim(k - 1), dim(k));
    for (size_t col = 0; col < domain.size(); ++col) {
      const std::vector<int>& tuple = domain[col].idx;
      for (size_t p = 0; p + 1 < tuple.size(); ++p) {
        for (size_t q = p + 1; q < tuple.size(); ++q) {
          auto bracket = g.bracket(tuple[p], tuple[q]);
          if (bracket.empty()) continue;
          std::vector<int> rest;
          rest.reserve(tuple.size() - 2);
          for (size_t t = 0; t < tuple.size(); ++t)
            if (t != p && t != q) rest.push_back(tuple[t]);
          int pair_sign = ((p + q) % 2 == 0) ? 1 : -1;  // (-1)^{(p+1)+(q+1)}
          for (const auto& [u, c] : bracket) {
            if (std::binary_search(rest.begin(), rest.end(), u)) continue;  // repeated factor
            auto at = std::lower_bound(rest.begin(), rest.end(), u);
            int shuffles = static_cast<int>(at - rest.begin());
            std::vector<int> merged = rest;
            merged.insert(merged.begin() + (at - rest.begin()), u);
            int row = index_of(k - 1, merged);
            int sign = (shuffles % 2 == 0) ? pair_sign : -pair_sign;
            d.add(row, static_cast<int>(col), c * sign);
          }
        }
      }
    }
    boundaries_.push_back(std::move(d));
  }
}

const std::vector<WedgeVector>& CESlice::basis(int k) const {
  if (k < 0 || k > i_) throw std::invalid_argument("CESlice::basis: k out of range");
  return bases_[static_cast<size_t>(k)];
}

int CESlice::dim(int k) const {
  if (k < 0 || k > i_) return 0;
  return static_cast<int>(bases_[static_cast<size_t>(k)].size());
}

const SparseMatrix& CESlice::boundary(int k) const {
  if (k < 1 || k > i_) throw std::invalid_argument("CESlice::boundary: k out of range");
  return boundaries_[static_cast<size_t>(k - 1)];
}

int CESlice::index_of(int k, const std::vector<int>& idx) const {
  auto it = index_[static_cast<size_t>(k)].find(idx);
  if (it == index_[static_cast<size_t>(k)].end())
    throw std::logic_error("CESlice::index_of: tuple not in chain basis");
  return it->second;
}

std::vector<int> cycle_type_representative(const CycleType& rho) {
  std::vector<int> sigma(static_cast<size_t>(rho.size()));
  int base = 0;
  for (int part : rho.parts()) {
    for (int j = 0; j < part; ++j)
      sigma[static_cast<size_t>(base + j)] = base + (j + 1) % part + 1;  // 1-based images
    base += part;
  }
  return sigma;
}

namespace {

// Applies a g-index permutation to a wedge tuple; returns the sorted tuple
// and the sign of the sort, or sign 0 if two images coincide (impossible
// for a genuine permutation).
std::pair<std::vector<int>, int> permute_tuple(const std::vector<int>& tuple,
                                               const std::vector<int>& g_perm) {
  std::vector<int> image;
  image.reserve(tuple.size());
  for (int t : tuple) image.push_back(g_perm[static_cast<size_t>(t)]);
  int sign = 1;
  for (size_t a = 0; a + 1 < image.size(); ++a)
    for (size_t b = a + 1; b < image.size(); ++b)
      if (image[a] > image[b]) sign = -sign;
  std::sort(image.begin(), image.end());
  return {std::move(image), sign};
}

std::vector<int> wedge_weight(const GAlgebra& g, const std::vector<int>& tuple) {
  std::vector<int> w(static_cast<size_t>(g.m()), 0);
  for (int t : tuple) {
    std::vector<int> part = g.weight(t);
    for (size_t j = 0; j < part.size(); ++j) w[j] += part[j];
  }
  return w;
}

}  // namespace

SparseMatrix wedge_action_matrix(const CESlice& slice, int k, const std::vector<int>& g_perm) {
  const auto& basis = slice.basis(k);
  SparseMatrix p(static_cast<int>(basis.size()), static_cast<int>(basis.size()));
  for (size_t col = 0; col < basis.size(); ++col) {
    auto [image, sign] = permute_tuple(basis[col].idx, g_perm);
    p.add(slice.index_of(k, image), static_cast<int>(col), sign);
  }
  return p;
}

SymFn chain_character_by_traces(const CESlice& slice, int k, const std::vector<int>& g_perm) {
  const GAlgebra& g = slice.algebra();
  SymFn out(Basis::m);
  for (const Partition& lambda : partitions_of(slice.degree())) {
    if (lambda.length() > g.m()) continue;
    std::vector<int> target(static_cast<size_t>(g.m()), 0);
    for (int r = 0; r < lambda.length(); ++r) target[static_cast<size_t>(r)] = lambda.part(r);
    Rational trace = 0;
    for (const WedgeVector& wv : slice.basis(k)) {
      if (wedge_weight(g, wv.idx) != target) continue;
      auto [image, sign] = permute_tuple(wv.idx, g_perm);
      if (image == wv.idx) trace += sign;
    }
    out.add(lambda, trace);
  }
  return out;
}

namespace {

std::shared_ptr<SymEngine> ensure_engine(std::shared_ptr<SymEngine> sym) {
  return sym ? std::move(sym) : std::make_shared<SymEngine>();
}

}  // namespace

CEVerifier::CEVerifier(std::shared_ptr<SymEngine> sym)
    : sym_(ensure_engine(std::move(sym))), coeffs_(sym_) {}

SliceReport CEVerifier::verify_exactness(int m, int n, int i) const {
  SliceReport rep;
  rep.m = m;
  rep.n = n;
  rep.i = i;
  GAlgebra g(m, n, i);
  CESlice slice(g, i);

  rep.chain_dims.resize(static_cast<size_t>(i) + 1);
  rep.ranks.assign(static_cast<size_t>(i) + 1, 0);
  for (int k = 0; k <= i; ++k) rep.chain_dims[static_cast<size_t>(k)] = slice.dim(k);
  for (int k = 1; k <= i; ++k)
    rep.ranks[static_cast<size_t>(k)] = slice.boundary(k).rank();
  for (int k = 2; k <= i; ++k)
    if (!slice.boundary(k - 1).multiply(slice.boundary(k)).is_zero()) rep.d2_zero = false;

  rep.cohomology.resize(static_cast<size_t>(i) + 1);
  for (int k = 0; k <= i; ++k) {
    long long incoming = (k + 1 <= i) ? rep.ranks[static_cast<size_t>(k + 1)] : 0;
    rep.cohomology[static_cast<size_t>(k)] =
        rep.chain_dims[static_cast<size_t>(k)] - rep.ranks[static_cast<size_t>(k)] - incoming;
  }

  rep.far_left_expected = to_int64(Integer(binomial(n, i) * int_pow(m, i)));

  long long euler_dims = 0, euler_coh = 0;
  for (int k = 0; k <= i; ++k) {
    long long sign = (k % 2 == 0) ? 1 : -1;
    euler_dims += sign * rep.chain_dims[static_cast<size_t>(k)];
    euler_coh += sign * rep.cohomology[static_cast<size_t>(k)];
  }
  rep.euler_ok = euler_dims == euler_coh;

  rep.pass = rep.d2_zero && rep.euler_ok;
  for (int k = 0; k < i; ++k)
    if (rep.cohomology[static_cast<size_t>(k)] != 0) rep.pass = false;
  if (rep.cohomology[static_cast<size_t>(i)] != rep.far_left_expected) rep.pass = false;
  return rep;
}

SymFn CEVerifier::joint_character(int m, int n, int k, int i, const CycleType& rho) const {
  (void)m;  // the symmetric-function form is alphabet-independent
  const CharacterEngine& chars = sym_->characters();
  SymFn out(Basis::p);
  for (const Partition& lambda : partitions_of(k)) {
    long long r = chars.restriction_value(lambda, n, rho);
    if (!r) continue;
    SymFn pleth = coeffs_.lyndon_plethysm(lambda.conjugate(), i);
    for (const auto& [idx, c] : pleth.terms())
      if (idx.size() == i) out.add(idx, c * Rational(static_cast<long>(r)));
  }
  return out;
}

ClassFunction CEVerifier::multiplicity_character(const Partition& mu, int m, int n, int k) const {
  if (m < mu.size())
    throw std::invalid_argument("multiplicity_character: need m >= |mu| so S^{mu'}(V) != 0");
  const int i = mu.size();
  const CharacterEngine& chars = sym_->characters();
  ClassFunction out(n);
  for (const Partition& lambda : partitions_of(k)) {
    Rational c = sym_->inner_schur(coeffs_.lyndon_plethysm(lambda.conjugate(), i), mu.conjugate());
    if (c == 0) continue;
    long long mult = to_int64(c);
    if (mult < 0) throw std::logic_error("multiplicity_character: negative plethysm coefficient");
    ClassFunction part = chars.restriction_character(lambda, n);
    part *= Rational(static_cast<long>(mult));
    out += part;
  }
  return out;
}

ClassFunction CEVerifier::far_left_character_from_matrices(const Partition& mu, int m,
                                                           int n) const {
  if (m < mu.size())
    throw std::invalid_argument("far_left_character_from_matrices: need m >= |mu|");
  const int i = mu.size();
  GAlgebra g(m, n, i);
  CESlice slice(g, i);
  const SymFn schur_mu_conj = SymFn::generator(Basis::s, mu.conjugate());

  struct WeightBlock {
    Partition lambda;
    std::vector<int> top;                           // C_i indices of this weight
    std::vector<int> sub;                           // C_{i-1} indices of this weight
    std::map<int, int> sub_local;                   // global -> local
    std::vector<std::map<int, Rational>> im_basis;  // pivot columns of the restricted boundary
  };

  std::vector<WeightBlock> blocks;
  for (const Partition& lambda : partitions_of(i)) {
    if (lambda.length() > m) continue;
    WeightBlock blk;
    blk.lambda = lambda;
    std::vector<int> target(static_cast<size_t>(m), 0);
    for (int r = 0; r < lambda.length(); ++r) target[static_cast<size_t>(r)] = lambda.part(r);
    for (int pos = 0; pos < slice.dim(i); ++pos)
      if (wedge_weight(g, slice.basis(i)[static_cast<size_t>(pos)].idx) == target)
        blk.top.push_back(pos);
    if (i >= 1) {
      for (int pos = 0; pos < slice.dim(i - 1); ++pos)
        if (wedge_weight(g, slice.basis(i - 1)[static_cast<size_t>(pos)].idx) == target)
          blk.sub.push_back(pos);
      for (size_t loc = 0; loc < blk.sub.size(); ++loc) blk.sub_local[blk.sub[loc]] = static_cast<int>(loc);

      // boundary restricted to the weight block, as local columns
      const SparseMatrix& d = slice.boundary(i);
      SparseMatrix restricted(static_cast<int>(blk.sub.size()), static_cast<int>(blk.top.size()));
      for (size_t lc = 0; lc < blk.top.size(); ++lc) {
        for (int row = 0; row < d.rows(); ++row) {
          Rational v = d.at(row, blk.top[lc]);
          if (v == 0) continue;
          auto it = blk.sub_local.find(row);
          if (it == blk.sub_local.end())
            throw std::logic_error("far_left_character_from_matrices: boundary broke the weight grading");
          restricted.add(it->second, static_cast<int>(lc), v);
        }
      }
      for (int col : restricted.pivot_columns()) {
        std::map<int, Rational> column;
        for (int row = 0; row < restricted.rows(); ++row) {
          Rational v = restricted.at(row, col);
          if (v != 0) column[row] = v;
        }
        blk.im_basis.push_back(std::move(column));
      }
    }
    blocks.push_back(std::move(blk));
  }

  ClassFunction out(n);
  for (const Partition& rho : partitions_of(n)) {
    std::vector<int> sigma = cycle_type_representative(rho);
    std::vector<int> g_perm = g.copy_relabel_permutation(sigma);
    SymFn traces(Basis::m);
    for (const WeightBlock& blk : blocks) {
      Rational trace_top = 0;
      for (int pos : blk.top) {
        const auto& tuple = slice.basis(i)[static_cast<size_t>(pos)].idx;
        auto [image, sign] = permute_tuple(tuple, g_perm);
        if (image == tuple) trace_top += sign;
      }
      Rational trace_im = 0;
      if (!blk.im_basis.empty()) {
        // local signed action of sigma on the C_{i-1} weight block
        std::vector<std::pair<int, int>> local_action(blk.sub.size());
        for (size_t loc = 0; loc < blk.sub.size(); ++loc) {
          const auto& tuple = slice.basis(i - 1)[static_cast<size_t>(blk.sub[loc])].idx;
          auto [image, sign] = permute_tuple(tuple, g_perm);
          local_action[loc] = {blk.sub_local.at(slice.index_of(i - 1, image)), sign};
        }
        std::vector<std::map<int, Rational>> permuted_basis;
        permuted_basis.reserve(blk.im_basis.size());
        for (const auto& column : blk.im_basis) {
          std::map<int, Rational> moved;
          for (const auto& [row, v] : column) {
            auto [new_row, sign] = local_action[static_cast<size_t>(row)];
            moved[new_row] = v * sign;
          }
          permuted_basis.push_back(std::move(moved));
        }
        auto x = solve_in_column_span(blk.im_basis, permuted_basis,
                                      static_cast<int>(blk.sub.size()));
        for (size_t j = 0; j < x.size(); ++j) trace_im += x[j][j];
      }
      traces.add(blk.lambda, trace_top - trace_im);
    }
    out.set(rho, sym_->inner(traces, schur_mu_conj));
  }
  return out;
}

ResolutionReport CEVerifier::verify_resolution(const Partition& mu, int m, int n) const {
  if (m < mu.size()) throw std::invalid_argument("verify_resolution: need m >= |mu|");
  if (n < mu.size() + mu.part(0))
    throw std::invalid_argument("verify_resolution: need n >= |mu| + mu_1");
  const int i = mu.size();
  const CharacterEngine& chars = sym_->characters();

  ResolutionReport rep;
  rep.mu = mu;
  rep.m = m;
  rep.n = n;
  rep.slice = verify_exactness(m, n, i);

  std::vector<ClassFunction> terms;
  terms.reserve(static_cast<size_t>(i) + 1);
  for (int k = 0; k <= i; ++k) terms.push_back(multiplicity_character(mu, m, n, k));

  ClassFunction euler(n);
  for (int k = 0; k <= i; ++k) {
    ClassFunction signed_term = terms[static_cast<size_t>(k)];
    signed_term *= Rational((i - k) % 2 == 0 ? 1 : -1);
    euler += signed_term;
  }
  ClassFunction target = chars.m_module_character(mu, n);
  rep.euler_match = true;
  for (const Partition& rho : partitions_of(n)) {
    Rational a = euler.at(rho), b = target.at(rho);
    if (a != b) {
      rep.euler_match = false;
      rep.euler_witness = FailureWitness{rho, a, b};
      break;
    }
  }

  // Term structure: each term must decompose over Res S^lambda, lambda |- k,
  // with nonnegative integer coefficients matching the plethysm route.
  const std::vector<Partition> classes = partitions_of(n);
  for (int k = 0; k <= i; ++k) {
    TermReport term;
    term.k = k;
    std::vector<Partition> candidates = partitions_of(k);
    std::vector<std::map<int, Rational>> columns;
    for (const Partition& lambda : candidates) {
      std::map<int, Rational> column;
      for (size_t row = 0; row < classes.size(); ++row) {
        long long v = chars.restriction_value(lambda, n, classes[row]);
        if (v) column[static_cast<int>(row)] = Rational(static_cast<long>(v));
      }
      columns.push_back(std::move(column));
    }
    std::map<int, Rational> rhs;
    for (size_t row = 0; row < classes.size(); ++row) {
      Rational v = terms[static_cast<size_t>(k)].at(classes[row]);
      if (v != 0) rhs[static_cast<int>(row)] = v;
    }
    try {
      auto x = solve_in_column_span(columns, {rhs}, static_cast<int>(classes.size()));
      term.consistent = true;
      term.nonneg_integral = true;
      term.matches_construction = true;
      for (size_t j = 0; j < candidates.size(); ++j) {
        const Rational& c = x[j][0];
        if (!is_integral(c) || c < 0) term.nonneg_integral = false;
        Rational expected = sym_->inner_schur(
            coeffs_.lyndon_plethysm(candidates[j].conjugate(), i), mu.conjugate());
        if (c != expected) term.matches_construction = false;
        if (c != 0) term.coefficients.push_back({candidates[j], to_int64(c)});
      }
    } catch (const std::logic_error&) {
      term.consistent = false;
    }
    rep.terms.push_back(std::move(term));
  }

  if (mu.size() <= 2) {
    rep.matrix_check_ran = true;
    rep.matrix_far_left_ok = far_left_character_from_matrices(mu, m, n) == target;
  }

  rep.pass = rep.slice.pass && rep.euler_match && (!rep.matrix_check_ran || rep.matrix_far_left_ok);
  for (const TermReport& term : rep.terms)
    if (!term.ok()) rep.pass = false;
  return rep;
}

}  // namespace symres
