#ifndef SYMRES_CECOMPLEX_HPP
#define SYMRES_CECOMPLEX_HPP

#include <memory>
#include <optional>
#include <vector>

#include "symres/coefficients.hpp"
#include "symres/freelie.hpp"
#include "symres/sparse.hpp"
#include "symres/symfunc.hpp"

namespace symres {

/// Wedge basis vector: strictly increasing tuple of g-basis indices.
struct WedgeVector {
  std::vector<int> idx;
  friend bool operator==(const WedgeVector&, const WedgeVector&) = default;
};

/// All strictly increasing k-tuples of total degree i, in lexicographic
/// order of index tuples.
std::vector<WedgeVector> chain_basis(const GAlgebra& g, int k, int i);

/// Matrix of the chain boundary
///   d(x_1 ^ ... ^ x_k) = sum_{a<b} (-1)^{a+b} [x_a,x_b] ^ ... (a, b omitted)
/// from the (k, i) chain basis to the (k-1, i) one; the cochain differential
/// of the same slice is its transpose.
SparseMatrix boundary_matrix(const GAlgebra& g, int k, int i);

/// The degree-i slice of the Chevalley-Eilenberg complex of g with all chain
/// bases and boundary matrices materialized. Positions run k = 0..i (higher
/// wedge powers vanish in degree i since g lives in degrees >= 1).
class CESlice {
 public:
  CESlice(const GAlgebra& g, int i);

  const GAlgebra& algebra() const { return *g_; }
  int degree() const { return i_; }
  const std::vector<WedgeVector>& basis(int k) const;
  int dim(int k) const;
  const SparseMatrix& boundary(int k) const;  // d_k : C_k -> C_{k-1}, 1 <= k <= i
  int index_of(int k, const std::vector<int>& idx) const;

 private:
  const GAlgebra* g_;
  int i_;
  std::vector<std::vector<WedgeVector>> bases_;
  std::vector<std::map<std::vector<int>, int>> index_;
  std::vector<SparseMatrix> boundaries_;
};

/// Canonical permutation of cycle type rho on {1..n}: cycles laid out left
/// to right; entry c-1 holds the image of c.
std::vector<int> cycle_type_representative(const CycleType& rho);

/// Signed permutation matrix of the wedge action on C_k induced by a
/// permutation of g-basis indices (tuples re-sorted with sign).
SparseMatrix wedge_action_matrix(const CESlice& slice, int k, const std::vector<int>& g_perm);

/// GL(V) character of C_k as traces on torus-weight blocks: coefficient of
/// m_lambda is the trace of the permutation action on the weight-lambda
/// component. Verifies against the plethysm route of joint_character.
SymFn chain_character_by_traces(const CESlice& slice, int k, const std::vector<int>& g_perm);

struct SliceReport {
  int m = 0, n = 0, i = 0;
  std::vector<long long> chain_dims;   // k = 0..i
  std::vector<long long> ranks;        // ranks[k] = rank d_k (ranks[0] = 0)
  std::vector<long long> cohomology;   // dim at position k
  long long far_left_expected = 0;     // C(n,i) * m^i
  bool d2_zero = true;
  bool euler_ok = true;
  bool pass = false;
};

struct TermReport {
  int k = 0;
  std::vector<ExpansionTerm> coefficients;  // lambda |- k with multiplicity
  bool consistent = false;          // term lies in span{Res S^lambda : lambda |- k}
  bool nonneg_integral = false;
  bool matches_construction = false;
  bool ok() const { return consistent && nonneg_integral && matches_construction; }
};

struct ResolutionReport {
  Partition mu;
  int m = 0, n = 0;
  SliceReport slice;
  bool euler_match = false;
  std::optional<FailureWitness> euler_witness;
  std::vector<TermReport> terms;
  bool matrix_check_ran = false;
  bool matrix_far_left_ok = true;
  bool pass = false;
};

/// Exactness and resolution certification for g = L (x) C^n.
class CEVerifier {
 public:
  explicit CEVerifier(std::shared_ptr<SymEngine> sym = nullptr);
  CEVerifier(const CEVerifier&) = delete;
  CEVerifier& operator=(const CEVerifier&) = delete;

  const SymEngine& sym() const { return *sym_; }
  std::shared_ptr<SymEngine> sym_ptr() const { return sym_; }
  const CoefficientEngine& coefficients() const { return coeffs_; }

  /// Exact-rank cohomology of the degree-i slice: PASS iff every position
  /// below the far left vanishes and the far-left dimension is C(n,i)*m^i.
  SliceReport verify_exactness(int m, int n, int i) const;

  /// GL(V) x S_n character of (wedge^k g)_i at a permutation of type rho:
  /// sum over lambda |- k of (degree-i part of s_{lambda'}[L]) times the
  /// trace of rho on S^lambda(C^n). Returned in the p-basis.
  SymFn joint_character(int m, int n, int k, int i, const CycleType& rho) const;

  /// S_n character of Hom_{GL(V)}(S^{mu'}(V), (wedge^k g)_{|mu|}), the k-th
  /// term of the resolution complex. Requires m >= |mu|.
  ClassFunction multiplicity_character(const Partition& mu, int m, int n, int k) const;

  /// Matrix-level S_n character of the far-left cohomology of the
  /// multiplicity complex, from equivariant traces on weight blocks.
  ClassFunction far_left_character_from_matrices(const Partition& mu, int m, int n) const;

  /// Full certification: ambient exactness, Euler-characteristic identity
  /// against [M_n^mu], per-term structure, and (for |mu| <= 2) the direct
  /// matrix-level far-left character.
  ResolutionReport verify_resolution(const Partition& mu, int m, int n) const;

 private:
  std::shared_ptr<SymEngine> sym_;
  CoefficientEngine coeffs_;
};

}  // namespace symres

#endif
