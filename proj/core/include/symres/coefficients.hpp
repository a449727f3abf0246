#ifndef SYMRES_COEFFICIENTS_HPP
#define SYMRES_COEFFICIENTS_HPP

#include <memory>
#include <optional>
#include <vector>

#include "symres/symfunc.hpp"

namespace symres {

enum class AMethod { plethysm, character };

struct ExpansionTerm {
  Partition lambda;
  long long coeff;  // sign is (-1)^{|mu|-|lambda|} times a nonnegative integer
};

/// [M_n^mu] = sum_lambda coeff_lambda [Res S^lambda(C^n)]; independent of n.
/// Terms are ordered by decreasing |lambda| (the resolution order), then
/// reverse-lexicographically.
struct Expansion {
  Partition mu;
  std::vector<ExpansionTerm> terms;
};

enum class CoeffKind { a, b };

struct PartitionPairOrder {
  bool operator()(const std::pair<Partition, Partition>& x,
                  const std::pair<Partition, Partition>& y) const {
    if (!(x.first == y.first)) return table_less(x.first, y.first);
    return table_less(x.second, y.second);
  }
};

/// A materialized table of a- or b-coefficients over all pairs with
/// |lambda| <= max_lambda_size and |mu| <= max_mu_size (the degree bounds).
/// a-entries are nonnegative and equal delta_{lambda,mu} when
/// |mu| >= |lambda| (Littlewood); construction checks both.
struct CoeffTable {
  CoeffKind kind = CoeffKind::a;
  int max_lambda_size = 0, max_mu_size = 0;
  std::map<std::pair<Partition, Partition>, long long, PartitionPairOrder> entries;

  long long at(const Partition& lambda, const Partition& mu) const;
};

struct FailureWitness {
  CycleType rho;
  Rational lhs, rhs;
};

struct InversionReport {
  Partition mu;
  int n = 0;
  bool pass = false;
  std::optional<FailureWitness> witness;
};

struct LittlewoodFailure {
  Partition lambda, mu;
  long long expected = 0, got = 0;
};

struct LittlewoodReport {
  int max_size = 0;
  bool pass = false;
  long long pairs_checked = 0;
  std::optional<LittlewoodFailure> first_failure;
};

/// Restriction-coefficient computations. a_coeff is the stable restriction
/// multiplicity: the multiplicity of S^{mu[n]} in Res_{S_n} S^lambda(C^n),
/// which is independent of n once n >= max(|mu|+mu_1, |lambda|+lambda_1);
/// both computation routes evaluate at exactly that n.
class CoefficientEngine {
 public:
  explicit CoefficientEngine(std::shared_ptr<SymEngine> sym = nullptr);
  CoefficientEngine(const CoefficientEngine&) = delete;
  CoefficientEngine& operator=(const CoefficientEngine&) = delete;

  const SymEngine& sym() const { return *sym_; }
  std::shared_ptr<SymEngine> sym_ptr() const { return sym_; }

  /// Smallest n at which the (lambda, mu) restriction multiplicity is
  /// evaluated: max(|mu|+mu_1, |lambda|+lambda_1, 1).
  static int stable_n(const Partition& lambda, const Partition& mu);

  /// The two routes:
  ///   plethysm:  <s_lambda, s_{mu[n]}[1 + h_1 + h_2 + ...]>, truncated at
  ///              degree |lambda|;
  ///   character: <Res chi_{S^lambda(C^n)}, chi^{mu[n]}> over S_n.
  long long a_coeff(const Partition& lambda, const Partition& mu, AMethod method) const;

  /// Assaf-Speyer coefficient
  ///   b_lambda^mu = (-1)^{|mu|-|lambda|} sum_{mu/nu vert. strip}
  ///                 <s_{nu'}, s_{lambda'}[L]>,
  /// computed directly from the strip sum with L truncated at D (>= |mu|;
  /// D < 0 selects |mu|).
  long long b_coeff(const Partition& lambda, const Partition& mu, int D = -1) const;

  /// All lambda with nonzero c_lambda = (-1)^{|mu|-|lambda|}
  /// <s_{lambda'}[L], s_{mu'}>; only |lambda| <= |mu| can occur.
  Expansion m_expansion(const Partition& mu) const;

  /// Exact class-function check of
  ///   [M_n^mu] = sum (lambda, c) c * [Res S^lambda(C^n)].
  InversionReport verify_inversion(const Partition& mu, int n) const;

  /// Same check against an explicitly supplied expansion (lets harnesses
  /// exercise the failure path with corrupted coefficients).
  InversionReport verify_inversion_against(const Expansion& expansion, int n) const;

  /// Builds the full coefficient table over the given degree bounds,
  /// checking the CoeffTable invariants along the way.
  CoeffTable coeff_table(CoeffKind kind, int max_lambda_size, int max_mu_size) const;

  /// a_coeff(lambda, mu, plethysm) == delta_{lambda,mu} for all
  /// |lambda| <= |mu| <= max_size.
  LittlewoodReport verify_littlewood(int max_size) const;

  /// s_kappa[1 + h_1 + ...] truncated at degree D, memoized.
  SymFn h_series_plethysm(const Partition& kappa, int D) const;
  /// s_kappa[L_1 + ... + L_D] truncated at degree D, memoized.
  SymFn lyndon_plethysm(const Partition& kappa, int D) const;

 private:
  std::shared_ptr<SymEngine> sym_;
  mutable std::map<std::pair<std::vector<int>, int>, SymFn> hser_memo_;
  mutable std::map<std::pair<std::vector<int>, int>, SymFn> lyndon_memo_;
  mutable std::mutex mutex_;
};

}  // namespace symres

#endif
