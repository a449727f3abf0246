#ifndef SYMRES_CHARACTERS_HPP
#define SYMRES_CHARACTERS_HPP

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "symres/partition.hpp"
#include "symres/rational.hpp"

namespace symres {

/// Cycle types of S_n are partitions of n.
using CycleType = Partition;

/// A class function on S_n: cycle type -> exact rational. Missing keys read
/// as zero; stored values are never zero.
class ClassFunction {
 public:
  explicit ClassFunction(int n) : n_(n) {}

  int n() const { return n_; }
  Rational at(const CycleType& rho) const;
  void set(const CycleType& rho, Rational value);
  void add(const CycleType& rho, const Rational& value);

  const PartitionMap<Rational>& values() const { return values_; }
  bool is_zero() const { return values_.empty(); }
  bool integral() const;

  ClassFunction& operator+=(const ClassFunction& other);
  ClassFunction& operator-=(const ClassFunction& other);
  ClassFunction& operator*=(const Rational& scalar);
  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

 private:
  int n_;
  PartitionMap<Rational> values_;
};

/// Exact character computations for symmetric groups. The Murnaghan-Nakayama
/// memo table is per-instance and guarded by a mutex, so one engine can be
/// shared across threads or confined to one, as the caller prefers.
class CharacterEngine {
 public:
  CharacterEngine() = default;
  CharacterEngine(const CharacterEngine&) = delete;
  CharacterEngine& operator=(const CharacterEngine&) = delete;

  /// chi^lambda(rho) by recursive border-strip expansion. Requires
  /// |lambda| = |rho|.
  long long mn_character(const Partition& lambda, const CycleType& rho) const;

  /// The full irreducible character chi^lambda as a class function.
  ClassFunction irreducible(const Partition& lambda) const;

  /// All cycle types of S_n with their class sizes; sizes sum to n!.
  std::vector<std::pair<CycleType, Integer>> class_table(int n) const;

  /// Trace of a permutation of cycle type rho (in S_n) on the Schur functor
  /// S^lambda(C^n): s_lambda evaluated at the permutation's eigenvalues via
  /// the power-sum expansion. Identically zero when l(lambda) > n.
  long long restriction_value(const Partition& lambda, int n, const CycleType& rho) const;

  /// The class function rho -> restriction_value(lambda, n, rho).
  ClassFunction restriction_character(const Partition& lambda, int n) const;

  /// [M_n^mu] = sum over horizontal strips mu/nu of [S^{nu[n]}] (Pieri);
  /// equals the character induced from S^mu boxtimes 1. Needs n >= |mu|+mu1.
  ClassFunction m_module_character(const Partition& mu, int n) const;

  /// Multiplicities <f, chi^lambda> for all lambda; throws if any
  /// multiplicity is non-integral (f was not a virtual character).
  PartitionMap<long long> decompose(const ClassFunction& f) const;

 private:
  long long mn_recurse(const std::vector<int>& lambda, const std::vector<int>& rho) const;

  using Key = std::pair<std::vector<int>, std::vector<int>>;
  mutable std::map<Key, long long> memo_;
  mutable std::mutex mutex_;
};

/// <f, g> = (1/n!) sum_rho |class(rho)| f(rho) g(rho). Values are rational,
/// so no conjugation is involved. Throws on mismatched n.
Rational cf_inner(const ClassFunction& f, const ClassFunction& g);

}  // namespace symres

#endif
