#ifndef SYMRES_SYMFUNC_HPP
#define SYMRES_SYMFUNC_HPP

#include <memory>
#include <mutex>

#include "symres/characters.hpp"
#include "symres/partition.hpp"
#include "symres/rational.hpp"

namespace symres {

enum class Basis { p, h, e, m, s };

const char* basis_name(Basis b);
Basis basis_from_name(std::string_view name);

/// A basis-tagged sparse element of the ring of symmetric functions with
/// exact rational coefficients. The empty partition indexes the constant
/// term; zero coefficients are never stored.
class SymFn {
 public:
  explicit SymFn(Basis basis = Basis::p) : basis_(basis) {}

  static SymFn constant(Rational c, Basis basis = Basis::p);
  static SymFn generator(Basis basis, const Partition& idx);  // p_rho, h_lam, ...

  Basis basis() const { return basis_; }
  const PartitionMap<Rational>& terms() const { return terms_; }
  Rational coeff(const Partition& idx) const;
  bool is_zero() const { return terms_.empty(); }
  int max_degree() const;

  void set(const Partition& idx, Rational c);
  void add(const Partition& idx, const Rational& c);

  SymFn& operator+=(const SymFn& other);
  SymFn& operator-=(const SymFn& other);
  SymFn& operator*=(const Rational& scalar);
  friend SymFn operator+(SymFn a, const SymFn& b) { return a += b; }
  friend SymFn operator-(SymFn a, const SymFn& b) { return a -= b; }
  friend SymFn operator*(SymFn a, const Rational& c) { return a *= c; }
  friend bool operator==(const SymFn&, const SymFn&) = default;

 private:
  Basis basis_;
  PartitionMap<Rational> terms_;
};

enum class SeriesKind { total_lyndon, h_series };

/// Ring operations routed through the power-sum hub. Conversions, products,
/// plethysm and the Hall pairing are all exact; basis changes memoize their
/// transition data per instance (thread-safe behind a mutex).
class SymEngine {
 public:
  explicit SymEngine(std::shared_ptr<CharacterEngine> chars = nullptr);
  SymEngine(const SymEngine&) = delete;
  SymEngine& operator=(const SymEngine&) = delete;

  const CharacterEngine& characters() const { return *chars_; }
  std::shared_ptr<CharacterEngine> characters_ptr() const { return chars_; }

  SymFn to_p(const SymFn& f) const;
  SymFn to_basis(const SymFn& f, Basis target) const;
  SymFn to_schur(const SymFn& f) const { return to_basis(f, Basis::s); }

  SymFn multiply(const SymFn& f, const SymFn& g) const;

  /// Hall inner product: <p_rho, p_tau> = delta z_rho, so Schur functions
  /// are orthonormal.
  Rational inner(const SymFn& f, const SymFn& g) const;

  /// <f, s_lambda> without a full Schur conversion.
  Rational inner_schur(const SymFn& f, const Partition& lambda) const;

  /// f[g] truncated above total degree D. On power sums p_k[g] substitutes
  /// p_j -> p_{jk} in the p-expansion of g with constants fixed; the result
  /// extends to f as a ring homomorphism (linear in f, not in g).
  SymFn plethysm(const SymFn& f, const SymFn& g, int D) const;

  /// Lyndon symmetric function L_k = (1/k) sum_{d|k} mobius(d) p_d^{k/d},
  /// the GL(V) character of the degree-k part of the free Lie algebra.
  SymFn lyndon_sym(int k) const;

  /// total_lyndon: L_1 + ... + L_D. h_series: 1 + h_1 + ... + h_D.
  SymFn series(SeriesKind kind, int D) const;

  static SymFn truncate(const SymFn& f, int D);

  /// Specialization x_1 = ... = x_m = 1 (p_k -> m); the dimension of the
  /// representation a degree-homogeneous character describes.
  Rational eval_at_ones(const SymFn& f, int m) const;

 private:
  SymFn p_of_h(int k) const;
  SymFn p_of_e(int k) const;
  const SymFn& p_of_s(const Partition& lambda) const;
  const SymFn& p_of_m(const Partition& lambda) const;
  void ensure_m_degree(int d) const;

  std::shared_ptr<CharacterEngine> chars_;
  mutable std::map<int, SymFn> h_memo_;
  mutable PartitionMap<SymFn> s_memo_;
  mutable PartitionMap<SymFn> m_memo_;
  mutable std::map<int, bool> m_degree_done_;
  mutable std::mutex mutex_;
};

/// Mobius function by trial-division factorization.
int mobius(int n);

}  // namespace symres

#endif
