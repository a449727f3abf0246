#include "symres/coefficients.hpp"

#include <stdexcept>

namespace symres {

CoefficientEngine::CoefficientEngine(std::shared_ptr<SymEngine> sym) : sym_(std::move(sym)) {
  if (!sym_) sym_ = std::make_shared<SymEngine>();
}

int CoefficientEngine::stable_n(const Partition& lambda, const Partition& mu) {
  return std::max({mu.size() + mu.part(0), lambda.size() + lambda.part(0), 1});
}

SymFn CoefficientEngine::h_series_plethysm(const Partition& kappa, int D) const {
  std::pair<std::vector<int>, int> key(kappa.parts(), D);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = hser_memo_.find(key);
    if (it != hser_memo_.end()) return it->second;
  }
  SymFn result = sym_->plethysm(SymFn::generator(Basis::s, kappa),
                                sym_->series(SeriesKind::h_series, D), D);
  std::lock_guard<std::mutex> lock(mutex_);
  return hser_memo_.emplace(std::move(key), std::move(result)).first->second;
}

SymFn CoefficientEngine::lyndon_plethysm(const Partition& kappa, int D) const {
  std::pair<std::vector<int>, int> key(kappa.parts(), D);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = lyndon_memo_.find(key);
    if (it != lyndon_memo_.end()) return it->second;
  }
  SymFn result = sym_->plethysm(SymFn::generator(Basis::s, kappa),
                                sym_->series(SeriesKind::total_lyndon, D), D);
  std::lock_guard<std::mutex> lock(mutex_);
  return lyndon_memo_.emplace(std::move(key), std::move(result)).first->second;
}

long long CoefficientEngine::a_coeff(const Partition& lambda, const Partition& mu,
                                     AMethod method) const {
  const int n = stable_n(lambda, mu);
  const Partition padded = pad(mu, n);
  Rational value;
  if (method == AMethod::plethysm) {
    value = sym_->inner_schur(h_series_plethysm(padded, lambda.size()), lambda);
  } else {
    const CharacterEngine& chars = sym_->characters();
    value = cf_inner(chars.restriction_character(lambda, n), chars.irreducible(padded));
  }
  long long a = to_int64(value);
  if (a < 0)
    throw std::logic_error("a_coeff: negative multiplicity for lambda=" + lambda.to_text() +
                           ", mu=" + mu.to_text());
  return a;
}

long long CoefficientEngine::b_coeff(const Partition& lambda, const Partition& mu, int D) const {
  if (D < 0) D = mu.size();
  if (D < mu.size()) throw std::invalid_argument("b_coeff: need D >= |mu|");
  SymFn pleth = lyndon_plethysm(lambda.conjugate(), D);
  Rational sum = 0;
  for (const Partition& nu : vertical_strip_subpartitions(mu))
    sum += sym_->inner_schur(pleth, nu.conjugate());
  int sign = (mu.size() - lambda.size()) % 2 == 0 ? 1 : -1;
  return to_int64(sum * sign);
}

Expansion CoefficientEngine::m_expansion(const Partition& mu) const {
  const int i = mu.size();
  const Partition mu_conj = mu.conjugate();
  Expansion out;
  out.mu = mu;
  for (int size = i; size >= 0; --size) {
    int sign = (i - size) % 2 == 0 ? 1 : -1;
    for (const Partition& lambda : partitions_of(size)) {
      Rational c = sym_->inner_schur(lyndon_plethysm(lambda.conjugate(), i), mu_conj);
      if (c == 0) continue;
      out.terms.push_back({lambda, sign * to_int64(c)});
    }
  }
  return out;
}

InversionReport CoefficientEngine::verify_inversion(const Partition& mu, int n) const {
  return verify_inversion_against(m_expansion(mu), n);
}

InversionReport CoefficientEngine::verify_inversion_against(const Expansion& expansion,
                                                            int n) const {
  const Partition& mu = expansion.mu;
  if (n < mu.size() + mu.part(0))
    throw std::invalid_argument("verify_inversion: need n >= |mu| + mu_1");
  const CharacterEngine& chars = sym_->characters();
  ClassFunction lhs = chars.m_module_character(mu, n);
  ClassFunction rhs(n);
  for (const ExpansionTerm& term : expansion.terms) {
    ClassFunction part = chars.restriction_character(term.lambda, n);
    part *= Rational(static_cast<long>(term.coeff));
    rhs += part;
  }
  InversionReport report;
  report.mu = mu;
  report.n = n;
  report.pass = true;
  for (const Partition& rho : partitions_of(n)) {
    Rational a = lhs.at(rho), b = rhs.at(rho);
    if (a != b) {
      report.pass = false;
      report.witness = FailureWitness{rho, a, b};
      break;
    }
  }
  return report;
}

long long CoeffTable::at(const Partition& lambda, const Partition& mu) const {
  auto it = entries.find({lambda, mu});
  return it == entries.end() ? 0 : it->second;
}

CoeffTable CoefficientEngine::coeff_table(CoeffKind kind, int max_lambda_size,
                                          int max_mu_size) const {
  CoeffTable table;
  table.kind = kind;
  table.max_lambda_size = max_lambda_size;
  table.max_mu_size = max_mu_size;
  for (int ls = 0; ls <= max_lambda_size; ++ls) {
    for (const Partition& lambda : partitions_of(ls)) {
      for (int ms = 0; ms <= max_mu_size; ++ms) {
        for (const Partition& mu : partitions_of(ms)) {
          long long value = kind == CoeffKind::a ? a_coeff(lambda, mu, AMethod::plethysm)
                                                 : b_coeff(lambda, mu);
          if (kind == CoeffKind::a) {
            if (value < 0) throw std::logic_error("coeff_table: negative a-entry");
            if (ms >= ls && value != (lambda == mu ? 1 : 0))
              throw std::logic_error("coeff_table: Littlewood delta violated at lambda=" +
                                     lambda.to_text() + ", mu=" + mu.to_text());
          }
          if (value) table.entries.emplace(std::make_pair(lambda, mu), value);
        }
      }
    }
  }
  return table;
}

LittlewoodReport CoefficientEngine::verify_littlewood(int max_size) const {
  if (max_size < 1) throw std::invalid_argument("verify_littlewood: size bound must be >= 1");
  LittlewoodReport report;
  report.max_size = max_size;
  report.pass = true;
  for (int ms = 0; ms <= max_size; ++ms) {
    for (const Partition& mu : partitions_of(ms)) {
      for (int ls = 0; ls <= ms; ++ls) {
        for (const Partition& lambda : partitions_of(ls)) {
          long long expected = (lambda == mu) ? 1 : 0;
          long long got = a_coeff(lambda, mu, AMethod::plethysm);
          ++report.pairs_checked;
          if (got != expected && report.pass) {
            report.pass = false;
            report.first_failure = LittlewoodFailure{lambda, mu, expected, got};
          }
        }
      }
    }
  }
  return report;
}

}  // namespace symres
