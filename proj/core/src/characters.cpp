#include "symres/characters.hpp"

#include <algorithm>
#include <stdexcept>

namespace symres {

Rational ClassFunction::at(const CycleType& rho) const {
  auto it = values_.find(rho);
  return it == values_.end() ? Rational(0) : it->second;
}

void ClassFunction::set(const CycleType& rho, Rational value) {
  if (rho.size() != n_) throw std::invalid_argument("ClassFunction::set: cycle type size mismatch");
  if (value == 0)
    values_.erase(rho);
  else
    values_[rho] = std::move(value);
}

void ClassFunction::add(const CycleType& rho, const Rational& value) {
  if (value == 0) return;
  Rational& slot = values_[rho];
  slot += value;
  if (slot == 0) values_.erase(rho);
}

bool ClassFunction::integral() const {
  for (const auto& [rho, v] : values_)
    if (!is_integral(v)) return false;
  return true;
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
  if (other.n_ != n_) throw std::invalid_argument("ClassFunction: mixed group sizes");
  for (const auto& [rho, v] : other.values_) add(rho, v);
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& other) {
  if (other.n_ != n_) throw std::invalid_argument("ClassFunction: mixed group sizes");
  for (const auto& [rho, v] : other.values_) add(rho, -v);
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    values_.clear();
    return *this;
  }
  for (auto& [rho, v] : values_) v *= scalar;
  return *this;
}

Rational cf_inner(const ClassFunction& f, const ClassFunction& g) {
  if (f.n() != g.n()) throw std::invalid_argument("cf_inner: mismatched group sizes");
  Rational acc = 0;
  for (const auto& [rho, fv] : f.values()) {
    Rational gv = g.at(rho);
    if (gv == 0) continue;
    acc += fv * gv / Rational(z_of(rho));
  }
  return acc;
}

namespace {

// Beta-set of lambda with l rows: distinct values lambda_i + (l - 1 - i).
std::vector<int> beta_set(const std::vector<int>& lambda) {
  int l = static_cast<int>(lambda.size());
  std::vector<int> beta(lambda.begin(), lambda.end());
  for (int i = 0; i < l; ++i) beta[static_cast<size_t>(i)] += l - 1 - i;
  return beta;  // strictly decreasing
}

std::vector<int> partition_from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<int>());
  int l = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < l; ++i) {
    int p = beta[static_cast<size_t>(i)] - (l - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return parts;
}

}  // namespace

long long CharacterEngine::mn_recurse(const std::vector<int>& lambda,
                                      const std::vector<int>& rho) const {
  if (lambda.empty()) return 1;
  Key key(lambda, rho);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }

  // Remove a border strip of length rho[0]; in beta-numbers this replaces
  // some beta by beta - r, with sign (-1)^{#values jumped over}.
  const int r = rho[0];
  std::vector<int> rest(rho.begin() + 1, rho.end());
  std::vector<int> beta = beta_set(lambda);
  long long total = 0;
  for (size_t i = 0; i < beta.size(); ++i) {
    int target = beta[i] - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int crossings = 0;
    for (int b : beta)
      if (target < b && b < beta[i]) ++crossings;
    std::vector<int> nbeta = beta;
    nbeta[i] = target;
    long long sub = mn_recurse(partition_from_beta(std::move(nbeta)), rest);
    total += (crossings % 2 == 0) ? sub : -sub;
  }

  std::lock_guard<std::mutex> lock(mutex_);
  memo_.emplace(std::move(key), total);
  return total;
}

long long CharacterEngine::mn_character(const Partition& lambda, const CycleType& rho) const {
  if (lambda.size() != rho.size())
    throw std::invalid_argument("mn_character: |lambda| != |rho| (" + lambda.to_text() + " vs " +
                                rho.to_text() + ")");
  return mn_recurse(lambda.parts(), rho.parts());
}

ClassFunction CharacterEngine::irreducible(const Partition& lambda) const {
  ClassFunction chi(lambda.size());
  for (const Partition& rho : partitions_of(lambda.size()))
    chi.set(rho, Rational(static_cast<long>(mn_character(lambda, rho))));
  return chi;
}

std::vector<std::pair<CycleType, Integer>> CharacterEngine::class_table(int n) const {
  if (n < 1) throw std::invalid_argument("class_table: n must be positive");
  Integer nfact = factorial(n);
  std::vector<std::pair<CycleType, Integer>> table;
  for (const Partition& rho : partitions_of(n)) table.emplace_back(rho, nfact / z_of(rho));
  return table;
}

long long CharacterEngine::restriction_value(const Partition& lambda, int n,
                                             const CycleType& rho) const {
  if (rho.size() != n) throw std::invalid_argument("restriction_value: |rho| != n");
  if (lambda.empty()) return 1;
  if (lambda.length() > n) return 0;  // s_lambda(x_1..x_n) = 0

  // fix(k) = #fixed points of sigma^k = sum of parts d of rho with d | k.
  auto fix = [&rho](int k) {
    long long s = 0;
    for (int d : rho.parts())
      if (k % d == 0) s += d;
    return s;
  };

  Rational acc = 0;
  for (const Partition& tau : partitions_of(lambda.size())) {
    long long chi = mn_character(lambda, tau);
    if (chi == 0) continue;
    Integer prod(static_cast<long>(chi));
    for (int k : tau.parts()) prod *= Integer(static_cast<long>(fix(k)));
    acc += Rational(prod) / Rational(z_of(tau));
  }
  return to_int64(acc);
}

ClassFunction CharacterEngine::restriction_character(const Partition& lambda, int n) const {
  ClassFunction out(n);
  for (const Partition& rho : partitions_of(n))
    out.set(rho, Rational(static_cast<long>(restriction_value(lambda, n, rho))));
  return out;
}

ClassFunction CharacterEngine::m_module_character(const Partition& mu, int n) const {
  if (n < mu.size() + mu.part(0))
    throw std::invalid_argument("m_module_character: need n >= |mu| + mu_1");
  ClassFunction out(n);
  for (const Partition& nu : horizontal_strip_subpartitions(mu)) {
    Partition padded = pad(nu, n);
    for (const Partition& rho : partitions_of(n))
      out.add(rho, Rational(static_cast<long>(mn_character(padded, rho))));
  }
  return out;
}

PartitionMap<long long> CharacterEngine::decompose(const ClassFunction& f) const {
  PartitionMap<long long> mult;
  for (const Partition& lambda : partitions_of(f.n())) {
    Rational c = cf_inner(f, irreducible(lambda));
    if (c == 0) continue;
    if (!is_integral(c))
      throw std::invalid_argument("decompose: non-integral multiplicity " + c.get_str() +
                                  " at lambda=" + lambda.to_text());
    mult[lambda] = to_int64(c);
  }
  return mult;
}

}  // namespace symres
