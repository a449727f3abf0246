#include "symres/symfunc.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace symres {

const char* basis_name(Basis b) {
  switch (b) {
    case Basis::p: return "p";
    case Basis::h: return "h";
    case Basis::e: return "e";
    case Basis::m: return "m";
    case Basis::s: return "s";
  }
  throw std::logic_error("basis_name: bad tag");
}

Basis basis_from_name(std::string_view name) {
  if (name == "p") return Basis::p;
  if (name == "h") return Basis::h;
  if (name == "e") return Basis::e;
  if (name == "m") return Basis::m;
  if (name == "s") return Basis::s;
  throw std::invalid_argument("unknown basis '" + std::string(name) + "'");
}

SymFn SymFn::constant(Rational c, Basis basis) {
  SymFn f(basis);
  f.set(Partition{}, std::move(c));
  return f;
}

SymFn SymFn::generator(Basis basis, const Partition& idx) {
  SymFn f(basis);
  f.set(idx, 1);
  return f;
}

Rational SymFn::coeff(const Partition& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? Rational(0) : it->second;
}

int SymFn::max_degree() const {
  int d = 0;
  for (const auto& [idx, c] : terms_) d = std::max(d, idx.size());
  return d;
}

void SymFn::set(const Partition& idx, Rational c) {
  if (c == 0)
    terms_.erase(idx);
  else
    terms_[idx] = std::move(c);
}

void SymFn::add(const Partition& idx, const Rational& c) {
  if (c == 0) return;
  Rational& slot = terms_[idx];
  slot += c;
  if (slot == 0) terms_.erase(idx);
}

SymFn& SymFn::operator+=(const SymFn& other) {
  if (other.basis_ != basis_) throw std::invalid_argument("SymFn: mixed bases in +=");
  for (const auto& [idx, c] : other.terms_) add(idx, c);
  return *this;
}

SymFn& SymFn::operator-=(const SymFn& other) {
  if (other.basis_ != basis_) throw std::invalid_argument("SymFn: mixed bases in -=");
  for (const auto& [idx, c] : other.terms_) add(idx, -c);
  return *this;
}

SymFn& SymFn::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [idx, c] : terms_) c *= scalar;
  return *this;
}

int mobius(int n) {
  if (n < 1) throw std::invalid_argument("mobius: n must be positive");
  int primes = 0;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    ++primes;
  }
  if (n > 1) ++primes;
  return primes % 2 == 0 ? 1 : -1;
}

namespace {

Partition merge_parts(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  parts.reserve(static_cast<size_t>(a.length() + b.length()));
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
             std::back_inserter(parts), std::greater<int>());
  return Partition(std::move(parts));
}

SymFn multiply_p(const SymFn& f, const SymFn& g, int degree_cap) {
  SymFn out(Basis::p);
  for (const auto& [rho, a] : f.terms()) {
    if (rho.size() > degree_cap) continue;
    for (const auto& [tau, b] : g.terms()) {
      if (rho.size() + tau.size() > degree_cap) continue;
      out.add(merge_parts(rho, tau), a * b);
    }
  }
  return out;
}

// p_k[g] for g in the p-basis: substitute p_j -> p_{jk}; the constant term
// is fixed. Terms pushed above the cap are dropped.
SymFn substitute_pk(const SymFn& gp, int k, int degree_cap) {
  SymFn out(Basis::p);
  for (const auto& [tau, c] : gp.terms()) {
    if (tau.empty()) {
      out.add(tau, c);
      continue;
    }
    if (tau.size() * k > degree_cap) continue;
    std::vector<int> scaled(tau.parts());
    for (int& part : scaled) part *= k;
    out.add(Partition(std::move(scaled)), c);
  }
  return out;
}

// Exact inverse of a small dense rational matrix.
std::vector<std::vector<Rational>> invert_dense(std::vector<std::vector<Rational>> a) {
  const size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("invert_dense: singular transition matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational d = a[col][col];
    for (size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational factor = a[r][col];
      for (size_t j = 0; j < n; ++j) {
        a[r][j] -= factor * a[col][j];
        inv[r][j] -= factor * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

SymEngine::SymEngine(std::shared_ptr<CharacterEngine> chars) : chars_(std::move(chars)) {
  if (!chars_) chars_ = std::make_shared<CharacterEngine>();
}

SymFn SymEngine::p_of_h(int k) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = h_memo_.find(k);
    if (it != h_memo_.end()) return it->second;
  }
  SymFn f(Basis::p);
  for (const Partition& rho : partitions_of(k)) f.add(rho, Rational(1) / Rational(z_of(rho)));
  std::lock_guard<std::mutex> lock(mutex_);
  return h_memo_.emplace(k, std::move(f)).first->second;
}

SymFn SymEngine::p_of_e(int k) const {
  SymFn h = p_of_h(k);
  SymFn f(Basis::p);
  for (const auto& [rho, c] : h.terms()) f.add(rho, c * parity_sign(rho));
  return f;
}

const SymFn& SymEngine::p_of_s(const Partition& lambda) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = s_memo_.find(lambda);
    if (it != s_memo_.end()) return it->second;
  }
  SymFn f(Basis::p);
  for (const Partition& rho : partitions_of(lambda.size())) {
    long long chi = chars_->mn_character(lambda, rho);
    if (chi) f.add(rho, Rational(static_cast<long>(chi)) / Rational(z_of(rho)));
  }
  std::lock_guard<std::mutex> lock(mutex_);
  return s_memo_.emplace(lambda, std::move(f)).first->second;
}

void SymEngine::ensure_m_degree(int d) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (m_degree_done_.count(d)) return;
  }
  std::vector<Partition> parts = partitions_of(d);
  const size_t n = parts.size();
  // T[rho][mu] = m_mu-coordinate of p_rho = <p_rho, h_mu>; inverting T
  // expresses each m_lambda in power sums.
  std::vector<SymFn> h_exp(n);
  for (size_t j = 0; j < n; ++j) {
    SymFn prod = SymFn::constant(1);
    for (int k : parts[j].parts()) prod = multiply_p(prod, p_of_h(k), d);
    h_exp[j] = std::move(prod);
  }
  std::vector<std::vector<Rational>> t(n, std::vector<Rational>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) t[i][j] = h_exp[j].coeff(parts[i]) * Rational(z_of(parts[i]));
  std::vector<std::vector<Rational>> tinv = invert_dense(std::move(t));

  std::lock_guard<std::mutex> lock(mutex_);
  for (size_t l = 0; l < n; ++l) {
    SymFn f(Basis::p);
    for (size_t r = 0; r < n; ++r) f.add(parts[r], tinv[l][r]);
    m_memo_.emplace(parts[l], std::move(f));
  }
  m_degree_done_[d] = true;
}

const SymFn& SymEngine::p_of_m(const Partition& lambda) const {
  ensure_m_degree(lambda.size());
  std::lock_guard<std::mutex> lock(mutex_);
  return m_memo_.at(lambda);
}

SymFn SymEngine::to_p(const SymFn& f) const {
  if (f.basis() == Basis::p) return f;
  SymFn out(Basis::p);
  for (const auto& [idx, c] : f.terms()) {
    switch (f.basis()) {
      case Basis::h:
      case Basis::e: {
        SymFn prod = SymFn::constant(c);
        for (int k : idx.parts())
          prod = multiply_p(prod, f.basis() == Basis::h ? p_of_h(k) : p_of_e(k),
                            std::numeric_limits<int>::max());
        out += prod;
        break;
      }
      case Basis::s: {
        SymFn term = p_of_s(idx);
        term *= c;
        out += term;
        break;
      }
      case Basis::m: {
        SymFn term = p_of_m(idx);
        term *= c;
        out += term;
        break;
      }
      case Basis::p: break;  // unreachable
    }
  }
  return out;
}

SymFn SymEngine::to_basis(const SymFn& f, Basis target) const {
  SymFn fp = to_p(f);
  if (target == Basis::p) return fp;

  std::vector<int> degrees;
  for (const auto& [rho, c] : fp.terms())
    if (degrees.empty() || degrees.back() != rho.size()) degrees.push_back(rho.size());

  SymFn source = fp;
  if (target == Basis::e) {  // omega involution, then read off h-coordinates
    source = SymFn(Basis::p);
    for (const auto& [rho, c] : fp.terms()) source.add(rho, c * parity_sign(rho));
  }

  SymFn out(target);
  for (int d : degrees) {
    for (const Partition& lam : partitions_of(d)) {
      Rational c;
      switch (target) {
        case Basis::s: c = inner_schur(source, lam); break;
        case Basis::h: c = inner(source, SymFn::generator(Basis::m, lam)); break;
        case Basis::e: c = inner(source, SymFn::generator(Basis::m, lam)); break;
        case Basis::m: c = inner(source, SymFn::generator(Basis::h, lam)); break;
        default: throw std::logic_error("to_basis: unreachable");
      }
      out.add(lam, c);
    }
  }
  return out;
}

SymFn SymEngine::multiply(const SymFn& f, const SymFn& g) const {
  return multiply_p(to_p(f), to_p(g), std::numeric_limits<int>::max());
}

Rational SymEngine::inner(const SymFn& f, const SymFn& g) const {
  SymFn fp = to_p(f), gp = to_p(g);
  const auto& small = fp.terms().size() <= gp.terms().size() ? fp : gp;
  const auto& large = fp.terms().size() <= gp.terms().size() ? gp : fp;
  Rational acc = 0;
  for (const auto& [rho, a] : small.terms()) {
    Rational b = large.coeff(rho);
    if (b != 0) acc += a * b * Rational(z_of(rho));
  }
  return acc;
}

Rational SymEngine::inner_schur(const SymFn& f, const Partition& lambda) const {
  SymFn fp = to_p(f);
  Rational acc = 0;
  for (const auto& [rho, c] : fp.terms()) {
    if (rho.size() != lambda.size()) continue;
    long long chi = chars_->mn_character(lambda, rho);  // <p_rho, s_lambda>
    if (chi) acc += c * Rational(static_cast<long>(chi));
  }
  return acc;
}

SymFn SymEngine::plethysm(const SymFn& f, const SymFn& g, int D) const {
  if (D < 0) throw std::invalid_argument("plethysm: negative degree bound");
  SymFn gp = truncate(to_p(g), D);
  SymFn fp = to_p(f);
  SymFn out(Basis::p);
  for (const auto& [rho, c] : fp.terms()) {
    SymFn term = SymFn::constant(c);
    for (int k : rho.parts()) {
      term = multiply_p(term, substitute_pk(gp, k, D), D);
      if (term.is_zero()) break;
    }
    out += term;
  }
  return out;
}

SymFn SymEngine::lyndon_sym(int k) const {
  if (k < 1) throw std::invalid_argument("lyndon_sym: k must be positive");
  SymFn f(Basis::p);
  for (int d = 1; d <= k; ++d) {
    if (k % d) continue;
    int mu = mobius(d);
    if (!mu) continue;
    f.add(Partition(std::vector<int>(static_cast<size_t>(k / d), d)),
          Rational(mu) / Rational(k));
  }
  return f;
}

SymFn SymEngine::series(SeriesKind kind, int D) const {
  if (D < 0) throw std::invalid_argument("series: negative degree bound");
  SymFn f(Basis::p);
  if (kind == SeriesKind::h_series) f.add(Partition{}, 1);
  for (int k = 1; k <= D; ++k)
    f += (kind == SeriesKind::h_series) ? p_of_h(k) : lyndon_sym(k);
  return f;
}

SymFn SymEngine::truncate(const SymFn& f, int D) {
  SymFn out(f.basis());
  for (const auto& [idx, c] : f.terms())
    if (idx.size() <= D) out.add(idx, c);
  return out;
}

Rational SymEngine::eval_at_ones(const SymFn& f, int m) const {
  SymFn fp = to_p(f);
  Rational acc = 0;
  for (const auto& [rho, c] : fp.terms()) acc += c * Rational(int_pow(m, rho.length()));
  return acc;
}

}  // namespace symres
