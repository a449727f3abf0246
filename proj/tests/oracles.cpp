#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace oracles {

std::vector<std::vector<int>> brute_partitions(int k) {
  // enumerate compositions by bitmask over k-1 gaps, keep the sorted ones once
  std::set<std::vector<int>> seen;
  if (k == 0) return {{}};
  for (long long mask = 0; mask < (1LL << (k - 1)); ++mask) {
    std::vector<int> comp;
    int run = 1;
    for (int gap = 0; gap < k - 1; ++gap) {
      if (mask & (1LL << gap)) {
        comp.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    comp.push_back(run);
    std::sort(comp.begin(), comp.end(), std::greater<int>());
    seen.insert(comp);
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> base(static_cast<size_t>(n));
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[static_cast<size_t>(b[i])];
  return out;
}

std::vector<int> cycle_type(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> type;
  for (size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    size_t at = start;
    while (!seen[at]) {
      seen[at] = true;
      at = static_cast<size_t>(perm[at]);
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.begin(), type.end(), std::greater<int>());
  return type;
}

long long centralizer_order(const std::vector<int>& perm) {
  long long count = 0;
  for (const auto& tau : all_permutations(static_cast<int>(perm.size())))
    if (compose(tau, perm) == compose(perm, tau)) ++count;
  return count;
}

std::map<std::vector<int>, long long> brute_conjugacy_classes(int n) {
  std::map<std::vector<int>, long long> classes;
  for (const auto& perm : all_permutations(n)) ++classes[cycle_type(perm)];
  return classes;
}

Integer hook_dim(const symres::Partition& lambda) {
  const auto conj = lambda.conjugate();
  Integer hooks = 1;
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda.part(r); ++c)
      hooks *= (lambda.part(r) - c) + (conj.part(c) - r) - 1;
  return symres::factorial(lambda.size()) / hooks;
}

namespace {

bool ssyt_fill(const symres::Partition& lambda, int n, std::vector<std::vector<int>>& t, int r,
               int c, long long& count) {
  if (r == lambda.length()) {
    ++count;
    return true;
  }
  int nr = r, nc = c + 1;
  if (nc >= lambda.part(r)) {
    nr = r + 1;
    nc = 0;
  }
  int lo = 1;
  if (c > 0) lo = std::max(lo, t[static_cast<size_t>(r)][static_cast<size_t>(c - 1)]);  // rows weakly increase
  if (r > 0) lo = std::max(lo, t[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1);  // columns strictly
  for (int v = lo; v <= n; ++v) {
    t[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
    ssyt_fill(lambda, n, t, nr, nc, count);
  }
  return true;
}

}  // namespace

long long ssyt_count(const symres::Partition& lambda, int n) {
  if (lambda.empty()) return 1;
  std::vector<std::vector<int>> t;
  for (int r = 0; r < lambda.length(); ++r)
    t.emplace_back(static_cast<size_t>(lambda.part(r)), 0);
  long long count = 0;
  ssyt_fill(lambda, n, t, 0, 0, count);
  return count;
}

Rational induced_character_value(const std::map<std::vector<int>, long long>& chi_values, int k,
                                 int n, const std::vector<int>& rho) {
  // representative of cycle type rho on {0..n-1}
  std::vector<int> sigma(static_cast<size_t>(n));
  int base = 0;
  for (int part : rho) {
    for (int j = 0; j < part; ++j) sigma[static_cast<size_t>(base + j)] = base + (j + 1) % part;
    base += part;
  }
  Rational total = 0;
  for (const auto& tau : all_permutations(n)) {
    // tau sigma tau^{-1}
    std::vector<int> tinv(tau.size());
    for (size_t i = 0; i < tau.size(); ++i) tinv[static_cast<size_t>(tau[i])] = static_cast<int>(i);
    std::vector<int> conj = compose(tau, compose(sigma, tinv));
    // member of S_k x S_{n-k} iff both blocks are stable
    bool in_subgroup = true;
    for (int i = 0; i < n; ++i)
      if ((i < k) != (conj[static_cast<size_t>(i)] < k)) in_subgroup = false;
    if (!in_subgroup) continue;
    std::vector<int> first_block(conj.begin(), conj.begin() + k);
    total += Rational(static_cast<long>(chi_values.at(cycle_type(first_block))));
  }
  return total / Rational(symres::factorial(k) * symres::factorial(n - k));
}

int dense_rank(std::vector<std::vector<Rational>> a) {
  if (a.empty()) return 0;
  const size_t rows = a.size(), cols = a[0].size();
  int rank = 0;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t piv = row;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[row]);
    for (size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[row][col];
      for (size_t c = col; c < cols; ++c) a[r][c] -= f * a[row][c];
    }
    ++row;
    ++rank;
  }
  return rank;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out = a;
  for (const auto& [e, c] : b) {
    Rational& slot = out[e];
    slot += c;
    if (slot == 0) out.erase(e);
  }
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<int> e = ea;
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      Rational& slot = out[e];
      slot += ca * cb;
      if (slot == 0) out.erase(e);
    }
  }
  return out;
}

Poly power_sum_poly(int k, int nvars) {
  Poly out;
  for (int v = 0; v < nvars; ++v) {
    std::vector<int> e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(v)] = k;
    out[e] = 1;
  }
  return out;
}

Poly expand_p_expression(const std::map<std::vector<int>, Rational>& p_terms, int nvars) {
  Poly out;
  for (const auto& [rho, coeff] : p_terms) {
    Poly term;
    term[std::vector<int>(static_cast<size_t>(nvars), 0)] = coeff;
    for (int k : rho) term = poly_mul(term, power_sum_poly(k, nvars));
    out = poly_add(out, term);
  }
  return out;
}

Poly plethysm_by_monomials(const std::map<std::vector<int>, Rational>& f_p_terms, const Poly& g) {
  // alphabet = monomials of g with multiplicity; p_k evaluates to the sum of
  // k-th powers of the alphabet
  std::vector<std::vector<int>> alphabet;
  for (const auto& [e, c] : g) {
    if (!symres::is_integral(c) || c < 0)
      throw std::invalid_argument("plethysm_by_monomials: g must have nonnegative integer coefficients");
    long long reps = symres::to_int64(c);
    for (long long r = 0; r < reps; ++r) alphabet.push_back(e);
  }
  const size_t nvars = g.empty() ? 0 : g.begin()->first.size();
  auto p_at = [&](int k) {
    Poly out;
    for (const auto& e : alphabet) {
      std::vector<int> powered = e;
      for (int& x : powered) x *= k;
      Rational& slot = out[powered];
      slot += 1;
      if (slot == 0) out.erase(powered);
    }
    return out;
  };
  Poly out;
  for (const auto& [rho, coeff] : f_p_terms) {
    Poly term;
    term[std::vector<int>(nvars, 0)] = coeff;
    for (int k : rho) term = poly_mul(term, p_at(k));
    out = poly_add(out, term);
  }
  return out;
}

bool is_lyndon_by_rotations(const std::string& w) {
  if (w.empty()) return false;
  for (size_t r = 1; r < w.size(); ++r)
    if (w.substr(r) + w.substr(0, r) <= w) return false;
  return true;
}

}  // namespace oracles
