#include "symres/sparse.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace symres {

SparseMatrix::SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("SparseMatrix: negative dimension");
  data_.resize(static_cast<size_t>(rows));
}

long long SparseMatrix::nnz() const {
  long long total = 0;
  for (const auto& row : data_) total += static_cast<long long>(row.size());
  return total;
}

void SparseMatrix::add(int r, int c, const Rational& v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("SparseMatrix::add: index out of range");
  if (v == 0) return;
  auto& row = data_[static_cast<size_t>(r)];
  Rational& slot = row[c];
  slot += v;
  if (slot == 0) row.erase(c);
}

Rational SparseMatrix::at(int r, int c) const {
  const auto& row = data_[static_cast<size_t>(r)];
  auto it = row.find(c);
  return it == row.end() ? Rational(0) : it->second;
}

namespace {

// Rescale a row to a primitive integer vector (entries coprime integers).
void make_primitive(std::map<int, Rational>& row) {
  if (row.empty()) return;
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& [c, v] : row) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
  for (const auto& [c, v] : row) {
    Integer scaled = v.get_num() * (den_lcm / v.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational factor = Rational(den_lcm) / Rational(num_gcd);
  if (factor != 1)
    for (auto& [c, v] : row) {
      v *= factor;
      v.canonicalize();
    }
}

}  // namespace

int SparseMatrix::rank() const {
  std::vector<std::map<int, Rational>> work = data_;
  std::vector<bool> active(static_cast<size_t>(rows_), true);
  for (auto& row : work) make_primitive(row);

  int rank = 0;
  while (true) {
    // pivot row: fewest entries, then lowest index
    int prow = -1;
    size_t best = std::numeric_limits<size_t>::max();
    for (int r = 0; r < rows_; ++r) {
      if (!active[static_cast<size_t>(r)] || work[static_cast<size_t>(r)].empty()) continue;
      if (work[static_cast<size_t>(r)].size() < best) {
        best = work[static_cast<size_t>(r)].size();
        prow = r;
      }
    }
    if (prow < 0) break;

    // pivot column within that row: fewest entries among active rows, then
    // lowest column index
    int pcol = -1;
    long long best_count = std::numeric_limits<long long>::max();
    for (const auto& [c, v] : work[static_cast<size_t>(prow)]) {
      long long count = 0;
      for (int r = 0; r < rows_; ++r)
        if (active[static_cast<size_t>(r)] && work[static_cast<size_t>(r)].count(c)) ++count;
      if (count < best_count) {
        best_count = count;
        pcol = c;
      }
    }

    const auto& prow_data = work[static_cast<size_t>(prow)];
    const Rational pval = prow_data.at(pcol);
    active[static_cast<size_t>(prow)] = false;
    ++rank;
    for (int r = 0; r < rows_; ++r) {
      if (!active[static_cast<size_t>(r)]) continue;
      auto& row = work[static_cast<size_t>(r)];
      auto it = row.find(pcol);
      if (it == row.end()) continue;
      Rational factor = it->second / pval;
      for (const auto& [c, v] : prow_data) {
        Rational& slot = row[c];
        slot -= factor * v;
        if (slot == 0) row.erase(c);
      }
      make_primitive(row);
    }
  }
  return rank;
}

std::vector<int> SparseMatrix::pivot_columns() const {
  std::vector<std::map<int, Rational>> work = data_;
  std::vector<bool> active(static_cast<size_t>(rows_), true);
  std::vector<int> pivots;
  for (int c = 0; c < cols_; ++c) {
    int prow = -1;
    for (int r = 0; r < rows_; ++r) {
      if (active[static_cast<size_t>(r)] && work[static_cast<size_t>(r)].count(c)) {
        prow = r;
        break;
      }
    }
    if (prow < 0) continue;
    pivots.push_back(c);
    active[static_cast<size_t>(prow)] = false;
    const auto prow_data = work[static_cast<size_t>(prow)];
    const Rational pval = prow_data.at(c);
    for (int r = 0; r < rows_; ++r) {
      if (!active[static_cast<size_t>(r)]) continue;
      auto& row = work[static_cast<size_t>(r)];
      auto it = row.find(c);
      if (it == row.end()) continue;
      Rational factor = it->second / pval;
      for (const auto& [cc, v] : prow_data) {
        Rational& slot = row[cc];
        slot -= factor * v;
        if (slot == 0) row.erase(cc);
      }
      make_primitive(row);
    }
  }
  return pivots;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("SparseMatrix::multiply: shape mismatch");
  SparseMatrix out(rows_, other.cols_);
  for (int r = 0; r < rows_; ++r)
    for (const auto& [k, a] : data_[static_cast<size_t>(r)])
      for (const auto& [c, b] : other.data_[static_cast<size_t>(k)]) out.add(r, c, a * b);
  return out;
}

SparseMatrix SparseMatrix::permuted(const std::vector<int>& row_perm,
                                    const std::vector<int>& col_perm) const {
  if (static_cast<int>(row_perm.size()) != rows_ || static_cast<int>(col_perm.size()) != cols_)
    throw std::invalid_argument("SparseMatrix::permuted: permutation size mismatch");
  std::vector<int> col_inv(static_cast<size_t>(cols_));
  for (int c = 0; c < cols_; ++c) col_inv[static_cast<size_t>(col_perm[static_cast<size_t>(c)])] = c;
  SparseMatrix out(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[static_cast<size_t>(row_perm[static_cast<size_t>(r)])])
      out.add(r, col_inv[static_cast<size_t>(c)], v);
  return out;
}

std::vector<std::vector<Rational>> solve_in_column_span(
    const std::vector<std::map<int, Rational>>& m_columns,
    const std::vector<std::map<int, Rational>>& b_columns, int rows) {
  const size_t r = m_columns.size();
  const size_t bc = b_columns.size();
  // dense augmented matrix [M | B], exact row reduction
  std::vector<std::vector<Rational>> a(static_cast<size_t>(rows),
                                       std::vector<Rational>(r + bc, 0));
  for (size_t j = 0; j < r; ++j)
    for (const auto& [i, v] : m_columns[j]) a[static_cast<size_t>(i)][j] = v;
  for (size_t j = 0; j < bc; ++j)
    for (const auto& [i, v] : b_columns[j]) a[static_cast<size_t>(i)][r + j] = v;

  size_t row = 0;
  std::vector<size_t> pivot_row_of(r);
  for (size_t col = 0; col < r; ++col) {
    size_t piv = row;
    while (piv < a.size() && a[piv][col] == 0) ++piv;
    if (piv == a.size())
      throw std::logic_error("solve_in_column_span: columns are linearly dependent");
    std::swap(a[piv], a[row]);
    Rational d = a[row][col];
    for (size_t j = col; j < r + bc; ++j) a[row][j] /= d;
    for (size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rational factor = a[i][col];
      for (size_t j = col; j < r + bc; ++j) a[i][j] -= factor * a[row][j];
    }
    pivot_row_of[col] = row;
    ++row;
  }
  // consistency: rows beyond the pivots must have vanished on the B side
  for (size_t i = row; i < a.size(); ++i)
    for (size_t j = r; j < r + bc; ++j)
      if (a[i][j] != 0)
        throw std::logic_error("solve_in_column_span: right-hand side outside column span");

  std::vector<std::vector<Rational>> x(r, std::vector<Rational>(bc, 0));
  for (size_t col = 0; col < r; ++col)
    for (size_t j = 0; j < bc; ++j) x[col][j] = a[pivot_row_of[col]][r + j];
  return x;
}

}  // namespace symres
