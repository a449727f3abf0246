#ifndef SYMRES_SPARSE_HPP
#define SYMRES_SPARSE_HPP

#include <map>
#include <vector>

#include "symres/rational.hpp"

namespace symres {

/// Sparse exact rational matrix with deterministic rank computation.
class SparseMatrix {
 public:
  SparseMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long long nnz() const;
  bool is_zero() const { return nnz() == 0; }

  void add(int r, int c, const Rational& v);
  Rational at(int r, int c) const;
  const std::map<int, Rational>& row(int r) const { return data_[static_cast<size_t>(r)]; }

  /// Exact rank. Elimination pivots by sparsity (fewest-entries row, then
  /// fewest-entries column) with ties broken by lowest (row, col); working
  /// rows are rescaled to primitive integer vectors after every update, so
  /// no rational blowup occurs. The result is basis-order independent.
  int rank() const;

  /// Leftmost maximal set of linearly independent columns, in increasing
  /// order; the corresponding original columns span the column space.
  std::vector<int> pivot_columns() const;

  SparseMatrix multiply(const SparseMatrix& other) const;  // this * other

  /// Rows/columns rearranged by the given index maps (new[i] = old[perm[i]]).
  SparseMatrix permuted(const std::vector<int>& row_perm, const std::vector<int>& col_perm) const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  int rows_, cols_;
  std::vector<std::map<int, Rational>> data_;
};

/// Exact dense solve M X = B for M with full column rank (columns given as
/// sparse maps over row indices). Throws std::logic_error if the system is
/// inconsistent or M's columns are dependent. Used for equivariant traces.
std::vector<std::vector<Rational>> solve_in_column_span(
    const std::vector<std::map<int, Rational>>& m_columns,
    const std::vector<std::map<int, Rational>>& b_columns, int rows);

}  // namespace symres

#endif
