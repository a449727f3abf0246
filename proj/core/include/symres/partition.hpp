#ifndef SYMRES_PARTITION_HPP
#define SYMRES_PARTITION_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "symres/rational.hpp"

namespace symres {

/// An integer partition: weakly decreasing positive parts. The empty
/// partition is a first-class value (no trailing zeros are ever stored).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Parses the text form: comma-separated decreasing positive integers
  /// ("3,2,1"); the empty string denotes the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }            // |lambda|
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int part(int i) const {                       // 0-based; 0 beyond the last row
    return i >= 0 && i < length() ? parts_[static_cast<size_t>(i)] : 0;
  }

  Partition conjugate() const;

  std::string to_text() const;  // inverse of parse()

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Enumeration/table order: by size, then reverse-lexicographic within a
/// size ((3) before (2,1) before (1,1,1)). All emitted tables follow it.
bool table_less(const Partition& a, const Partition& b);

struct PartitionTableOrder {
  bool operator()(const Partition& a, const Partition& b) const { return table_less(a, b); }
};

template <typename T>
using PartitionMap = std::map<Partition, T, PartitionTableOrder>;

/// All partitions of k in reverse-lexicographic order; partitions_of(0)
/// is the singleton list holding the empty partition.
std::vector<Partition> partitions_of(int k);

/// mu[n] = (n - |mu|, mu1, mu2, ...). Throws std::invalid_argument unless
/// n >= |mu| + mu1, the condition for the result to be a partition.
Partition pad(const Partition& mu, int n);

/// True iff nu is contained in mu and mu/nu has at most one box per column
/// (interlacing: mu_i >= nu_i >= mu_{i+1}).
bool is_horizontal_strip(const Partition& mu, const Partition& nu);

/// True iff mu/nu has at most one box per row, i.e. the conjugate skew
/// shape is a horizontal strip.
bool is_vertical_strip(const Partition& mu, const Partition& nu);

/// All nu with mu/nu a horizontal strip, in table order.
std::vector<Partition> horizontal_strip_subpartitions(const Partition& mu);
/// All nu with mu/nu a vertical strip, in table order.
std::vector<Partition> vertical_strip_subpartitions(const Partition& mu);

/// z_rho = prod_i i^{m_i} m_i!, the centralizer order of a permutation of
/// cycle type rho; the class size in S_n is n!/z_rho.
Integer z_of(const Partition& rho);

/// (-1)^{|rho| - l(rho)}, the sign of any permutation of cycle type rho.
int parity_sign(const Partition& rho);

}  // namespace symres

#endif
