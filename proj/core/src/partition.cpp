#include "symres/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace symres {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i - 1] < parts_[i])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  if (text.empty()) return Partition{};
  size_t pos = 0;
  while (true) {
    size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw std::invalid_argument("malformed partition: '" + std::string(text) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));  // validates positivity / monotonicity
}

std::string Partition::to_text() const {
  std::string out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition Partition::conjugate() const {
  std::vector<int> cols;
  if (!parts_.empty()) {
    cols.resize(static_cast<size_t>(parts_[0]));
    for (int p : parts_)
      for (int c = 0; c < p; ++c) ++cols[static_cast<size_t>(c)];
  }
  return Partition(std::move(cols));
}

bool table_less(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  // reverse-lexicographic within a size: larger leading parts first
  return std::lexicographical_compare(b.parts().begin(), b.parts().end(), a.parts().begin(),
                                      a.parts().end());
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& prefix,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    emit_partitions(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int k) {
  if (k < 0) throw std::invalid_argument("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> prefix;
  emit_partitions(k, k, prefix, out);
  if (k == 0) out.assign(1, Partition{});
  return out;
}

Partition pad(const Partition& mu, int n) {
  if (n < mu.size() + mu.part(0))
    throw std::invalid_argument("pad: need n >= |mu| + mu_1 (got n=" + std::to_string(n) +
                                ", mu=" + mu.to_text() + ")");
  std::vector<int> parts;
  parts.reserve(static_cast<size_t>(mu.length()) + 1);
  if (n - mu.size() > 0) parts.push_back(n - mu.size());
  parts.insert(parts.end(), mu.parts().begin(), mu.parts().end());
  return Partition(std::move(parts));
}

bool is_horizontal_strip(const Partition& mu, const Partition& nu) {
  int rows = std::max(mu.length(), nu.length());
  for (int i = 0; i < rows; ++i) {
    if (!(mu.part(i) >= nu.part(i) && nu.part(i) >= mu.part(i + 1))) return false;
  }
  return true;
}

bool is_vertical_strip(const Partition& mu, const Partition& nu) {
  return is_horizontal_strip(mu.conjugate(), nu.conjugate());
}

namespace {

void emit_strip_subpartitions(const Partition& mu, int row, std::vector<int>& prefix,
                              std::vector<Partition>& out) {
  if (row == mu.length()) {
    std::vector<int> parts;
    for (int p : prefix)
      if (p > 0) parts.push_back(p);
    out.emplace_back(std::move(parts));
    return;
  }
  // nu_row ranges over [mu_{row+1}, mu_row]; interlacing makes any choice
  // weakly decreasing automatically.
  for (int v = mu.part(row); v >= mu.part(row + 1); --v) {
    prefix.push_back(v);
    emit_strip_subpartitions(mu, row + 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> horizontal_strip_subpartitions(const Partition& mu) {
  std::vector<Partition> out;
  std::vector<int> prefix;
  emit_strip_subpartitions(mu, 0, prefix, out);
  std::sort(out.begin(), out.end(), table_less);
  return out;
}

std::vector<Partition> vertical_strip_subpartitions(const Partition& mu) {
  std::vector<Partition> out;
  for (const Partition& nu : horizontal_strip_subpartitions(mu.conjugate()))
    out.push_back(nu.conjugate());
  std::sort(out.begin(), out.end(), table_less);
  return out;
}

Integer z_of(const Partition& rho) {
  Integer z = 1;
  int run_part = 0, run_len = 0;
  auto flush = [&] {
    for (int j = 1; j <= run_len; ++j) z *= j;        // m_i!
    for (int j = 0; j < run_len; ++j) z *= run_part;  // i^{m_i}
  };
  for (int p : rho.parts()) {
    if (p == run_part) {
      ++run_len;
    } else {
      flush();
      run_part = p;
      run_len = 1;
    }
  }
  flush();
  return z;
}

int parity_sign(const Partition& rho) {
  return (rho.size() - rho.length()) % 2 == 0 ? 1 : -1;
}

}  // namespace symres
