#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace heaps::detail {

// Dense binary relation on {0..n-1}; row i is the bitset { j : i rel j }.
class BitRel {
public:
  BitRel() = default;
  explicit BitRel(int n)
      : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {}

  int size() const { return n_; }

  bool get(int i, int j) const {
    return (bits_[row(i) + static_cast<std::size_t>(j >> 6)] >> (j & 63)) & 1u;
  }

  void set(int i, int j) {
    bits_[row(i) + static_cast<std::size_t>(j >> 6)] |= std::uint64_t{1} << (j & 63);
  }

  void or_rows(int dst, int src) {
    for (int w = 0; w < words_; ++w) bits_[row(dst) + w] |= bits_[row(src) + w];
  }

  // Warshall closure.
  void transitive_close() {
    for (int k = 0; k < n_; ++k)
      for (int i = 0; i < n_; ++i)
        if (get(i, k)) or_rows(i, k);
  }

  bool any_reflexive() const {
    for (int i = 0; i < n_; ++i)
      if (get(i, i)) return true;
    return false;
  }

  BitRel transposed() const {
    BitRel t(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (get(i, j)) t.set(j, i);
    return t;
  }

  friend bool rows_intersect(const BitRel& a, int i, const BitRel& b, int j) {
    for (int w = 0; w < a.words_; ++w)
      if (a.bits_[a.row(i) + w] & b.bits_[b.row(j) + w]) return true;
    return false;
  }

  bool operator==(const BitRel&) const = default;

private:
  std::size_t row(int i) const { return static_cast<std::size_t>(i) * words_; }

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Covering pairs of a transitively closed strict order: (x, y) in the relation
// with no z strictly between. Output is sorted lexicographically.
inline std::vector<std::pair<int, int>> covering_pairs(const BitRel& order) {
  const BitRel down = order.transposed();
  std::vector<std::pair<int, int>> covers;
  for (int x = 0; x < order.size(); ++x)
    for (int y = 0; y < order.size(); ++y)
      if (order.get(x, y) && !rows_intersect(order, x, down, y)) covers.emplace_back(x, y);
  return covers;
}

}  // namespace heaps::detail
