#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "heaps/errors.hpp"

namespace heaps {

/// Index of a piece within its PieceAlphabet, following declaration order.
using Piece = int;

// The piece set P with its symmetric, reflexive concurrency relation.
// Declaration order doubles as the total piece order used by canonical words.
// Immutable after construction.
class PieceAlphabet {
public:
  PieceAlphabet() = default;

  PieceAlphabet(std::vector<std::string> pieces,
                const std::vector<std::pair<int, int>>& concurrent_pairs)
      : names_(std::move(pieces)),
        concurrent_(names_.size() * names_.size(), false) {
    const int n = size();
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j)
        if (names_[i] == names_[j])
          throw std::invalid_argument("duplicate piece: " + names_[i]);
      concurrent_[index(i, i)] = true;  // reflexive
    }
    for (auto [a, b] : concurrent_pairs) {
      if (a < 0 || a >= n || b < 0 || b >= n)
        throw std::out_of_range("concurrent pair references an unknown piece");
      concurrent_[index(a, b)] = true;
      concurrent_[index(b, a)] = true;
    }
  }

  PieceAlphabet(const std::vector<std::string>& pieces,
                const std::vector<std::pair<std::string, std::string>>& concurrent_pairs)
      : PieceAlphabet(pieces, resolve_pairs(pieces, concurrent_pairs)) {}

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(Piece p) const { return names_.at(static_cast<std::size_t>(p)); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<Piece> find(std::string_view piece_name) const {
    for (int i = 0; i < size(); ++i)
      if (names_[static_cast<std::size_t>(i)] == piece_name) return i;
    return std::nullopt;
  }

  Piece require(std::string_view piece_name) const {
    if (auto p = find(piece_name)) return *p;
    throw UnknownPieceError(std::string(piece_name));
  }

  bool concurrent(Piece a, Piece b) const { return concurrent_[index(a, b)]; }

  /// Concurrent pairs of distinct pieces, each reported once as (low, high).
  std::vector<std::pair<Piece, Piece>> concurrent_pairs() const {
    std::vector<std::pair<Piece, Piece>> pairs;
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j)
        if (concurrent_[index(i, j)]) pairs.emplace_back(i, j);
    return pairs;
  }

  bool operator==(const PieceAlphabet&) const = default;

private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * names_.size() + static_cast<std::size_t>(j);
  }

  static std::vector<std::pair<int, int>> resolve_pairs(
      const std::vector<std::string>& pieces,
      const std::vector<std::pair<std::string, std::string>>& named_pairs) {
    auto lookup = [&pieces](const std::string& name) {
      for (std::size_t i = 0; i < pieces.size(); ++i)
        if (pieces[i] == name) return static_cast<int>(i);
      throw UnknownPieceError(name);
    };
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(named_pairs.size());
    for (const auto& [a, b] : named_pairs) pairs.emplace_back(lookup(a), lookup(b));
    return pairs;
  }

  std::vector<std::string> names_;
  std::vector<bool> concurrent_;  // row-major size() x size() matrix
};

}  // namespace heaps
