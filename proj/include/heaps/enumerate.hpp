#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "heaps/coxeter.hpp"
#include "heaps/rank.hpp"

namespace heaps {

struct Census {
  CoxeterGraph group;
  std::optional<int> max_size;
  std::map<int, std::size_t> counts;         // size -> number of FC heaps
  std::map<int, std::size_t> ranked_counts;  // size -> number of ranked FC heaps
};

// Exhaustive enumeration of FC heaps, each exactly once up to isomorphism:
// breadth-first growth by appending one maximal piece at a time, deduplicated
// by canonical word. Complete because deleting a maximal element of an FC
// heap leaves an FC heap, so every FC heap is reachable by single-piece
// growth. Emits in size order, sorted by canonical word within a size.
// Without a bound the group must be FC-finite (BoundRequired otherwise);
// FC-finiteness then guarantees termination.
inline void enumerate_fc_heaps(const CoxeterGraph& group, std::optional<int> max_size,
                               const std::function<void(const Heap&)>& emit) {
  if (max_size && *max_size < 0) throw std::invalid_argument("max_size must be >= 0");
  if (!max_size && !is_fc_finite(group)) throw BoundRequiredError();

  const PieceAlphabet alphabet = concurrency_from_coxeter(group);
  emit(heap_from_word(alphabet, std::vector<Piece>{}));

  std::set<std::vector<Piece>> frontier;  // canonical words of the current size
  frontier.insert(std::vector<Piece>{});
  for (int size = 1; !frontier.empty() && (!max_size || size <= *max_size); ++size) {
    std::map<std::vector<Piece>, Heap> grown;
    for (const auto& word : frontier) {
      for (Piece s = 0; s < alphabet.size(); ++s) {
        std::vector<Piece> extended = word;
        extended.push_back(s);
        Heap candidate = heap_from_word(alphabet, extended);
        if (!is_fc_heap(candidate, group)) continue;
        std::vector<Piece> canon = canonical_word(candidate);
        grown.emplace(std::move(canon), std::move(candidate));
      }
    }
    std::set<std::vector<Piece>> next;
    for (const auto& [canon, heap] : grown) {
      emit(heap);
      next.insert(canon);
    }
    frontier = std::move(next);
  }
}

inline std::vector<Heap> enumerate_fc_heaps(const CoxeterGraph& group,
                                            std::optional<int> max_size) {
  std::vector<Heap> out;
  enumerate_fc_heaps(group, max_size, [&out](const Heap& h) { out.push_back(h); });
  return out;
}

inline Census census(const CoxeterGraph& group, std::optional<int> max_size) {
  Census result;
  result.group = group;
  result.max_size = max_size;
  enumerate_fc_heaps(group, max_size, [&result](const Heap& h) {
    ++result.counts[h.size()];
    result.ranked_counts[h.size()] += is_ranked(rank(h)) ? 1 : 0;
  });
  return result;
}

}  // namespace heaps
