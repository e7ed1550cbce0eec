#pragma once

// Shared fixtures and independent oracles for the test suite. The oracles
// deliberately take different routes from the library: rankedness via a
// weighted union-find instead of BFS propagation, FC enumeration via raw word
// enumeration instead of breadth-first growth, canonical words via full
// linear-extension enumeration instead of the greedy walk.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "heaps/heaps.hpp"

namespace testsupport {

using heaps::CoxeterGraph;
using heaps::Heap;
using heaps::Piece;
using heaps::PieceAlphabet;

// P = {1, 2, 3} with x C y iff |x - y| <= 1.
inline PieceAlphabet band3_alphabet() {
  return PieceAlphabet({"1", "2", "3"}, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

// Five pieces whose concurrency graph is a pentagon.
inline PieceAlphabet pentagon_alphabet() {
  return PieceAlphabet({"1", "2", "3", "4", "5"},
                       std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
}

// Five pieces, all pairs concurrent.
inline PieceAlphabet complete5_alphabet() {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) pairs.emplace_back(i, j);
  return PieceAlphabet({"1", "2", "3", "4", "5"}, pairs);
}

// Five elements labelled 1,3,2,1,3; covers 1<3, 2<3, 3<4, 3<5. Ranked.
inline Heap band3_heap() {
  return heaps::heap_from_word(band3_alphabet(),
                               std::vector<std::string>{"1", "3", "2", "1", "3"});
}

// Five elements, all labels distinct, unranked; its concurrency subgraph is
// the full pentagon.
inline Heap pentagon_heap() {
  return heaps::heap_from_word(pentagon_alphabet(),
                               std::vector<std::string>{"3", "5", "4", "2", "1"});
}

inline CoxeterGraph d5() { return CoxeterGraph::family("D", 5); }

// Seven-element FC heap over D5 with a mixed label set; unranked.
inline Heap d5_unranked_heap() {
  return heaps::heap_from_word(heaps::concurrency_from_coxeter(d5()),
                               std::vector<std::string>{"4", "3", "5", "1", "2", "3", "4"});
}

inline int by_id(const Heap& h, const std::string& id) { return *h.element_by_id(id); }

inline std::set<std::pair<std::string, std::string>> cover_ids(const Heap& h) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [x, y] : h.covers()) out.emplace(h.id(x), h.id(y));
  return out;
}

// All words over the alphabet with length in [0, max_len].
inline void for_each_word(const PieceAlphabet& alphabet, int max_len,
                          const std::function<void(const std::vector<Piece>&)>& visit) {
  std::vector<Piece> word;
  std::function<void()> grow = [&] {
    visit(word);
    if (static_cast<int>(word.size()) == max_len) return;
    for (Piece s = 0; s < alphabet.size(); ++s) {
      word.push_back(s);
      grow();
      word.pop_back();
    }
  };
  grow();
}

// Every linear extension of the heap, read off as a label word.
inline void for_each_linear_extension(
    const Heap& h, const std::function<void(const std::vector<Piece>&)>& visit) {
  const int n = h.size();
  std::vector<int> indegree(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> succ(static_cast<std::size_t>(n));
  for (auto [x, y] : h.covers()) {
    ++indegree[static_cast<std::size_t>(y)];
    succ[static_cast<std::size_t>(x)].push_back(y);
  }
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::vector<Piece> word;
  std::function<void()> extend = [&] {
    if (static_cast<int>(word.size()) == n) {
      visit(word);
      return;
    }
    for (int e = 0; e < n; ++e) {
      if (used[static_cast<std::size_t>(e)] || indegree[static_cast<std::size_t>(e)] != 0) continue;
      used[static_cast<std::size_t>(e)] = true;
      word.push_back(h.label(e));
      for (int y : succ[static_cast<std::size_t>(e)]) --indegree[static_cast<std::size_t>(y)];
      extend();
      for (int y : succ[static_cast<std::size_t>(e)]) ++indegree[static_cast<std::size_t>(y)];
      word.pop_back();
      used[static_cast<std::size_t>(e)] = false;
    }
  };
  extend();
}

// Union-find with offsets: unites under the constraint value(y) - value(x) =
// diff and reports contradictions.
class OffsetDsu {
public:
  explicit OffsetDsu(int n) : parent_(static_cast<std::size_t>(n)), offset_(static_cast<std::size_t>(n), 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::pair<int, long long> find(int x) {
    if (parent_[static_cast<std::size_t>(x)] == x) return {x, 0};
    auto [root, off] = find(parent_[static_cast<std::size_t>(x)]);
    parent_[static_cast<std::size_t>(x)] = root;
    offset_[static_cast<std::size_t>(x)] += off;
    return {root, offset_[static_cast<std::size_t>(x)]};
  }

  bool merge(int x, int y, long long diff) {
    auto [rx, ox] = find(x);
    auto [ry, oy] = find(y);
    if (rx == ry) return oy - ox == diff;
    parent_[static_cast<std::size_t>(ry)] = rx;
    offset_[static_cast<std::size_t>(ry)] = ox + diff - oy;
    return true;
  }

private:
  std::vector<int> parent_;
  std::vector<long long> offset_;
};

// Rankedness oracle: every cover forces a rank difference of one.
inline bool dsu_ranked(const Heap& h) {
  OffsetDsu dsu(h.size());
  for (auto [x, y] : h.covers())
    if (!dsu.merge(x, y, 1)) return false;
  return true;
}

// Word-level FC oracle: all words up to max_len, filtered by the FC
// conditions, deduplicated by canonical word, grouped by heap size.
inline std::map<int, std::set<std::vector<Piece>>> fc_word_oracle(const CoxeterGraph& group,
                                                                  int max_len) {
  const PieceAlphabet alphabet = heaps::concurrency_from_coxeter(group);
  std::map<int, std::set<std::vector<Piece>>> by_size;
  for_each_word(alphabet, max_len, [&](const std::vector<Piece>& word) {
    const Heap h = heaps::heap_from_word(alphabet, word);
    if (heaps::is_fc_heap(h, group))
      by_size[static_cast<int>(word.size())].insert(heaps::canonical_word(h));
  });
  return by_size;
}

// Rebuild a heap from its own covers through the validating constructor;
// throws unless both heap axioms hold.
inline Heap revalidate(const Heap& h) {
  const std::vector<std::pair<int, int>> relations(h.covers().begin(), h.covers().end());
  return heaps::validate_explicit(h.alphabet(), h.ids(), h.labels(), relations);
}

}  // namespace testsupport
