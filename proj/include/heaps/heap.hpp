#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "heaps/alphabet.hpp"
#include "heaps/detail/bitrel.hpp"
#include "heaps/errors.hpp"

namespace heaps {

class Heap;

namespace detail {
Heap make_heap(PieceAlphabet alphabet, std::vector<std::string> ids,
               std::vector<Piece> labels, BitRel order);
}

// A finite labelled heap: elements carrying piece labels, the strict order
// stored as its reachability closure, and the covering relation (transitive
// reduction). Values are immutable after construction; build them through
// heap_from_word, compose, subheap or validate_explicit.
class Heap {
public:
  Heap() = default;

  const PieceAlphabet& alphabet() const { return alphabet_; }
  int size() const { return static_cast<int>(labels_.size()); }

  const std::string& id(int e) const { return ids_.at(static_cast<std::size_t>(e)); }
  const std::vector<std::string>& ids() const { return ids_; }
  Piece label(int e) const { return labels_.at(static_cast<std::size_t>(e)); }
  const std::vector<Piece>& labels() const { return labels_; }

  /// Covering pairs (x, y) meaning x < y with nothing between, sorted.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  bool less(int x, int y) const { return order_.get(x, y); }
  bool leq(int x, int y) const { return x == y || order_.get(x, y); }
  bool comparable(int x, int y) const { return x == y || order_.get(x, y) || order_.get(y, x); }

  std::vector<int> minimal_elements() const {
    std::vector<bool> covered_from_below(static_cast<std::size_t>(size()), false);
    for (auto [x, y] : covers_) covered_from_below[static_cast<std::size_t>(y)] = true;
    std::vector<int> out;
    for (int e = 0; e < size(); ++e)
      if (!covered_from_below[static_cast<std::size_t>(e)]) out.push_back(e);
    return out;
  }

  std::vector<int> maximal_elements() const {
    std::vector<bool> covered_from_above(static_cast<std::size_t>(size()), false);
    for (auto [x, y] : covers_) covered_from_above[static_cast<std::size_t>(x)] = true;
    std::vector<int> out;
    for (int e = 0; e < size(); ++e)
      if (!covered_from_above[static_cast<std::size_t>(e)]) out.push_back(e);
    return out;
  }

  std::optional<int> element_by_id(std::string_view element_id) const {
    for (int e = 0; e < size(); ++e)
      if (ids_[static_cast<std::size_t>(e)] == element_id) return e;
    return std::nullopt;
  }

  /// Structural equality (same ids, labels and order); heap equality up to
  /// isomorphism is is_isomorphic.
  bool operator==(const Heap&) const = default;

private:
  PieceAlphabet alphabet_;
  std::vector<std::string> ids_;
  std::vector<Piece> labels_;
  detail::BitRel order_;
  std::vector<std::pair<int, int>> covers_;

  friend Heap detail::make_heap(PieceAlphabet, std::vector<std::string>,
                                std::vector<Piece>, detail::BitRel);
};

namespace detail {

inline Heap make_heap(PieceAlphabet alphabet, std::vector<std::string> ids,
                      std::vector<Piece> labels, BitRel order) {
  Heap h;
  h.alphabet_ = std::move(alphabet);
  h.ids_ = std::move(ids);
  h.labels_ = std::move(labels);
  h.covers_ = covering_pairs(order);
  h.order_ = std::move(order);
  return h;
}

inline std::vector<std::string> position_ids(int n) {
  std::vector<std::string> ids(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ids[static_cast<std::size_t>(i)] = std::to_string(i + 1);
  return ids;
}

}  // namespace detail

// A word denotes the left-to-right composition of singleton heaps: position i
// lies below position j whenever i < j and their letters are concurrent, and
// the order is the transitive closure of those relations. Elements are
// identified by their 1-based word position.
inline Heap heap_from_word(const PieceAlphabet& alphabet, const std::vector<Piece>& word) {
  const int n = static_cast<int>(word.size());
  for (Piece p : word)
    if (p < 0 || p >= alphabet.size()) throw UnknownPieceError(std::to_string(p));
  detail::BitRel order(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (alphabet.concurrent(word[static_cast<std::size_t>(i)], word[static_cast<std::size_t>(j)]))
        order.set(i, j);
  order.transitive_close();
  return detail::make_heap(alphabet, detail::position_ids(n), word, std::move(order));
}

inline Heap heap_from_word(const PieceAlphabet& alphabet, const std::vector<std::string>& word) {
  std::vector<Piece> pieces;
  pieces.reserve(word.size());
  for (const auto& name : word) pieces.push_back(alphabet.require(name));
  return heap_from_word(alphabet, pieces);
}

// Composition: disjoint copies of both operands, with every element of the
// lower heap placed below every concurrent-labelled element of the upper one.
// Ids of the upper heap gain prime suffixes when they collide.
inline Heap compose(const Heap& lower, const Heap& upper) {
  if (!(lower.alphabet() == upper.alphabet())) throw AlphabetMismatchError();
  const int ne = lower.size();
  const int nf = upper.size();
  const int n = ne + nf;

  detail::BitRel order(n);
  for (int i = 0; i < ne; ++i)
    for (int j = 0; j < ne; ++j)
      if (lower.less(i, j)) order.set(i, j);
  for (int i = 0; i < nf; ++i)
    for (int j = 0; j < nf; ++j)
      if (upper.less(i, j)) order.set(ne + i, ne + j);
  for (int i = 0; i < ne; ++i)
    for (int j = 0; j < nf; ++j)
      if (lower.alphabet().concurrent(lower.label(i), upper.label(j))) order.set(i, ne + j);
  order.transitive_close();

  std::vector<Piece> labels = lower.labels();
  labels.insert(labels.end(), upper.labels().begin(), upper.labels().end());

  std::vector<std::string> ids = lower.ids();
  std::unordered_set<std::string> used(ids.begin(), ids.end());
  for (const auto& upper_id : upper.ids()) {
    std::string candidate = upper_id;
    while (used.count(candidate)) candidate += "'";
    used.insert(candidate);
    ids.push_back(std::move(candidate));
  }

  return detail::make_heap(lower.alphabet(), std::move(ids), std::move(labels), std::move(order));
}

// Subheap on a subset: keep the order pairs whose labels are concurrent and
// close transitively. Element ids and labels are restricted.
inline Heap subheap(const Heap& heap, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (int e : elements)
    if (e < 0 || e >= heap.size()) throw std::out_of_range("subheap element out of range");

  const int m = static_cast<int>(elements.size());
  detail::BitRel order(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int x = elements[static_cast<std::size_t>(i)];
      const int y = elements[static_cast<std::size_t>(j)];
      if (heap.less(x, y) && heap.alphabet().concurrent(heap.label(x), heap.label(y)))
        order.set(i, j);
    }
  order.transitive_close();

  std::vector<std::string> ids;
  std::vector<Piece> labels;
  ids.reserve(elements.size());
  labels.reserve(elements.size());
  for (int e : elements) {
    ids.push_back(heap.id(e));
    labels.push_back(heap.label(e));
  }
  return detail::make_heap(heap.alphabet(), std::move(ids), std::move(labels), std::move(order));
}

// Build a heap from an explicit element list and generating relations, and
// check both heap axioms on the closure. Errors: CycleDetected when the
// closure is not antisymmetric, Axiom1Violation for an incomparable pair with
// concurrent labels, Axiom2Violation for a cover with non-concurrent labels.
inline Heap validate_explicit(const PieceAlphabet& alphabet,
                              const std::vector<std::string>& element_ids,
                              const std::vector<Piece>& labels,
                              const std::vector<std::pair<int, int>>& relations) {
  const int n = static_cast<int>(element_ids.size());
  if (labels.size() != element_ids.size())
    throw std::invalid_argument("one label per element required");
  for (Piece p : labels)
    if (p < 0 || p >= alphabet.size()) throw UnknownPieceError(std::to_string(p));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (element_ids[static_cast<std::size_t>(i)] == element_ids[static_cast<std::size_t>(j)])
        throw std::invalid_argument("duplicate element id: " + element_ids[static_cast<std::size_t>(i)]);

  detail::BitRel order(n);
  for (auto [a, b] : relations) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw std::out_of_range("relation references an unknown element");
    if (a != b) order.set(a, b);  // x <= x carries no information
  }
  order.transitive_close();

  if (order.any_reflexive()) {
    // Recover a concrete cycle: shortest path back to the first offender
    // along the generating relations.
    std::vector<std::vector<int>> succ(static_cast<std::size_t>(n));
    for (auto [a, b] : relations)
      if (a != b) succ[static_cast<std::size_t>(a)].push_back(b);
    for (int i = 0; i < n; ++i) {
      if (!order.get(i, i)) continue;
      std::vector<int> from(static_cast<std::size_t>(n), -1);
      std::vector<bool> seen(static_cast<std::size_t>(n), false);
      std::queue<int> bfs;
      bfs.push(i);
      seen[static_cast<std::size_t>(i)] = true;
      int back_from = -1;
      while (!bfs.empty() && back_from < 0) {
        const int u = bfs.front();
        bfs.pop();
        for (int v : succ[static_cast<std::size_t>(u)]) {
          if (v == i) {
            back_from = u;
            break;
          }
          if (!seen[static_cast<std::size_t>(v)]) {
            seen[static_cast<std::size_t>(v)] = true;
            from[static_cast<std::size_t>(v)] = u;
            bfs.push(v);
          }
        }
      }
      std::vector<int> path;
      for (int x = back_from; x != -1 && x != i; x = from[static_cast<std::size_t>(x)])
        path.push_back(x);
      path.push_back(i);
      std::reverse(path.begin(), path.end());
      std::vector<std::string> cycle;
      for (int x : path) cycle.push_back(element_ids[static_cast<std::size_t>(x)]);
      throw CycleDetectedError(std::move(cycle));
    }
  }

  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (alphabet.concurrent(labels[static_cast<std::size_t>(x)], labels[static_cast<std::size_t>(y)]) &&
          !order.get(x, y) && !order.get(y, x))
        throw Axiom1ViolationError(element_ids[static_cast<std::size_t>(x)],
                                   element_ids[static_cast<std::size_t>(y)]);

  for (auto [x, y] : detail::covering_pairs(order))
    if (!alphabet.concurrent(labels[static_cast<std::size_t>(x)], labels[static_cast<std::size_t>(y)]))
      throw Axiom2ViolationError(element_ids[static_cast<std::size_t>(x)],
                                 element_ids[static_cast<std::size_t>(y)]);

  return detail::make_heap(alphabet, element_ids, labels, std::move(order));
}

// Simple graph on the pieces that actually occur, with edges between distinct
// concurrent pieces.
struct ConcurrencyGraph {
  std::vector<Piece> vertices;                 // sorted
  std::vector<std::pair<Piece, Piece>> edges;  // (low, high), sorted

  bool operator==(const ConcurrencyGraph&) const = default;
};

inline ConcurrencyGraph concurrency_subgraph(const Heap& heap) {
  ConcurrencyGraph graph;
  graph.vertices = heap.labels();
  std::sort(graph.vertices.begin(), graph.vertices.end());
  graph.vertices.erase(std::unique(graph.vertices.begin(), graph.vertices.end()),
                       graph.vertices.end());
  for (std::size_t i = 0; i < graph.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < graph.vertices.size(); ++j)
      if (heap.alphabet().concurrent(graph.vertices[i], graph.vertices[j]))
        graph.edges.emplace_back(graph.vertices[i], graph.vertices[j]);
  return graph;
}

// First simple cycle of length >= 3 found by depth-first search, listed once
// around, or nullopt for a forest. Deterministic: vertices and adjacency are
// scanned in sorted order.
inline std::optional<std::vector<Piece>> find_circuit(const ConcurrencyGraph& graph) {
  const int n = static_cast<int>(graph.vertices.size());
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  auto position = [&graph](Piece p) {
    return static_cast<int>(std::lower_bound(graph.vertices.begin(), graph.vertices.end(), p) -
                            graph.vertices.begin());
  };
  for (auto [a, b] : graph.edges) {
    adj[static_cast<std::size_t>(position(a))].push_back(position(b));
    adj[static_cast<std::size_t>(position(b))].push_back(position(a));
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());

  std::vector<int> state(static_cast<std::size_t>(n), 0);  // 0 new, 1 on path, 2 done
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> path;
  std::optional<std::vector<Piece>> circuit;

  auto dfs = [&](auto&& self, int u) -> bool {
    state[static_cast<std::size_t>(u)] = 1;
    path.push_back(u);
    for (int v : adj[static_cast<std::size_t>(u)]) {
      if (v == parent[static_cast<std::size_t>(u)]) continue;
      if (state[static_cast<std::size_t>(v)] == 1) {
        auto it = std::find(path.begin(), path.end(), v);
        std::vector<Piece> cycle;
        for (; it != path.end(); ++it) cycle.push_back(graph.vertices[static_cast<std::size_t>(*it)]);
        circuit = std::move(cycle);
        return true;
      }
      if (state[static_cast<std::size_t>(v)] == 0) {
        parent[static_cast<std::size_t>(v)] = u;
        if (self(self, v)) return true;
      }
    }
    path.pop_back();
    state[static_cast<std::size_t>(u)] = 2;
    return false;
  };

  for (int s = 0; s < n; ++s)
    if (state[static_cast<std::size_t>(s)] == 0 && dfs(dfs, s)) break;
  return circuit;
}

// Lexicographically least linear extension read off as a label word, under
// the alphabet's declaration order. Two heaps over the same alphabet are
// isomorphic exactly when their canonical words coincide, which makes this
// both the equality test and the serialization.
inline std::vector<Piece> canonical_word(const Heap& heap) {
  const int n = heap.size();
  std::vector<int> indegree(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> succ(static_cast<std::size_t>(n));
  for (auto [x, y] : heap.covers()) {
    ++indegree[static_cast<std::size_t>(y)];
    succ[static_cast<std::size_t>(x)].push_back(y);
  }
  std::vector<bool> placed(static_cast<std::size_t>(n), false);
  std::vector<Piece> word;
  word.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int e = 0; e < n; ++e) {
      if (placed[static_cast<std::size_t>(e)] || indegree[static_cast<std::size_t>(e)] != 0) continue;
      if (best < 0 || heap.label(e) < heap.label(best)) best = e;
    }
    placed[static_cast<std::size_t>(best)] = true;
    word.push_back(heap.label(best));
    for (int y : succ[static_cast<std::size_t>(best)]) --indegree[static_cast<std::size_t>(y)];
  }
  return word;
}

inline bool is_isomorphic(const Heap& a, const Heap& b) {
  if (!(a.alphabet() == b.alphabet())) throw AlphabetMismatchError();
  return canonical_word(a) == canonical_word(b);
}

}  // namespace heaps
