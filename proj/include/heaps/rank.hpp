#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <queue>
#include <stdexcept>
#include <variant>
#include <vector>

#include "heaps/heap.hpp"

namespace heaps {

// A rank function: +1 along every cover, normalized so each connected
// component has minimum rank 0 (ranks are otherwise only unique up to
// per-component shifts).
struct RankAssignment {
  std::vector<int> rank;                      // element -> rank
  std::vector<std::vector<int>> components;   // sorted element lists, by least element
  std::vector<int> component_of;              // element -> index into components
};

struct WalkStep {
  bool up = false;  // true: step ascends a cover; false: descends one
  int to = -1;

  bool operator==(const WalkStep&) const = default;
};

// Finite witness that no rank function exists: a closed walk over covering
// steps whose signed length (+1 up, -1 down) is nonzero.
struct UnrankedCertificate {
  int start = -1;
  std::vector<WalkStep> steps;  // closed: steps.back().to == start
  int signed_sum = 0;
};

using RankResult = std::variant<RankAssignment, UnrankedCertificate>;

inline bool is_ranked(const RankResult& result) {
  return std::holds_alternative<RankAssignment>(result);
}

inline std::vector<std::vector<int>> connected_components(const Heap& heap) {
  const int n = heap.size();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (auto [x, y] : heap.covers()) {
    adj[static_cast<std::size_t>(x)].push_back(y);
    adj[static_cast<std::size_t>(y)].push_back(x);
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<std::vector<int>> components;
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> component;
    std::queue<int> bfs;
    bfs.push(s);
    seen[static_cast<std::size_t>(s)] = true;
    while (!bfs.empty()) {
      const int u = bfs.front();
      bfs.pop();
      component.push_back(u);
      for (int v : adj[static_cast<std::size_t>(u)])
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = true;
          bfs.push(v);
        }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

namespace detail {

inline UnrankedCertificate make_certificate(int root, int u, int v, int sign,
                                            const std::vector<std::pair<int, int>>& parent,
                                            const std::vector<int>& rho) {
  UnrankedCertificate cert;
  cert.start = root;
  // tree path root -> u
  std::vector<int> chain;
  for (int x = u; x != root; x = parent[static_cast<std::size_t>(x)].first) chain.push_back(x);
  std::reverse(chain.begin(), chain.end());
  for (int x : chain)
    cert.steps.push_back({parent[static_cast<std::size_t>(x)].second > 0, x});
  // the conflicting cover step
  cert.steps.push_back({sign > 0, v});
  // tree path v -> root, reversing each parent edge
  for (int x = v; x != root; x = parent[static_cast<std::size_t>(x)].first)
    cert.steps.push_back({parent[static_cast<std::size_t>(x)].second < 0,
                          parent[static_cast<std::size_t>(x)].first});
  int sum = 0;
  for (const WalkStep& step : cert.steps) sum += step.up ? 1 : -1;
  cert.signed_sum = sum;
  assert(sum == rho[static_cast<std::size_t>(u)] + sign - rho[static_cast<std::size_t>(v)]);
  assert(sum != 0);
  assert(!cert.steps.empty() && cert.steps.back().to == root);
  return cert;
}

}  // namespace detail

// Breadth-first propagation of ranks over the undirected cover graph, one
// component at a time, +1 along up-steps and -1 along down-steps; a heap is
// ranked exactly when every closed walk in the cover graph has signed sum 0,
// so any conflict closes into a nonzero-sum walk which is returned as the
// certificate. Deterministic: elements and adjacency are scanned in index
// order, so the first conflict is reproducible.
inline RankResult rank(const Heap& heap) {
  const int n = heap.size();
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));
  for (auto [x, y] : heap.covers()) {
    adj[static_cast<std::size_t>(x)].emplace_back(y, +1);
    adj[static_cast<std::size_t>(y)].emplace_back(x, -1);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());

  std::vector<int> rho(static_cast<std::size_t>(n), 0);
  std::vector<int> component_of(static_cast<std::size_t>(n), -1);
  std::vector<std::pair<int, int>> parent(static_cast<std::size_t>(n), {-1, 0});
  std::vector<std::vector<int>> components;

  for (int s = 0; s < n; ++s) {
    if (component_of[static_cast<std::size_t>(s)] >= 0) continue;
    const int ci = static_cast<int>(components.size());
    components.emplace_back();
    components.back().push_back(s);
    component_of[static_cast<std::size_t>(s)] = ci;
    rho[static_cast<std::size_t>(s)] = 0;
    std::queue<int> bfs;
    bfs.push(s);
    while (!bfs.empty()) {
      const int u = bfs.front();
      bfs.pop();
      for (auto [v, sign] : adj[static_cast<std::size_t>(u)]) {
        if (component_of[static_cast<std::size_t>(v)] < 0) {
          component_of[static_cast<std::size_t>(v)] = ci;
          rho[static_cast<std::size_t>(v)] = rho[static_cast<std::size_t>(u)] + sign;
          parent[static_cast<std::size_t>(v)] = {u, sign};
          components.back().push_back(v);
          bfs.push(v);
        } else if (rho[static_cast<std::size_t>(v)] != rho[static_cast<std::size_t>(u)] + sign) {
          return detail::make_certificate(s, u, v, sign, parent, rho);
        }
      }
    }
    std::sort(components.back().begin(), components.back().end());
  }

  for (const auto& component : components) {
    int low = rho[static_cast<std::size_t>(component.front())];
    for (int e : component) low = std::min(low, rho[static_cast<std::size_t>(e)]);
    for (int e : component) rho[static_cast<std::size_t>(e)] -= low;
  }
  return RankAssignment{std::move(rho), std::move(components), std::move(component_of)};
}

// Shift a rank function by a per-component constant; the cover condition is
// preserved because covers never cross components.
inline RankAssignment shift_rank(const RankAssignment& base, const std::vector<int>& delta) {
  if (delta.size() != base.components.size())
    throw std::invalid_argument("one shift per component required");
  RankAssignment shifted = base;
  for (std::size_t e = 0; e < shifted.rank.size(); ++e)
    shifted.rank[e] += delta[static_cast<std::size_t>(shifted.component_of[e])];
  return shifted;
}

// The order interval {x : a <= x <= b} with its balance flags.
struct Interval {
  int bottom = -1;
  int top = -1;
  std::vector<int> elements;  // sorted element indices
  bool balanced = false;      // endpoint labels coincide
  bool minimal = false;       // balanced, proper, and no interior endpoint label

  bool operator==(const Interval&) const = default;
};

inline Interval interval(const Heap& heap, int bottom, int top) {
  if (bottom < 0 || bottom >= heap.size() || top < 0 || top >= heap.size())
    throw std::out_of_range("interval endpoint out of range");
  if (!heap.leq(bottom, top)) throw NotComparableError(heap.id(bottom), heap.id(top));
  Interval iv;
  iv.bottom = bottom;
  iv.top = top;
  for (int x = 0; x < heap.size(); ++x)
    if (heap.leq(bottom, x) && heap.leq(x, top)) iv.elements.push_back(x);
  iv.balanced = heap.label(bottom) == heap.label(top);
  iv.minimal = iv.balanced && bottom != top;
  if (iv.minimal)
    for (int x : iv.elements)
      if (x != bottom && x != top && heap.label(x) == heap.label(bottom)) {
        iv.minimal = false;
        break;
      }
  return iv;
}

/// The interval as a poset in its own right (its subheap).
inline Heap interval_subheap(const Heap& heap, const Interval& iv) {
  return subheap(heap, iv.elements);
}

/// Occurrences of one piece, in chain order (they are totally ordered in any
/// valid heap).
inline std::vector<int> label_occurrences(const Heap& heap, Piece piece) {
  std::vector<int> occurrences;
  for (int e = 0; e < heap.size(); ++e)
    if (heap.label(e) == piece) occurrences.push_back(e);
  std::sort(occurrences.begin(), occurrences.end(),
            [&heap](int a, int b) { return heap.less(a, b); });
  return occurrences;
}

// Minimal balanced subintervals are exactly the intervals between consecutive
// occurrences of one piece: an interior element with the endpoint label would
// itself be an occurrence between the two. Emitted by piece declaration
// order, then by chain position.
inline std::vector<Interval> minimal_balanced_subintervals(const Heap& heap) {
  std::vector<Interval> out;
  for (Piece p = 0; p < heap.alphabet().size(); ++p) {
    const std::vector<int> occurrences = label_occurrences(heap, p);
    for (std::size_t i = 0; i + 1 < occurrences.size(); ++i) {
      Interval iv = interval(heap, occurrences[i], occurrences[i + 1]);
      assert(iv.minimal);
      out.push_back(std::move(iv));
    }
  }
  return out;
}

struct MinimalIntervalVerdict {
  bool ranked = false;
  std::optional<Interval> failing;  // first unranked minimal balanced subinterval
};

// Rankedness via minimal balanced subintervals: when the concurrency subgraph
// is circuit-free, the heap is ranked exactly when every minimal balanced
// subinterval is ranked as a poset. Refuses with CircuitError when the
// hypothesis fails, because the criterion is unsound there; rank() remains
// available unconditionally.
inline MinimalIntervalVerdict ranked_via_minimal_intervals(const Heap& heap) {
  if (auto circuit = find_circuit(concurrency_subgraph(heap))) {
    std::vector<std::string> names;
    names.reserve(circuit->size());
    for (Piece p : *circuit) names.push_back(heap.alphabet().name(p));
    throw CircuitError(std::move(names));
  }
  for (const Interval& iv : minimal_balanced_subintervals(heap))
    if (!is_ranked(rank(interval_subheap(heap, iv)))) return {false, iv};
  return {true, std::nullopt};
}

}  // namespace heaps
