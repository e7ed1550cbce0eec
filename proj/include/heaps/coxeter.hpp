#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "heaps/heap.hpp"
#include "heaps/rank.hpp"

namespace heaps {

// Coxeter graph: generators plus bond orders m(s, t). An absent bond means
// m = 2 (the generators commute); stored bonds are >= 3 or infinite. The
// group itself is never materialized; heaps stand in for its fully
// commutative elements.
class CoxeterGraph {
public:
  static constexpr int infinite_bond = std::numeric_limits<int>::max();

  CoxeterGraph() = default;

  explicit CoxeterGraph(std::vector<std::string> generators) : names_(std::move(generators)) {
    for (std::size_t i = 0; i < names_.size(); ++i)
      for (std::size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j])
          throw std::invalid_argument("duplicate generator: " + names_[i]);
  }

  void set_bond(int s, int t, int m) {
    if (s < 0 || s >= size() || t < 0 || t >= size() || s == t)
      throw std::invalid_argument("bond endpoints must be two distinct generators");
    if (m < 3) throw std::invalid_argument("bond order must be >= 3 or infinite");
    bonds_[key(s, t)] = m;
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& generator(int i) const { return names_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& generators() const { return names_; }

  std::optional<int> find(std::string_view name) const {
    for (int i = 0; i < size(); ++i)
      if (names_[static_cast<std::size_t>(i)] == name) return i;
    return std::nullopt;
  }

  int require(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw UnknownPieceError(std::string(name));
  }

  int bond(int s, int t) const {
    if (s == t) return 1;
    auto it = bonds_.find(key(s, t));
    return it == bonds_.end() ? 2 : it->second;
  }

  bool adjacent(int s, int t) const { return s != t && bond(s, t) != 2; }

  std::vector<int> neighbors(int s) const {
    std::vector<int> out;
    for (int t = 0; t < size(); ++t)
      if (adjacent(s, t)) out.push_back(t);
    return out;
  }

  int degree(int s) const { return static_cast<int>(neighbors(s).size()); }

  /// All bonds as (s, t, m) with s < t, sorted.
  std::vector<std::tuple<int, int, int>> bond_list() const {
    std::vector<std::tuple<int, int, int>> out;
    out.reserve(bonds_.size());
    for (const auto& [st, m] : bonds_) out.emplace_back(st.first, st.second, m);
    return out;
  }

  /// Full subgraph on a vertex set, keeping generator names.
  CoxeterGraph induced(std::vector<int> vertices) const {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::vector<std::string> names;
    names.reserve(vertices.size());
    for (int v : vertices) names.push_back(generator(v));
    CoxeterGraph sub(std::move(names));
    for (std::size_t i = 0; i < vertices.size(); ++i)
      for (std::size_t j = i + 1; j < vertices.size(); ++j) {
        const int m = bond(vertices[i], vertices[j]);
        if (m != 2) sub.set_bond(static_cast<int>(i), static_cast<int>(j), m);
      }
    return sub;
  }

  // Standard families, generators named "1".."n" in path order. B has its 4
  // on the first edge, F on the second, H its 5 on the first; D forks as
  // 1-3, 2-3, 3-4, ...; E forks at "4" with arms {2}, {3,1}, {5..n}. For I2
  // the parameter is the bond order m (>= 3 or infinite_bond).
  static CoxeterGraph family(std::string_view family_name, int param) {
    auto numbered = [](int n) {
      std::vector<std::string> names(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) names[static_cast<std::size_t>(i)] = std::to_string(i + 1);
      return CoxeterGraph(std::move(names));
    };
    auto require_rank = [&](int least) {
      if (param < least)
        throw std::invalid_argument("family " + std::string(family_name) + " needs rank >= " +
                                    std::to_string(least));
    };
    if (family_name == "A") {
      require_rank(1);
      CoxeterGraph g = numbered(param);
      for (int i = 0; i + 1 < param; ++i) g.set_bond(i, i + 1, 3);
      return g;
    }
    if (family_name == "B") {
      require_rank(2);
      CoxeterGraph g = numbered(param);
      g.set_bond(0, 1, 4);
      for (int i = 1; i + 1 < param; ++i) g.set_bond(i, i + 1, 3);
      return g;
    }
    if (family_name == "D") {
      require_rank(4);
      CoxeterGraph g = numbered(param);
      g.set_bond(0, 2, 3);
      g.set_bond(1, 2, 3);
      for (int i = 2; i + 1 < param; ++i) g.set_bond(i, i + 1, 3);
      return g;
    }
    if (family_name == "E") {
      require_rank(6);
      CoxeterGraph g = numbered(param);
      g.set_bond(0, 2, 3);
      g.set_bond(2, 3, 3);
      g.set_bond(1, 3, 3);
      for (int i = 3; i + 1 < param; ++i) g.set_bond(i, i + 1, 3);
      return g;
    }
    if (family_name == "F") {
      require_rank(4);
      CoxeterGraph g = numbered(param);
      g.set_bond(0, 1, 3);
      g.set_bond(1, 2, 4);
      for (int i = 2; i + 1 < param; ++i) g.set_bond(i, i + 1, 3);
      return g;
    }
    if (family_name == "H") {
      require_rank(3);
      CoxeterGraph g = numbered(param);
      g.set_bond(0, 1, 5);
      for (int i = 1; i + 1 < param; ++i) g.set_bond(i, i + 1, 3);
      return g;
    }
    if (family_name == "I2") {
      if (param != infinite_bond && param < 3)
        throw std::invalid_argument("I2 needs a bond order >= 3 or infinite");
      CoxeterGraph g = numbered(2);
      g.set_bond(0, 1, param);
      return g;
    }
    throw std::invalid_argument("unknown family: " + std::string(family_name));
  }

  bool operator==(const CoxeterGraph&) const = default;

private:
  static std::pair<int, int> key(int s, int t) { return {std::min(s, t), std::max(s, t)}; }

  std::vector<std::string> names_;
  std::map<std::pair<int, int>, int> bonds_;
};

/// Pieces are the generators; two are concurrent exactly when m(s, t) != 2.
inline PieceAlphabet concurrency_from_coxeter(const CoxeterGraph& group) {
  std::vector<std::pair<int, int>> pairs;
  for (auto [s, t, m] : group.bond_list()) pairs.emplace_back(s, t);
  return PieceAlphabet(group.generators(), pairs);
}

// Witness that a heap is not the heap of a fully commutative element: either
// a convex chain alternating between two bonded generators with the full bond
// length, or a covering relation with equal labels.
struct FcViolation {
  enum class Kind { AlternatingConvexChain, EqualLabelCover };

  Kind kind = Kind::EqualLabelCover;
  std::vector<int> chain;             // bottom to top, for AlternatingConvexChain
  std::pair<int, int> cover{-1, -1};  // for EqualLabelCover
};

// Checks both fully-commutative conditions. The convex-chain scan only walks
// consecutive windows of the merged (s, t) occurrence list: a convex
// alternating chain must be consecutive there, since any skipped occurrence
// lies in the endpoint interval.
inline std::optional<FcViolation> fc_violation(const Heap& heap, const CoxeterGraph& group) {
  if (!(heap.alphabet() == concurrency_from_coxeter(group))) throw AlphabetMismatchError();

  for (auto [x, y] : heap.covers())
    if (heap.label(x) == heap.label(y)) {
      FcViolation v;
      v.kind = FcViolation::Kind::EqualLabelCover;
      v.cover = {x, y};
      return v;
    }

  for (auto [s, t, m] : group.bond_list()) {
    if (m == CoxeterGraph::infinite_bond) continue;  // no chain bound for m = infinity
    std::vector<int> merged = label_occurrences(heap, s);
    {
      const std::vector<int> with_t = label_occurrences(heap, t);
      merged.insert(merged.end(), with_t.begin(), with_t.end());
      // s C t, so all these elements are pairwise comparable
      std::sort(merged.begin(), merged.end(),
                [&heap](int a, int b) { return heap.less(a, b); });
    }
    if (static_cast<int>(merged.size()) < m) continue;
    for (std::size_t i = 0; i + static_cast<std::size_t>(m) <= merged.size(); ++i) {
      bool alternating = true;
      for (int k = 0; k + 1 < m; ++k)
        if (heap.label(merged[i + static_cast<std::size_t>(k)]) ==
            heap.label(merged[i + static_cast<std::size_t>(k) + 1])) {
          alternating = false;
          break;
        }
      if (!alternating) continue;
      std::vector<int> window(merged.begin() + static_cast<std::ptrdiff_t>(i),
                              merged.begin() + static_cast<std::ptrdiff_t>(i) + m);
      std::vector<int> window_sorted = window;
      std::sort(window_sorted.begin(), window_sorted.end());
      const Interval between = interval(heap, window.front(), window.back());
      if (between.elements == window_sorted) {
        FcViolation v;
        v.kind = FcViolation::Kind::AlternatingConvexChain;
        v.chain = std::move(window);
        return v;
      }
    }
  }
  return std::nullopt;
}

inline bool is_fc_heap(const Heap& heap, const CoxeterGraph& group) {
  return !fc_violation(heap, group).has_value();
}

struct FamilyTag {
  std::string family;  // "A", "B", "D", "E", "F", "H" or "I2"
  int param = 0;       // the rank n; for I2 the bond order m

  bool operator==(const FamilyTag&) const = default;
};

struct ComponentClassification {
  std::vector<int> vertices;     // sorted generator indices
  std::optional<FamilyTag> tag;  // empty when the component matches no family
};

struct FcClassification {
  bool fc_finite = false;
  std::vector<ComponentClassification> components;
};

/// Connected components of the Coxeter graph, ordered by least vertex.
inline std::vector<std::vector<int>> coxeter_components(const CoxeterGraph& group) {
  std::vector<bool> seen(static_cast<std::size_t>(group.size()), false);
  std::vector<std::vector<int>> components;
  for (int s = 0; s < group.size(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> component;
    std::queue<int> bfs;
    bfs.push(s);
    seen[static_cast<std::size_t>(s)] = true;
    while (!bfs.empty()) {
      const int u = bfs.front();
      bfs.pop();
      component.push_back(u);
      for (int v : group.neighbors(u))
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

// Match one connected component against the FC-finite families: paths A/B/F/H
// and dihedral I2 with constrained bond positions, or the two tree shapes D
// (arms 1,1,k) and E (arms 1,2,k) with all bonds 3.
inline std::optional<FamilyTag> classify_component(const CoxeterGraph& group,
                                                   const std::vector<int>& vertices) {
  const int n = static_cast<int>(vertices.size());
  if (n == 1) return FamilyTag{"A", 1};

  std::vector<std::tuple<int, int, int>> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      const int m = group.bond(vertices[i], vertices[j]);
      if (m != 2) edges.emplace_back(vertices[i], vertices[j], m);
    }
  if (static_cast<int>(edges.size()) != n - 1) return std::nullopt;  // contains a cycle

  auto degree_in = [&](int v) {
    int d = 0;
    for (auto [a, b, m] : edges)
      if (a == v || b == v) ++d;
    return d;
  };
  auto neighbors_in = [&](int v) {
    std::vector<int> out;
    for (auto [a, b, m] : edges) {
      if (a == v) out.push_back(b);
      if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
  };

  int branch = -1;
  for (int v : vertices) {
    const int d = degree_in(v);
    if (d > 3) return std::nullopt;
    if (d == 3) {
      if (branch >= 0) return std::nullopt;  // two branch vertices
      branch = v;
    }
  }

  if (branch >= 0) {
    for (auto [a, b, m] : edges)
      if (m != 3) return std::nullopt;
    std::vector<int> arms;
    for (int t : neighbors_in(branch)) {
      int length = 1;
      int prev = branch;
      int cur = t;
      for (;;) {
        int next = -1;
        for (int w : neighbors_in(cur))
          if (w != prev) next = w;
        if (next < 0) break;
        prev = cur;
        cur = next;
        ++length;
      }
      arms.push_back(length);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return FamilyTag{"D", n};
    if (arms[0] == 1 && arms[1] == 2) return FamilyTag{"E", n};
    return std::nullopt;
  }

  // path: walk from the smaller endpoint and record the bond sequence
  std::vector<int> endpoints;
  for (int v : vertices)
    if (degree_in(v) == 1) endpoints.push_back(v);
  std::vector<int> bond_seq;
  {
    int prev = -1;
    int cur = endpoints.front();
    while (static_cast<int>(bond_seq.size()) < n - 1) {
      int next = -1;
      for (int w : neighbors_in(cur))
        if (w != prev) next = w;
      bond_seq.push_back(group.bond(cur, next));
      prev = cur;
      cur = next;
    }
  }

  std::vector<int> irregular;
  for (int i = 0; i < n - 1; ++i)
    if (bond_seq[static_cast<std::size_t>(i)] != 3) irregular.push_back(i);

  if (irregular.empty()) return FamilyTag{"A", n};
  if (n == 2) {
    const int m = bond_seq[0];
    if (m == 4) return FamilyTag{"B", 2};
    if (m >= 5 && m != CoxeterGraph::infinite_bond) return FamilyTag{"I2", m};
    return std::nullopt;  // the infinite dihedral group has infinitely many FC elements
  }
  if (irregular.size() > 1) return std::nullopt;
  const int pos = irregular.front();
  const int m = bond_seq[static_cast<std::size_t>(pos)];
  const int from_end = std::min(pos, (n - 2) - pos);  // 0 = terminal edge
  if (m == 4 && from_end == 0) return FamilyTag{"B", n};
  if (m == 4 && from_end == 1) return FamilyTag{"F", n};
  if (m == 5 && from_end == 0) return FamilyTag{"H", n};
  return std::nullopt;
}

}  // namespace detail

// Decides FC-finiteness by matching every connected component against the
// classified families, tagging each match.
inline FcClassification classify_fc_finite(const CoxeterGraph& group) {
  FcClassification result;
  result.fc_finite = true;
  for (auto& component : coxeter_components(group)) {
    ComponentClassification cc;
    cc.tag = detail::classify_component(group, component);
    cc.vertices = std::move(component);
    if (!cc.tag) result.fc_finite = false;
    result.components.push_back(std::move(cc));
  }
  return result;
}

inline bool is_fc_finite(const CoxeterGraph& group) {
  return classify_fc_finite(group).fc_finite;
}

/// Components of the graph with generator s deleted, ordered by least vertex.
inline std::vector<CoxeterGraph> gamma_delete(const CoxeterGraph& group, int s) {
  if (s < 0 || s >= group.size()) throw std::out_of_range("generator out of range");
  std::vector<int> rest;
  for (int v = 0; v < group.size(); ++v)
    if (v != s) rest.push_back(v);
  const CoxeterGraph remainder = group.induced(rest);
  std::vector<CoxeterGraph> out;
  for (const auto& component : coxeter_components(remainder)) {
    std::vector<int> original;
    original.reserve(component.size());
    for (int v : component) original.push_back(group.require(remainder.generator(v)));
    out.push_back(group.induced(original));
  }
  return out;
}

namespace detail {

inline std::vector<int> component_without(const CoxeterGraph& group, int s, int t) {
  // connected component of t in the graph minus s
  std::vector<bool> seen(static_cast<std::size_t>(group.size()), false);
  seen[static_cast<std::size_t>(s)] = true;
  std::vector<int> component;
  std::queue<int> bfs;
  bfs.push(t);
  seen[static_cast<std::size_t>(t)] = true;
  while (!bfs.empty()) {
    const int u = bfs.front();
    bfs.pop();
    component.push_back(u);
    for (int v : group.neighbors(u))
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        bfs.push(v);
      }
  }
  std::sort(component.begin(), component.end());
  return component;
}

}  // namespace detail

/// Connected component of t after deleting s; s and t must be adjacent.
inline CoxeterGraph gamma_component(const CoxeterGraph& group, int s, int t) {
  if (!group.adjacent(s, t)) throw NotAdjacentError(group.generator(s), group.generator(t));
  return group.induced(detail::component_without(group, s, t));
}

/// Full subgraph on {s} plus the component of t after deleting s.
inline CoxeterGraph gamma_arrow(const CoxeterGraph& group, int s, int t) {
  if (!group.adjacent(s, t)) throw NotAdjacentError(group.generator(s), group.generator(t));
  std::vector<int> vertices = detail::component_without(group, s, t);
  vertices.push_back(s);
  return group.induced(std::move(vertices));
}

namespace detail {

inline bool is_type_a(const CoxeterGraph& group) {
  const FcClassification c = classify_fc_finite(group);
  return c.components.size() == 1 && c.components.front().tag &&
         c.components.front().tag->family == "A";
}

}  // namespace detail

// Neighbors t of s whose branch subgraph {s} + component(t) is not a plain
// path of 3-bonds. For FC-finite graphs at most one such branch exists.
inline std::vector<int> non_a_branches(const CoxeterGraph& group, int s) {
  if (group.degree(s) < 2) throw DegreeTooSmallError(group.generator(s));
  std::vector<int> out;
  for (int t : group.neighbors(s))
    if (!detail::is_type_a(gamma_arrow(group, s, t))) out.push_back(t);
  return out;
}

}  // namespace heaps
