#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "heaps/coxeter.hpp"
#include "heaps/rank.hpp"

namespace heaps {

enum class LabelVerdict { AllSame, AllDistinct, Mixed };

inline const char* to_string(LabelVerdict v) {
  switch (v) {
    case LabelVerdict::AllSame: return "AllSame";
    case LabelVerdict::AllDistinct: return "AllDistinct";
    case LabelVerdict::Mixed: return "Mixed";
  }
  return "?";
}

// The elements of a minimal balanced subinterval whose labels differ from the
// endpoint label but are concurrent with it, with the label-pattern verdict.
// Empty and singleton member sets satisfy both patterns and report
// AllDistinct.
struct SSetReport {
  Interval interval;
  std::vector<int> members;   // ascending element index
  std::vector<Piece> labels;  // aligned with members
  LabelVerdict verdict = LabelVerdict::AllDistinct;
};

namespace detail {

inline void require_minimal_balanced(const Heap& heap, const Interval& iv) {
  if (iv.bottom < 0 || iv.bottom >= heap.size() || iv.top < 0 || iv.top >= heap.size() ||
      !heap.leq(iv.bottom, iv.top))
    throw NotMinimalBalancedError(iv.bottom >= 0 && iv.bottom < heap.size() ? heap.id(iv.bottom) : "?",
                                  iv.top >= 0 && iv.top < heap.size() ? heap.id(iv.top) : "?");
  const Interval fresh = interval(heap, iv.bottom, iv.top);
  if (!fresh.minimal || fresh.elements != iv.elements)
    throw NotMinimalBalancedError(heap.id(iv.bottom), heap.id(iv.top));
}

inline std::map<Piece, int> label_multiplicities(const SSetReport& report) {
  std::map<Piece, int> mult;
  for (Piece p : report.labels) ++mult[p];
  return mult;
}

}  // namespace detail

inline SSetReport s_set(const Heap& heap, const Interval& iv) {
  detail::require_minimal_balanced(heap, iv);
  SSetReport report;
  report.interval = iv;
  const Piece anchor = heap.label(iv.bottom);
  for (int e : iv.elements) {
    const Piece p = heap.label(e);
    if (p != anchor && heap.alphabet().concurrent(anchor, p)) {
      report.members.push_back(e);
      report.labels.push_back(p);
    }
  }
  const auto mult = detail::label_multiplicities(report);
  if (report.members.size() <= 1) {
    report.verdict = LabelVerdict::AllDistinct;
  } else if (mult.size() == 1) {
    report.verdict = LabelVerdict::AllSame;
  } else {
    bool all_once = true;
    for (const auto& [p, count] : mult)
      if (count > 1) all_once = false;
    report.verdict = all_once ? LabelVerdict::AllDistinct : LabelVerdict::Mixed;
  }
  return report;
}

struct SLabelVerdict {
  bool ranked = false;
  std::optional<SSetReport> mixed;  // first Mixed report when unranked
};

// Rankedness of the heap of a fully commutative element over an FC-finite
// Coxeter group: ranked exactly when every minimal balanced subinterval's
// label set is AllSame or AllDistinct. Both hypotheses are validated up
// front because the criterion does not survive dropping either one.
inline SLabelVerdict ranked_via_s_set_labels(const Heap& heap, const CoxeterGraph& group) {
  if (!is_fc_finite(group)) throw NotFcFiniteError();
  if (fc_violation(heap, group)) throw NotFcHeapError();
  for (const Interval& iv : minimal_balanced_subintervals(heap)) {
    SSetReport report = s_set(heap, iv);
    if (report.verdict == LabelVerdict::Mixed) return {false, std::move(report)};
  }
  return {true, std::nullopt};
}

// A member whose label occurs exactly once among the label-set labels
// (smallest element index wins). Guaranteed to exist for FC heaps over
// FC-finite groups whenever the labels are not all equal; errors with
// NotApplicable when they are.
inline std::optional<int> unique_label_witness(const Heap& heap, const Interval& iv) {
  const SSetReport report = s_set(heap, iv);
  const auto mult = detail::label_multiplicities(report);
  if (mult.size() <= 1) throw NotApplicableError();
  for (std::size_t i = 0; i < report.members.size(); ++i)
    if (mult.at(report.labels[i]) == 1) return report.members[i];
  return std::nullopt;
}

// Probe for the extremal-cover property: the least p-labelled member covers
// the bottom endpoint and the greatest one is covered by the top endpoint.
// Holds whenever the concurrency subgraph is circuit-free.
inline bool extremal_cover_check(const Heap& heap, const Interval& iv, Piece piece) {
  const SSetReport report = s_set(heap, iv);
  std::vector<int> carriers;
  for (std::size_t i = 0; i < report.members.size(); ++i)
    if (report.labels[i] == piece) carriers.push_back(report.members[i]);
  if (carriers.empty()) throw NoSuchLabelError(heap.alphabet().name(piece));
  std::sort(carriers.begin(), carriers.end(),
            [&heap](int a, int b) { return heap.less(a, b); });
  const auto& covers = heap.covers();
  auto is_cover = [&covers](int x, int y) {
    return std::binary_search(covers.begin(), covers.end(), std::pair<int, int>{x, y});
  };
  return is_cover(iv.bottom, carriers.front()) && is_cover(carriers.back(), iv.top);
}

}  // namespace heaps
