// Command-line surface for the heaps-of-pieces library.
//
// Exit codes: 0 the command ran and the checked property holds (or the
// command is purely informational), 1 the property fails, 2 input or parse
// error, 3 a precondition of the requested check is violated.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "heaps/heaps.hpp"

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;

heaps::Heap load_heap(const std::string& path) { return heaps::read_heap_file(path); }

heaps::CoxeterGraph load_coxeter(const std::string& path) {
  return heaps::read_coxeter_file(path);
}

int run_check(const std::string& heap_path) {
  const heaps::Heap heap = load_heap(heap_path);
  const heaps::RankResult result = heaps::rank(heap);
  std::cout << heaps::rank_report(heap, result);
  return heaps::is_ranked(result) ? kExitHolds : kExitFails;
}

int run_thm221(const std::string& heap_path) {
  const heaps::Heap heap = load_heap(heap_path);
  try {
    const heaps::MinimalIntervalVerdict verdict = heaps::ranked_via_minimal_intervals(heap);
    if (verdict.ranked) {
      std::cout << "RANKED\n";
      return kExitHolds;
    }
    std::cout << "UNRANKED\n";
    std::cout << "interval " << heap.id(verdict.failing->bottom) << ' '
              << heap.id(verdict.failing->top) << '\n';
    return kExitFails;
  } catch (const heaps::CircuitError& e) {
    std::cout << heaps::circuit_report(e.circuit);
    return kExitPrecondition;
  }
}

int run_thm323(const std::string& heap_path, const std::string& cox_path) {
  const heaps::Heap heap = load_heap(heap_path);
  const heaps::CoxeterGraph group = load_coxeter(cox_path);
  try {
    const heaps::SLabelVerdict verdict = heaps::ranked_via_s_set_labels(heap, group);
    if (verdict.ranked) {
      std::cout << "RANKED\n";
      return kExitHolds;
    }
    std::cout << "UNRANKED\n";
    std::cout << heaps::sset_line(heap, *verdict.mixed) << '\n';
    return kExitFails;
  } catch (const heaps::NotFcFiniteError& e) {
    std::cout << "ERROR not-fc-finite\n";
    return kExitPrecondition;
  } catch (const heaps::NotFcHeapError& e) {
    std::cout << "ERROR not-fc-heap\n";
    return kExitPrecondition;
  } catch (const heaps::AlphabetMismatchError& e) {
    std::cout << "ERROR alphabet-mismatch\n";
    return kExitPrecondition;
  }
}

int run_fc_check(const std::string& heap_path, const std::string& cox_path) {
  const heaps::Heap heap = load_heap(heap_path);
  const heaps::CoxeterGraph group = load_coxeter(cox_path);
  try {
    const auto violation = heaps::fc_violation(heap, group);
    if (!violation) {
      std::cout << "FC\n";
      return kExitHolds;
    }
    std::cout << "NOT-FC\n";
    if (violation->kind == heaps::FcViolation::Kind::EqualLabelCover) {
      std::cout << "cover " << heap.id(violation->cover.first) << ' '
                << heap.id(violation->cover.second) << '\n';
    } else {
      std::cout << "chain";
      for (int e : violation->chain) std::cout << ' ' << heap.id(e);
      std::cout << '\n';
    }
    return kExitFails;
  } catch (const heaps::AlphabetMismatchError& e) {
    std::cout << "ERROR alphabet-mismatch\n";
    return kExitPrecondition;
  }
}

int run_intervals(const std::string& heap_path, const std::optional<std::string>& cox_path) {
  const heaps::Heap heap = load_heap(heap_path);
  if (cox_path) {
    const heaps::CoxeterGraph group = load_coxeter(*cox_path);
    if (!(heap.alphabet() == heaps::concurrency_from_coxeter(group))) {
      std::cout << "ERROR alphabet-mismatch\n";
      return kExitPrecondition;
    }
  }
  for (const heaps::Interval& iv : heaps::minimal_balanced_subintervals(heap))
    std::cout << heaps::sset_line(heap, heaps::s_set(heap, iv)) << '\n';
  return kExitHolds;
}

int run_classify(const std::string& cox_path) {
  const heaps::CoxeterGraph group = load_coxeter(cox_path);
  const heaps::FcClassification classification = heaps::classify_fc_finite(group);
  if (!classification.fc_finite) {
    std::cout << "NOT-FC-FINITE\n";
    return kExitFails;
  }
  std::cout << "FC-FINITE";
  for (const auto& component : classification.components)
    std::cout << ' ' << component.tag->family << ' ' << component.tag->param;
  std::cout << '\n';
  return kExitHolds;
}

int run_enumerate(const std::string& cox_path, std::optional<int> max_size) {
  const heaps::CoxeterGraph group = load_coxeter(cox_path);
  try {
    heaps::enumerate_fc_heaps(group, max_size, [](const heaps::Heap& heap) {
      std::cout << "word";
      for (heaps::Piece p : heaps::canonical_word(heap))
        std::cout << ' ' << heap.alphabet().name(p);
      std::cout << '\n';
    });
    return kExitHolds;
  } catch (const heaps::BoundRequiredError& e) {
    std::cout << "ERROR bound-required\n";
    return kExitPrecondition;
  }
}

int run_census(const std::string& cox_path, std::optional<int> max_size) {
  const heaps::CoxeterGraph group = load_coxeter(cox_path);
  try {
    std::cout << heaps::census_tsv(heaps::census(group, max_size));
    return kExitHolds;
  } catch (const heaps::BoundRequiredError& e) {
    std::cout << "ERROR bound-required\n";
    return kExitPrecondition;
  }
}

int run_dot(const std::string& heap_path) {
  std::cout << heaps::to_dot(load_heap(heap_path));
  return kExitHolds;
}

int run_canonical(const std::string& heap_path) {
  const heaps::Heap heap = load_heap(heap_path);
  std::cout << heaps::format_word(heap.alphabet(), heaps::canonical_word(heap)) << '\n';
  return kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"heaps of pieces: rank functions, fully commutative heaps, enumeration"};
  app.require_subcommand(1);

  std::string heap_path;
  std::string cox_path;
  int max_size_value = 0;

  auto* check = app.add_subcommand("check", "compute a rank function or an unranked certificate");
  check->add_option("heapfile", heap_path)->required();

  auto* thm221 = app.add_subcommand(
      "thm221", "rankedness via minimal balanced subintervals (circuit-free heaps only)");
  thm221->add_option("heapfile", heap_path)->required();

  auto* thm323 = app.add_subcommand(
      "thm323", "rankedness via label sets, for FC heaps over FC-finite Coxeter groups");
  thm323->add_option("heapfile", heap_path)->required();
  thm323->add_option("--coxeter", cox_path, "Coxeter graph file")->required();

  auto* fc_check =
      app.add_subcommand("fc-check", "is the heap the heap of a fully commutative element?");
  fc_check->add_option("heapfile", heap_path)->required();
  fc_check->add_option("--coxeter", cox_path, "Coxeter graph file")->required();

  auto* intervals =
      app.add_subcommand("intervals", "minimal balanced subintervals with their label sets");
  intervals->add_option("heapfile", heap_path)->required();
  auto* intervals_cox = intervals->add_option("--coxeter", cox_path,
                                              "cross-check the heap alphabet against this graph");

  auto* classify = app.add_subcommand("classify", "FC-finiteness with family tags");
  classify->add_option("coxeterfile", cox_path)->required();

  auto* enumerate = app.add_subcommand("enumerate", "list all FC heaps as canonical words");
  enumerate->add_option("--coxeter", cox_path, "Coxeter graph file")->required();
  auto* enumerate_max = enumerate->add_option("--max-size", max_size_value, "largest heap size");

  auto* census_cmd = app.add_subcommand("census", "count FC heaps per size (TSV)");
  census_cmd->add_option("--coxeter", cox_path, "Coxeter graph file")->required();
  auto* census_max = census_cmd->add_option("--max-size", max_size_value, "largest heap size");

  auto* dot = app.add_subcommand("dot", "Hasse diagram in DOT format");
  dot->add_option("heapfile", heap_path)->required();

  auto* canonical = app.add_subcommand("canonical", "canonical word of the heap");
  canonical->add_option("heapfile", heap_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (check->parsed()) return run_check(heap_path);
    if (thm221->parsed()) return run_thm221(heap_path);
    if (thm323->parsed()) return run_thm323(heap_path, cox_path);
    if (fc_check->parsed()) return run_fc_check(heap_path, cox_path);
    if (intervals->parsed())
      return run_intervals(heap_path, intervals_cox->count() ? std::optional(cox_path) : std::nullopt);
    if (classify->parsed()) return run_classify(cox_path);
    if (enumerate->parsed())
      return run_enumerate(cox_path,
                           enumerate_max->count() ? std::optional(max_size_value) : std::nullopt);
    if (census_cmd->parsed())
      return run_census(cox_path,
                        census_max->count() ? std::optional(max_size_value) : std::nullopt);
    if (dot->parsed()) return run_dot(heap_path);
    if (canonical->parsed()) return run_canonical(heap_path);
  } catch (const heaps::HeapError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
