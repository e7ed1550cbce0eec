#pragma once

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "heaps/enumerate.hpp"
#include "heaps/fc_rank.hpp"

namespace heaps {

namespace detail {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Line line;
    line.number = number;
    std::string token;
    while (words >> token) line.tokens.push_back(token);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

inline int parse_int(const std::string& token, int line_number) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(line_number, "expected an integer, got '" + token + "'");
  return value;
}

inline int parse_bond(const std::string& token, int line_number) {
  if (token == "inf") return CoxeterGraph::infinite_bond;
  const int m = parse_int(token, line_number);
  if (m < 3) throw ParseError(line_number, "bond order must be >= 3 or 'inf'");
  return m;
}

}  // namespace detail

// Heap text format, line oriented, '#' starts a comment:
//   pieces <id> <id> ...        declaration order fixes the canonical ordering
//   edge <id> <id>              one per concurrent pair of distinct pieces
// then either
//   word <id> <id> ...
// or a block of
//   elem <eid> <pieceid>
// lines followed by
//   rel <eid> <eid>             generating relations, validated against the axioms
inline Heap read_heap(std::istream& in) {
  std::vector<std::string> piece_names;
  std::vector<std::pair<std::string, std::string>> edges;
  bool have_word = false;
  std::vector<std::string> word;
  std::vector<std::pair<std::string, std::string>> elems;  // id, piece name
  std::vector<std::pair<std::string, std::string>> rels;

  for (const auto& line : detail::tokenize(in)) {
    const std::string& keyword = line.tokens.front();
    if (keyword == "pieces") {
      piece_names.insert(piece_names.end(), line.tokens.begin() + 1, line.tokens.end());
    } else if (keyword == "edge") {
      if (line.tokens.size() != 3) throw ParseError(line.number, "edge needs two pieces");
      if (line.tokens[1] == line.tokens[2])
        throw ParseError(line.number, "reflexive pairs are implicit");
      edges.emplace_back(line.tokens[1], line.tokens[2]);
    } else if (keyword == "word") {
      if (have_word) throw ParseError(line.number, "only one word line allowed");
      if (!elems.empty() || !rels.empty())
        throw ParseError(line.number, "word cannot be mixed with elem/rel");
      have_word = true;
      word.assign(line.tokens.begin() + 1, line.tokens.end());
    } else if (keyword == "elem") {
      if (line.tokens.size() != 3) throw ParseError(line.number, "elem needs an id and a piece");
      if (have_word) throw ParseError(line.number, "elem cannot be mixed with word");
      elems.emplace_back(line.tokens[1], line.tokens[2]);
    } else if (keyword == "rel") {
      if (line.tokens.size() != 3) throw ParseError(line.number, "rel needs two element ids");
      if (have_word) throw ParseError(line.number, "rel cannot be mixed with word");
      rels.emplace_back(line.tokens[1], line.tokens[2]);
    } else {
      throw ParseError(line.number, "unknown directive: " + keyword);
    }
  }

  const PieceAlphabet alphabet(piece_names, edges);
  if (have_word || elems.empty()) return heap_from_word(alphabet, word);

  std::vector<std::string> ids;
  std::vector<Piece> labels;
  for (const auto& [id, piece] : elems) {
    for (const auto& existing : ids)
      if (existing == id) throw ParseError(0, "duplicate element id: " + id);
    ids.push_back(id);
    labels.push_back(alphabet.require(piece));
  }
  auto element_index = [&ids](const std::string& id) {
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (ids[i] == id) return static_cast<int>(i);
    throw ParseError(0, "rel references unknown element: " + id);
  };
  std::vector<std::pair<int, int>> relations;
  relations.reserve(rels.size());
  for (const auto& [a, b] : rels) relations.emplace_back(element_index(a), element_index(b));
  return validate_explicit(alphabet, ids, labels, relations);
}

inline Heap read_heap_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return read_heap(in);
}

// Coxeter file format: either a single
//   coxeter <FAMILY> <n>        FAMILY in A, B, D, E, F, H, I2 (parameter m for I2)
// line, or explicit
//   gen <id>
//   bond <id> <id> <m|inf>
// lines.
inline CoxeterGraph read_coxeter(std::istream& in) {
  const auto lines = detail::tokenize(in);
  bool family_form = false;
  for (const auto& line : lines)
    if (line.tokens.front() == "coxeter") family_form = true;

  if (family_form) {
    if (lines.size() != 1)
      throw ParseError(lines.front().number, "a coxeter line must be the whole file");
    const auto& line = lines.front();
    if (line.tokens.size() != 3)
      throw ParseError(line.number, "usage: coxeter <FAMILY> <n>");
    const std::string& family = line.tokens[1];
    const int param = family == "I2" && line.tokens[2] == "inf"
                          ? CoxeterGraph::infinite_bond
                          : detail::parse_int(line.tokens[2], line.number);
    try {
      return CoxeterGraph::family(family, param);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line.number, e.what());
    }
  }

  std::vector<std::string> generators;
  std::vector<std::tuple<std::string, std::string, int>> bonds;
  for (const auto& line : lines) {
    const std::string& keyword = line.tokens.front();
    if (keyword == "gen") {
      if (line.tokens.size() != 2) throw ParseError(line.number, "gen needs one id");
      generators.push_back(line.tokens[1]);
    } else if (keyword == "bond") {
      if (line.tokens.size() != 4)
        throw ParseError(line.number, "usage: bond <id> <id> <m|inf>");
      bonds.emplace_back(line.tokens[1], line.tokens[2],
                         detail::parse_bond(line.tokens[3], line.number));
    } else {
      throw ParseError(line.number, "unknown directive: " + keyword);
    }
  }
  try {
    CoxeterGraph group{generators};
    for (const auto& [a, b, m] : bonds) {
      const int s = group.require(a);
      const int t = group.require(b);
      if (group.bond(s, t) != 2) throw ParseError(0, "duplicate bond " + a + " " + b);
      group.set_bond(s, t, m);
    }
    return group;
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

inline CoxeterGraph read_coxeter_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return read_coxeter(in);
}

inline std::string format_word(const PieceAlphabet& alphabet, const std::vector<Piece>& word) {
  std::string out;
  for (Piece p : word) {
    if (!out.empty()) out += ' ';
    out += alphabet.name(p);
  }
  return out;
}

/// Serialize as pieces/edge/word lines; the word is the canonical word, so
/// re-reading yields an isomorphic heap.
inline void write_heap(std::ostream& out, const Heap& heap) {
  const PieceAlphabet& alphabet = heap.alphabet();
  out << "pieces";
  for (const auto& name : alphabet.names()) out << ' ' << name;
  out << '\n';
  for (auto [a, b] : alphabet.concurrent_pairs())
    out << "edge " << alphabet.name(a) << ' ' << alphabet.name(b) << '\n';
  out << "word";
  for (Piece p : canonical_word(heap)) out << ' ' << alphabet.name(p);
  out << '\n';
}

// Verdict report: RANKED with one rank line per element, or UNRANKED with the
// certificate walk and its signed sum.
inline std::string rank_report(const Heap& heap, const RankResult& result) {
  std::ostringstream out;
  if (const auto* assignment = std::get_if<RankAssignment>(&result)) {
    out << "RANKED\n";
    for (int e = 0; e < heap.size(); ++e)
      out << "rank " << heap.id(e) << ' ' << assignment->rank[static_cast<std::size_t>(e)] << '\n';
  } else {
    const auto& cert = std::get<UnrankedCertificate>(result);
    out << "UNRANKED\n";
    out << "walk " << heap.id(cert.start);
    for (const WalkStep& step : cert.steps)
      out << (step.up ? " up " : " down ") << heap.id(step.to);
    out << '\n';
    out << "sum " << cert.signed_sum << '\n';
  }
  return out.str();
}

inline std::string circuit_report(const std::vector<std::string>& circuit) {
  std::string out = "ERROR circuit";
  for (const auto& name : circuit) out += ' ' + name;
  out += '\n';
  return out;
}

inline std::string sset_line(const Heap& heap, const SSetReport& report) {
  std::ostringstream out;
  out << "SSET " << heap.id(report.interval.bottom) << ' ' << heap.id(report.interval.top)
      << " members";
  for (std::size_t i = 0; i < report.members.size(); ++i)
    out << ' ' << heap.id(report.members[i]) << ':'
        << heap.alphabet().name(report.labels[i]);
  out << " verdict " << to_string(report.verdict);
  return out.str();
}

// Hasse diagram in DOT: one node per element labelled "id:piece", one
// directed edge per cover, bottom to top. No rank hints are emitted (a rank
// function may not exist); layout is the renderer's business.
inline std::string to_dot(const Heap& heap) {
  std::ostringstream out;
  out << "digraph heap {\n";
  for (int e = 0; e < heap.size(); ++e)
    out << "  \"" << heap.id(e) << "\" [label=\"" << heap.id(e) << ':'
        << heap.alphabet().name(heap.label(e)) << "\"];\n";
  for (auto [x, y] : heap.covers())
    out << "  \"" << heap.id(x) << "\" -> \"" << heap.id(y) << "\";\n";
  out << "}\n";
  return out.str();
}

inline std::string census_tsv(const Census& census) {
  std::ostringstream out;
  out << "size\tcount\tranked_count\n";
  for (const auto& [size, count] : census.counts) {
    const auto ranked = census.ranked_counts.find(size);
    out << size << '\t' << count << '\t'
        << (ranked == census.ranked_counts.end() ? 0 : ranked->second) << '\n';
  }
  return out.str();
}

}  // namespace heaps
