#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace heaps {

namespace detail {

inline std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

}  // namespace detail

/// Base class of every error thrown by this library.
class HeapError : public std::runtime_error {
public:
  explicit HeapError(const std::string& message) : std::runtime_error(message) {}
};

class UnknownPieceError : public HeapError {
public:
  explicit UnknownPieceError(std::string piece_name)
      : HeapError("unknown piece: " + piece_name), piece(std::move(piece_name)) {}
  std::string piece;
};

class AlphabetMismatchError : public HeapError {
public:
  AlphabetMismatchError() : HeapError("operands use different piece alphabets") {}
};

// The generating relations close into a directed cycle, so no partial order exists.
class CycleDetectedError : public HeapError {
public:
  explicit CycleDetectedError(std::vector<std::string> cycle_ids)
      : HeapError("relation closure is not antisymmetric: cycle " + detail::join_tokens(cycle_ids)),
        cycle(std::move(cycle_ids)) {}
  std::vector<std::string> cycle;  // element ids once around the cycle
};

// Two elements with concurrent labels are incomparable.
class Axiom1ViolationError : public HeapError {
public:
  Axiom1ViolationError(std::string a, std::string b)
      : HeapError("concurrent labels on incomparable elements " + a + " and " + b),
        first(std::move(a)), second(std::move(b)) {}
  std::string first, second;
};

// A covering relation whose endpoint labels are not concurrent.
class Axiom2ViolationError : public HeapError {
public:
  Axiom2ViolationError(std::string lo, std::string hi)
      : HeapError("covering relation " + lo + " < " + hi + " has non-concurrent labels"),
        lower(std::move(lo)), upper(std::move(hi)) {}
  std::string lower, upper;
};

class NotComparableError : public HeapError {
public:
  NotComparableError(std::string a, std::string b)
      : HeapError("elements " + a + " and " + b + " are not ordered"),
        first(std::move(a)), second(std::move(b)) {}
  std::string first, second;
};

// The concurrency subgraph has a simple cycle of length >= 3, so the
// minimal-interval criterion must not be applied.
class CircuitError : public HeapError {
public:
  explicit CircuitError(std::vector<std::string> piece_names)
      : HeapError("concurrency subgraph contains a circuit: " + detail::join_tokens(piece_names)),
        circuit(std::move(piece_names)) {}
  std::vector<std::string> circuit;  // piece names once around the circuit
};

class NotMinimalBalancedError : public HeapError {
public:
  NotMinimalBalancedError(std::string a, std::string b)
      : HeapError("[" + a + ", " + b + "] is not a minimal balanced subinterval") {}
};

class NotFcFiniteError : public HeapError {
public:
  NotFcFiniteError() : HeapError("Coxeter group has infinitely many fully commutative elements") {}
};

class NotFcHeapError : public HeapError {
public:
  NotFcHeapError() : HeapError("heap is not the heap of a fully commutative element") {}
};

class NotAdjacentError : public HeapError {
public:
  NotAdjacentError(std::string s, std::string t)
      : HeapError("generators " + s + " and " + t + " are not adjacent") {}
};

class DegreeTooSmallError : public HeapError {
public:
  explicit DegreeTooSmallError(std::string s)
      : HeapError("generator " + s + " has degree smaller than 2") {}
};

class NoSuchLabelError : public HeapError {
public:
  explicit NoSuchLabelError(std::string piece_name)
      : HeapError("no member of the label set carries piece " + piece_name) {}
};

class NotApplicableError : public HeapError {
public:
  NotApplicableError() : HeapError("all labels equal; no unique-label witness is defined") {}
};

class BoundRequiredError : public HeapError {
public:
  BoundRequiredError()
      : HeapError("unbounded enumeration requires an FC-finite Coxeter group; pass a size bound") {}
};

class ParseError : public HeapError {
public:
  ParseError(int line_number, const std::string& message)
      : HeapError("line " + std::to_string(line_number) + ": " + message), line(line_number) {}
  int line;
};

}  // namespace heaps
