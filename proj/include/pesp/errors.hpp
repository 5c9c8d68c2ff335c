#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pesp {

// Base of every error raised by the library. The CLI maps these to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DisconnectedGraph : public Error {
 public:
  DisconnectedGraph() : Error("graph is not connected") {}
};

class NotASpanningTree : public Error {
 public:
  explicit NotASpanningTree(const std::string& why)
      : Error("arc set is not a spanning tree: " + why) {}
};

class EnumerationCapExceeded : public Error {
 public:
  EnumerationCapExceeded(const std::string& what, std::size_t cap)
      : Error(what + " exceeds the configured cap of " + std::to_string(cap)),
        cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class InvalidBounds : public Error {
 public:
  InvalidBounds(std::size_t arc, const std::string& msg)
      : Error("arc " + std::to_string(arc) + ": " + msg), arc_(arc) {}
  std::size_t arc() const { return arc_; }

 private:
  std::size_t arc_;
};

class InfeasibleFixedCycle : public Error {
 public:
  explicit InfeasibleFixedCycle(std::size_t arc)
      : Error("fixed arcs close an inconsistent cycle at arc " +
              std::to_string(arc)),
        arc_(arc) {}
  std::size_t arc() const { return arc_; }

 private:
  std::size_t arc_;
};

class EmptyPolytrope : public Error {
 public:
  EmptyPolytrope() : Error("polytrope is empty") {}
};

class NotATension : public Error {
 public:
  explicit NotATension(std::size_t arc)
      : Error("vector is not a periodic tension (violated at arc " +
              std::to_string(arc) + ")"),
        arc_(arc) {}
  std::size_t arc() const { return arc_; }

 private:
  std::size_t arc_;
};

class FixedArcPresent : public Error {
 public:
  explicit FixedArcPresent(std::size_t arc)
      : Error("arc " + std::to_string(arc) +
              " has zero span; contract fixed arcs first"),
        arc_(arc) {}
  std::size_t arc() const { return arc_; }

 private:
  std::size_t arc_;
};

class NonIntegralBasis : public Error {
 public:
  NonIntegralBasis() : Error("cycle basis is not integral") {}
};

class RetriesExhausted : public Error {
 public:
  explicit RetriesExhausted(std::size_t tries)
      : Error("no feasible start found after " + std::to_string(tries) +
              " randomized attempts (heuristic failure, not a proof of "
              "infeasibility)") {}
};

class UnsupportedDimension : public Error {
 public:
  explicit UnsupportedDimension(const std::string& msg) : Error(msg) {}
};

class CrosscheckMismatch : public Error {
 public:
  explicit CrosscheckMismatch(const std::string& dump)
      : Error("oracle mismatch\n" + dump) {}
};

}  // namespace pesp
