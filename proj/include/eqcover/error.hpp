#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace eqcover {

// Base of every error raised by the library. Callers that only need to
// distinguish "bad input" from a library bug catch this and std::logic_error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. `line` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// An object paired with a graph of a different shape (vertex or edge count).
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A vertex map that is not a graph homomorphism.
class HomomorphismError : public Error {
 public:
  HomomorphismError(int u, int v, const std::string& reason)
      : Error("not a homomorphism at edge (" + std::to_string(u) + "," + std::to_string(v) + "): " + reason),
        u_(u),
        v_(v) {}
  int u() const noexcept { return u_; }
  int v() const noexcept { return v_; }

 private:
  int u_, v_;
};

class TriangleError : public Error {
 public:
  TriangleError(int a, int b, int c)
      : Error("graph has a triangle (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")"),
        triple_{a, b, c} {}
  const std::vector<int>& triple() const noexcept { return triple_; }

 private:
  std::vector<int> triple_;
};

class NotBipartiteError : public Error {
 public:
  explicit NotBipartiteError(std::vector<int> cycle) : Error(describe(cycle)), cycle_(std::move(cycle)) {}
  // Odd cycle as a closed vertex walk without the repeated start vertex.
  const std::vector<int>& cycle() const noexcept { return cycle_; }

 private:
  static std::string describe(const std::vector<int>& cycle) {
    std::string s = "graph is not bipartite, odd cycle (";
    for (std::size_t i = 0; i < cycle.size(); ++i) s += (i ? "," : "") + std::to_string(cycle[i]);
    return s + ")";
  }
  std::vector<int> cycle_;
};

class ImproperColoringError : public Error {
 public:
  ImproperColoringError(int u, int v)
      : Error("coloring is not proper at edge (" + std::to_string(u) + "," + std::to_string(v) + ")"),
        u_(u),
        v_(v) {}
  int u() const noexcept { return u_; }
  int v() const noexcept { return v_; }

 private:
  int u_, v_;
};

// Input outside the supported domain of an operation (e.g. k < 3 for the
// orientation-cover coloring extractor).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// A cover that cannot come from a genuine equivalence subgraph of a line graph.
class StructuralError : public Error {
 public:
  using Error::Error;
};

}  // namespace eqcover
