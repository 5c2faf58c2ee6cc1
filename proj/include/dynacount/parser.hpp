#ifndef DYNACOUNT_PARSER_HPP
#define DYNACOUNT_PARSER_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dynacount/program.hpp"

namespace dynacount {

struct SourceSpan {
  int line = 1;  // 1-based
  int column = 1;
};

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& msg, SourceSpan span)
      : std::runtime_error(msg + " at line " + std::to_string(span.line) +
                           ", column " + std::to_string(span.column)),
        span_(span) {}
  SourceSpan span() const { return span_; }

 private:
  SourceSpan span_;
};

class SelfLoopError : public std::runtime_error {
 public:
  SelfLoopError(const std::string& vertex, SourceSpan span)
      : std::runtime_error("self-loop on vertex '" + vertex + "' at line " +
                           std::to_string(span.line)),
        span_(span) {}
  SourceSpan span() const { return span_; }

 private:
  SourceSpan span_;
};

// Text rule format:
//   rule := head? (":-" body)? "."
//   head := atom ("|" atom)*
//   body := lit ("," lit)*
//   lit  := ["not"] atom
//   atom := lowercase identifier, optionally "(" const ("," const)* ")"
// "%" starts a comment running to end of line. A bare "." is an error.
GroundProgram parse_program(std::string_view text);

// Canonical text form; parse_program(render_program(p)) reproduces p's
// rule multiset with identical atom names.
std::string render_program(const GroundProgram& p);

// Simple undirected graph read from an edge list.
struct EdgeListGraph {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edges;  // u < v, sorted, unique

  int vertex_count() const { return static_cast<int>(names.size()); }
};

// One edge per line: two whitespace-separated vertex names. '%' comments
// and blank lines are ignored; duplicate edges collapse; self-loops throw.
EdgeListGraph parse_edge_list(std::string_view text);

}  // namespace dynacount

#endif
