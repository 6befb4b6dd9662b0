#pragma once

#include "quiverlab/bound_quiver.hpp"
#include "quiverlab/grading.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace quiverlab {

// Parse failure with 1-based line and column positions; what() carries the
// formatted "line L, column C: message" form.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);

  int line() const { return line_; }
  int column() const { return column_; }
  // The bare message, without the position prefix.
  const std::string& detail() const { return detail_; }

 private:
  int line_ = 0;
  int column_ = 0;
  std::string detail_;
};

// A parsed .qv document: a named bound quiver plus optional per-vertex
// grading annotations.
struct QuiverDocument {
  std::string name;
  BoundQuiver bound;
  std::optional<Grading> grading;

  friend bool operator==(const QuiverDocument& a, const QuiverDocument& b);
};

// Line-oriented text format (see docs/qv-format.md):
//
//   # comment                      anywhere, to end of line
//   quiver NAME                    first statement, exactly once
//   vertex ID...                   declare vertices
//   arrow ID: SRC -> DST           declare an arrow
//   relation TERM (SIGN [P[/Q]] TERM)*
//                                  TERM = ARROW('.'ARROW)* in traversal
//                                  order; SIGN = '+' | '-'
//   grading ID=INT ...             optional; must cover every vertex
//
// Identifiers are whitespace-delimited, must not start with '+' or '-' and
// must not contain '#', ':', '.', '>', or '='. Declarations must precede
// use. Relations are stored merged, term-ordered, and scaled to a leading
// coefficient of one, so parse(serialize(doc)) == doc.
QuiverDocument parse_quiver_document(std::string_view text);

// Canonical text form of a document; the round trip through
// parse_quiver_document is the identity.
std::string serialize(const QuiverDocument& doc);

}  // namespace quiverlab
