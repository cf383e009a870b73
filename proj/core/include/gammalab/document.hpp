#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gammalab/error.hpp"
#include "gammalab/operation.hpp"

namespace gammalab {

/// Syntax errors, and semantic errors raised while reading a block, carry the
/// 1-based position of the offending token.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, const std::string& message, int line, int column)
      : Error(code, std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct NamedSpace {
  std::string name;
  FiniteSpace space;
};

struct NamedOperation {
  std::string name;
  std::string space;
  Operation op;
};

struct NamedMap {
  std::string name;
  std::string dom;
  std::string cod;
  std::vector<int> table;
  std::optional<std::string> gamma;
  std::optional<std::string> beta;
};

/// Spaces, operations and maps in the order they were declared.
struct Document {
  std::vector<NamedSpace> spaces;
  std::vector<NamedOperation> operations;
  std::vector<NamedMap> maps;

  const NamedSpace* find_space(std::string_view name) const;
  const NamedOperation* find_operation(std::string_view name) const;
  const NamedMap* find_map(std::string_view name) const;

  /// Lookups that throw Error(UnknownReference).
  const NamedSpace& space(std::string_view name) const;
  const NamedOperation& operation(std::string_view name) const;
  const NamedMap& map(std::string_view name) const;
};

/// Line-oriented format:
///
///   space S { points = 2  open = {} open = {0} open = {0 1} }
///   operation G on S { kind = closure }
///   operation H on S { map {} -> {} map {0} -> {0 1} map {0 1} -> {0 1} }
///   map f : S -> S { 0 -> 1  1 -> 0 ; gamma = G ; beta = H }
///
/// `#` starts a comment; `;` and `,` are optional separators.
Document parse_document(std::string_view text);

/// Canonical text: opens sorted by encoding, sets in ascending point order.
std::string render(const Document& doc);

}  // namespace gammalab
