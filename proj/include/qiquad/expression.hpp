#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace qiquad {

/// Parsed real expression in one variable `x`.
///
///   expr    := term   (('+' | '-') term)*
///   term    := unary  (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' unary)?
///   primary := number | 'x' | func '(' expr ')' | '(' expr ')'
///   func    := sin | cos | exp | log | sqrt | abs
///
/// '^' is right-associative and binds tighter than unary minus, so -x^2 is
/// -(x^2) and 2^-1 is 0.5.
class Expression {
 public:
  struct Node;

  static Expression parse(std::string_view source);

  double operator()(double x) const;

  const std::string& source() const { return source_; }

  /// Fully parenthesized form, handy in tests and diagnostics.
  std::string to_string() const;

 private:
  Expression(std::shared_ptr<const Node> root, std::string source)
      : root_(std::move(root)), source_(std::move(source)) {}

  std::shared_ptr<const Node> root_;
  std::string source_;
};

/// Names accepted in function-call position.
const std::vector<std::string>& expression_functions();

}  // namespace qiquad
