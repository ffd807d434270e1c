#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "cpdsurf/jet.hpp"

namespace cpdsurf {

struct ExprNode;

// An immutable arithmetic expression in the chart variables x and y.
// Grammar (documented in the README):
//   expr   := term (('+'|'-') term)* ;
//   term   := factor (('*'|'/') factor)* ;
//   factor := unary ('^' factor)? ;
//   unary  := '-' unary | atom ;
//   atom   := number | ident | ident '(' expr ')' | '(' expr ')'
// Precedence: ^ > unary- > * / > + -, with ^ right-associative, so
// "-x^2" means -(x^2). Functions: sin cos tan atan asin acos exp ln sqrt
// sinh cosh tanh abs. Constants: pi, e.
class Expr {
 public:
  Expr() = default;

  static Expr parse(std::string_view src);

  // Evaluation over jets; jet(x, y) seeds the two chart variables.
  Jet2 eval(const Jet2& x, const Jet2& y) const;
  Jet2 jet(double x, double y) const {
    return eval(Jet2::var_x(x), Jet2::var_y(y));
  }
  double value(double x, double y) const;

  bool uses_x() const { return uses_x_; }
  bool uses_y() const { return uses_y_; }

  // Canonical text: minimal parentheses, literals printed with 17
  // significant digits. parse(str()) is structurally equal to *this.
  std::string str() const;

  bool equals(const Expr& other) const;
  explicit operator bool() const { return static_cast<bool>(root_); }

 private:
  Expr(std::shared_ptr<const ExprNode> root, bool ux, bool uy)
      : root_(std::move(root)), uses_x_(ux), uses_y_(uy) {}

  std::shared_ptr<const ExprNode> root_;
  bool uses_x_ = false;
  bool uses_y_ = false;
};

}  // namespace cpdsurf
