#include "cpdsurf/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <utility>
#include <vector>

namespace cpdsurf {

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) out += i + 1 == expected.size() ? " or " : ", ";
    out += expected[i];
  }
  return out;
}

std::string parse_message(std::size_t offset,
                          const std::vector<std::string>& expected,
                          const std::string& detail) {
  std::ostringstream os;
  os << "syntax error at offset " << offset << ": " << detail;
  if (!expected.empty()) os << " (expected " << join_expected(expected) << ")";
  return os.str();
}

std::string domain_message(const std::string& what_failed, double argument) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", argument);
  return what_failed + " (argument " + buf + ")";
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected,
                       const std::string& detail)
    : Error(parse_message(offset, expected, detail)),
      offset_(offset),
      expected_(std::move(expected)) {}

DomainError::DomainError(const std::string& what_failed, double argument)
    : Error(domain_message(what_failed, argument)), argument_(argument) {}

enum class NodeKind { Number, Var, Named, Neg, Add, Sub, Mul, Div, Pow, Call };

enum class Fn1 { Sin, Cos, Tan, Atan, Asin, Acos, Exp, Ln, Sqrt, Sinh, Cosh, Tanh, Abs };

struct ExprNode {
  NodeKind kind;
  double number = 0.0;  // Number
  int which = 0;        // Var: 0=x 1=y; Named: 0=pi 1=e
  Fn1 fn = Fn1::Sin;    // Call
  std::shared_ptr<const ExprNode> a, b;
};

namespace {

using NodePtr = std::shared_ptr<const ExprNode>;

NodePtr make_number(double v) {
  auto n = std::make_shared<ExprNode>();
  n->kind = NodeKind::Number;
  n->number = v;
  return n;
}
NodePtr make_leaf(NodeKind k, int which) {
  auto n = std::make_shared<ExprNode>();
  n->kind = k;
  n->which = which;
  return n;
}
NodePtr make_unary(NodeKind k, NodePtr a) {
  auto n = std::make_shared<ExprNode>();
  n->kind = k;
  n->a = std::move(a);
  return n;
}
NodePtr make_binary(NodeKind k, NodePtr a, NodePtr b) {
  auto n = std::make_shared<ExprNode>();
  n->kind = k;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}
NodePtr make_call(Fn1 fn, NodePtr a) {
  auto n = std::make_shared<ExprNode>();
  n->kind = NodeKind::Call;
  n->fn = fn;
  n->a = std::move(a);
  return n;
}

struct FnName {
  const char* name;
  Fn1 fn;
};
constexpr FnName kFunctions[] = {
    {"sin", Fn1::Sin},   {"cos", Fn1::Cos},   {"tan", Fn1::Tan},
    {"atan", Fn1::Atan}, {"asin", Fn1::Asin}, {"acos", Fn1::Acos},
    {"exp", Fn1::Exp},   {"ln", Fn1::Ln},     {"sqrt", Fn1::Sqrt},
    {"sinh", Fn1::Sinh}, {"cosh", Fn1::Cosh}, {"tanh", Fn1::Tanh},
    {"abs", Fn1::Abs},
};

const char* fn_name(Fn1 fn) {
  for (const auto& f : kFunctions)
    if (f.fn == fn) return f.name;
  return "?";
}

enum class TokKind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  TokKind kind;
  std::size_t offset;
  double number = 0.0;
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    tok_.offset = pos_;
    tok_.text.clear();
    if (pos_ >= src_.size()) {
      tok_.kind = TokKind::End;
      return;
    }
    const char c = src_[pos_];
    switch (c) {
      case '+': tok_.kind = TokKind::Plus; ++pos_; return;
      case '-': tok_.kind = TokKind::Minus; ++pos_; return;
      case '*': tok_.kind = TokKind::Star; ++pos_; return;
      case '/': tok_.kind = TokKind::Slash; ++pos_; return;
      case '^': tok_.kind = TokKind::Caret; ++pos_; return;
      case '(': tok_.kind = TokKind::LParen; ++pos_; return;
      case ')': tok_.kind = TokKind::RParen; ++pos_; return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && pos_ + 1 < src_.size() &&
         std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
      lex_number();
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_'))
        ++pos_;
      tok_.kind = TokKind::Ident;
      tok_.text.assign(src_.substr(start, pos_ - start));
      return;
    }
    throw ParseError(pos_, {}, std::string("unexpected character '") + c + "'");
  }

  void lex_number() {
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_])))
        ++pos_;
    }
    // Exponent only when digits follow; otherwise the 'e' is an identifier.
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < src_.size() && (src_[p] == '+' || src_[p] == '-')) ++p;
      if (p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]))) {
        ++p;
        while (p < src_.size() &&
               std::isdigit(static_cast<unsigned char>(src_[p])))
          ++p;
        pos_ = p;
      }
    }
    const std::string piece(src_.substr(start, pos_ - start));
    tok_.kind = TokKind::Number;
    tok_.number = std::strtod(piece.c_str(), nullptr);
    if (!std::isfinite(tok_.number))
      throw ParseError(start, {}, "number literal out of range");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token tok_{};
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) {}

  NodePtr parse() {
    NodePtr e = parse_expr();
    const Token& t = lex_.peek();
    if (t.kind != TokKind::End)
      throw ParseError(t.offset, {"operator", "end of input"},
                       "unexpected " + describe(t));
    return e;
  }

 private:
  static std::string describe(const Token& t) {
    switch (t.kind) {
      case TokKind::Number: return "number";
      case TokKind::Ident: return "identifier '" + t.text + "'";
      case TokKind::Plus: return "'+'";
      case TokKind::Minus: return "'-'";
      case TokKind::Star: return "'*'";
      case TokKind::Slash: return "'/'";
      case TokKind::Caret: return "'^'";
      case TokKind::LParen: return "'('";
      case TokKind::RParen: return "')'";
      case TokKind::End: return "end of input";
    }
    return "token";
  }

  NodePtr parse_expr() {
    NodePtr lhs = parse_term();
    for (;;) {
      const TokKind k = lex_.peek().kind;
      if (k != TokKind::Plus && k != TokKind::Minus) return lhs;
      lex_.take();
      NodePtr rhs = parse_term();
      lhs = make_binary(k == TokKind::Plus ? NodeKind::Add : NodeKind::Sub,
                        std::move(lhs), std::move(rhs));
    }
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_factor();
    for (;;) {
      const TokKind k = lex_.peek().kind;
      if (k != TokKind::Star && k != TokKind::Slash) return lhs;
      lex_.take();
      NodePtr rhs = parse_factor();
      lhs = make_binary(k == TokKind::Star ? NodeKind::Mul : NodeKind::Div,
                        std::move(lhs), std::move(rhs));
    }
  }

  // '^' binds tighter than unary minus, so "-x^2" is -(x^2).
  NodePtr parse_factor() {
    if (lex_.peek().kind == TokKind::Minus) {
      lex_.take();
      return make_unary(NodeKind::Neg, parse_factor());
    }
    NodePtr base = parse_atom();
    if (lex_.peek().kind == TokKind::Caret) {
      lex_.take();
      return make_binary(NodeKind::Pow, std::move(base), parse_factor());
    }
    return base;
  }

  NodePtr parse_atom() {
    Token t = lex_.take();
    switch (t.kind) {
      case TokKind::Number:
        return make_number(t.number);
      case TokKind::LParen: {
        NodePtr inner = parse_expr();
        const Token& close = lex_.peek();
        if (close.kind != TokKind::RParen)
          throw ParseError(close.offset, {"')'"},
                           "unexpected " + describe(close));
        lex_.take();
        return inner;
      }
      case TokKind::Ident: {
        if (lex_.peek().kind == TokKind::LParen) {
          for (const auto& f : kFunctions) {
            if (t.text == f.name) {
              lex_.take();  // '('
              NodePtr arg = parse_expr();
              const Token& close = lex_.peek();
              if (close.kind != TokKind::RParen)
                throw ParseError(close.offset, {"')'"},
                                 "unexpected " + describe(close));
              lex_.take();
              return make_call(f.fn, std::move(arg));
            }
          }
          throw ParseError(t.offset, {"function name"},
                           "unknown function '" + t.text + "'");
        }
        if (t.text == "x") return make_leaf(NodeKind::Var, 0);
        if (t.text == "y") return make_leaf(NodeKind::Var, 1);
        if (t.text == "pi") return make_leaf(NodeKind::Named, 0);
        if (t.text == "e") return make_leaf(NodeKind::Named, 1);
        throw ParseError(t.offset, {"'x'", "'y'", "'pi'", "'e'"},
                         "unknown identifier '" + t.text + "'");
      }
      default:
        throw ParseError(t.offset, {"number", "identifier", "'('", "'-'"},
                         "unexpected " + describe(t));
    }
  }

  Lexer lex_;
};

Jet2 eval_node(const ExprNode& n, const Jet2& x, const Jet2& y) {
  switch (n.kind) {
    case NodeKind::Number: return Jet2::constant(n.number);
    case NodeKind::Var: return n.which == 0 ? x : y;
    case NodeKind::Named:
      return Jet2::constant(n.which == 0 ? std::numbers::pi : std::numbers::e);
    case NodeKind::Neg: return -eval_node(*n.a, x, y);
    case NodeKind::Add: return eval_node(*n.a, x, y) + eval_node(*n.b, x, y);
    case NodeKind::Sub: return eval_node(*n.a, x, y) - eval_node(*n.b, x, y);
    case NodeKind::Mul: return eval_node(*n.a, x, y) * eval_node(*n.b, x, y);
    case NodeKind::Div: return eval_node(*n.a, x, y) / eval_node(*n.b, x, y);
    case NodeKind::Pow:
      return pow(eval_node(*n.a, x, y), eval_node(*n.b, x, y));
    case NodeKind::Call: {
      Jet2 a = eval_node(*n.a, x, y);
      switch (n.fn) {
        case Fn1::Sin: return sin(a);
        case Fn1::Cos: return cos(a);
        case Fn1::Tan: return tan(a);
        case Fn1::Atan: return atan(a);
        case Fn1::Asin: return asin(a);
        case Fn1::Acos: return acos(a);
        case Fn1::Exp: return exp(a);
        case Fn1::Ln: return log(a);
        case Fn1::Sqrt: return sqrt(a);
        case Fn1::Sinh: return sinh(a);
        case Fn1::Cosh: return cosh(a);
        case Fn1::Tanh: return tanh(a);
        case Fn1::Abs: return abs(a);
      }
      break;
    }
  }
  throw Error("corrupt expression tree");
}

void scan_vars(const ExprNode& n, bool& ux, bool& uy) {
  if (n.kind == NodeKind::Var) (n.which == 0 ? ux : uy) = true;
  if (n.a) scan_vars(*n.a, ux, uy);
  if (n.b) scan_vars(*n.b, ux, uy);
}

bool nodes_equal(const ExprNode& a, const ExprNode& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case NodeKind::Number: return a.number == b.number;
    case NodeKind::Var:
    case NodeKind::Named: return a.which == b.which;
    case NodeKind::Call:
      if (a.fn != b.fn) return false;
      return nodes_equal(*a.a, *b.a);
    case NodeKind::Neg: return nodes_equal(*a.a, *b.a);
    default: return nodes_equal(*a.a, *b.a) && nodes_equal(*a.b, *b.b);
  }
}

// Precedence levels for printing: + - (1), * / (2), unary - (3), ^ (4).
int node_level(const ExprNode& n) {
  switch (n.kind) {
    case NodeKind::Add:
    case NodeKind::Sub: return 1;
    case NodeKind::Mul:
    case NodeKind::Div: return 2;
    case NodeKind::Neg: return 3;
    case NodeKind::Pow: return 4;
    default: return 5;
  }
}

void print_node(const ExprNode& n, int context, std::string& out) {
  const int level = node_level(n);
  const bool parens = level < context;
  if (parens) out += '(';
  switch (n.kind) {
    case NodeKind::Number: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", n.number);
      out += buf;
      break;
    }
    case NodeKind::Var: out += n.which == 0 ? 'x' : 'y'; break;
    case NodeKind::Named: out += n.which == 0 ? "pi" : "e"; break;
    case NodeKind::Neg:
      out += '-';
      print_node(*n.a, 3, out);
      break;
    case NodeKind::Add:
      print_node(*n.a, 1, out);
      out += '+';
      print_node(*n.b, 2, out);
      break;
    case NodeKind::Sub:
      print_node(*n.a, 1, out);
      out += '-';
      print_node(*n.b, 2, out);
      break;
    case NodeKind::Mul:
      print_node(*n.a, 2, out);
      out += '*';
      print_node(*n.b, 3, out);
      break;
    case NodeKind::Div:
      print_node(*n.a, 2, out);
      out += '/';
      print_node(*n.b, 3, out);
      break;
    case NodeKind::Pow:
      print_node(*n.a, 5, out);
      out += '^';
      print_node(*n.b, 4, out);
      break;
    case NodeKind::Call:
      out += fn_name(n.fn);
      out += '(';
      print_node(*n.a, 0, out);
      out += ')';
      break;
  }
  if (parens) out += ')';
}

}  // namespace

Expr Expr::parse(std::string_view src) {
  Parser p(src);
  NodePtr root = p.parse();
  bool ux = false, uy = false;
  scan_vars(*root, ux, uy);
  return Expr(std::move(root), ux, uy);
}

Jet2 Expr::eval(const Jet2& x, const Jet2& y) const {
  if (!root_) throw Error("evaluating an empty expression");
  return eval_node(*root_, x, y);
}

double Expr::value(double x, double y) const {
  return eval(Jet2::constant(x), Jet2::constant(y)).val;
}

std::string Expr::str() const {
  if (!root_) return {};
  std::string out;
  print_node(*root_, 0, out);
  return out;
}

bool Expr::equals(const Expr& other) const {
  if (!root_ || !other.root_) return root_ == other.root_;
  return nodes_equal(*root_, *other.root_);
}

}  // namespace cpdsurf
