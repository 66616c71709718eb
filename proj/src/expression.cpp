#include "qiquad/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include "qiquad/error.hpp"
#include "qiquad/format.hpp"

namespace qiquad {

enum class Fn { sin, cos, exp, log, sqrt, abs };

struct Expression::Node {
  enum class Kind { number, variable, negate, add, subtract, multiply, divide, power, call };

  Kind kind = Kind::number;
  double number = 0.0;
  Fn fn = Fn::sin;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

struct FnEntry {
  const char* name;
  Fn fn;
};
constexpr FnEntry fn_table[] = {{"sin", Fn::sin},   {"cos", Fn::cos},   {"exp", Fn::exp},
                                {"log", Fn::log},   {"sqrt", Fn::sqrt}, {"abs", Fn::abs}};

NodePtr leaf(double value) {
  auto n = std::make_shared<Node>();
  n->number = value;
  return n;
}

NodePtr make(Node::Kind kind, NodePtr lhs, NodePtr rhs = nullptr) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  NodePtr parse() {
    skip_space();
    auto root = expr();
    skip_space();
    if (pos_ != src_.size()) fail({"+", "-", "*", "/", "^", "end of input"});
    return root;
  }

 private:
  NodePtr expr() {
    auto lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = make(Node::Kind::add, lhs, term());
      } else if (accept('-')) {
        lhs = make(Node::Kind::subtract, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    auto lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = make(Node::Kind::multiply, lhs, unary());
      } else if (accept('/')) {
        lhs = make(Node::Kind::divide, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(Node::Kind::negate, unary());
    return power();
  }

  NodePtr power() {
    auto base = primary();
    if (accept('^')) return make(Node::Kind::power, base, unary());
    return base;
  }

  NodePtr primary() {
    skip_space();
    if (pos_ >= src_.size()) fail(operand_set());
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    if (accept('(')) {
      auto inner = expr();
      expect(')');
      return inner;
    }
    fail(operand_set());
  }

  NodePtr number() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < src_.size() && (src_[p] == '+' || src_[p] == '-')) ++p;
      if (p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]))) {
        pos_ = p;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      }
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, value);
    if (ec != std::errc() || ptr != src_.data() + pos_) {
      pos_ = start;
      fail({"number"});
    }
    return leaf(value);
  }

  NodePtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      ++pos_;
    }
    const auto name = src_.substr(start, pos_ - start);
    if (name == "x") return make(Node::Kind::variable, nullptr);

    skip_space();
    const bool is_call = pos_ < src_.size() && src_[pos_] == '(';
    for (const auto& entry : fn_table) {
      if (name == entry.name) {
        if (!is_call) fail({"("});
        ++pos_;
        auto arg = expr();
        expect(')');
        auto n = std::make_shared<Node>();
        n->kind = Node::Kind::call;
        n->fn = entry.fn;
        n->lhs = std::move(arg);
        return n;
      }
    }
    if (is_call) {
      throw Error(Errc::unknown_function, "unknown function '" + std::string(name) + "' at offset " +
                                              std::to_string(start));
    }
    pos_ = start;
    fail(operand_set());
  }

  static std::vector<std::string> operand_set() { return {"number", "x", "function", "(", "-"}; }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail({std::string(1, c)});
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string what = "syntax error at offset " + std::to_string(pos_) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) what += i + 1 == expected.size() ? " or " : ", ";
      what += "'" + expected[i] + "'";
    }
    if (pos_ < src_.size()) {
      what += ", found '" + std::string(1, src_[pos_]) + "'";
    } else {
      what += ", found end of input";
    }
    throw SyntaxError(pos_, std::move(expected), what);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

double eval(const Node& n, double x) {
  switch (n.kind) {
    case Node::Kind::number: return n.number;
    case Node::Kind::variable: return x;
    case Node::Kind::negate: return -eval(*n.lhs, x);
    case Node::Kind::add: return eval(*n.lhs, x) + eval(*n.rhs, x);
    case Node::Kind::subtract: return eval(*n.lhs, x) - eval(*n.rhs, x);
    case Node::Kind::multiply: return eval(*n.lhs, x) * eval(*n.rhs, x);
    case Node::Kind::divide: return eval(*n.lhs, x) / eval(*n.rhs, x);
    case Node::Kind::power: return std::pow(eval(*n.lhs, x), eval(*n.rhs, x));
    case Node::Kind::call: {
      const double v = eval(*n.lhs, x);
      switch (n.fn) {
        case Fn::sin: return std::sin(v);
        case Fn::cos: return std::cos(v);
        case Fn::exp: return std::exp(v);
        case Fn::log: return std::log(v);
        case Fn::sqrt: return std::sqrt(v);
        case Fn::abs: return std::abs(v);
      }
    }
  }
  return std::nan("");
}

std::string render(const Node& n) {
  switch (n.kind) {
    case Node::Kind::number: return shortest(n.number);
    case Node::Kind::variable: return "x";
    case Node::Kind::negate: return "(-" + render(*n.lhs) + ")";
    case Node::Kind::add: return "(" + render(*n.lhs) + " + " + render(*n.rhs) + ")";
    case Node::Kind::subtract: return "(" + render(*n.lhs) + " - " + render(*n.rhs) + ")";
    case Node::Kind::multiply: return "(" + render(*n.lhs) + " * " + render(*n.rhs) + ")";
    case Node::Kind::divide: return "(" + render(*n.lhs) + " / " + render(*n.rhs) + ")";
    case Node::Kind::power: return "(" + render(*n.lhs) + " ^ " + render(*n.rhs) + ")";
    case Node::Kind::call:
      for (const auto& entry : fn_table) {
        if (entry.fn == n.fn) return std::string(entry.name) + "(" + render(*n.lhs) + ")";
      }
  }
  return "?";
}

}  // namespace

Expression Expression::parse(std::string_view source) {
  if (source.find_first_not_of(" \t\r\n") == std::string_view::npos) {
    throw SyntaxError(source.size(), {"number", "x", "function", "(", "-"},
                      "syntax error: empty expression");
  }
  Parser parser(source);
  return Expression(parser.parse(), std::string(source));
}

double Expression::operator()(double x) const { return eval(*root_, x); }

std::string Expression::to_string() const { return render(*root_); }

const std::vector<std::string>& expression_functions() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : fn_table) out.emplace_back(entry.name);
    return out;
  }();
  return names;
}

}  // namespace qiquad
