#include "posdiff/parser.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <memory>
#include <unordered_map>

namespace posdiff {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      message_(message),
      line_(line),
      column_(column) {}

namespace {

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

struct Node {
  enum class Kind { number, variable, negate, add, subtract, multiply, power };
  Kind kind;
  Rat value;
  std::size_t var = 0;
  unsigned exponent = 0;
  std::unique_ptr<Node> lhs;
  std::unique_ptr<Node> rhs;
};

using NodePtr = std::unique_ptr<Node>;

NodePtr make_node(Node::Kind kind, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
  auto node = std::make_unique<Node>();
  node->kind = kind;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return node;
}

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& opts) : text_(text), opts_(opts) {
    for (std::size_t i = 0; i < opts.vars.size(); ++i) {
      if (!named_.emplace(opts.vars[i], i).second) {
        throw ParseError("duplicate variable name '" + opts.vars[i] + "'", 1, 1);
      }
    }
  }

  std::vector<NodePtr> parse_top() {
    std::vector<NodePtr> coords;
    skip_space();
    if (peek() == '[') {
      advance();
      coords.push_back(parse_expr());
      while (accept(',')) coords.push_back(parse_expr());
      expect(']');
    } else {
      coords.push_back(parse_expr());
    }
    skip_space();
    if (!at_end()) fail("unexpected '" + std::string(1, peek()) + "'");
    return coords;
  }

  std::size_t nvars() const {
    return std::max({opts_.min_nvars, opts_.vars.size(), max_index_ + (used_any_ ? 1 : 0)});
  }

 private:
  NodePtr parse_expr() {
    NodePtr lhs = parse_term();
    while (true) {
      if (accept('+')) {
        lhs = make_node(Node::Kind::add, std::move(lhs), parse_term());
      } else if (accept('-')) {
        lhs = make_node(Node::Kind::subtract, std::move(lhs), parse_term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_factor();
    while (true) {
      skip_space();
      if (accept('*')) {
        lhs = make_node(Node::Kind::multiply, std::move(lhs), parse_factor());
      } else if (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '(' ||
                               peek() == '_')) {
        fail("implicit multiplication is not allowed; use '*'");
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_factor() {
    NodePtr base = parse_base();
    if (!accept('^')) return base;
    skip_space();
    const Position at = pos_;
    if (peek() == '-') fail("negative exponent", at);
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("exponent must be a natural number literal", at);
    const Nat value = read_digits();
    if (peek() == '/' || peek() == '.') fail("non-integer exponent", at);
    if (value > std::numeric_limits<unsigned>::max()) fail("exponent too large", at);
    NodePtr node = make_node(Node::Kind::power, std::move(base));
    node->exponent = static_cast<unsigned>(value.get_ui());
    return node;
  }

  NodePtr parse_base() {
    skip_space();
    const char c = peek();
    if (accept('(')) {
      NodePtr inner = parse_expr();
      expect(')');
      return inner;
    }
    if (accept('-')) return make_node(Node::Kind::negate, parse_factor());
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
    if (c == '[') fail("vector literal is only allowed at the top level");
    if (at_end()) fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  NodePtr parse_rational() {
    const Nat num = read_digits();
    Nat den = 1;
    if (peek() == '/') {
      advance();
      const Position at = pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a positive integer denominator", at);
      den = read_digits();
      if (den == 0) fail("zero denominator", at);
    }
    if (peek() == '.') fail("decimal literals are not supported; write a/b");
    NodePtr node = make_node(Node::Kind::number);
    node->value = make_rat(num, den);
    return node;
  }

  NodePtr parse_identifier() {
    const Position at = pos_;
    std::string name;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      name += peek();
      advance();
    }
    NodePtr node = make_node(Node::Kind::variable);
    node->var = resolve(name, at);
    max_index_ = used_any_ ? std::max(max_index_, node->var) : node->var;
    used_any_ = true;
    return node;
  }

  std::size_t resolve(const std::string& name, Position at) {
    if (!opts_.vars.empty()) {
      const auto it = named_.find(name);
      if (it == named_.end()) fail("unknown identifier '" + name + "'", at);
      return it->second;
    }
    if (name == "x") return 0;
    if (name.size() >= 2 && name[0] == 'x' && name[1] != '0' &&
        std::all_of(name.begin() + 1, name.end(), [](unsigned char ch) { return std::isdigit(ch); }) &&
        name.size() < 10) {
      return std::stoul(name.substr(1)) - 1;
    }
    fail("unknown identifier '" + name + "'", at);
  }

  Nat read_digits() {
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits += peek();
      advance();
    }
    return Nat(digits, 10);
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  bool accept(char c) {
    skip_space();
    if (at_end() || peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (at_end()) fail(std::string("expected '") + c + "' before end of input");
      fail(std::string("expected '") + c + "'");
    }
  }

  bool at_end() const { return offset_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[offset_]; }

  void advance() {
    if (text_[offset_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++offset_;
  }

  [[noreturn]] void fail(const std::string& message) const { fail(message, pos_); }
  [[noreturn]] void fail(const std::string& message, Position at) const {
    throw ParseError(message, at.line, at.column);
  }

  std::string_view text_;
  const ParseOptions& opts_;
  std::unordered_map<std::string, std::size_t> named_;
  std::size_t offset_ = 0;
  Position pos_;
  std::size_t max_index_ = 0;
  bool used_any_ = false;
};

ScalarPoly build(const Node& node, std::size_t nvars) {
  switch (node.kind) {
    case Node::Kind::number: return ScalarPoly::constant(nvars, node.value);
    case Node::Kind::variable: return ScalarPoly::variable(nvars, node.var);
    case Node::Kind::negate: return -build(*node.lhs, nvars);
    case Node::Kind::add: return build(*node.lhs, nvars) + build(*node.rhs, nvars);
    case Node::Kind::subtract: return build(*node.lhs, nvars) - build(*node.rhs, nvars);
    case Node::Kind::multiply: return build(*node.lhs, nvars) * build(*node.rhs, nvars);
    case Node::Kind::power: return build(*node.lhs, nvars).pow(node.exponent);
  }
  return ScalarPoly(nvars);
}

}  // namespace

VectorPoly parse(std::string_view text, const ParseOptions& opts) {
  Parser parser(text, opts);
  const auto coords = parser.parse_top();
  if (opts.codim && *opts.codim != coords.size()) {
    throw ParseError("dimension mismatch: expected " + std::to_string(*opts.codim) + " components, got " +
                         std::to_string(coords.size()),
                     1, 1);
  }
  const std::size_t nvars = parser.nvars();
  std::vector<ScalarPoly> polys;
  polys.reserve(coords.size());
  for (const auto& c : coords) polys.push_back(build(*c, nvars));
  return VectorPoly(std::move(polys));
}

std::vector<std::string> default_variable_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

std::string format(const ScalarPoly& p, std::span<const std::string> names) {
  std::vector<std::string> fallback;
  if (names.empty()) {
    fallback = default_variable_names(p.nvars());
    names = fallback;
  }
  if (names.size() < p.nvars()) throw std::invalid_argument("format: not enough variable names");
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exps, coef] : p.terms()) {
    std::string monomial;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (!monomial.empty()) monomial += '*';
      monomial += names[i];
      if (exps[i] > 1) monomial += '^' + std::to_string(exps[i]);
    }
    const bool negative = sgn(coef) < 0;
    const Rat magnitude = abs(coef);
    std::string body;
    if (monomial.empty()) {
      body = magnitude.get_str();
    } else if (magnitude == 1) {
      body = monomial;
    } else {
      body = magnitude.get_str() + "*" + monomial;
    }
    if (first) {
      out += negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

std::string format(const VectorPoly& p, std::span<const std::string> names) {
  if (p.codim() == 1) return format(p[0], names);
  std::string out = "[";
  for (std::size_t i = 0; i < p.codim(); ++i) {
    if (i) out += ", ";
    out += format(p[i], names);
  }
  return out + "]";
}

}  // namespace posdiff
