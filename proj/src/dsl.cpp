#include "meanforge/dsl.hpp"

#include <cctype>
#include <charconv>
#include <optional>

#include "meanforge/error.hpp"

namespace meanforge {

// ---------------------------------------------------------------------------
// AST

struct Expr::Node {
  Kind kind = Kind::Literal;
  bool constant = true;
  Rational a;  // Literal value, or Gini r
  Rational b;  // Gini s
  MeanKind mean = MeanKind::Arithmetic;
  std::optional<DifferencePair> pair;
  std::vector<Expr> children;  // lhs, rhs for binary nodes
};

Expr::Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

namespace {

template <class Node, class Kind>
Node make_node(Kind kind, bool constant) {
  Node n;
  n.kind = kind;
  n.constant = constant;
  return n;
}

}  // namespace

Expr Expr::literal(Rational value) {
  if (value < Rational(0)) throw DomainError("literals are nonnegative; use subtraction");
  Node n = make_node<Node>(Kind::Literal, true);
  n.a = value;
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::mean(MeanKind kind) {
  Node n = make_node<Node>(Kind::Mean, false);
  n.mean = kind;
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::delta() { return Expr(std::make_shared<const Node>(make_node<Node>(Kind::Delta, false))); }
Expr Expr::hel() { return Expr(std::make_shared<const Node>(make_node<Node>(Kind::Hel, false))); }

Expr Expr::difference(DifferencePair pair) {
  Node n = make_node<Node>(Kind::Difference, false);
  n.pair = pair;
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::gini(Rational r, Rational s) {
  Node n = make_node<Node>(Kind::Gini, false);
  n.a = r;
  n.b = s;
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::binary(Kind op, Expr lhs, Expr rhs) {
  if (op != Kind::Add && op != Kind::Sub && op != Kind::Mul && op != Kind::Div) {
    throw DomainError("not a binary operator");
  }
  if (op == Kind::Mul && !lhs.is_constant() && !rhs.is_constant()) {
    throw DomainError("product of two non-constant factors is not linear");
  }
  if (op == Kind::Div) {
    if (!rhs.is_constant()) throw DomainError("divisor must be a constant");
    if (rhs.fold().is_zero()) throw DomainError("division by zero");
  }
  Node n = make_node<Node>(op, lhs.is_constant() && rhs.is_constant());
  n.children = {std::move(lhs), std::move(rhs)};
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr::Kind Expr::kind() const noexcept { return node_->kind; }

bool Expr::is_binary() const noexcept {
  const Kind k = node_->kind;
  return k == Kind::Add || k == Kind::Sub || k == Kind::Mul || k == Kind::Div;
}

bool Expr::is_constant() const noexcept { return node_->constant; }

const Rational& Expr::value() const { return node_->a; }
MeanKind Expr::mean_kind() const { return node_->mean; }
const DifferencePair& Expr::pair() const { return *node_->pair; }
const Rational& Expr::gini_r() const { return node_->a; }
const Rational& Expr::gini_s() const { return node_->b; }
const Expr& Expr::lhs() const { return node_->children.at(0); }
const Expr& Expr::rhs() const { return node_->children.at(1); }

Rational Expr::fold() const {
  switch (node_->kind) {
    case Kind::Literal: return node_->a;
    case Kind::Add: return lhs().fold() + rhs().fold();
    case Kind::Sub: return lhs().fold() - rhs().fold();
    case Kind::Mul: return lhs().fold() * rhs().fold();
    case Kind::Div: return lhs().fold() / rhs().fold();
    default: throw DomainError("expression is not constant");
  }
}

bool operator==(const Expr& x, const Expr& y) {
  const Expr::Node& a = *x.node_;
  const Expr::Node& b = *y.node_;
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::Literal: return a.a == b.a;
    case Expr::Kind::Mean: return a.mean == b.mean;
    case Expr::Kind::Delta:
    case Expr::Kind::Hel: return true;
    case Expr::Kind::Difference: return *a.pair == *b.pair;
    case Expr::Kind::Gini: return a.a == b.a && a.b == b.b;
    default:
      return a.children[0] == b.children[0] && a.children[1] == b.children[1];
  }
}

std::string_view rel_op_text(RelOp op) noexcept {
  switch (op) {
    case RelOp::LessEqual: return "<=";
    case RelOp::GreaterEqual: return ">=";
    case RelOp::Equal: return "==";
  }
  return "?";
}

Relation::Relation(std::vector<Expr> operands_, std::vector<RelOp> ops_)
    : operands(std::move(operands_)), ops(std::move(ops_)) {
  if (ops.empty() || operands.size() != ops.size() + 1) {
    throw DomainError("a relation needs n + 1 operands for n operators, n >= 1");
  }
}

Relation::Relation(Expr lhs, RelOp op, Expr rhs) : Relation({lhs, rhs}, {op}) {}

bool Relation::is_equality() const noexcept {
  for (RelOp op : ops) {
    if (op != RelOp::Equal) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok { Number, Ident, LParen, RParen, Comma, Plus, Minus, Star, Slash, Le, Ge, Eq, End };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string_view text;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  auto is_digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  auto is_alpha = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; };
  while (i < s.size()) {
    const char c = s[i];
    if (is_space(c)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (is_digit(c)) {
      while (i < s.size() && is_digit(s[i])) ++i;
      if (i + 1 < s.size() && s[i] == '.' && is_digit(s[i + 1])) {
        ++i;
        while (i < s.size() && is_digit(s[i])) ++i;
      }
      out.push_back({Tok::Number, start, s.substr(start, i - start)});
      continue;
    }
    if (is_alpha(c)) {
      while (i < s.size() && (is_alpha(s[i]) || is_digit(s[i]) || s[i] == '_')) ++i;
      out.push_back({Tok::Ident, start, s.substr(start, i - start)});
      continue;
    }
    auto two = [&](char next) { return i + 1 < s.size() && s[i + 1] == next; };
    Tok kind;
    std::size_t len = 1;
    switch (c) {
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '<':
        if (!two('=')) throw ParseError("'<' must be written '<='", start, {"'<='"});
        kind = Tok::Le;
        len = 2;
        break;
      case '>':
        if (!two('=')) throw ParseError("'>' must be written '>='", start, {"'>='"});
        kind = Tok::Ge;
        len = 2;
        break;
      case '=':
        if (!two('=')) throw ParseError("'=' must be written '=='", start, {"'=='"});
        kind = Tok::Eq;
        len = 2;
        break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    out.push_back({kind, start, s.substr(start, len)});
    i += len;
  }
  out.push_back({Tok::End, s.size(), {}});
  return out;
}

const std::vector<std::string> kFactorStart = {"number", "mean", "'Delta'", "'hel'", "'D'",
                                               "'Gini'", "'('"};
const std::vector<std::string> kRelOps = {"'<='", "'>='", "'=='"};

// ---------------------------------------------------------------------------
// Parser

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  std::variant<Relation, Expr> any() {
    Expr first = expr();
    if (!is_rel_op(peek().kind)) {
      expect_end(false);
      return first;
    }
    return chain(std::move(first));
  }

  Relation relation() {
    Expr first = expr();
    if (!is_rel_op(peek().kind)) {
      throw ParseError("expected a comparison operator", peek().offset, expected_after_expr(true));
    }
    return chain(std::move(first));
  }

  Expr expression() {
    Expr e = expr();
    expect_end(false);
    return e;
  }

 private:
  static bool is_rel_op(Tok t) { return t == Tok::Le || t == Tok::Ge || t == Tok::Eq; }

  static std::vector<std::string> expected_after_expr(bool rel) {
    std::vector<std::string> e = {"'+'", "'-'", "'*'", "'/'"};
    if (rel) e.insert(e.end(), kRelOps.begin(), kRelOps.end());
    return e;
  }

  Relation chain(Expr first) {
    std::vector<Expr> operands{std::move(first)};
    std::vector<RelOp> ops;
    while (is_rel_op(peek().kind)) {
      const Tok t = next().kind;
      ops.push_back(t == Tok::Le ? RelOp::LessEqual
                                 : t == Tok::Ge ? RelOp::GreaterEqual : RelOp::Equal);
      operands.push_back(expr());
    }
    expect_end(true);
    return Relation(std::move(operands), std::move(ops));
  }

  void expect_end(bool rel) {
    if (peek().kind == Tok::RParen) {
      throw ParseError("unbalanced ')'", peek().offset, expected_after_expr(true));
    }
    if (peek().kind != Tok::End) {
      std::vector<std::string> e = expected_after_expr(true);
      if (rel) e.push_back("end of input");
      throw ParseError("unexpected '" + std::string(peek().text) + "'", peek().offset, e);
    }
  }

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      throw ParseError(std::string("expected ") + what, peek().offset, {what});
    }
    return next();
  }

  Expr expr() {
    Expr e = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Expr::Kind op = next().kind == Tok::Plus ? Expr::Kind::Add : Expr::Kind::Sub;
      e = Expr::binary(op, std::move(e), term());
    }
    return e;
  }

  Expr term() {
    Expr e = factor();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const Token& op_tok = next();
      const Expr::Kind op = op_tok.kind == Tok::Star ? Expr::Kind::Mul : Expr::Kind::Div;
      const std::size_t at = op_tok.offset;
      Expr rhs = factor();
      try {
        e = Expr::binary(op, std::move(e), std::move(rhs));
      } catch (const DomainError& err) {
        throw ParseError(std::string("non-linear term: ") + err.what(), at);
      }
    }
    return e;
  }

  std::int64_t integer(const Token& t) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
      throw ParseError("integer literal out of range", t.offset);
    }
    return v;
  }

  static bool is_integer(const Token& t) {
    return t.kind == Tok::Number && t.text.find('.') == std::string_view::npos;
  }

  Rational number() {
    const Token& t = expect(Tok::Number, "number");
    const std::size_t dot = t.text.find('.');
    if (dot != std::string_view::npos) {
      const std::string_view frac = t.text.substr(dot + 1);
      if (frac.size() > 18) throw ParseError("too many decimal digits", t.offset);
      std::int64_t scale = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
      const Token whole{Tok::Number, t.offset, t.text.substr(0, dot)};
      const Token part{Tok::Number, t.offset + dot + 1, frac};
      try {
        return Rational(integer(whole)) + Rational(integer(part), scale);
      } catch (const DomainError&) {
        throw ParseError("decimal literal out of range", t.offset);
      }
    }
    const std::int64_t num = integer(t);
    // Greedy: "int / int" is a single literal.
    if (peek().kind == Tok::Slash && is_integer(peek(1))) {
      next();
      const Token& d = next();
      const std::int64_t den = integer(d);
      if (den == 0) throw ParseError("zero denominator", d.offset);
      return Rational(num, den);
    }
    return Rational(num);
  }

  Rational signed_number() {
    if (peek().kind == Tok::Minus) {
      next();
      return -number();
    }
    return number();
  }

  MeanKind mean_symbol() {
    const Token& t = peek();
    if (t.kind == Tok::Ident && t.text.size() == 1) {
      if (auto m = mean_from_symbol(t.text[0])) {
        next();
        return *m;
      }
    }
    throw ParseError("expected a mean symbol", t.offset, {"H", "G", "N", "A", "R", "S", "C"});
  }

  Expr factor() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: return Expr::literal(number());
      case Tok::LParen: {
        next();
        Expr e = expr();
        if (peek().kind != Tok::RParen) {
          std::vector<std::string> e_set = expected_after_expr(false);
          e_set.push_back("')'");
          throw ParseError("expected ')'", peek().offset, e_set);
        }
        next();
        return e;
      }
      case Tok::Ident: return atom();
      default:
        throw ParseError(t.kind == Tok::End ? "unexpected end of input" : "expected a factor",
                         t.offset, kFactorStart);
    }
  }

  Expr atom() {
    const Token& t = next();
    if (t.text.size() == 1) {
      if (auto m = mean_from_symbol(t.text[0])) {
        if (t.text[0] != 'D') return Expr::mean(*m);
      }
    }
    if (t.text == "Delta") return Expr::delta();
    if (t.text == "hel") return Expr::hel();
    if (t.text == "D") {
      expect(Tok::LParen, "'('");
      const std::size_t at = peek().offset;
      const MeanKind u = mean_symbol();
      expect(Tok::Comma, "','");
      const MeanKind v = mean_symbol();
      expect(Tok::RParen, "')'");
      if (!(v < u)) {
        throw ParseError("D(U,V) needs U above V in H < G < N < A < R < S < C", at);
      }
      return Expr::difference(DifferencePair(u, v));
    }
    if (t.text == "Gini") {
      expect(Tok::LParen, "'('");
      const Rational r = signed_number();
      expect(Tok::Comma, "','");
      const Rational s = signed_number();
      expect(Tok::RParen, "')'");
      return Expr::gini(r, s);
    }
    throw ParseError("unknown name '" + std::string(t.text) + "'", t.offset, kFactorStart);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Relation parse_relation(std::string_view text) { return Parser(text).relation(); }
Expr parse_expr(std::string_view text) { return Parser(text).expression(); }
std::variant<Relation, Expr> parse(std::string_view text) { return Parser(text).any(); }

// ---------------------------------------------------------------------------
// Evaluation and printing

double evaluate(const Expr& e, const PositivePair& p) {
  using K = Expr::Kind;
  switch (e.kind()) {
    case K::Literal: return e.value().to_double();
    case K::Mean: return mean(e.mean_kind(), p);
    case K::Delta: return triangular_discrimination(p);
    case K::Hel: return hellinger(p);
    case K::Difference: return difference(e.pair(), p);
    case K::Gini: return gini_mean(GiniOrder(e.gini_r().to_double(), e.gini_s().to_double()), p);
    default: break;
  }
  const double l = evaluate(e.lhs(), p);
  const double r = evaluate(e.rhs(), p);
  switch (e.kind()) {
    case K::Add: return l + r;
    case K::Sub: return l - r;
    case K::Mul: return l * r;
    default: return l / r;
  }
}

namespace {

int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 2;
    default: return 3;
  }
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

std::string pretty(const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind()) {
    case K::Literal: return e.value().str();
    case K::Mean: return std::string(1, symbol(e.mean_kind()));
    case K::Delta: return "Delta";
    case K::Hel: return "hel";
    case K::Difference:
      return std::string("D(") + symbol(e.pair().upper()) + "," + symbol(e.pair().lower()) + ")";
    case K::Gini: return "Gini(" + e.gini_r().str() + "," + e.gini_s().str() + ")";
    default: break;
  }
  const Expr& lhs = e.lhs();
  const Expr& rhs = e.rhs();
  const int prec = precedence(e.kind());
  std::string l = pretty(lhs);
  std::string r = pretty(rhs);
  if (precedence(lhs.kind()) < prec) l = "(" + l + ")";
  if (precedence(rhs.kind()) <= prec) r = "(" + r + ")";
  // "3 / 4" would read back as the single literal 3/4.
  if (e.kind() == K::Div && is_digit(l.back()) && is_digit(r.front())) l = "(" + l + ")";
  const char* op = e.kind() == K::Add ? " + " : e.kind() == K::Sub ? " - "
                   : e.kind() == K::Mul ? " * " : " / ";
  return l + op + r;
}

std::string pretty(const Relation& rel) {
  std::string out = pretty(rel.operands[0]);
  for (std::size_t i = 0; i < rel.ops.size(); ++i) {
    out += " ";
    out += rel_op_text(rel.ops[i]);
    out += " ";
    out += pretty(rel.operands[i + 1]);
  }
  return out;
}

}  // namespace meanforge
