#include "omegalim/parse.hpp"

#include <cctype>
#include <vector>

#include "omegalim/errors.hpp"

namespace omegalim {

namespace {

struct Token {
  enum class Kind { Number, Ident, Op, End };
  Kind kind;
  std::string text;
  std::size_t offset;
};

std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < src.size() &&
             (std::isdigit(static_cast<unsigned char>(src[i])) || src[i] == '.'))
        ++i;
      out.push_back({Token::Kind::Number, src.substr(start, i - start), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < src.size() && std::isalpha(static_cast<unsigned char>(src[i])))
        ++i;
      out.push_back({Token::Kind::Ident, src.substr(start, i - start), start});
      continue;
    }
    if (std::string("+-*/^()").find(c) != std::string::npos) {
      out.push_back({Token::Kind::Op, std::string(1, c), i});
      ++i;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", i);
  }
  out.push_back({Token::Kind::End, "", src.size()});
  return out;
}

class Parser {
public:
  Parser(const std::string& src, ParseContext context)
      : tokens_(tokenize(src)), context_(context) {}

  SeqExprPtr parse() {
    SeqExprPtr e = expr();
    if (!at_end())
      throw ParseError("unexpected trailing input '" + peek().text + "'",
                       peek().offset);
    return e;
  }

private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  const Token& advance() { return tokens_[pos_++]; }
  bool at_end() const { return peek().kind == Token::Kind::End; }
  bool is_op(const char* s, std::size_t ahead = 0) const {
    return peek(ahead).kind == Token::Kind::Op && peek(ahead).text == s;
  }
  void expect_op(const char* s) {
    if (!is_op(s))
      throw ParseError(std::string("expected '") + s + "'", peek().offset);
    advance();
  }

  const char* index_symbol() const {
    return context_ == ParseContext::Sequence ? "n" : "w";
  }
  const char* other_symbol() const {
    return context_ == ParseContext::Sequence ? "w" : "n";
  }

  SeqExprPtr expr() {
    bool neg = false;
    if (is_op("-")) {
      advance();
      neg = true;
    }
    SeqExprPtr e = term();
    if (neg) e = SeqExpr::mul(SeqExpr::constant(Scalar(-1)), e);
    while (is_op("+") || is_op("-")) {
      bool plus = peek().text == "+";
      advance();
      SeqExprPtr rhs = term();
      e = plus ? SeqExpr::add(e, rhs) : SeqExpr::sub(e, rhs);
    }
    return e;
  }

  SeqExprPtr term() {
    SeqExprPtr e = factor();
    while (is_op("*") || is_op("/")) {
      bool times = peek().text == "*";
      advance();
      SeqExprPtr rhs = factor();
      e = times ? SeqExpr::mul(e, rhs) : SeqExpr::div(e, rhs);
    }
    return e;
  }

  SeqExprPtr factor() {
    bool neg = false;
    if (is_op("-")) {
      advance();
      neg = true;
    }
    SeqExprPtr e = atom();
    if (is_op("^")) {
      advance();
      Scalar ex = exponent();
      e = SeqExpr::pow_const(e, ex);
    }
    if (neg) e = SeqExpr::mul(SeqExpr::constant(Scalar(-1)), e);
    return e;
  }

  Scalar exponent() {
    if (is_op("(")) {
      advance();
      Scalar n = signed_number();
      if (is_op("/")) {
        advance();
        Scalar d = number();
        if (d.is_zero()) throw ParseError("zero exponent denominator", peek().offset);
        n = n / d;
      }
      expect_op(")");
      return n;
    }
    return signed_number();
  }

  Scalar signed_number() {
    bool neg = false;
    if (is_op("-") || is_op("+")) {
      neg = peek().text == "-";
      advance();
    }
    Scalar v = number();
    return neg ? -v : v;
  }

  Scalar number() {
    if (peek().kind != Token::Kind::Number)
      throw ParseError("expected a number", peek().offset);
    const Token& t = advance();
    auto v = Scalar::from_literal(t.text);
    if (!v) throw ParseError("malformed number '" + t.text + "'", t.offset);
    return *v;
  }

  SeqExprPtr atom() {
    const Token& t = peek();
    if (t.kind == Token::Kind::Number) return SeqExpr::constant(number());
    if (t.kind == Token::Kind::Op && t.text == "(") {
      advance();
      SeqExprPtr e = expr();
      expect_op(")");
      return e;
    }
    if (t.kind == Token::Kind::Ident) {
      if (t.text == index_symbol()) {
        advance();
        return SeqExpr::index();
      }
      if (t.text == other_symbol())
        throw ContextError("index symbol '" + t.text +
                               "' is not valid in this context",
                           t.offset);
      if (t.text == "exp" || t.text == "ln" || t.text == "sin" ||
          t.text == "cos") {
        // Tower atoms: exp^w(w), ln^w(w); class expressions only.
        if ((t.text == "exp" || t.text == "ln") && is_op("^", 1) &&
            peek(2).kind == Token::Kind::Ident) {
          if (context_ != ParseContext::Class)
            throw ContextError("tower atoms are class expressions",
                               peek(2).offset);
          if (peek(2).text != index_symbol())
            throw ParseError("expected 'w' in tower atom", peek(2).offset);
          bool is_exp = t.text == "exp";
          advance();  // fn
          advance();  // ^
          advance();  // w
          expect_op("(");
          if (peek().kind != Token::Kind::Ident || peek().text != index_symbol())
            throw ParseError("expected 'w' in tower atom", peek().offset);
          advance();
          expect_op(")");
          return is_exp ? SeqExpr::tower_exp() : SeqExpr::tower_log();
        }
        std::string fn = advance().text;
        expect_op("(");
        SeqExprPtr inner = expr();
        expect_op(")");
        if (fn == "exp") return SeqExpr::exp(inner);
        if (fn == "ln") return SeqExpr::ln(inner);
        if (fn == "sin") return SeqExpr::sin(inner);
        return SeqExpr::cos(inner);
      }
      throw ParseError("unknown identifier '" + t.text + "'", t.offset);
    }
    throw ParseError("expected a value", t.offset);
  }

  std::vector<Token> tokens_;
  ParseContext context_;
  std::size_t pos_ = 0;
};

}  // namespace

SeqExprPtr parse_expr(const std::string& src, ParseContext context) {
  return Parser(src, context).parse();
}

InNumber parse_class_value(const std::string& src, int depth,
                           const EngineOptions& opts) {
  return limit_of(parse_expr(src, ParseContext::Class), depth, opts);
}

std::optional<Prototype> as_prototype(const InNumber& x) {
  if (x.is_zero()) return std::nullopt;
  Limit head = truncate(x, 2);
  if (head.terms().size() != 1 || !head.terms()[0].coeff().is_one())
    return std::nullopt;
  if (!in_equal(x, InNumber::from_limit(head))) return std::nullopt;
  return head.terms()[0].proto();
}

Prototype parse_prototype(const std::string& src, int depth,
                          const EngineOptions& opts) {
  auto p = as_prototype(parse_class_value(src, depth, opts));
  if (!p)
    throw UndefinedError("'" + src +
                         "' is not a prototype (one term, coefficient 1)");
  return *p;
}

}  // namespace omegalim
