#pragma once

// Small recursive-descent parser for arithmetic expressions over +, -, *, /,
// ^ (integer exponents), parentheses, integer literals and identifiers.  The
// value type and the meaning of identifiers are supplied by `Ops`.

#include <cctype>
#include <string>
#include <string_view>

#include "binom/exact_arith.hpp"

namespace binom::detail {

struct SourcePos {
  int line = 1;
  int column = 1;
};

template <class Ops>
class ExprParser {
 public:
  using Value = typename Ops::Value;

  ExprParser(std::string_view text, Ops& ops, SourcePos origin = {})
      : text_(text), ops_(ops), origin_(origin) {}

  Value parse_all() {
    Value v = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

  // Parses one expression and stops at the first character that cannot
  // continue it (used for comma separated lists).
  Value parse_one() { return parse_sum(); }
  size_t position() const { return pos_; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  SourcePos where(size_t at) const {
    SourcePos p = origin_;
    for (size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++p.line;
        p.column = 1;
      } else {
        ++p.column;
      }
    }
    return p;
  }
  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, size_t at) const {
    SourcePos p = where(at);
    throw SyntaxError(msg, p.line, p.column);
  }

 private:
  Value parse_sum() {
    skip_ws();
    Value acc = parse_product();
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size()) break;
      char c = text_[pos_];
      if (c != '+' && c != '-') break;
      ++pos_;
      Value rhs = parse_product();
      acc = c == '+' ? ops_.add(std::move(acc), std::move(rhs)) : ops_.sub(std::move(acc), std::move(rhs));
    }
    return acc;
  }

  Value parse_product() {
    Value acc = parse_unary();
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size()) break;
      char c = text_[pos_];
      if (c != '*' && c != '/') break;
      size_t at = pos_++;
      Value rhs = parse_unary();
      acc = c == '*' ? ops_.mul(std::move(acc), std::move(rhs))
                     : ops_.div(std::move(acc), std::move(rhs), [&](const std::string& m) { fail_at(m, at); });
    }
    return acc;
  }

  Value parse_unary() {
    skip_ws();
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      char c = text_[pos_++];
      Value v = parse_unary();
      return c == '-' ? ops_.neg(std::move(v)) : v;
    }
    return parse_power();
  }

  Value parse_power() {
    Value base = parse_atom();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      size_t at = pos_++;
      skip_ws();
      bool negative = false;
      if (pos_ < text_.size() && text_[pos_] == '-') {
        negative = true;
        ++pos_;
        skip_ws();
      }
      bool paren = accept('(');
      if (paren && pos_ < text_.size() && text_[pos_] == '-') {
        negative = !negative;
        ++pos_;
      }
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      if (pos_ - start > 9) fail_at("exponent too large", start);
      long e = std::stol(std::string(text_.substr(start, pos_ - start)));
      if (paren && !accept(')')) fail("expected ')'");
      if (negative) e = -e;
      return ops_.pow(std::move(base), e, [&](const std::string& m) { fail_at(m, at); });
    }
    return base;
  }

  Value parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = parse_sum();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return ops_.number(BigInt(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      return ops_.ident(name, [&](const std::string& m) { fail_at(m, start); });
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  size_t pos_ = 0;
  Ops& ops_;
  SourcePos origin_;
};

}  // namespace binom::detail
