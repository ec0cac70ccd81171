#include "spbw/expr_parser.hpp"

#include <cctype>

namespace spbw {

namespace {

class Parser {
 public:
  Parser(const std::string& src, const ExtensionPresentation& pres) : src_(src), pres_(pres) {}

  NormalElement run() {
    NormalElement e = expr();
    skip_ws();
    if (pos_ != src_.size()) throw ExprParseError("unexpected trailing input", pos_);
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(uint8_t(src_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  NormalElement expr() {
    bool neg = eat('-');
    NormalElement acc = term();
    if (neg) acc = acc.scaled(Rational(-1));
    while (true) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  bool starts_factor() {
    char c = peek();
    return c == '(' || c == 't' || c == 'x' || std::isdigit(uint8_t(c));
  }

  NormalElement term() {
    NormalElement acc = factor();
    while (true) {
      if (eat('*')) {
        acc = multiply(pres_, acc, factor());
      } else if (starts_factor()) {
        acc = multiply(pres_, acc, factor());
      } else {
        return acc;
      }
    }
  }

  unsigned integer() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(uint8_t(src_[pos_]))) ++pos_;
    if (pos_ == start) throw ExprParseError("expected an integer", pos_);
    return unsigned(std::stoul(src_.substr(start, pos_ - start)));
  }

  NormalElement factor() {
    skip_ws();
    if (pos_ >= src_.size()) throw ExprParseError("expected a factor", pos_);
    NormalElement base = NormalElement::zero(pres_.m, pres_.n);
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      base = expr();
      if (!eat(')')) throw ExprParseError("expected ')'", pos_);
    } else if (std::isdigit(uint8_t(c))) {
      long num = long(integer());
      long den = 1;
      if (pos_ < src_.size() && src_[pos_] == '/') {
        ++pos_;
        den = long(integer());
        if (den == 0) throw ExprParseError("zero denominator", pos_);
      }
      base = NormalElement::scalar(pres_.m, pres_.n, Rational(num, den));
    } else if (c == 't') {
      ++pos_;
      int var = 0;
      if (pos_ < src_.size() && std::isdigit(uint8_t(src_[pos_]))) {
        if (pres_.m == 1)
          throw ExprParseError("one-variable base: write t", pos_);
        var = src_[pos_] - '1';
        ++pos_;
        if (var < 0 || var >= pres_.m)
          throw ExprParseError("base variable index out of range", pos_ - 1);
      } else if (pres_.m == 2) {
        throw ExprParseError("two-variable base: write t1 or t2", pos_);
      }
      base = NormalElement::base_var(pres_.m, pres_.n, var);
    } else if (c == 'x') {
      size_t at = pos_;
      ++pos_;
      unsigned idx = integer();
      if (idx < 1 || int(idx) > pres_.n)
        throw ExprParseError("unknown generator x" + std::to_string(idx), at);
      base = NormalElement::generator(pres_.m, pres_.n, int(idx) - 1);
    } else {
      throw ExprParseError(std::string("unexpected character '") + c + "'", pos_);
    }
    if (eat('^')) {
      unsigned e = integer();
      base = power(pres_, base, e);
    }
    return base;
  }

  const std::string& src_;
  const ExtensionPresentation& pres_;
  size_t pos_ = 0;
};

}  // namespace

NormalElement parse_expression(const std::string& src, const ExtensionPresentation& pres) {
  return Parser(src, pres).run();
}

}  // namespace spbw
