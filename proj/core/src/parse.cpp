#include "ctc/parse.hpp"

#include <cctype>

namespace ctc {

namespace {

class Parser {
 public:
  Parser(std::string_view text, RosterPtr roster)
      : text_(text), roster_(std::move(roster)) {}

  Polynomial run() {
    Polynomial p = parse_expr();
    skip_space();
    if (pos_ != text_.size()) {
      throw ParseError("unexpected trailing input", pos_);
    }
    return p;
  }

 private:
  std::string_view text_;
  RosterPtr roster_;
  std::size_t pos_ = 0;

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial parse_expr() {
    Polynomial acc = parse_term();
    for (;;) {
      if (consume('+')) {
        acc = acc + parse_term();
      } else if (consume('-')) {
        acc = acc - parse_term();
      } else {
        return acc;
      }
    }
  }

  Polynomial parse_term() {
    Polynomial acc = parse_factor();
    while (consume('*')) acc = acc * parse_factor();
    return acc;
  }

  Polynomial parse_factor() {
    if (consume('-')) return -parse_factor();
    if (consume('+')) return parse_factor();
    Polynomial base = parse_primary();
    if (consume('^')) {
      skip_space();
      std::size_t at = pos_;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
        throw ParseError("exponent must be a non-negative integer", at);
      }
      Rational e = parse_literal("exponent");
      if (e.get_den() != 1 || e < 0) {
        throw ParseError("exponent must be a non-negative integer", at);
      }
      if (!e.get_num().fits_sint_p()) {
        throw ParseError("exponent too large", at);
      }
      return pow(base, static_cast<int>(e.get_num().get_si()), nullptr);
    }
    return base;
  }

  Polynomial parse_primary() {
    skip_space();
    if (pos_ == text_.size()) {
      throw ParseError("unexpected end of input", pos_);
    }
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = parse_expr();
      if (!consume(')')) {
        throw ParseError("expected ')'", pos_);
      }
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Polynomial::constant(roster_, parse_literal("literal"));
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t start = pos_;
      ++pos_;
      while (pos_ < text_.size()) {
        char d = text_[pos_];
        if ((d >= 'a' && d <= 'z') || (d >= '0' && d <= '9')) {
          ++pos_;
        } else {
          break;
        }
      }
      std::string name(text_.substr(start, pos_ - start));
      auto idx = roster_->index(name);
      if (!idx) {
        throw ParseError("unknown variable '" + name + "'", start);
      }
      return Polynomial::variable(roster_, *idx);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  // integer or fraction p/q
  Rational parse_literal(const char* what) {
    skip_space();
    std::size_t start = pos_;
    std::string digits = parse_digits(what);
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      std::string den = parse_digits("denominator");
      mpz_class d(den);
      if (d == 0) {
        throw ParseError("zero denominator", start);
      }
      Rational r(mpz_class(digits), d);
      r.canonicalize();
      return r;
    }
    return Rational(mpz_class(digits));
  }

  std::string parse_digits(const char* what) {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == start) {
      throw ParseError(std::string("expected ") + what, start);
    }
    return std::string(text_.substr(start, pos_ - start));
  }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, RosterPtr roster) {
  return Parser(text, std::move(roster)).run();
}

}  // namespace ctc
