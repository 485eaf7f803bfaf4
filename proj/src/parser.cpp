#include "soclelab/parser.hpp"

#include <cctype>

namespace soclelab {

namespace {

// expr    := ['-'|'+'] product (('+'|'-') product)*
// product := power (['*'] power)*     (implicit '*' only before ident/'(')
// power   := atom ['^' integer]
// atom    := integer | identifier | '(' expr ')'
class Parser {
 public:
  Parser(const std::string& text, const RingPresentation& ring)
      : s_(text), ring_(ring) {}

  Polynomial run() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw parse_error(msg, pos_);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    Polynomial acc = product();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+'))
        acc = acc + product();
      else if (accept('-'))
        acc = acc - product();
      else
        return acc;
    }
  }

  Polynomial product() {
    Polynomial acc = power();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * power();
      } else if (c == '(' || is_ident_start(c)) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      size_t at = pos_;
      skip_ws();
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        pos_ = at;
        fail("malformed exponent");
      }
      long e = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        e = e * 10 + (s_[pos_] - '0');
        if (e > 100000) fail("exponent too large");
        ++pos_;
      }
      return base.pow(static_cast<int>(e));
    }
    return base;
  }

  static bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  Polynomial atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string lit;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        lit += s_[pos_++];
      return Polynomial::constant(ring_.field(), ring_.nvars(),
                                  ring_.field().from_string(lit));
    }
    if (is_ident_start(c)) {
      size_t start = pos_;
      std::string name;
      while (pos_ < s_.size() && is_ident_char(s_[pos_])) name += s_[pos_++];
      int idx = ring_.var_index(name);
      if (idx < 0) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return ring_.var(idx);
    }
    fail("expected a coefficient, variable, or '('");
  }

  const std::string& s_;
  const RingPresentation& ring_;
  size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text,
                            const RingPresentation& ring) {
  return Parser(text, ring).run();
}

}  // namespace soclelab
