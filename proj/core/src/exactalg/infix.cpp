#include "painleve/exactalg/infix.hpp"

#include <cctype>
#include <string>

#include "painleve/error.hpp"

namespace painleve {

namespace {

// expr   := term (('+'|'-') term)*
// term   := unary (('*'|'/') unary)*
// unary  := '-' unary | power
// power  := atom ('^' ['-'] int)?
class InfixReader {
 public:
  explicit InfixReader(std::string_view s) : s_(s) {}

  RatExpr read_all() {
    RatExpr r = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatExpr expr() {
    RatExpr r = term();
    while (true) {
      if (eat('+')) {
        r += term();
      } else if (eat('-')) {
        r -= term();
      } else {
        return r;
      }
    }
  }

  RatExpr term() {
    RatExpr r = unary();
    while (true) {
      if (eat('*')) {
        r *= unary();
      } else if (eat('/')) {
        RatExpr d = unary();
        if (d.is_zero()) fail("division by zero");
        r /= d;
      } else {
        return r;
      }
    }
  }

  RatExpr unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  long integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  RatExpr power() {
    RatExpr base = atom();
    if (!eat('^')) return base;
    bool neg = false;
    bool paren = eat('(');
    if (eat('-')) neg = true;
    long k = integer();
    if (paren && !eat(')')) fail("expected ')' after exponent");
    return base.pow(static_cast<int>(neg ? -k : k));
  }

  RatExpr atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RatExpr r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpq_class q(std::string(s_.substr(start, pos_ - start)), 10);
      return RatExpr(Scalar(q));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      if (name == "i") return RatExpr(Scalar::imag_unit());
      if (name == "sqrt2") return RatExpr(Scalar::sqrt2());
      return RatExpr::var(Var::of(name));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RatExpr parse_infix(std::string_view text) { return InfixReader(text).read_all(); }

}  // namespace painleve
