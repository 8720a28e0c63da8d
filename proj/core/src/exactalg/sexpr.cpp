#include "painleve/exactalg/sexpr.hpp"

#include <cctype>

#include "painleve/error.hpp"

namespace painleve {

namespace {

class SexprReader {
 public:
  explicit SexprReader(std::string_view s) : s_(s) {}

  RatExpr read_all() {
    RatExpr r = read();
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

  std::string_view atom() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] != '(' && s_[pos_] != ')' &&
           !std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_) fail("expected atom");
    return s_.substr(start, pos_ - start);
  }

  static bool is_number(std::string_view a) {
    std::size_t k = 0;
    if (k < a.size() && (a[k] == '-' || a[k] == '+')) ++k;
    if (k == a.size()) return false;
    bool slash = false, digit = false;
    for (; k < a.size(); ++k) {
      if (std::isdigit(static_cast<unsigned char>(a[k]))) {
        digit = true;
      } else if (a[k] == '/' && !slash && digit) {
        slash = true;
        digit = false;
      } else {
        return false;
      }
    }
    return digit;
  }

  RatExpr read_atom(std::string_view a) {
    if (is_number(a)) {
      std::string txt(a[0] == '+' ? a.substr(1) : a);
      mpq_class q;
      if (q.set_str(txt, 10) != 0) fail("bad number");
      if (q.get_den() == 0) fail("zero denominator in number");
      q.canonicalize();
      return RatExpr(Scalar(q));
    }
    if (a == "i") return RatExpr(Scalar::imag_unit());
    if (a == "sqrt2") return RatExpr(Scalar::sqrt2());
    return RatExpr::var(Var::of(a));
  }

  RatExpr read() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end");
    if (s_[pos_] == ')') fail("unexpected ')'");
    if (s_[pos_] != '(') return read_atom(atom());
    ++pos_;
    std::string_view op = atom();
    RatExpr out;
    if (op == "+") {
      while (peek_arg()) out += read();
    } else if (op == "*") {
      out = RatExpr(1);
      while (peek_arg()) out *= read();
    } else if (op == "^") {
      RatExpr base = read();
      std::string_view k = atom();
      if (!is_number(k) || k.find('/') != std::string_view::npos) fail("exponent must be an integer");
      out = base.pow(std::stoi(std::string(k)));
      if (peek_arg()) fail("(^ e k) takes two arguments");
    } else {
      fail("unknown operator '" + std::string(op) + "'");
    }
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
    ++pos_;
    return out;
  }

  bool peek_arg() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unterminated list");
    return s_[pos_] != ')';
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RatExpr parse_sexpr(std::string_view text) { return SexprReader(text).read_all(); }

Scalar parse_scalar_sexpr(std::string_view text) {
  RatExpr r = parse_sexpr(text);
  auto c = r.constant_value();
  if (!c) throw ParseError("not a constant: '" + std::string(text) + "'");
  return *c;
}

}  // namespace painleve
