#include "fsing/parser.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace fsing {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty expression");
    Polynomial f = expr();
    skip_ws();
    if (pos_ != text_.size()) fail(std::string("unexpected `") + text_[pos_] + "`");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_ + 1); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t pos) const {
    throw ParseError(msg, pos + 1);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial f = term();
    for (;;) {
      if (accept('+')) {
        f += term();
      } else if (accept('-')) {
        f -= term();
      } else {
        return f;
      }
    }
  }

  Polynomial term() {
    Polynomial f = unary();
    while (accept('*')) f *= unary();
    return f;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (!accept('^')) return base;
    skip_ws();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (pos_ < text_.size() && text_[pos_] == '-') fail("exponent must be positive");
      fail("expected exponent");
    }
    std::uint64_t e = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      e = e * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (e > std::numeric_limits<std::uint32_t>::max()) fail_at("exponent too large", start);
      ++pos_;
    }
    if (e == 0) fail_at("exponent must be positive", start);
    return base.pow(e);
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial f = expr();
      if (!accept(')')) fail("expected `)`");
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t v = 0;
      const std::uint32_t p = ring_.characteristic();
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = (v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0')) % p;
        ++pos_;
      }
      reject_juxtaposition();
      return Polynomial::constant(ring_, static_cast<std::int64_t>(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_.variable_index(name);
      if (!idx) fail_at("unknown identifier `" + name + "`", start);
      reject_juxtaposition();
      return Polynomial::variable(ring_, *idx);
    }
    fail(std::string("unexpected `") + c + "`");
  }

  // "2x", "x y", "x(y)" are rejected: multiplication must be written.
  void reject_juxtaposition() {
    std::size_t save = pos_;
    skip_ws();
    if (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(') {
        fail("implicit multiplication is not allowed; use `*`");
      }
    }
    pos_ = save;
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring) {
  return Parser(text, ring).parse();
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const Ring& R = f.ring();
  std::ostringstream os;
  for (std::size_t i = 0; i < f.size(); ++i) {
    TermView t = f.term(i);
    if (i > 0) os << " + ";
    bool first = true;
    if (t.coefficient != 1) {
      os << t.coefficient;
      first = false;
    }
    for (std::size_t v = 0; v < t.exponents.size(); ++v) {
      if (t.exponents[v] == 0) continue;
      if (!first) os << '*';
      os << R.variable(v);
      if (t.exponents[v] > 1) os << '^' << t.exponents[v];
      first = false;
    }
    if (first) os << t.coefficient;
  }
  return os.str();
}

}  // namespace fsing
