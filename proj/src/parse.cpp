#include "yang/parse.hpp"

#include <cctype>
#include <string>

#include "yang/errors.hpp"

namespace yang {

namespace {

class Parser {
public:
  Parser(std::string_view text, std::optional<unsigned> max_t)
      : text_(text), max_t_(max_t) {}

  Poly parse() {
    Poly p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

private:
  // expression := ['+'|'-'] term (('+'|'-') term)*
  Poly expression() {
    skip_space();
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = (take() == '-');
    Poly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_space();
      const char ch = peek();
      if (ch != '+' && ch != '-') return acc;
      take();
      Poly rhs = term();
      if (ch == '+')
        acc += rhs;
      else
        acc -= rhs;
    }
  }

  // term := factor ('*' factor)*  ; a leading '-' is allowed after '*'
  Poly term() {
    Poly acc = factor();
    for (;;) {
      skip_space();
      if (peek() != '*') return acc;
      take();
      acc *= factor();
    }
  }

  // factor := primary ('^' integer)?
  Poly factor() {
    skip_space();
    if (peek() == '-') {
      take();
      return -factor();
    }
    Poly base = primary();
    skip_space();
    if (peek() == '^') {
      take();
      skip_space();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(integer().get_ui()));
    }
    return base;
  }

  Poly primary() {
    skip_space();
    const char ch = peek();
    if (ch == '(') {
      take();
      Poly p = expression();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      take();
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      mpz_class num = integer();
      mpz_class den = 1;
      if (peek() == '/') {
        take();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
        den = integer();
        if (den == 0) fail("zero denominator");
      }
      Scalar s(num, den);
      s.canonicalize();
      return Poly(s);
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::string name;
      while (std::isalnum(static_cast<unsigned char>(peek()))) name += take();
      static const std::string allowed = "hqzca";
      auto var = Var::from_name(name);
      const bool grammar_name =
          var && (var->is_t() || (name.size() == 1 && allowed.find(name[0]) != std::string::npos));
      if (!grammar_name) throw UnknownVariable(name);
      if (var->is_t() && max_t_ && var->t_index() > *max_t_) throw UnknownVariable(name);
      return Poly(*var);
    }
    fail(ch == '\0' ? "unexpected end of input" : "unexpected character");
  }

  mpz_class integer() {
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits += take();
    return mpz_class(digits);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char take() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::string_view text_;
  std::optional<unsigned> max_t_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, std::optional<unsigned> max_t) {
  return Parser(text, max_t).parse();
}

}  // namespace yang
