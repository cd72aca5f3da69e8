#include "skein/parse.hpp"

#include <cctype>

namespace skein {

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;

  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("parse error at offset " + std::to_string(i) + ": " + what + " in '" + s + "'");
  }
  mpz_class integer() {
    ws();
    size_t j = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (j == i) fail("expected integer");
    return mpz_class(s.substr(j, i - j));
  }

  Scalar expr() {
    Scalar r = term();
    for (;;) {
      if (eat('+'))
        r += term();
      else if (eat('-'))
        r -= term();
      else
        return r;
    }
  }
  Scalar term() {
    Scalar r = unary();
    for (;;) {
      if (eat('*')) {
        r *= unary();
      } else if (eat('/')) {
        Scalar d = unary();
        if (d.is_zero()) fail("division by zero");
        if (d.is_constant())
          r = r * d.constant().inverse();
        else if (d.invertible())
          r *= d.inverse();
        else
          fail("division by a non-monomial in a, a1, a2, xi");
      } else {
        return r;
      }
    }
  }
  Scalar unary() {
    if (eat('-')) return -unary();
    return power();
  }
  // exponent as num/den with den in {1, 2}
  std::pair<long, long> exponent() {
    if (eat('(')) {
      bool neg = eat('-');
      long n = integer().get_si();
      long d = 1;
      if (eat('/')) d = integer().get_si();
      if (!eat(')')) fail("expected ')'");
      if (d != 1 && d != 2) fail("only integer and half-integer exponents");
      if (d == 2 && n % 2 == 0) n /= 2, d = 1;
      return {neg ? -n : n, d};
    }
    bool neg = eat('-');
    long n = integer().get_si();
    return {neg ? -n : n, 1};
  }
  Scalar power() {
    ws();
    std::string id;
    Scalar base = atom(id);
    if (!eat('^')) return base;
    auto [n, d] = exponent();
    if (d == 1) {
      if (n < 0 && !base.invertible()) fail("negative power of a non-monomial");
      return base.pow(static_cast<int>(n));
    }
    // half-integer exponent
    if (id == "a") return Scalar::mono(Mono::half(VA, static_cast<int>(n)));
    if (id == "a1") return Scalar::mono(Mono::half(VA1, static_cast<int>(n)));
    if (id == "a2") return Scalar::mono(Mono::half(VA2, static_cast<int>(n)));
    if (id == "q") return Scalar(QField::s_pow(static_cast<int>(n)));
    fail("half-integer exponent only allowed on a, a1, a2, q");
  }
  Scalar atom(std::string& id) {
    ws();
    if (i >= s.size()) fail("unexpected end");
    if (s[i] == '(') {
      ++i;
      Scalar r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(s[i]))) return Scalar(QField(integer()));
    size_t j = i;
    while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
    id = s.substr(j, i - j);
    if (id == "s") return Scalar(QField::s_pow(1));
    if (id == "q") return Scalar(QField::s_pow(2));
    if (id == "z") return Scalar(zed());
    if (id == "a") return Scalar::var(VA);
    if (id == "a1") return Scalar::var(VA1);
    if (id == "a2") return Scalar::var(VA2);
    if (id == "xi") return Scalar::var(VXI);
    i = j;
    fail("unknown symbol '" + id + "'");
  }
};

}  // namespace

Scalar parse_scalar(const std::string& text) {
  Parser p{text};
  Scalar r = p.expr();
  p.ws();
  if (p.i != text.size()) p.fail("trailing input");
  return r;
}

}  // namespace skein
