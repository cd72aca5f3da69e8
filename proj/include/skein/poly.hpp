// Dense univariate polynomials over Z in the variable s.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace skein {

struct ZPoly {
  std::vector<mpz_class> c;  // c[i] is the coefficient of s^i, no trailing zeros

  ZPoly() = default;
  explicit ZPoly(long v) {
    if (v != 0) c.push_back(mpz_class(v));
  }
  explicit ZPoly(const mpz_class& v) {
    if (v != 0) c.push_back(v);
  }
  static ZPoly monomial(const mpz_class& coef, int deg);

  bool zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }
  const mpz_class& lead() const { return c.back(); }
  bool is_one() const { return c.size() == 1 && c[0] == 1; }
  bool is_constant() const { return c.size() <= 1; }
  int valuation() const;  // lowest nonzero power, 0 for the zero poly

  void trim();
  bool operator==(const ZPoly& o) const { return c == o.c; }
  bool operator!=(const ZPoly& o) const { return c != o.c; }
  bool operator<(const ZPoly& o) const;

  ZPoly operator-() const;
  ZPoly& operator+=(const ZPoly& o);
  ZPoly& operator-=(const ZPoly& o);
  ZPoly& operator*=(const mpz_class& k);
  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator*(ZPoly a, const mpz_class& k) { return a *= k; }

  ZPoly shifted(int k) const;  // multiply by s^k, k >= 0 or exact division by s^-k
  ZPoly div_scalar(const mpz_class& k) const;  // exact
  mpz_class content() const;
  mpz_class eval(const mpz_class& x) const;

  std::string str(const std::string& var = "s") const;
};

ZPoly pow(const ZPoly& p, int e);
// Quotient when b divides a over Z, otherwise nullopt.
std::optional<ZPoly> div_exact(const ZPoly& a, const ZPoly& b);
ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b);
ZPoly primitive_part(const ZPoly& p);  // positive leading coefficient
ZPoly gcd(const ZPoly& a, const ZPoly& b);

// m-th cyclotomic polynomial, cached.
const ZPoly& cyclotomic(int m);
int euler_phi(int m);

}  // namespace skein
