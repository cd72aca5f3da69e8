// Rational functions in s = q^(1/2) with integer coefficients.
//
// The denominator is kept factored as c * s^k * prod Phi_m^e * rest, where the
// Phi_m are cyclotomic polynomials and rest has no cyclotomic or s factor.
// Every denominator met in practice is cyclotomic, so gcds reduce to trial
// division by a handful of Phi_m.
#pragma once

#include "skein/poly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace skein {

struct Den {
  mpz_class c = 1;                         // > 0
  int sp = 0;                              // power of s
  std::vector<std::pair<int, int>> cyc;    // (m, e), sorted by m, e > 0
  ZPoly rest = ZPoly(1);                   // primitive, positive leading coefficient

  bool is_one() const { return c == 1 && sp == 0 && cyc.empty() && rest.is_one(); }
  bool operator==(const Den& o) const {
    return sp == o.sp && c == o.c && cyc == o.cyc && rest == o.rest;
  }
  ZPoly expand() const;
};

class QField {
 public:
  QField() = default;
  QField(long v) : num_(v) {}  // NOLINT: implicit from integers is convenient
  QField(const mpz_class& v) : num_(v) {}
  static QField rational(const mpq_class& v);
  // sum_i coef[i] s^(lo + i)
  static QField laurent(const ZPoly& p, int lo);
  static QField s_pow(int k);
  static QField ratio(const ZPoly& n, const ZPoly& d);

  const ZPoly& num() const { return num_; }
  const Den& den() const { return den_; }
  ZPoly den_poly() const { return den_.expand(); }

  bool is_zero() const { return num_.zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  // constant in s, i.e. a rational number
  bool is_rational() const { return num_.is_constant() && den_.sp == 0 && den_.cyc.empty() && den_.rest.is_one(); }
  mpq_class to_rational() const;
  // c * s^k with rational c, i.e. the denominator is a monomial
  bool is_laurent() const { return den_.cyc.empty() && den_.rest.is_one(); }
  bool is_monomial() const;

  bool operator==(const QField& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const QField& o) const { return !(*this == o); }

  QField operator-() const;
  QField& operator+=(const QField& o);
  QField& operator-=(const QField& o);
  QField& operator*=(const QField& o);
  QField& operator/=(const QField& o) { return *this *= o.inverse(); }
  friend QField operator+(QField a, const QField& b) { return a += b; }
  friend QField operator-(QField a, const QField& b) { return a -= b; }
  friend QField operator*(const QField& a, const QField& b);
  friend QField operator/(const QField& a, const QField& b) { return a * b.inverse(); }

  QField inverse() const;
  QField pow(int e) const;
  // s -> s^k for k != 0
  QField subs_power(int k) const;
  // s -> v; throws std::domain_error naming the vanishing denominator factor
  QField subs(const QField& v) const;

  std::string str() const;

  // internal: assumes den canonical, cancels common factors
  static QField make(ZPoly n, Den d);

 private:
  ZPoly num_;
  Den den_;
  void reduce();
};

// quantum integer [n] = (s^n - s^-n)/(s - s^-1) and bracket {n} = s^n - s^-n
QField qint(int n);
QField qbracket(int n);
QField zed();  // s - s^-1

Den den_lcm(const Den& a, const Den& b);
ZPoly den_cofactor(const Den& L, const Den& d);  // L / d, d dividing L

// factor p = sign * c * s^k * prod Phi * rest; returns the denominator-shaped
// part and sets sign
Den factor_poly(const ZPoly& p, int& sign);

// s-Laurent rendering helpers shared with Scalar
std::string render_laurent_term(const mpz_class& coef, int spow, const std::string& tail);

}  // namespace skein
