// gl(1) specialisation: quantum torus y x = q x y and Pochhammer dilogarithms.
#pragma once

#include "skein/torus.hpp"

#include <map>
#include <random>
#include <utility>
#include <vector>

namespace skein {

// sum c_ij y^i x^j in y-before-x order
struct QTElement {
  Cone cone;
  int N = 0;
  std::map<std::pair<int, int>, QField> c;

  QTElement() = default;
  QTElement(Cone k, int n) : cone(k), N(n) {}
  static QTElement unit(Cone k, int n);
  static QTElement mono(int i, int j, Cone k, int n, const QField& v = QField(1));

  void add(int i, int j, const QField& v);  // drops weight > N
  QField at(int i, int j) const;
  bool is_zero() const { return c.empty(); }
  QTElement degree_part(int w) const;
  QTElement& operator+=(const QTElement& o);
  QTElement& operator-=(const QTElement& o);
  friend QTElement operator+(QTElement a, const QTElement& b) { return a += b; }
  friend QTElement operator-(QTElement a, const QTElement& b) { return a -= b; }
  QTElement operator*(const QField& k) const;
  bool operator==(const QTElement& o) const { return c == o.c; }
  bool operator!=(const QTElement& o) const { return !(*this == o); }
  std::string str() const;
};

QTElement qt_multiply(const QTElement& x, const QTElement& y);
QTElement qt_product(const std::vector<QTElement>& fs);

// P_{i,j} -> q^(-ij/2) y^i x^j
QTElement specialize_P(const LatticeVector& x, Cone k, int N);
// extended multiplicatively; coefficients must be free of a, a1, a2, xi
QTElement specialize(const TorusElement& x);

// (xi q^(1/2 - ij/2) y^i x^j; q)_inf^-1 as sum u^n / (q;q)_n
QTElement gl1_dilog(const LatticeVector& x, const QField& xi, int N, Cone k);
// (u; q)_inf as sum (-1)^n q^(n(n-1)/2) u^n / (q;q)_n, u = c * x-hat^d
QTElement pochhammer_x(const QField& coef, int d, int N, Cone k);

VerificationReport verify_gl1_pentagon(int N);
VerificationReport verify_gl1_sw(int N);
VerificationReport gl1_homomorphism_check(const std::vector<std::pair<LatticeVector, LatticeVector>>& pairs);
VerificationReport verify_gl1_intertwining(int samples, int N, std::mt19937& rng);
VerificationReport verify_gl1_functional_equation(int N);
VerificationReport verify_gl1_dilog_agreement(int N);

}  // namespace skein
