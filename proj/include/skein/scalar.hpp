// Laurent polynomials in a, a1, a2, xi with coefficients in Q(s).
#pragma once

#include "skein/qfield.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace skein {

enum Var { VA = 0, VA1 = 1, VA2 = 2, VXI = 3 };

// Exponents of a, a1, a2 are stored doubled so that framing half-twists
// a^(1/2) are monomials; xi exponents are stored as is.
struct Mono {
  std::array<int, 4> e{0, 0, 0, 0};

  static Mono var(Var v, int power = 1) {
    Mono m;
    m.e[v] = (v == VXI) ? power : 2 * power;
    return m;
  }
  static Mono half(Var v, int halves) {
    Mono m;
    m.e[v] = halves;
    return m;
  }
  bool is_one() const { return e == std::array<int, 4>{0, 0, 0, 0}; }
  Mono operator*(const Mono& o) const {
    Mono r;
    for (int i = 0; i < 4; ++i) r.e[i] = e[i] + o.e[i];
    return r;
  }
  Mono inv() const {
    Mono r;
    for (int i = 0; i < 4; ++i) r.e[i] = -e[i];
    return r;
  }
  bool operator==(const Mono& o) const { return e == o.e; }
  bool operator!=(const Mono& o) const { return e != o.e; }
  bool operator<(const Mono& o) const { return e < o.e; }
  std::string str() const;
};

class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : Scalar(QField(v)) {}  // NOLINT
  Scalar(const QField& c);               // NOLINT
  Scalar(const QField& c, const Mono& m);
  static Scalar mono(const Mono& m) { return Scalar(QField(1), m); }
  static Scalar var(Var v, int power = 1) { return mono(Mono::var(v, power)); }

  const std::vector<std::pair<Mono, QField>>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_one() const { return t_.size() == 1 && t_[0].first.is_one() && t_[0].second.is_one(); }
  // no a, a1, a2, xi dependence
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.is_one()); }
  QField constant() const;  // throws unless is_constant
  QField coeff(const Mono& m) const;
  int max_xi() const;
  int min_xi() const;
  // part homogeneous of given xi degree
  Scalar xi_part(int d) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar operator*(const QField& k) const;

  bool invertible() const { return t_.size() == 1; }
  Scalar inverse() const;  // single-term only
  Scalar pow(int e) const;
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  std::string str() const;

 private:
  std::vector<std::pair<Mono, QField>> t_;  // sorted by Mono, no zero values
};

// Bindings for specialize; keys are "a", "a1", "a2", "xi", "s".
using Bindings = std::map<std::string, Scalar>;
Scalar specialize(const Scalar& x, const Bindings& b);

Scalar quantum_integer(int n);
Scalar quantum_bracket(int n);

inline Scalar sA() { return Scalar::var(VA); }
inline Scalar sA1() { return Scalar::var(VA1); }
inline Scalar sA2() { return Scalar::var(VA2); }
inline Scalar sXi() { return Scalar::var(VXI); }
inline Scalar sZ() { return Scalar(zed()); }
inline Scalar sS(int k = 1) { return Scalar(QField::s_pow(k)); }

}  // namespace skein
