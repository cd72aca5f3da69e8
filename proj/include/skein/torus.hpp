// Torus skein algebra through the bracket [P_x, P_y] = {det(x,y)} P_{x+y},
// realised as PBW normal forms in its enveloping algebra.
#pragma once

#include "skein/report.hpp"
#include "skein/symfun.hpp"

#include <functional>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace skein {

struct LatticeVector {
  int i = 0, j = 0;
  bool operator==(const LatticeVector& o) const { return i == o.i && j == o.j; }
  bool operator!=(const LatticeVector& o) const { return !(*this == o); }
  LatticeVector operator+(const LatticeVector& o) const { return {i + o.i, j + o.j}; }
  LatticeVector operator*(int k) const { return {k * i, k * j}; }
  std::string str() const;
};

int det(const LatticeVector& x, const LatticeVector& y);
// PBW order: angle in [0, 2pi), then length
bool pbw_less(const LatticeVector& x, const LatticeVector& y);
struct PbwLess {
  bool operator()(const LatticeVector& x, const LatticeVector& y) const { return pbw_less(x, y); }
};
// lexicographic on (i, j); used only as a map key order
inline bool operator<(const LatticeVector& x, const LatticeVector& y) {
  return x.i != y.i ? x.i < y.i : x.j < y.j;
}

// ({det}, x+y); first is zero when x, y are collinear
std::pair<QField, LatticeVector> bracket(const LatticeVector& x, const LatticeVector& y);

using PBWMonomial = std::vector<LatticeVector>;  // sorted by pbw_less
std::string monomial_str(const PBWMonomial& m);

// linear weight w(i,j) = wi*i + wj*j, must be positive on every class used
struct Cone {
  int wi = 1, wj = 1;
  int weight(const LatticeVector& x) const { return wi * x.i + wj * x.j; }
  static Cone quadrant() { return {1, 1}; }
  static Cone upper() { return {0, 1}; }  // j >= |i|
};

struct TorusElement {
  Cone cone;
  int N = 0;
  std::map<PBWMonomial, Scalar> c;

  TorusElement() = default;
  TorusElement(Cone k, int n) : cone(k), N(n) {}
  static TorusElement unit(Cone k, int n);
  static TorusElement gen(const LatticeVector& x, Cone k, int n, const Scalar& v = Scalar(1));

  int weight(const PBWMonomial& m) const;
  void add(PBWMonomial m, const Scalar& v);  // sorts m if needed (collinear letters only)
  Scalar at(const PBWMonomial& m) const;
  bool is_zero() const { return c.empty(); }
  TorusElement degree_part(int w) const;

  TorusElement& operator+=(const TorusElement& o);
  TorusElement& operator-=(const TorusElement& o);
  friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
  friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
  TorusElement operator*(const Scalar& k) const;
  bool operator==(const TorusElement& o) const { return c == o.c; }
  bool operator!=(const TorusElement& o) const { return !(*this == o); }
  std::string str() const;
};

// normal-ordered product, truncated at min(x.N, y.N)
TorusElement multiply(const TorusElement& x, const TorusElement& y);
TorusElement product(const std::vector<TorusElement>& fs);
// exp of an element whose letters are pairwise collinear (so commute)
TorusElement commutative_exp(const TorusElement& x);
// straighten an arbitrary word by repeatedly swapping a descent picked by
// choose (given the list of descent positions); the default picks the first
TorusElement normal_order(const PBWMonomial& word, Cone k, int N,
                          const std::function<size_t(const std::vector<size_t>&)>& choose = {});
size_t straightening_memo_size();

TorusElement dilog_element(const LatticeVector& x, const Scalar& xi, int N, Cone k);

VerificationReport compare(const std::string& identity, const std::string& parameter, const TorusElement& lhs,
                           const TorusElement& rhs, double seconds);
VerificationReport verify_pentagon(int N);

// A_{10}, A_{01} in terms of P_{0,2} and P_{0,1}^2
std::pair<TorusElement, TorusElement> a10_a01_elements(int N = 2);
// Psi_{A10}^-1, Psi_{A01}^-1; literal=true keeps the d=1 ratio (s+s^-1)/(s-s^-1)
// for every d instead of (s^d+s^-d)/(s^d-s^-d)
std::pair<TorusElement, TorusElement> sw_middle_factors(int N, bool literal = false);
VerificationReport verify_sw(int N, bool literal = false);
// both sides of the Seiberg-Witten identity, for inspection
std::pair<TorusElement, TorusElement> sw_sides(int N, bool literal = false);

int quadratic_refinement(const LatticeVector& x);  // (-1)^(ij+i+j)
VerificationReport verify_twisted_pentagon(int N);
VerificationReport verify_cocycle(int bound);

// image of an element supported on the classes (0,d) under P_{0,d} -> p_d
SymSeries vertical_to_symmetric(const TorusElement& x);

// --- operators on the Fock module (degree-truncated Lambda, Schur basis)
// returns P_x applied to v, for constructible x (see source); throws otherwise
SymSeries fock_apply(const LatticeVector& x, const SymSeries& v);
bool fock_constructible(const LatticeVector& x);
VerificationReport fock_crosscheck(const std::vector<std::pair<LatticeVector, LatticeVector>>& pairs, int degree);

// a few random monomials of weight <= max_w in the upper cone, small coefficients
TorusElement random_torus_element(int max_w, int N, std::mt19937& rng);

VerificationReport verify_jacobi(int bound);
VerificationReport verify_associativity(int samples, int max_weight, std::mt19937& rng);
VerificationReport verify_confluence(int samples, int max_weight, std::mt19937& rng);

}  // namespace skein
