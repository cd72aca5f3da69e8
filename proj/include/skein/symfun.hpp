// Partitions, Schur / power-sum bases, Littlewood-Richardson coefficients.
#pragma once

#include "skein/scalar.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace skein {

using Partition = std::vector<int>;  // weakly decreasing, positive parts

int size(const Partition& p);
std::string part_str(const Partition& p);  // "(3,2,1)", "()" for empty
Partition parse_partition(const std::string& s);
bool is_partition(const Partition& p);
Partition conjugate(const Partition& p);
std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_upto(int n);
bool contains(const Partition& big, const Partition& small);

struct Cell {
  int row, col, content, hook;
};
std::vector<Cell> cells(const Partition& p);
// (content, hook) per cell in row-major order
std::vector<std::pair<int, int>> hooks_contents(const Partition& p);

// c^lambda_{mu nu} via LR tableaux (lattice words)
const std::map<Partition, long>& lr_coefficients(const Partition& mu, const Partition& nu);
// same numbers via Jacobi-Trudi for s_nu and repeated Pieri on s_mu
std::map<Partition, long> lr_coefficients_pieri(const Partition& mu, const Partition& nu);
// horizontal strips of size k added to p
std::vector<Partition> pieri(const Partition& p, int k);

// irreducible character chi^lambda at cycle type mu (Murnaghan-Nakayama)
long mn_character(const Partition& lambda, const Partition& mu);
mpz_class z_index(const Partition& mu);

enum class Basis { Schur, PowerSum };

// Finite basis expansion truncated at degree N. PowerSum keys are multisets of
// part sizes, stored sorted decreasingly.
struct SymSeries {
  Basis basis = Basis::Schur;
  int N = 0;
  std::map<Partition, Scalar> c;

  SymSeries() = default;
  SymSeries(Basis b, int n) : basis(b), N(n) {}
  static SymSeries single(Basis b, int n, const Partition& k, const Scalar& v = Scalar(1));

  Scalar at(const Partition& k) const;
  void add(const Partition& k, const Scalar& v);
  bool is_zero() const { return c.empty(); }
  SymSeries degree_part(int d) const;
  SymSeries truncated(int n) const;

  SymSeries& operator+=(const SymSeries& o);
  SymSeries& operator-=(const SymSeries& o);
  friend SymSeries operator+(SymSeries a, const SymSeries& b) { return a += b; }
  friend SymSeries operator-(SymSeries a, const SymSeries& b) { return a -= b; }
  SymSeries operator-() const;
  SymSeries operator*(const Scalar& k) const;
  // equal coefficients; truncation degree must agree for the comparison to be meaningful
  bool operator==(const SymSeries& o) const { return basis == o.basis && c == o.c; }
  bool operator!=(const SymSeries& o) const { return !(*this == o); }
  std::string str() const;
};

SymSeries schur_to_powersum(const SymSeries& x);
SymSeries powersum_to_schur(const SymSeries& x);
SymSeries to_basis(const SymSeries& x, Basis b);
SymSeries multiply(const SymSeries& x, const SymSeries& y);

// Element of Lambda (x) Lambda, both factors in the same basis.
struct Tensor2 {
  Basis basis = Basis::Schur;
  int N = 0;
  std::map<std::pair<Partition, Partition>, Scalar> c;

  Tensor2() = default;
  Tensor2(Basis b, int n) : basis(b), N(n) {}
  void add(const Partition& l, const Partition& r, const Scalar& v);
  Scalar at(const Partition& l, const Partition& r) const;
  bool is_zero() const { return c.empty(); }
  Tensor2& operator+=(const Tensor2& o);
  Tensor2& operator-=(const Tensor2& o);
  friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
  friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
  Tensor2 operator*(const Scalar& k) const;
  bool operator==(const Tensor2& o) const { return basis == o.basis && c == o.c; }
  bool operator!=(const Tensor2& o) const { return !(*this == o); }
  std::string str() const;
};

Tensor2 tensor(const SymSeries& x, const SymSeries& y);
Tensor2 multiply(const Tensor2& x, const Tensor2& y);
Tensor2 coproduct(const SymSeries& x);
Tensor2 to_basis(const Tensor2& x, Basis b);
// (Delta (x) id) and (id (x) Delta) on a tensor square give triple tensors;
// coassociativity is checked through this map keyed on triples.
using Tensor3 = std::map<std::vector<Partition>, Scalar>;
Tensor3 coassoc_left(const SymSeries& x);
Tensor3 coassoc_right(const SymSeries& x);

}  // namespace skein
