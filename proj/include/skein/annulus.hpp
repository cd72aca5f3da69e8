// Positive annulus skein: W_lambda basis (identified with s_lambda), meridian
// operators, power sums, the A_{i,j} family and a Hecke-algebra closure oracle.
#pragma once

#include "skein/report.hpp"
#include "skein/symfun.hpp"

#include <string>
#include <vector>

namespace skein {

using AnnulusElement = SymSeries;  // Schur basis, W_lambda <-> s_lambda

struct BraidWord {
  int n = 1;              // strands
  std::vector<int> word;  // +i for sigma_i, -i for its inverse, read bottom to top

  static BraidWord parse(const std::string& text, int n = 0);  // "s1 s2 -s3"
  std::string str() const;
  void validate() const;
};

// A_{i,j} braid sigma_1...sigma_i sigma_{i+1}^-1...sigma_{i+j}^-1 on i+j+1 strands
BraidWord aij_braid(int i, int j);

// C_lambda(q^sign) = sum over cells of q^(sign*content)
QField content_poly(const Partition& lam, int sign = 1);
Scalar meridian_eigenvalue(const Partition& lam, int orientation);
AnnulusElement apply_meridian(const AnnulusElement& x, int orientation);
AnnulusElement power_sum_element(int d, int N = -1);
// unique family from the recursion; degree i+j+1, truncation N defaults to that
const AnnulusElement& aij(int i, int j);
Scalar framed_unknot_value(const Partition& lam, const Scalar& A);

// Seminormal representation of the type A Hecke algebra, T - T^-1 = z.
struct HeckeRep {
  Partition shape;
  std::vector<std::vector<int>> tableaux;  // SYT, entry k gives the cell index of k
  // gens[i-1] is the matrix of T_i, stored dense row-major
  std::vector<std::vector<QField>> gens;
  std::vector<std::vector<QField>> inv_gens;
  int dim() const { return static_cast<int>(tableaux.size()); }
};
const HeckeRep& hecke_rep(const Partition& lam);

using Matrix = std::vector<QField>;  // square, row-major
Matrix mat_mul(const Matrix& a, const Matrix& b, int d);
Matrix braid_matrix(const BraidWord& b, const HeckeRep& rep);
QField hecke_trace(const BraidWord& b, const Partition& lam);

inline int default_strand_bound() { return 6; }
AnnulusElement hecke_closure(const BraidWord& b, int bound = default_strand_bound());

// A_{i,j} from the recursion against the Hecke closure of its braid, i+j <= max_sum,
// plus the sigma_1 closure s W(2) - s^-1 W(1,1)
VerificationReport verify_aij_hecke(int max_sum);

}  // namespace skein
