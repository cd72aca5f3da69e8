// Skein dilogarithm Psi[xi] in the positive annulus skein, and its inverse.
#pragma once

#include "skein/annulus.hpp"
#include "skein/report.hpp"

namespace skein {

using DilogSeries = AnnulusElement;  // coefficient of W_lambda carries xi^|lambda|

DilogSeries psi_product_form(int N, const Scalar& xi = sXi());
DilogSeries psi_exp_form(int N, const Scalar& xi = sXi());
DilogSeries psi_inverse(int N);

// exp of a series without constant term, truncated at x.N (any basis)
SymSeries series_exp(const SymSeries& x);

// (unknot - P_{1,0} - a xi P_{0,1}) Psi = 0, degree by degree through N
VerificationReport verify_recurrence(int N);
// (unknot - P_{-1,0} - a^-1 P_{0,1}) Psi^-1 = 0
VerificationReport verify_inverse_recurrence(int N);
VerificationReport verify_product_equals_exp(int N);
VerificationReport verify_psi_times_inverse(int N);

}  // namespace skein
