#include "skein/dilog.hpp"

#include <stdexcept>

namespace skein {

namespace {

Scalar unknot() { return (sA() - sA().inverse()) / sZ(); }

void need_degree(int N) {
  if (N < 0) throw std::invalid_argument("degree must be nonnegative");
}

// residual of (unknot - meridian - c p1) x, graded by partition
void recurrence_residuals(const SymSeries& x, int orientation, const Scalar& c, VerificationReport& rep) {
  SymSeries p1 = SymSeries::single(Basis::Schur, x.N, {1});
  SymSeries r = x * unknot() - apply_meridian(x, orientation) - multiply(p1, x) * c;
  for (int d = 0; d <= x.N; ++d)
    for (auto& lam : partitions_of(d)) rep.check("W" + part_str(lam), r.at(lam));
}

}  // namespace

DilogSeries psi_product_form(int N, const Scalar& xi) {
  need_degree(N);
  DilogSeries r(Basis::Schur, N);
  for (auto& lam : partitions_upto(N)) {
    Scalar v(1);
    for (auto& c : cells(lam)) v *= -(sS(-c.content) * xi) / Scalar(qbracket(c.hook));
    r.add(lam, v);
  }
  return r;
}

SymSeries series_exp(const SymSeries& x) {
  if (!x.at({}).is_zero()) throw std::invalid_argument("series_exp needs zero constant term");
  SymSeries r = SymSeries::single(x.basis, x.N, {});
  SymSeries term = r;
  // x has no constant term so x^k vanishes past degree N
  for (int k = 1; k <= x.N; ++k) {
    term = multiply(term, x) * Scalar(QField::rational(mpq_class(1, k)));
    if (term.is_zero()) break;
    r += term;
  }
  return r;
}

DilogSeries psi_exp_form(int N, const Scalar& xi) {
  need_degree(N);
  SymSeries L(Basis::PowerSum, N);
  for (int d = 1; d <= N; ++d) L.add({d}, -xi.pow(d) / (Scalar(d) * Scalar(qbracket(d))));
  return powersum_to_schur(series_exp(L));
}

DilogSeries psi_inverse(int N) {
  need_degree(N);
  DilogSeries r(Basis::Schur, N);
  for (auto& lam : partitions_upto(N)) {
    Scalar v(1);
    for (auto& c : cells(lam)) v *= sS(c.content) / Scalar(qbracket(c.hook));
    r.add(lam, v);
  }
  return r;
}

VerificationReport verify_recurrence(int N) {
  Stopwatch sw;
  VerificationReport rep{"skein dilogarithm recurrence", "N=" + std::to_string(N)};
  recurrence_residuals(psi_product_form(N), 1, sA() * sXi(), rep);
  rep.seconds = sw.seconds();
  return rep;
}

VerificationReport verify_inverse_recurrence(int N) {
  Stopwatch sw;
  VerificationReport rep{"inverse dilogarithm recurrence", "N=" + std::to_string(N)};
  recurrence_residuals(psi_inverse(N), -1, sA().inverse(), rep);
  rep.seconds = sw.seconds();
  return rep;
}

VerificationReport verify_product_equals_exp(int N) {
  Stopwatch sw;
  VerificationReport rep{"dilogarithm product form = exponential form", "N=" + std::to_string(N)};
  SymSeries diff = psi_product_form(N) - psi_exp_form(N);
  for (auto& lam : partitions_upto(N)) rep.check("W" + part_str(lam), diff.at(lam));
  rep.seconds = sw.seconds();
  return rep;
}

VerificationReport verify_psi_times_inverse(int N) {
  Stopwatch sw;
  VerificationReport rep{"Psi[1] * Psi^-1 = 1", "N=" + std::to_string(N)};
  SymSeries prod = multiply(psi_product_form(N, Scalar(1)), psi_inverse(N));
  prod -= SymSeries::single(Basis::Schur, N, {});
  for (auto& lam : partitions_upto(N)) rep.check("W" + part_str(lam), prod.at(lam));
  rep.seconds = sw.seconds();
  return rep;
}

}  // namespace skein
