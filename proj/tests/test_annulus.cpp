#include "doctest.h"
#include "skein/annulus.hpp"
#include "skein/parse.hpp"

#include <random>

using namespace skein;

namespace {
SymSeries W(const Partition& p, int N) { return SymSeries::single(Basis::Schur, N, p); }
Scalar P(const char* t) { return parse_scalar(t); }

bool mat_eq(const Matrix& a, const Matrix& b) { return a == b; }
}  // namespace

TEST_CASE("meridian eigenvalues") {
  Scalar delta = P("(a - a^-1)/z");
  CHECK(meridian_eigenvalue({}, 1) == delta);
  CHECK(meridian_eigenvalue({}, -1) == delta);
  CHECK(meridian_eigenvalue({1}, 1) == delta + P("z*a"));
  CHECK(meridian_eigenvalue({2}, 1) == delta + P("z*a*(1 + q)"));
  CHECK(meridian_eigenvalue({1, 1}, -1) == delta - P("z*a^-1*(1 + q)"));
  CHECK(apply_meridian(W({}, 3), 1) == W({}, 3) * delta);
  CHECK(apply_meridian(W({1}, 3), 1) == W({1}, 3) * (delta + P("z*a")));
  CHECK(apply_meridian(SymSeries(Basis::Schur, 3), 1).is_zero());
  // the two meridians commute
  SymSeries x = W({2, 1}, 4) + W({1}, 4) * P("xi");
  CHECK(apply_meridian(apply_meridian(x, 1), -1) == apply_meridian(apply_meridian(x, -1), 1));
}

TEST_CASE("power sums") {
  CHECK(power_sum_element(1) == W({1}, 1));
  CHECK(power_sum_element(2) == W({2}, 2) - W({1, 1}, 2));
  CHECK(power_sum_element(3) == W({3}, 3) - W({2, 1}, 3) + W({1, 1, 1}, 3));
}

TEST_CASE("Hecke seminormal representation satisfies the relations") {
  QField z = zed();
  for (int n = 2; n <= 6; ++n)
    for (auto& lam : partitions_of(n)) {
      const HeckeRep& rep = hecke_rep(lam);
      int d = rep.dim();
      Matrix id(d * d);
      for (int i = 0; i < d; ++i) id[i * d + i] = QField(1);
      for (int i = 0; i + 1 < n; ++i) {
        const Matrix& T = rep.gens[i];
        // (T - s)(T + s^-1) = 0
        Matrix a = T, b = T;
        for (int k = 0; k < d; ++k) a[k * d + k] -= QField::s_pow(1), b[k * d + k] += QField::s_pow(-1);
        CHECK(mat_eq(mat_mul(a, b, d), Matrix(d * d)));
        CHECK(mat_eq(mat_mul(T, rep.inv_gens[i], d), id));
        for (int j = 0; j + 1 < n; ++j) {
          const Matrix& U = rep.gens[j];
          if (std::abs(i - j) == 1) {
            CHECK(mat_eq(mat_mul(mat_mul(T, U, d), T, d), mat_mul(mat_mul(U, T, d), U, d)));
          } else if (i != j) {
            CHECK(mat_eq(mat_mul(T, U, d), mat_mul(U, T, d)));
          }
        }
      }
    }
}

TEST_CASE("Hecke closure examples") {
  CHECK(hecke_closure(BraidWord::parse("", 2)) == W({2}, 2) + W({1, 1}, 2));
  SymSeries p1sq = powersum_to_schur(SymSeries::single(Basis::PowerSum, 2, {1, 1}));
  CHECK(hecke_closure(BraidWord::parse("", 2)) == p1sq);
  SymSeries s1 = hecke_closure(BraidWord::parse("s1"));
  CHECK(s1 == W({2}, 2) * sS(1) - W({1, 1}, 2) * sS(-1));
  CHECK(s1 == aij(1, 0));
  CHECK(hecke_closure(BraidWord::parse("-s1")) == aij(0, 1));
  CHECK(hecke_closure(BraidWord::parse("s1 s2")) == aij(2, 0));
  CHECK_THROWS(hecke_closure(BraidWord::parse("s7")));
}

TEST_CASE("A_ij family") {
  CHECK(aij(0, 0) == W({1}, 1));
  Scalar half = Scalar(QField::rational(mpq_class(1, 2)));
  SymSeries p2 = SymSeries::single(Basis::PowerSum, 2, {2});
  SymSeries p11 = SymSeries::single(Basis::PowerSum, 2, {1, 1});
  SymSeries a10 = powersum_to_schur(p2 * (P("s + s^-1") * half) + p11 * (sZ() * half));
  CHECK(aij(1, 0) == a10);
  CHECK(aij(1, 0) == W({2}, 2) * sS(1) - W({1, 1}, 2) * sS(-1));
  CHECK(aij(0, 1) == W({2}, 2) * sS(-1) - W({1, 1}, 2) * sS(1));
  for (int n = 1; n <= 5; ++n)
    for (int i = 0; i < n; ++i) CHECK(aij(i, n - 1 - i) == hecke_closure(aij_braid(i, n - 1 - i)));
  for (int n = 1; n <= 8; ++n) {
    SymSeries sum(Basis::Schur, n);
    for (int i = 0; i < n; ++i) sum += aij(i, n - 1 - i);
    CHECK(sum == power_sum_element(n) * quantum_integer(n));
  }
  for (int i = 0; i <= 6; ++i)
    for (int j = 0; i + j <= 6; ++j) {
      SymSeries lhs = multiply(aij(i, 0).truncated(i + j + 2), aij(0, j).truncated(i + j + 2)) * sZ();
      CHECK(lhs == aij(i + 1, j) - aij(i, j + 1));
    }
}

TEST_CASE("Hecke closure is a class function") {
  std::mt19937 g(5);
  for (int n = 2; n <= 4; ++n)
    for (int it = 0; it < 12; ++it) {
      std::uniform_int_distribution<int> gen(1, n - 1), len(1, 5), sg(0, 1);
      BraidWord b;
      b.n = n;
      int L = len(g);
      for (int k = 0; k < L; ++k) b.word.push_back(gen(g) * (sg(g) ? 1 : -1));
      BraidWord c = b;
      std::rotate(c.word.begin(), c.word.begin() + 1, c.word.end());
      CHECK(hecke_closure(b) == hecke_closure(c));
      BraidWord h = b;
      int x = gen(g);
      h.word.insert(h.word.begin(), x);
      h.word.push_back(-x);
      CHECK(hecke_closure(h) == hecke_closure(b));
    }
}

TEST_CASE("framed unknot values") {
  CHECK(framed_unknot_value({}, sA()).is_one());
  CHECK(framed_unknot_value({1}, sA()) == P("(a - a^-1)/z"));
  CHECK(framed_unknot_value({2}, sA()) == P("(a - a^-1)*(a*s - a^-1*s^-1)/(z*(q - q^-1))"));
  // closure of sigma_1 with writhe one: s<W2> - s^-1<W11> = a (a - a^-1)/z
  Scalar lhs = sS(1) * framed_unknot_value({2}, sA()) - sS(-1) * framed_unknot_value({1, 1}, sA());
  CHECK(lhs == P("a*(a - a^-1)/z"));
}
