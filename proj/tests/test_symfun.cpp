#include "doctest.h"
#include "skein/symfun.hpp"

#include <functional>
#include <random>
#include <set>

using namespace skein;

namespace {

using Exps = std::vector<int>;

// Schur polynomial in n variables by enumerating SSYT directly
std::map<Exps, long> schur_poly(const Partition& lam, int n) {
  std::map<Exps, long> out;
  std::vector<std::pair<int, int>> cs;
  for (int r = 0; r < static_cast<int>(lam.size()); ++r)
    for (int c = 0; c < lam[r]; ++c) cs.emplace_back(r, c);
  std::map<std::pair<int, int>, int> t;
  Exps e(n, 0);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == cs.size()) {
      ++out[e];
      return;
    }
    auto [r, c] = cs[i];
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[{r, c - 1}]);
    if (r > 0) lo = std::max(lo, t[{r - 1, c}] + 1);
    for (int v = lo; v <= n; ++v) {
      t[{r, c}] = v;
      ++e[v - 1];
      rec(i + 1);
      --e[v - 1];
    }
  };
  rec(0);
  return out;
}

Exps padded(const Partition& p, int n) {
  Exps e(n, 0);
  for (size_t i = 0; i < p.size(); ++i) e[i] = p[i];
  return e;
}

// s_mu s_nu in the Schur basis from monomial expansions and Kostka numbers
std::map<Partition, long> brute_product(const Partition& mu, const Partition& nu) {
  int n = size(mu) + size(nu);
  auto A = schur_poly(mu, n), B = schur_poly(nu, n);
  auto parts = partitions_of(n);  // lex decreasing, refines dominance
  std::map<Partition, long> M;
  for (auto& al : parts) {
    Exps target = padded(al, n);
    long tot = 0;
    for (auto& [b, cb] : A) {
      Exps g(n);
      bool ok = true;
      for (int i = 0; i < n; ++i) {
        g[i] = target[i] - b[i];
        if (g[i] < 0) ok = false;
      }
      if (!ok) continue;
      auto it = B.find(g);
      if (it != B.end()) tot += cb * it->second;
    }
    M[al] = tot;
  }
  std::map<Partition, long> c;
  std::map<Partition, std::map<Exps, long>> kostka;
  for (auto& al : parts) {
    long v = M[al];
    for (auto& [lam, cl] : c) {
      if (!kostka.count(lam)) kostka[lam] = schur_poly(lam, n);
      auto it = kostka[lam].find(padded(al, n));
      if (it != kostka[lam].end()) v -= cl * it->second;
    }
    if (v) c[al] = v;
  }
  return c;
}

SymSeries S(const Partition& p, int N = 12) { return SymSeries::single(Basis::Schur, N, p); }
SymSeries Pw(const Partition& p, int N = 12) { return SymSeries::single(Basis::PowerSum, N, p); }

}  // namespace

TEST_CASE("hooks and contents") {
  CHECK(hooks_contents({1}) == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(hooks_contents({2}) == std::vector<std::pair<int, int>>{{0, 2}, {1, 1}});
  auto hc = hooks_contents({2, 1});
  std::multiset<int> contents, hooks;
  for (auto [c, h] : hc) contents.insert(c), hooks.insert(h);
  CHECK(contents == std::multiset<int>{0, 1, -1});
  CHECK(hooks == std::multiset<int>{3, 1, 1});
  // hook length formula against standard tableau count
  for (auto& lam : partitions_of(6)) {
    mpz_class f = 720;
    for (auto [c, h] : hooks_contents(lam)) f /= h;
    CHECK(f == mn_character(lam, {1, 1, 1, 1, 1, 1}));
  }
}

TEST_CASE("LR examples") {
  CHECK(lr_coefficients({1}, {1}) == std::map<Partition, long>{{{2}, 1}, {{1, 1}, 1}});
  CHECK(lr_coefficients({2, 1}, {2, 1}).at({3, 2, 1}) == 2);
  CHECK(brute_product({2, 1}, {2, 1}).at({3, 2, 1}) == 2);
  CHECK(lr_coefficients({3, 1}, {}) == std::map<Partition, long>{{{3, 1}, 1}});
}

TEST_CASE("LR matches monomial brute force and Pieri route") {
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k)
      for (auto& mu : partitions_of(k))
        for (auto& nu : partitions_of(n - k)) {
          const auto& lr = lr_coefficients(mu, nu);
          CHECK(lr == lr_coefficients_pieri(mu, nu));
          CHECK(lr == lr_coefficients(nu, mu));
          CHECK(lr == brute_product(mu, nu));
        }
}

TEST_CASE("basis change") {
  CHECK(schur_to_powersum(S({1})) == Pw({1}));
  CHECK(powersum_to_schur(Pw({2})) == S({2}) - S({1, 1}));
  Scalar half = Scalar(QField::rational(mpq_class(1, 2)));
  CHECK(schur_to_powersum(S({2})) == (Pw({1, 1}) + Pw({2})) * half);
  for (auto& lam : partitions_upto(10)) {
    CHECK(powersum_to_schur(schur_to_powersum(S(lam))) == S(lam));
    CHECK(schur_to_powersum(powersum_to_schur(Pw(lam))) == Pw(lam));
  }
}

TEST_CASE("multiply") {
  CHECK(multiply(S({1}), S({1})) == S({2}) + S({1, 1}));
  CHECK(multiply(Pw({2}), Pw({3})) == Pw({3, 2}));
  CHECK(multiply(S({2}), S({1})) == S({3}) + S({2, 1}));
  // bases agree on products
  for (auto& a : partitions_upto(4))
    for (auto& b : partitions_upto(4)) {
      SymSeries lhs = multiply(S(a), S(b));
      SymSeries rhs = powersum_to_schur(multiply(schur_to_powersum(S(a)), schur_to_powersum(S(b))));
      CHECK(lhs == rhs);
    }
  CHECK(multiply(S({3}, 4), S({2}, 4)).is_zero());
}

TEST_CASE("coproduct") {
  Tensor2 d1 = coproduct(S({1}));
  Tensor2 want(Basis::Schur, 12);
  want.add({1}, {}, 1);
  want.add({}, {1}, 1);
  CHECK(d1 == want);
  Tensor2 d2 = coproduct(S({2}));
  Tensor2 w2(Basis::Schur, 12);
  w2.add({2}, {}, 1);
  w2.add({1}, {1}, 1);
  w2.add({}, {2}, 1);
  CHECK(d2 == w2);
  for (int n = 1; n <= 8; ++n) {
    Tensor2 lhs = coproduct(powersum_to_schur(Pw({n})));
    Tensor2 prim(Basis::PowerSum, 12);
    prim.add({n}, {}, 1);
    prim.add({}, {n}, 1);
    CHECK(lhs == to_basis(prim, Basis::Schur));
    CHECK(coproduct(Pw({n})) == prim);
  }
}

TEST_CASE("coproduct is coassociative and multiplicative") {
  std::mt19937 g(3);
  auto all = partitions_upto(4);
  std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
  for (int it = 0; it < 25; ++it) {
    Partition a = all[pick(g)], b = all[pick(g)];
    SymSeries x = S(a, 8), y = S(b, 8);
    CHECK(coproduct(multiply(x, y)) == multiply(coproduct(x), coproduct(y)));
  }
  for (auto& lam : partitions_upto(6)) CHECK(coassoc_left(S(lam, 8)) == coassoc_right(S(lam, 8)));
}
