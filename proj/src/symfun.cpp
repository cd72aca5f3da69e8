#include "skein/symfun.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace skein {

int size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

std::string part_str(const Partition& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

bool is_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i && p[i] > p[i - 1]) return false;
  }
  return true;
}

Partition parse_partition(const std::string& s) {
  Partition p;
  std::string t;
  for (char ch : s)
    if (ch != '(' && ch != ')' && ch != ' ') t += ch;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    p.push_back(std::stoi(item));
  }
  if (!is_partition(p)) throw std::invalid_argument("not a partition: " + s);
  return p;
}

Partition conjugate(const Partition& p) {
  Partition r;
  if (p.empty()) return r;
  for (int j = 0; j < p[0]; ++j) {
    int n = 0;
    while (n < static_cast<int>(p.size()) && p[n] > j) ++n;
    r.push_back(n);
  }
  return r;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(left, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(left - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> partitions_upto(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k)
    for (auto& p : partitions_of(k)) out.push_back(p);
  return out;
}

bool contains(const Partition& big, const Partition& small) {
  if (small.size() > big.size()) return false;
  for (size_t i = 0; i < small.size(); ++i)
    if (small[i] > big[i]) return false;
  return true;
}

std::vector<Cell> cells(const Partition& p) {
  Partition pc = conjugate(p);
  std::vector<Cell> out;
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    for (int j = 0; j < p[i]; ++j) out.push_back({i, j, j - i, p[i] - j + pc[j] - i - 1});
  return out;
}

std::vector<std::pair<int, int>> hooks_contents(const Partition& p) {
  std::vector<std::pair<int, int>> out;
  for (auto& c : cells(p)) out.emplace_back(c.content, c.hook);
  return out;
}

namespace {

long count_lr_tableaux(const Partition& lam, const Partition& mu, const Partition& nu) {
  // skew cells in reading order: rows top to bottom, right to left
  std::vector<std::pair<int, int>> order;
  for (int r = 0; r < static_cast<int>(lam.size()); ++r) {
    int lo = r < static_cast<int>(mu.size()) ? mu[r] : 0;
    for (int c = lam[r] - 1; c >= lo; --c) order.emplace_back(r, c);
  }
  int rows = static_cast<int>(lam.size());
  int cols = lam.empty() ? 0 : lam[0];
  std::vector<std::vector<int>> val(rows, std::vector<int>(cols, 0));
  auto in_mu = [&](int r, int c) { return r < static_cast<int>(mu.size()) && c < mu[r]; };
  int k = static_cast<int>(nu.size());
  std::vector<int> cnt(k + 1, 0);
  long total = 0;
  std::function<void(size_t)> rec = [&](size_t idx) {
    if (idx == order.size()) {
      ++total;
      return;
    }
    auto [r, c] = order[idx];
    int hi = k;
    if (c + 1 < lam[r]) hi = std::min(hi, val[r][c + 1]);  // row weakly increasing
    int lo = 1;
    if (r > 0 && !in_mu(r - 1, c)) lo = val[r - 1][c] + 1;  // column strict
    for (int v = lo; v <= hi; ++v) {
      if (cnt[v] >= nu[v - 1]) continue;
      if (v > 1 && cnt[v] + 1 > cnt[v - 1]) continue;  // lattice condition
      ++cnt[v];
      val[r][c] = v;
      rec(idx + 1);
      --cnt[v];
    }
    val[r][c] = 0;
  };
  rec(0);
  return total;
}

std::vector<Partition> supersets(const Partition& mu, int n, int maxlen) {
  std::vector<Partition> out;
  for (auto& lam : partitions_of(n))
    if (static_cast<int>(lam.size()) <= maxlen && contains(lam, mu)) out.push_back(lam);
  return out;
}

}  // namespace

const std::map<Partition, long>& lr_coefficients(const Partition& mu, const Partition& nu) {
  static std::mutex m;
  static std::map<std::pair<Partition, Partition>, std::map<Partition, long>> cache;
  {
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find({mu, nu});
    if (it != cache.end()) return it->second;
  }
  std::map<Partition, long> r;
  int n = size(mu) + size(nu);
  for (auto& lam : supersets(mu, n, static_cast<int>(mu.size() + nu.size()))) {
    long c = count_lr_tableaux(lam, mu, nu);
    if (c) r[lam] = c;
  }
  std::lock_guard<std::mutex> lock(m);
  return cache.emplace(std::make_pair(mu, nu), std::move(r)).first->second;
}

std::vector<Partition> pieri(const Partition& p, int k) {
  std::vector<Partition> out;
  int len = static_cast<int>(p.size());
  Partition cur(len + 1, 0);
  std::function<void(int, int)> rec = [&](int row, int left) {
    if (row == len + 1) {
      if (left == 0) {
        Partition q;
        for (int x : cur)
          if (x > 0) q.push_back(x);
        out.push_back(q);
      }
      return;
    }
    int base = row < len ? p[row] : 0;
    int cap = row == 0 ? base + left : std::min(base + left, p[row - 1]);
    for (int v = base; v <= cap; ++v) {
      cur[row] = v;
      rec(row + 1, left - (v - base));
    }
  };
  rec(0, k);
  return out;
}

std::map<Partition, long> lr_coefficients_pieri(const Partition& mu, const Partition& nu) {
  int l = static_cast<int>(nu.size());
  std::vector<int> perm(l);
  std::iota(perm.begin(), perm.end(), 0);
  std::map<Partition, long> acc;
  do {
    // sign of the permutation
    int inv = 0;
    for (int i = 0; i < l; ++i)
      for (int j = i + 1; j < l; ++j) inv += perm[i] > perm[j];
    std::vector<int> hs;
    bool ok = true;
    for (int i = 0; i < l; ++i) {
      int k = nu[i] - i + perm[i];
      if (k < 0) {
        ok = false;
        break;
      }
      hs.push_back(k);
    }
    if (!ok) continue;
    std::map<Partition, long> cur{{mu, 1}};
    for (int k : hs) {
      std::map<Partition, long> nxt;
      for (auto& [p, c] : cur)
        for (auto& q : pieri(p, k)) nxt[q] += c;
      cur = std::move(nxt);
    }
    for (auto& [p, c] : cur) acc[p] += (inv % 2 ? -c : c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::map<Partition, long> r;
  for (auto& [p, c] : acc)
    if (c) r[p] = c;
  return r;
}

namespace {

// beta-set representation for rim hook removal
long mn_rec(const Partition& lam, const Partition& mu, size_t idx,
            std::map<std::pair<Partition, size_t>, long>& memo) {
  if (idx == mu.size()) return lam.empty() ? 1 : 0;
  auto key = std::make_pair(lam, idx);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  int k = mu[idx];
  int l = static_cast<int>(lam.size());
  std::vector<int> beta(l);
  for (int i = 0; i < l; ++i) beta[i] = lam[i] + (l - 1 - i);
  long total = 0;
  for (int i = 0; i < l; ++i) {
    int nb = beta[i] - k;
    if (nb < 0) continue;
    if (std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
    int between = 0;
    for (int j = 0; j < l; ++j)
      if (beta[j] > nb && beta[j] < beta[i]) ++between;
    std::vector<int> nbeta = beta;
    nbeta[i] = nb;
    std::sort(nbeta.rbegin(), nbeta.rend());
    Partition nl;
    for (int j = 0; j < l; ++j) {
      int part = nbeta[j] - (l - 1 - j);
      if (part > 0) nl.push_back(part);
    }
    long v = mn_rec(nl, mu, idx + 1, memo);
    total += (between % 2 ? -v : v);
  }
  memo[key] = total;
  return total;
}

}  // namespace

long mn_character(const Partition& lambda, const Partition& mu) {
  if (size(lambda) != size(mu)) return 0;
  static std::mutex m;
  static std::map<std::pair<Partition, Partition>, long> cache;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find({lambda, mu});
  if (it != cache.end()) return it->second;
  std::map<std::pair<Partition, size_t>, long> memo;
  long v = mn_rec(lambda, mu, 0, memo);
  cache[{lambda, mu}] = v;
  return v;
}

mpz_class z_index(const Partition& mu) {
  std::map<int, int> mult;
  for (int k : mu) ++mult[k];
  mpz_class z = 1;
  for (auto [k, m] : mult) {
    for (int i = 0; i < m; ++i) z *= k;
    for (int i = 2; i <= m; ++i) z *= i;
  }
  return z;
}

// ---- SymSeries

SymSeries SymSeries::single(Basis b, int n, const Partition& k, const Scalar& v) {
  SymSeries s(b, n);
  s.add(k, v);
  return s;
}

Scalar SymSeries::at(const Partition& k) const {
  auto it = c.find(k);
  return it == c.end() ? Scalar() : it->second;
}

void SymSeries::add(const Partition& k, const Scalar& v) {
  if (v.is_zero() || size(k) > N) return;
  auto it = c.find(k);
  if (it == c.end()) {
    c.emplace(k, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) c.erase(it);
}

SymSeries SymSeries::degree_part(int d) const {
  SymSeries r(basis, N);
  for (auto& [k, v] : c)
    if (size(k) == d) r.c.emplace(k, v);
  return r;
}

SymSeries SymSeries::truncated(int n) const {
  SymSeries r(basis, n);
  for (auto& [k, v] : c)
    if (size(k) <= n) r.c.emplace(k, v);
  return r;
}

SymSeries& SymSeries::operator+=(const SymSeries& o) {
  if (o.basis != basis) throw std::invalid_argument("basis mismatch");
  for (auto& [k, v] : o.c) add(k, v);
  return *this;
}

SymSeries& SymSeries::operator-=(const SymSeries& o) {
  if (o.basis != basis) throw std::invalid_argument("basis mismatch");
  for (auto& [k, v] : o.c) add(k, -v);
  return *this;
}

SymSeries SymSeries::operator-() const {
  SymSeries r = *this;
  for (auto& [k, v] : r.c) v = -v;
  return r;
}

SymSeries SymSeries::operator*(const Scalar& k) const {
  SymSeries r(basis, N);
  if (k.is_zero()) return r;
  for (auto& [p, v] : c) r.add(p, v * k);
  return r;
}

std::string SymSeries::str() const {
  std::string tag = basis == Basis::Schur ? "s" : "p";
  if (c.empty()) return "0";
  std::string out;
  for (auto& [k, v] : c) {
    if (!out.empty()) out += " + ";
    out += "(" + v.str() + ")*" + tag + part_str(k);
  }
  return out;
}

SymSeries schur_to_powersum(const SymSeries& x) {
  if (x.basis == Basis::PowerSum) return x;
  SymSeries r(Basis::PowerSum, x.N);
  for (auto& [lam, v] : x.c)
    for (auto& mu : partitions_of(size(lam))) {
      long ch = mn_character(lam, mu);
      if (ch) r.add(mu, v * QField::rational(mpq_class(mpz_class(ch), z_index(mu))));
    }
  return r;
}

SymSeries powersum_to_schur(const SymSeries& x) {
  if (x.basis == Basis::Schur) return x;
  SymSeries r(Basis::Schur, x.N);
  for (auto& [mu, v] : x.c)
    for (auto& lam : partitions_of(size(mu))) {
      long ch = mn_character(lam, mu);
      if (ch) r.add(lam, v * QField(ch));
    }
  return r;
}

SymSeries to_basis(const SymSeries& x, Basis b) {
  return b == Basis::Schur ? powersum_to_schur(x) : schur_to_powersum(x);
}

namespace {
Partition merge_parts(const Partition& a, const Partition& b) {
  Partition r = a;
  r.insert(r.end(), b.begin(), b.end());
  std::sort(r.rbegin(), r.rend());
  return r;
}
}  // namespace

SymSeries multiply(const SymSeries& x, const SymSeries& y) {
  if (x.basis != y.basis) throw std::invalid_argument("multiply: basis mismatch");
  int N = std::min(x.N, y.N);
  SymSeries r(x.basis, N);
  for (auto& [a, va] : x.c)
    for (auto& [b, vb] : y.c) {
      if (size(a) + size(b) > N) continue;
      Scalar w = va * vb;
      if (x.basis == Basis::PowerSum) {
        r.add(merge_parts(a, b), w);
      } else {
        for (auto& [lam, cnt] : lr_coefficients(a, b)) r.add(lam, w * QField(cnt));
      }
    }
  return r;
}

// ---- Tensor2

void Tensor2::add(const Partition& l, const Partition& r, const Scalar& v) {
  if (v.is_zero() || size(l) + size(r) > N) return;
  auto key = std::make_pair(l, r);
  auto it = c.find(key);
  if (it == c.end()) {
    c.emplace(key, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) c.erase(it);
}

Scalar Tensor2::at(const Partition& l, const Partition& r) const {
  auto it = c.find({l, r});
  return it == c.end() ? Scalar() : it->second;
}

Tensor2& Tensor2::operator+=(const Tensor2& o) {
  if (o.basis != basis) throw std::invalid_argument("basis mismatch");
  for (auto& [k, v] : o.c) add(k.first, k.second, v);
  return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& o) {
  if (o.basis != basis) throw std::invalid_argument("basis mismatch");
  for (auto& [k, v] : o.c) add(k.first, k.second, -v);
  return *this;
}

Tensor2 Tensor2::operator*(const Scalar& k) const {
  Tensor2 r(basis, N);
  for (auto& [p, v] : c) r.add(p.first, p.second, v * k);
  return r;
}

std::string Tensor2::str() const {
  std::string tag = basis == Basis::Schur ? "s" : "p";
  if (c.empty()) return "0";
  std::string out;
  for (auto& [k, v] : c) {
    if (!out.empty()) out += " + ";
    out += "(" + v.str() + ")*" + tag + part_str(k.first) + "#" + tag + part_str(k.second);
  }
  return out;
}

Tensor2 tensor(const SymSeries& x, const SymSeries& y) {
  if (x.basis != y.basis) throw std::invalid_argument("tensor: basis mismatch");
  Tensor2 r(x.basis, x.N + y.N);
  for (auto& [a, va] : x.c)
    for (auto& [b, vb] : y.c) r.add(a, b, va * vb);
  return r;
}

Tensor2 multiply(const Tensor2& x, const Tensor2& y) {
  if (x.basis != y.basis) throw std::invalid_argument("multiply: basis mismatch");
  int N = std::min(x.N, y.N);
  Tensor2 r(x.basis, N);
  for (auto& [ka, va] : x.c)
    for (auto& [kb, vb] : y.c) {
      if (size(ka.first) + size(ka.second) + size(kb.first) + size(kb.second) > N) continue;
      Scalar w = va * vb;
      if (x.basis == Basis::PowerSum) {
        r.add(merge_parts(ka.first, kb.first), merge_parts(ka.second, kb.second), w);
        continue;
      }
      const auto& L = lr_coefficients(ka.first, kb.first);
      const auto& R = lr_coefficients(ka.second, kb.second);
      for (auto& [l, cl] : L)
        for (auto& [rr, cr] : R) r.add(l, rr, w * QField(cl * cr));
    }
  return r;
}

namespace {
// all (mu, nu) with c^lam_{mu nu} != 0
std::vector<std::tuple<Partition, Partition, long>> lr_splittings(const Partition& lam) {
  static std::mutex m;
  static std::map<Partition, std::vector<std::tuple<Partition, Partition, long>>> cache;
  {
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(lam);
    if (it != cache.end()) return it->second;
  }
  std::vector<std::tuple<Partition, Partition, long>> out;
  int n = size(lam);
  for (int k = 0; k <= n; ++k)
    for (auto& mu : partitions_of(k)) {
      if (!contains(lam, mu)) continue;
      for (auto& nu : partitions_of(n - k)) {
        if (!contains(lam, nu)) continue;
        const auto& lr = lr_coefficients(mu, nu);
        auto it = lr.find(lam);
        if (it != lr.end()) out.emplace_back(mu, nu, it->second);
      }
    }
  std::lock_guard<std::mutex> lock(m);
  cache[lam] = out;
  return out;
}

// subsets of a multiset of parts, as (left, right) splits with multiplicity
void split_parts(const Partition& p, size_t i, Partition& l, Partition& r,
                 std::vector<std::pair<Partition, Partition>>& out) {
  if (i == p.size()) {
    out.emplace_back(l, r);
    return;
  }
  l.push_back(p[i]);
  split_parts(p, i + 1, l, r, out);
  l.pop_back();
  r.push_back(p[i]);
  split_parts(p, i + 1, l, r, out);
  r.pop_back();
}
}  // namespace

Tensor2 coproduct(const SymSeries& x) {
  Tensor2 r(x.basis, x.N);
  for (auto& [lam, v] : x.c) {
    if (x.basis == Basis::Schur) {
      for (auto& [mu, nu, cnt] : lr_splittings(lam)) r.add(mu, nu, v * QField(cnt));
    } else {
      // p_k primitive: Delta p_mu = prod (p_k (x) 1 + 1 (x) p_k)
      std::vector<std::pair<Partition, Partition>> splits;
      Partition l, rr;
      split_parts(lam, 0, l, rr, splits);
      for (auto& [a, b] : splits) r.add(a, b, v);
    }
  }
  return r;
}

Tensor2 to_basis(const Tensor2& x, Basis b) {
  if (x.basis == b) return x;
  Tensor2 r(b, x.N);
  for (auto& [k, v] : x.c) {
    SymSeries L = to_basis(SymSeries::single(x.basis, x.N, k.first), b);
    SymSeries R = to_basis(SymSeries::single(x.basis, x.N, k.second), b);
    for (auto& [a, va] : L.c)
      for (auto& [bb, vb] : R.c) r.add(a, bb, v * va * vb);
  }
  return r;
}

Tensor3 coassoc_left(const SymSeries& x) {
  Tensor3 out;
  for (auto& [k, v] : coproduct(x).c) {
    Tensor2 d = coproduct(SymSeries::single(x.basis, x.N, k.first));
    for (auto& [kk, vv] : d.c) {
      auto& slot = out[{kk.first, kk.second, k.second}];
      slot += v * vv;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

Tensor3 coassoc_right(const SymSeries& x) {
  Tensor3 out;
  for (auto& [k, v] : coproduct(x).c) {
    Tensor2 d = coproduct(SymSeries::single(x.basis, x.N, k.second));
    for (auto& [kk, vv] : d.c) {
      auto& slot = out[{k.first, kk.first, kk.second}];
      slot += v * vv;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace skein
