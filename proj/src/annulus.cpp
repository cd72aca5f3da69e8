#include "skein/annulus.hpp"

#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace skein {

BraidWord BraidWord::parse(const std::string& text, int n) {
  BraidWord b;
  std::stringstream ss(text);
  std::string tok;
  int maxg = 0;
  while (ss >> tok) {
    int sign = 1;
    size_t k = 0;
    if (tok[k] == '-') sign = -1, ++k;
    if (k < tok.size() && (tok[k] == 's' || tok[k] == 'S')) ++k;
    if (k >= tok.size()) throw std::invalid_argument("bad braid token: " + tok);
    int g = std::stoi(tok.substr(k));
    if (g < 1) throw std::invalid_argument("bad braid generator: " + tok);
    b.word.push_back(sign * g);
    maxg = std::max(maxg, g);
  }
  b.n = n > 0 ? n : maxg + 1;
  b.validate();
  return b;
}

std::string BraidWord::str() const {
  std::string out;
  for (int g : word) out += (out.empty() ? "" : " ") + std::string(g < 0 ? "-" : "") + "s" + std::to_string(std::abs(g));
  return out.empty() ? "id" : out;
}

void BraidWord::validate() const {
  if (n < 1) throw std::invalid_argument("braid needs at least one strand");
  for (int g : word)
    if (g == 0 || std::abs(g) > n - 1) throw std::invalid_argument("generator out of range in braid " + str());
}

BraidWord aij_braid(int i, int j) {
  BraidWord b;
  b.n = i + j + 1;
  for (int k = 1; k <= i; ++k) b.word.push_back(k);
  for (int k = i + 1; k <= i + j; ++k) b.word.push_back(-k);
  return b;
}

QField content_poly(const Partition& lam, int sign) {
  QField r;
  for (auto& c : cells(lam)) r += QField::s_pow(2 * sign * c.content);
  return r;
}

Scalar meridian_eigenvalue(const Partition& lam, int orientation) {
  Scalar a = sA();
  Scalar base = (a - a.inverse()) / sZ();
  if (orientation > 0) return base + sZ() * a * Scalar(content_poly(lam, 1));
  if (orientation < 0) return base - sZ() * a.inverse() * Scalar(content_poly(lam, -1));
  throw std::invalid_argument("orientation must be +1 or -1");
}

AnnulusElement apply_meridian(const AnnulusElement& x, int orientation) {
  if (x.basis != Basis::Schur) throw std::invalid_argument("apply_meridian needs the Schur basis");
  AnnulusElement r(Basis::Schur, x.N);
  for (auto& [lam, v] : x.c) r.add(lam, v * meridian_eigenvalue(lam, orientation));
  return r;
}

AnnulusElement power_sum_element(int d, int N) {
  if (d < 1) throw std::invalid_argument("power sum index must be positive");
  return powersum_to_schur(SymSeries::single(Basis::PowerSum, N < 0 ? d : N, {d}));
}

const AnnulusElement& aij(int i, int j) {
  static std::mutex m;
  static std::map<std::pair<int, int>, AnnulusElement> table;
  std::lock_guard<std::mutex> lock(m);
  auto it = table.find({i, j});
  if (it != table.end()) return it->second;
  int target = i + j + 1;
  for (int n = 1; n <= target; ++n) {
    if (table.count({0, n - 1})) continue;
    // differences along the antidiagonal
    std::vector<AnnulusElement> D;
    for (int k = 0; k + 1 < n; ++k) {
      AnnulusElement x = table.at({k, 0}), y = table.at({0, n - 2 - k});
      x.N = y.N = n;
      AnnulusElement prod = multiply(x, y);
      D.push_back(prod * sZ());
    }
    AnnulusElement x0 = power_sum_element(n, n) * quantum_integer(n);
    for (int k = 0; k + 1 < n; ++k) x0 -= D[k] * Scalar(n - 1 - k);
    x0 = x0 * Scalar(QField::rational(mpq_class(1, n)));
    AnnulusElement cur = x0;
    for (int k = 0; k < n; ++k) {
      table[{k, n - 1 - k}] = cur;
      if (k + 1 < n) cur += D[k];
    }
  }
  return table.at({i, j});
}

Scalar framed_unknot_value(const Partition& lam, const Scalar& A) {
  Scalar r(1);
  Scalar Ai = A.inverse();
  for (auto& c : cells(lam)) r *= (A * sS(c.content) - Ai * sS(-c.content)) / Scalar(qbracket(c.hook));
  return r;
}

// ---- Hecke algebra

namespace {

std::vector<std::vector<int>> standard_tableaux(const Partition& lam) {
  // entry k -> (row) ; we store for each tableau the row of each number
  std::vector<std::vector<int>> out;
  int n = size(lam);
  std::vector<int> fill(lam.size(), 0), rows(n);
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      out.push_back(rows);
      return;
    }
    for (size_t r = 0; r < lam.size(); ++r) {
      if (fill[r] >= lam[r]) continue;
      if (r > 0 && fill[r - 1] <= fill[r]) continue;
      rows[k] = static_cast<int>(r);
      ++fill[r];
      rec(k + 1);
      --fill[r];
    }
  };
  rec(0);
  return out;
}

}  // namespace

const HeckeRep& hecke_rep(const Partition& lam) {
  static std::mutex m;
  static std::map<Partition, HeckeRep> cache;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(lam);
  if (it != cache.end()) return it->second;
  HeckeRep rep;
  rep.shape = lam;
  auto rows = standard_tableaux(lam);
  int n = size(lam);
  int d = static_cast<int>(rows.size());
  // columns from rows: column of k is the number of earlier entries in its row
  std::vector<std::vector<int>> cols(d, std::vector<int>(n));
  for (int t = 0; t < d; ++t) {
    std::vector<int> cnt(lam.size(), 0);
    for (int k = 0; k < n; ++k) cols[t][k] = cnt[rows[t][k]]++;
  }
  std::map<std::vector<int>, int> index;
  for (int t = 0; t < d; ++t) index[rows[t]] = t;
  rep.tableaux = rows;
  QField z = zed();
  for (int i = 1; i < n; ++i) {
    Matrix T(d * d), Ti(d * d);
    for (int t = 0; t < d; ++t) {
      int a = i - 1, b = i;  // numbers i and i+1, zero-based
      int ca = cols[t][a] - rows[t][a];
      int cb = cols[t][b] - rows[t][b];
      int diff = cb - ca;
      QField at = z / (QField(1) - QField::s_pow(-2 * diff));
      T[t * d + t] = at;
      if (rows[t][a] == rows[t][b] || cols[t][a] == cols[t][b]) continue;
      std::vector<int> sw = rows[t];
      std::swap(sw[a], sw[b]);
      int u = index.at(sw);
      if (rows[t][a] < rows[t][b]) {
        // i in an earlier row: T t = a_t t + t'
        T[u * d + t] = QField(1);
      } else {
        // T t' = a_t' t' + (1 + a_t a_t') t
        QField au = z / (QField(1) - QField::s_pow(2 * diff));
        T[u * d + t] = QField(1) + at * au;
      }
    }
    for (int k = 0; k < d * d; ++k) Ti[k] = T[k];
    for (int t = 0; t < d; ++t) Ti[t * d + t] -= z;
    rep.gens.push_back(T);
    rep.inv_gens.push_back(Ti);
  }
  return cache.emplace(lam, std::move(rep)).first->second;
}

Matrix mat_mul(const Matrix& a, const Matrix& b, int d) {
  Matrix r(d * d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      const QField& x = a[i * d + k];
      if (x.is_zero()) continue;
      for (int j = 0; j < d; ++j) {
        const QField& y = b[k * d + j];
        if (!y.is_zero()) r[i * d + j] += x * y;
      }
    }
  return r;
}

Matrix braid_matrix(const BraidWord& b, const HeckeRep& rep) {
  int d = rep.dim();
  Matrix M(d * d);
  for (int i = 0; i < d; ++i) M[i * d + i] = QField(1);
  for (int g : b.word) {
    int k = std::abs(g) - 1;
    M = mat_mul(M, g > 0 ? rep.gens[k] : rep.inv_gens[k], d);
  }
  return M;
}

QField hecke_trace(const BraidWord& b, const Partition& lam) {
  if (size(lam) != b.n) throw std::invalid_argument("partition size differs from strand count");
  const HeckeRep& rep = hecke_rep(lam);
  if (b.word.empty()) return QField(rep.dim());
  Matrix M = braid_matrix(b, rep);
  int d = rep.dim();
  QField tr;
  for (int i = 0; i < d; ++i) tr += M[i * d + i];
  return tr;
}

AnnulusElement hecke_closure(const BraidWord& b, int bound) {
  b.validate();
  if (b.n > bound)
    throw std::invalid_argument("braid has " + std::to_string(b.n) + " strands, bound is " + std::to_string(bound));
  AnnulusElement r(Basis::Schur, b.n);
  for (auto& lam : partitions_of(b.n)) r.add(lam, Scalar(hecke_trace(b, lam)));
  return r;
}

VerificationReport verify_aij_hecke(int max_sum) {
  Stopwatch sw;
  VerificationReport r("A_ij recursion vs Hecke closure", "i+j <= " + std::to_string(max_sum));
  for (int n = 0; n <= max_sum; ++n)
    for (int i = 0; i <= n; ++i) {
      AnnulusElement a = aij(i, n - i), h = hecke_closure(aij_braid(i, n - i));
      for (auto& lam : partitions_of(n + 1))
        r.check("A(" + std::to_string(i) + "," + std::to_string(n - i) + ") W" + part_str(lam), a.at(lam) - h.at(lam));
    }
  AnnulusElement s1 = hecke_closure(BraidWord::parse("s1"));
  r.check("sigma1 W(2)", s1.at({2}) - sS(1));
  r.check("sigma1 W(1,1)", s1.at({1, 1}) + sS(-1));
  r.seconds = sw.seconds();
  return r;
}

}  // namespace skein
