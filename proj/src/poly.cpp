#include "skein/poly.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace skein {

ZPoly ZPoly::monomial(const mpz_class& coef, int deg) {
  ZPoly p;
  if (coef == 0) return p;
  p.c.assign(deg + 1, mpz_class(0));
  p.c[deg] = coef;
  return p;
}

int ZPoly::valuation() const {
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) return static_cast<int>(i);
  return 0;
}

void ZPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

bool ZPoly::operator<(const ZPoly& o) const {
  if (c.size() != o.c.size()) return c.size() < o.c.size();
  for (size_t i = c.size(); i-- > 0;) {
    int k = cmp(c[i], o.c[i]);
    if (k != 0) return k < 0;
  }
  return false;
}

ZPoly ZPoly::operator-() const {
  ZPoly r = *this;
  for (auto& x : r.c) x = -x;
  return r;
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
  if (o.c.size() > c.size()) c.resize(o.c.size(), mpz_class(0));
  for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
  trim();
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
  if (o.c.size() > c.size()) c.resize(o.c.size(), mpz_class(0));
  for (size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
  trim();
  return *this;
}

ZPoly& ZPoly::operator*=(const mpz_class& k) {
  if (k == 0) {
    c.clear();
    return *this;
  }
  for (auto& x : c) x *= k;
  return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  ZPoly r;
  if (a.zero() || b.zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) {
      if (b.c[j] == 0) continue;
      mpz_addmul(r.c[i + j].get_mpz_t(), a.c[i].get_mpz_t(), b.c[j].get_mpz_t());
    }
  }
  r.trim();
  return r;
}

ZPoly ZPoly::shifted(int k) const {
  if (zero() || k == 0) return *this;
  ZPoly r;
  if (k > 0) {
    r.c.assign(k, mpz_class(0));
    r.c.insert(r.c.end(), c.begin(), c.end());
    return r;
  }
  if (valuation() < -k) throw std::logic_error("ZPoly::shifted: not divisible by s");
  r.c.assign(c.begin() + (-k), c.end());
  return r;
}

ZPoly ZPoly::div_scalar(const mpz_class& k) const {
  ZPoly r = *this;
  for (auto& x : r.c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), k.get_mpz_t());
  return r;
}

mpz_class ZPoly::content() const {
  mpz_class g = 0;
  for (const auto& x : c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

mpz_class ZPoly::eval(const mpz_class& x) const {
  mpz_class r = 0;
  for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
  return r;
}

std::string ZPoly::str(const std::string& var) const {
  if (zero()) return "0";
  std::string out;
  for (size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    mpz_class a = abs(c[i]);
    bool neg = c[i] < 0;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (i == 0 || a != 1) out += a.get_str();
    if (i > 0) {
      if (a != 1) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

ZPoly pow(const ZPoly& p, int e) {
  ZPoly r(1);
  ZPoly b = p;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

std::optional<ZPoly> div_exact(const ZPoly& a, const ZPoly& b) {
  if (b.zero()) throw std::domain_error("polynomial division by zero");
  if (a.zero()) return ZPoly();
  if (a.deg() < b.deg()) return std::nullopt;
  std::vector<mpz_class> r = a.c;
  int db = b.deg();
  ZPoly q;
  q.c.assign(a.deg() - db + 1, mpz_class(0));
  const mpz_class& lb = b.lead();
  bool unit = (lb == 1);
  mpz_class t;
  for (int i = a.deg(); i >= db; --i) {
    if (r[i] == 0) continue;
    if (unit) {
      t = r[i];
    } else {
      if (!mpz_divisible_p(r[i].get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
      mpz_divexact(t.get_mpz_t(), r[i].get_mpz_t(), lb.get_mpz_t());
    }
    q.c[i - db] = t;
    for (int j = 0; j <= db; ++j)
      if (b.c[j] != 0) mpz_submul(r[i - db + j].get_mpz_t(), t.get_mpz_t(), b.c[j].get_mpz_t());
  }
  for (int i = 0; i < db; ++i)
    if (r[i] != 0) return std::nullopt;
  q.trim();
  return q;
}

ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a;
  int db = b.deg();
  const mpz_class& lb = b.lead();
  while (!r.zero() && r.deg() >= db) {
    mpz_class lr = r.lead();
    int sh = r.deg() - db;
    r *= lb;
    ZPoly t = b.shifted(sh) * lr;
    r -= t;
  }
  return r;
}

ZPoly primitive_part(const ZPoly& p) {
  if (p.zero()) return p;
  mpz_class g = p.content();
  if (p.lead() < 0) g = -g;
  return p.div_scalar(g);
}

ZPoly gcd(const ZPoly& a0, const ZPoly& b0) {
  if (a0.zero()) return primitive_part(b0) * b0.content();
  if (b0.zero()) return primitive_part(a0) * a0.content();
  mpz_class g;
  mpz_class ca = a0.content(), cb = b0.content();
  mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  ZPoly a = primitive_part(a0), b = primitive_part(b0);
  if (a.deg() < b.deg()) std::swap(a, b);
  while (!b.zero()) {
    if (b.deg() == 0) return ZPoly(g);
    ZPoly r = pseudo_rem(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  return primitive_part(a) * g;
}

int euler_phi(int m) {
  int r = m;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      r -= r / p;
    }
  }
  if (m > 1) r -= r / m;
  return r;
}

const ZPoly& cyclotomic(int m) {
  static std::mutex mu;
  static std::map<int, ZPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  // divisors ascending, so every proper divisor is available when needed
  for (int d = 1; d <= m; ++d) {
    if (m % d || cache.count(d)) continue;
    ZPoly p = ZPoly::monomial(1, d) - ZPoly(1);
    for (int e = 1; e < d; ++e)
      if (d % e == 0) p = *div_exact(p, cache.at(e));
    cache[d] = p;
  }
  return cache.at(m);
}

}  // namespace skein
