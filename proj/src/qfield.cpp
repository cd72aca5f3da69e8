#include "skein/qfield.hpp"

#include <algorithm>
#include <stdexcept>

namespace skein {

namespace {

ZPoly cyc_product(const std::vector<std::pair<int, int>>& cyc) {
  ZPoly r(1);
  for (auto [m, e] : cyc) r = r * pow(cyclotomic(m), e);
  return r;
}

mpz_class zlcm(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Den den_mul(const Den& a, const Den& b) {
  Den r;
  r.c = a.c * b.c;
  r.sp = a.sp + b.sp;
  size_t i = 0, j = 0;
  while (i < a.cyc.size() || j < b.cyc.size()) {
    if (j == b.cyc.size() || (i < a.cyc.size() && a.cyc[i].first < b.cyc[j].first)) {
      r.cyc.push_back(a.cyc[i++]);
    } else if (i == a.cyc.size() || b.cyc[j].first < a.cyc[i].first) {
      r.cyc.push_back(b.cyc[j++]);
    } else {
      r.cyc.emplace_back(a.cyc[i].first, a.cyc[i].second + b.cyc[j].second);
      ++i, ++j;
    }
  }
  if (a.rest.is_one())
    r.rest = b.rest;
  else if (b.rest.is_one())
    r.rest = a.rest;
  else
    r.rest = a.rest * b.rest;
  return r;
}

int cyc_exp(const Den& d, int m) {
  for (auto [mm, e] : d.cyc)
    if (mm == m) return e;
  return 0;
}

// L / d as a polynomial, where d divides L
ZPoly cofactor(const Den& L, const Den& d) {
  ZPoly r(L.c / d.c);
  if (L.sp > d.sp) r = r.shifted(L.sp - d.sp);
  for (auto [m, e] : L.cyc) {
    int k = e - cyc_exp(d, m);
    if (k > 0) r = r * pow(cyclotomic(m), k);
  }
  if (!L.rest.is_one() && L.rest != d.rest) r = r * *div_exact(L.rest, d.rest);
  return r;
}

}  // namespace

Den den_lcm(const Den& x, const Den& y) {
  Den L;
  L.c = zlcm(x.c, y.c);
  L.sp = std::max(x.sp, y.sp);
  size_t i = 0, j = 0;
  const auto &a = x.cyc, &b = y.cyc;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first))
      L.cyc.push_back(a[i++]);
    else if (i == a.size() || b[j].first < a[i].first)
      L.cyc.push_back(b[j++]);
    else {
      L.cyc.emplace_back(a[i].first, std::max(a[i].second, b[j].second));
      ++i, ++j;
    }
  }
  if (x.rest.is_one())
    L.rest = y.rest;
  else if (y.rest.is_one() || y.rest == x.rest)
    L.rest = x.rest;
  else {
    ZPoly g = primitive_part(gcd(x.rest, y.rest));
    L.rest = x.rest * *div_exact(y.rest, g);
  }
  return L;
}

ZPoly den_cofactor(const Den& L, const Den& d) { return cofactor(L, d); }

ZPoly Den::expand() const {
  ZPoly r(c);
  r = r.shifted(sp);
  if (!cyc.empty()) r = r * cyc_product(cyc);
  if (!rest.is_one()) r = r * rest;
  return r;
}

Den factor_poly(const ZPoly& p, int& sign) {
  if (p.zero()) throw std::domain_error("division by zero");
  Den d;
  sign = p.lead() > 0 ? 1 : -1;
  d.c = p.content();
  ZPoly q = p.div_scalar(d.c * sign);
  d.sp = q.valuation();
  q = q.shifted(-d.sp);
  int deg0 = q.deg();
  long bound = 2L * deg0 * deg0 + 2;
  for (long m = 1; m <= bound && q.deg() > 0; ++m) {
    if (euler_phi(static_cast<int>(m)) > q.deg()) continue;
    const ZPoly& phi = cyclotomic(static_cast<int>(m));
    int e = 0;
    while (q.deg() >= phi.deg()) {
      auto t = div_exact(q, phi);
      if (!t) break;
      q = std::move(*t);
      ++e;
    }
    if (e) d.cyc.emplace_back(static_cast<int>(m), e);
  }
  d.rest = q;
  return d;
}

QField QField::make(ZPoly n, Den d) {
  QField r;
  r.num_ = std::move(n);
  r.den_ = std::move(d);
  r.reduce();
  return r;
}

void QField::reduce() {
  if (num_.zero()) {
    den_ = Den();
    return;
  }
  if (den_.sp > 0) {
    int v = std::min(num_.valuation(), den_.sp);
    if (v) {
      num_ = num_.shifted(-v);
      den_.sp -= v;
    }
  }
  if (!den_.cyc.empty()) {
    for (auto& [m, e] : den_.cyc) {
      if (m == 1 && num_.eval(1) != 0) continue;
      if (m == 2 && num_.eval(-1) != 0) continue;
      const ZPoly& phi = cyclotomic(m);
      while (e > 0) {
        auto q = div_exact(num_, phi);
        if (!q) break;
        num_ = std::move(*q);
        --e;
      }
    }
    den_.cyc.erase(std::remove_if(den_.cyc.begin(), den_.cyc.end(), [](auto& p) { return p.second == 0; }),
                   den_.cyc.end());
  }
  if (!den_.rest.is_one()) {
    ZPoly g = primitive_part(gcd(num_, den_.rest));
    if (g.deg() > 0) {
      num_ = *div_exact(num_, g);
      den_.rest = *div_exact(den_.rest, g);
    }
  }
  if (den_.c != 1) {
    mpz_class g = num_.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.c.get_mpz_t());
    if (g != 1) {
      num_ = num_.div_scalar(g);
      den_.c /= g;
    }
  }
}

QField QField::rational(const mpq_class& v) {
  Den d;
  d.c = v.get_den();
  return make(ZPoly(v.get_num()), d);
}

QField QField::laurent(const ZPoly& p, int lo) {
  if (lo >= 0) return QField::make(p.shifted(lo), Den());
  Den d;
  d.sp = -lo;
  return make(p, d);
}

QField QField::s_pow(int k) { return laurent(ZPoly(1), k); }

QField QField::ratio(const ZPoly& n, const ZPoly& d) {
  int sign = 1;
  Den dd = factor_poly(d, sign);
  return make(sign > 0 ? n : -n, dd);
}

mpq_class QField::to_rational() const {
  if (!is_rational()) throw std::domain_error("not a rational constant: " + str());
  mpq_class r(num_.zero() ? mpz_class(0) : num_.c[0], den_.c);
  r.canonicalize();
  return r;
}

bool QField::is_monomial() const {
  if (!is_laurent() || num_.zero()) return false;
  int n = 0;
  for (auto& x : num_.c) n += (x != 0);
  return n == 1;
}

QField QField::operator-() const {
  QField r = *this;
  r.num_ = -r.num_;
  return r;
}

QField& QField::operator+=(const QField& o) {
  if (o.num_.zero()) return *this;
  if (num_.zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    reduce();
    return *this;
  }
  Den L = den_lcm(den_, o.den_);
  ZPoly n = num_ * cofactor(L, den_);
  n += o.num_ * cofactor(L, o.den_);
  num_ = std::move(n);
  den_ = std::move(L);
  reduce();
  return *this;
}

QField& QField::operator-=(const QField& o) { return *this += -o; }

QField operator*(const QField& a, const QField& b) {
  if (a.num_.zero() || b.num_.zero()) return QField();
  if (b.den_.is_one() && b.num_.is_one()) return a;
  if (a.den_.is_one() && a.num_.is_one()) return b;
  QField x = QField::make(a.num_, b.den_);
  QField y = QField::make(b.num_, a.den_);
  QField r;
  r.num_ = x.num_ * y.num_;
  r.den_ = den_mul(x.den_, y.den_);
  return r;
}

QField& QField::operator*=(const QField& o) { return *this = *this * o; }

QField QField::inverse() const {
  if (num_.zero()) throw std::domain_error("division by zero in Q(s)");
  int sign = 1;
  Den d = factor_poly(num_, sign);
  QField r;
  r.num_ = den_.expand();
  if (sign < 0) r.num_ = -r.num_;
  r.den_ = std::move(d);
  return r;
}

QField QField::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  QField r(1), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

namespace {
// p(s^k) with k != 0, returned as Laurent (poly, low power)
std::pair<ZPoly, int> poly_at_power(const ZPoly& p, int k) {
  if (p.zero()) return {p, 0};
  ZPoly r;
  int n = p.deg();
  if (k > 0) {
    r.c.assign(n * k + 1, mpz_class(0));
    for (int i = 0; i <= n; ++i) r.c[i * k] = p.c[i];
    r.trim();
    return {r, 0};
  }
  int a = -k;
  r.c.assign(n * a + 1, mpz_class(0));
  for (int i = 0; i <= n; ++i) r.c[(n - i) * a] = p.c[i];
  r.trim();
  return {r, -n * a};
}
}  // namespace

QField QField::subs_power(int k) const {
  if (k == 0) throw std::domain_error("subs_power: k = 0");
  if (k == 1) return *this;
  auto [n, ln] = poly_at_power(num_, k);
  auto [d, ld] = poly_at_power(den_.expand(), k);
  return QField::laurent(n, ln) / QField::laurent(d, ld);
}

namespace {
QField horner(const ZPoly& p, const QField& v) {
  QField r;
  for (size_t i = p.c.size(); i-- > 0;) {
    r *= v;
    if (p.c[i] != 0) r += QField(p.c[i]);
  }
  return r;
}
}  // namespace

QField QField::subs(const QField& v) const {
  auto fail = [&](const std::string& factor) {
    throw std::domain_error("division by zero: denominator factor " + factor + " of " + str() +
                            " vanishes at s = " + v.str());
  };
  if (den_.sp > 0 && v.is_zero()) fail("s");
  for (auto [m, e] : den_.cyc)
    if (horner(cyclotomic(m), v).is_zero()) fail("(" + cyclotomic(m).str() + ")");
  if (!den_.rest.is_one() && horner(den_.rest, v).is_zero()) fail("(" + den_.rest.str() + ")");
  return horner(num_, v) / horner(den_.expand(), v);
}

std::string render_laurent_term(const mpz_class& coef, int spow, const std::string& tail) {
  std::vector<std::string> f;
  mpz_class a = abs(coef);
  if (a != 1 || (spow == 0 && tail.empty())) f.push_back(a.get_str());
  if (!tail.empty()) f.push_back(tail);
  if (spow == 1)
    f.push_back("s");
  else if (spow != 0)
    f.push_back("s^" + std::to_string(spow));
  std::string out;
  for (size_t i = 0; i < f.size(); ++i) out += (i ? "*" : "") + f[i];
  return out;
}

std::string QField::str() const {
  if (num_.zero()) return "0";
  ZPoly D = den_.expand();
  int lo = D.valuation(), hi = D.deg();
  int k = (lo + hi) >> 1;
  if (lo + hi < 0) k = -((-(lo + hi) + 1) >> 1);
  auto laur = [&](const ZPoly& p, int shift) {
    std::string out;
    for (size_t i = p.c.size(); i-- > 0;) {
      if (p.c[i] == 0) continue;
      bool neg = p.c[i] < 0;
      out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      out += render_laurent_term(p.c[i], static_cast<int>(i) - shift, "");
    }
    return out;
  };
  auto terms = [](const ZPoly& p) {
    int n = 0;
    for (auto& x : p.c) n += (x != 0);
    return n;
  };
  std::string ns = laur(num_, k);
  if (terms(D) == 1 && D.lead() == 1) return ns;
  std::string ds = laur(D, k);
  if (terms(num_) > 1) ns = "(" + ns + ")";
  if (terms(D) > 1 || ds.find('*') != std::string::npos) ds = "(" + ds + ")";
  return ns + "/" + ds;
}

QField qbracket(int n) {
  if (n == 0) return QField();
  if (n < 0) return -qbracket(-n);
  ZPoly p = ZPoly::monomial(1, 2 * n) - ZPoly(1);
  return QField::laurent(p, -n);
}

QField zed() { return qbracket(1); }

QField qint(int n) {
  if (n == 0) return QField();
  if (n < 0) return -qint(-n);
  // s^(n-1) + s^(n-3) + ... + s^(1-n)
  ZPoly p;
  p.c.assign(2 * n - 1, mpz_class(0));
  for (int i = 0; i < n; ++i) p.c[2 * i] = 1;
  return QField::laurent(p, 1 - n);
}

}  // namespace skein
