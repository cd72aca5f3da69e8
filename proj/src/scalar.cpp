#include "skein/scalar.hpp"

#include <algorithm>
#include <stdexcept>

namespace skein {

std::string Mono::str() const {
  static const char* names[4] = {"a", "a1", "a2", "xi"};
  std::string out;
  for (int i = 0; i < 4; ++i) {
    int x = e[i];
    if (x == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (i == VXI) {
      if (x != 1) out += "^" + std::to_string(x);
    } else if (x % 2 == 0) {
      if (x != 2) out += "^" + std::to_string(x / 2);
    } else {
      out += "^(" + std::to_string(x) + "/2)";
    }
  }
  return out;
}

Scalar::Scalar(const QField& c) {
  if (!c.is_zero()) t_.emplace_back(Mono(), c);
}

Scalar::Scalar(const QField& c, const Mono& m) {
  if (!c.is_zero()) t_.emplace_back(m, c);
}

QField Scalar::constant() const {
  if (!is_constant()) throw std::domain_error("scalar depends on a, a1, a2 or xi: " + str());
  return t_.empty() ? QField() : t_[0].second;
}

QField Scalar::coeff(const Mono& m) const {
  auto it = std::lower_bound(t_.begin(), t_.end(), m, [](auto& p, const Mono& k) { return p.first < k; });
  if (it != t_.end() && it->first == m) return it->second;
  return QField();
}

int Scalar::max_xi() const {
  int r = 0;
  bool any = false;
  for (auto& [m, c] : t_) {
    r = any ? std::max(r, m.e[VXI]) : m.e[VXI];
    any = true;
  }
  return r;
}

int Scalar::min_xi() const {
  int r = 0;
  bool any = false;
  for (auto& [m, c] : t_) {
    r = any ? std::min(r, m.e[VXI]) : m.e[VXI];
    any = true;
  }
  return r;
}

Scalar Scalar::xi_part(int d) const {
  Scalar r;
  for (auto& p : t_)
    if (p.first.e[VXI] == d) r.t_.push_back(p);
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (size_t i = 0; i < t_.size(); ++i)
    if (t_[i].first != o.t_[i].first || t_[i].second != o.t_[i].second) return false;
  return true;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& p : r.t_) p.second = -p.second;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.t_.empty()) return *this;
  if (t_.empty()) return *this = o;
  if (t_.size() == 1 && o.t_.size() == 1 && t_[0].first == o.t_[0].first) {
    t_[0].second += o.t_[0].second;
    if (t_[0].second.is_zero()) t_.clear();
    return *this;
  }
  std::vector<std::pair<Mono, QField>> r;
  r.reserve(t_.size() + o.t_.size());
  size_t i = 0, j = 0;
  while (i < t_.size() || j < o.t_.size()) {
    if (j == o.t_.size() || (i < t_.size() && t_[i].first < o.t_[j].first)) {
      r.push_back(std::move(t_[i++]));
    } else if (i == t_.size() || o.t_[j].first < t_[i].first) {
      r.push_back(o.t_[j++]);
    } else {
      QField c = t_[i].second + o.t_[j].second;
      if (!c.is_zero()) r.emplace_back(t_[i].first, std::move(c));
      ++i, ++j;
    }
  }
  t_ = std::move(r);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar r;
  if (a.t_.empty() || b.t_.empty()) return r;
  if (a.t_.size() == 1 && b.t_.size() == 1) {
    r.t_.emplace_back(a.t_[0].first * b.t_[0].first, a.t_[0].second * b.t_[0].second);
    return r;
  }
  std::map<Mono, QField> acc;
  for (auto& [ma, ca] : a.t_)
    for (auto& [mb, cb] : b.t_) acc[ma * mb] += ca * cb;
  for (auto& [m, c] : acc)
    if (!c.is_zero()) r.t_.emplace_back(m, std::move(c));
  return r;
}

Scalar Scalar::operator*(const QField& k) const {
  if (k.is_zero()) return Scalar();
  Scalar r = *this;
  for (auto& p : r.t_) p.second *= k;
  return r;
}

Scalar Scalar::inverse() const {
  if (t_.size() != 1) throw std::domain_error("cannot invert multi-term scalar: " + str());
  return Scalar(t_[0].second.inverse(), t_[0].first.inv());
}

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r(1), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

std::string Scalar::str() const {
  if (t_.empty()) return "0";
  if (t_.size() == 1 && t_[0].first.is_one()) return t_[0].second.str();
  Den L = t_[0].second.den();
  for (size_t i = 1; i < t_.size(); ++i) L = den_lcm(L, t_[i].second.den());
  ZPoly D = L.expand();
  int lo = D.valuation(), hi = D.deg();
  int k = (lo + hi) / 2;
  std::string ns;
  int nterms = 0;
  // monomials in descending order reads more naturally
  for (size_t idx = t_.size(); idx-- > 0;) {
    const auto& [m, c] = t_[idx];
    ZPoly p = c.num() * den_cofactor(L, c.den());
    std::string tail = m.str();
    for (size_t i = p.c.size(); i-- > 0;) {
      if (p.c[i] == 0) continue;
      bool neg = p.c[i] < 0;
      ns += ns.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      ns += render_laurent_term(p.c[i], static_cast<int>(i) - k, tail);
      ++nterms;
    }
  }
  int dterms = 0;
  for (auto& x : D.c) dterms += (x != 0);
  if (dterms == 1 && D.lead() == 1) return ns;
  std::string ds;
  for (size_t i = D.c.size(); i-- > 0;) {
    if (D.c[i] == 0) continue;
    bool neg = D.c[i] < 0;
    ds += ds.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    ds += render_laurent_term(D.c[i], static_cast<int>(i) - k, "");
  }
  if (nterms > 1) ns = "(" + ns + ")";
  if (dterms > 1 || ds.find('*') != std::string::npos) ds = "(" + ds + ")";
  return ns + "/" + ds;
}

namespace {

// v^(halves/2); half powers need a perfect-square single term
Scalar half_power(const Scalar& v, int halves, const std::string& name) {
  if (halves % 2 == 0) return v.pow(halves / 2);
  if (v.terms().size() != 1) throw std::domain_error("half power of multi-term binding for " + name);
  const auto& [m, c] = v.terms()[0];
  Mono r;
  for (int i = 0; i < 4; ++i) {
    if (i == VXI) {
      if (m.e[i] % 2) throw std::domain_error("half power of odd xi power for " + name);
      r.e[i] = m.e[i] / 2;
    } else {
      if (m.e[i] % 2) {
        // a^(1/2) -> a^(1/4) is not representable
        throw std::domain_error("quarter power required for binding of " + name);
      }
      r.e[i] = m.e[i] / 2;
    }
  }
  if (!c.is_monomial()) throw std::domain_error("half power of non-monomial coefficient for " + name);
  int d = c.num().valuation() - c.den().sp;
  mpq_class k(c.num().c[c.num().valuation()], c.den().c);
  k.canonicalize();
  if (d % 2 || k != 1) throw std::domain_error("half power of " + c.str() + " for " + name);
  Scalar root(QField::s_pow(d / 2), r);
  return root.pow(halves);
}

}  // namespace

Scalar specialize(const Scalar& x, const Bindings& b) {
  static const char* names[4] = {"a", "a1", "a2", "xi"};
  for (auto& [k, v] : b)
    if (k != "a" && k != "a1" && k != "a2" && k != "xi" && k != "s")
      throw std::invalid_argument("unknown variable in bindings: " + k);
  const Scalar* sv = nullptr;
  auto sit = b.find("s");
  QField sval;
  if (sit != b.end()) {
    sv = &sit->second;
    sval = sv->constant();
  }
  Scalar out;
  for (auto& [m, c] : x.terms()) {
    Scalar term(sv ? c.subs(sval) : c);
    Mono keep;
    for (int i = 0; i < 4; ++i) {
      if (m.e[i] == 0) continue;
      auto it = b.find(names[i]);
      if (it == b.end()) {
        keep.e[i] = m.e[i];
        continue;
      }
      if (i == VXI)
        term *= it->second.pow(m.e[i]);
      else
        term *= half_power(it->second, m.e[i], names[i]);
    }
    out += term * Scalar::mono(keep);
  }
  return out;
}

Scalar quantum_integer(int n) { return Scalar(qint(n)); }
Scalar quantum_bracket(int n) { return Scalar(qbracket(n)); }

}  // namespace skein
