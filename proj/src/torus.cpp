#include "skein/torus.hpp"

#include "skein/annulus.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace skein {

std::string LatticeVector::str() const { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

int det(const LatticeVector& x, const LatticeVector& y) { return x.i * y.j - x.j * y.i; }

namespace {
int half_plane(const LatticeVector& v) { return (v.j > 0 || (v.j == 0 && v.i > 0)) ? 0 : 1; }
}  // namespace

bool pbw_less(const LatticeVector& x, const LatticeVector& y) {
  int hx = half_plane(x), hy = half_plane(y);
  if (hx != hy) return hx < hy;
  int d = det(x, y);
  if (d != 0) return d > 0;
  return x.i * x.i + x.j * x.j < y.i * y.i + y.j * y.j;
}

std::pair<QField, LatticeVector> bracket(const LatticeVector& x, const LatticeVector& y) {
  int d = det(x, y);
  if (d == 0) return {QField(), x + y};
  return {qbracket(d), x + y};
}

std::string monomial_str(const PBWMonomial& m) {
  if (m.empty()) return "1";
  std::string out;
  size_t k = 0;
  while (k < m.size()) {
    size_t e = k;
    while (e < m.size() && m[e] == m[k]) ++e;
    out += "P" + m[k].str();
    if (e - k > 1) out += "^" + std::to_string(e - k);
    k = e;
  }
  return out;
}

// ---- straightening

namespace {

using Lin = std::map<PBWMonomial, QField>;

std::mutex memo_mutex;
std::map<std::pair<PBWMonomial, LatticeVector>, Lin> insert_memo;
std::map<std::pair<PBWMonomial, PBWMonomial>, Lin> product_memo;

// M * P_g in normal form; coefficients are Laurent in s
const Lin& insert(const PBWMonomial& M, const LatticeVector& g) {
  auto key = std::make_pair(M, g);
  auto it = insert_memo.find(key);
  if (it != insert_memo.end()) return it->second;
  Lin res;
  if (M.empty() || !pbw_less(g, M.back())) {
    PBWMonomial r = M;
    r.push_back(g);
    res[r] = QField(1);
  } else {
    // M' m g = (M' g) m + {det(m,g)} M' P_{m+g}
    LatticeVector m = M.back();
    PBWMonomial Mp(M.begin(), M.end() - 1);
    Lin a = insert(Mp, g);
    for (auto& [T, c] : a)
      for (auto& [U, d] : insert(T, m)) res[U] += c * d;
    auto [k, v] = bracket(m, g);
    if (!k.is_zero())
      for (auto& [U, d] : insert(Mp, v)) res[U] += k * d;
    for (auto p = res.begin(); p != res.end();) p = p->second.is_zero() ? res.erase(p) : std::next(p);
  }
  return insert_memo.emplace(std::move(key), std::move(res)).first->second;
}

const Lin& mono_product(const PBWMonomial& A, const PBWMonomial& B) {
  auto key = std::make_pair(A, B);
  auto it = product_memo.find(key);
  if (it != product_memo.end()) return it->second;
  Lin cur;
  cur[A] = QField(1);
  for (auto& g : B) {
    Lin nxt;
    for (auto& [T, c] : cur)
      for (auto& [U, d] : insert(T, g)) nxt[U] += c * d;
    for (auto p = nxt.begin(); p != nxt.end();) p = p->second.is_zero() ? nxt.erase(p) : std::next(p);
    cur = std::move(nxt);
  }
  return product_memo.emplace(std::move(key), std::move(cur)).first->second;
}

bool same_cone(const Cone& a, const Cone& b) { return a.wi == b.wi && a.wj == b.wj; }

}  // namespace

size_t straightening_memo_size() {
  std::lock_guard<std::mutex> lock(memo_mutex);
  return insert_memo.size();
}

// ---- TorusElement

TorusElement TorusElement::unit(Cone k, int n) {
  TorusElement r(k, n);
  r.c[{}] = Scalar(1);
  return r;
}

TorusElement TorusElement::gen(const LatticeVector& x, Cone k, int n, const Scalar& v) {
  TorusElement r(k, n);
  r.add({x}, v);
  return r;
}

int TorusElement::weight(const PBWMonomial& m) const {
  int w = 0;
  for (auto& x : m) {
    int wx = cone.weight(x);
    if (wx <= 0) throw std::domain_error("weight functional is not positive on class " + x.str());
    w += wx;
  }
  return w;
}

void TorusElement::add(PBWMonomial m, const Scalar& v) {
  if (v.is_zero()) return;
  for (size_t k = 0; k + 1 < m.size(); ++k)
    if (pbw_less(m[k + 1], m[k])) throw std::invalid_argument("monomial not in PBW order: " + monomial_str(m));
  if (weight(m) > N) return;
  auto it = c.find(m);
  if (it == c.end()) {
    c.emplace(std::move(m), v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) c.erase(it);
}

Scalar TorusElement::at(const PBWMonomial& m) const {
  auto it = c.find(m);
  return it == c.end() ? Scalar() : it->second;
}

TorusElement TorusElement::degree_part(int w) const {
  TorusElement r(cone, N);
  for (auto& [m, v] : c)
    if (weight(m) == w) r.c.emplace(m, v);
  return r;
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
  for (auto& [m, v] : o.c) add(m, v);
  return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) {
  for (auto& [m, v] : o.c) add(m, -v);
  return *this;
}

TorusElement TorusElement::operator*(const Scalar& k) const {
  TorusElement r(cone, N);
  if (k.is_zero()) return r;
  for (auto& [m, v] : c) r.add(m, v * k);
  return r;
}

std::string TorusElement::str() const {
  if (c.empty()) return "0";
  std::string out;
  for (auto& [m, v] : c) {
    if (!out.empty()) out += " + ";
    out += "(" + v.str() + ")*" + monomial_str(m);
  }
  return out;
}

TorusElement multiply(const TorusElement& x, const TorusElement& y) {
  if (!same_cone(x.cone, y.cone)) throw std::invalid_argument("multiply: cone gradings differ");
  TorusElement r(x.cone, std::min(x.N, y.N));
  std::map<PBWMonomial, Scalar> acc;
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    for (auto& [A, ca] : x.c) {
      int wa = x.weight(A);
      for (auto& [B, cb] : y.c) {
        if (wa + y.weight(B) > r.N) continue;
        Scalar cab = ca * cb;
        for (auto& [U, d] : mono_product(A, B)) acc[U] += cab * d;
      }
    }
  }
  for (auto& [U, v] : acc)
    if (!v.is_zero()) r.c.emplace(U, v);
  return r;
}

TorusElement product(const std::vector<TorusElement>& fs) {
  if (fs.empty()) throw std::invalid_argument("empty product");
  TorusElement r = fs[0];
  for (size_t k = 1; k < fs.size(); ++k) r = multiply(r, fs[k]);
  return r;
}

TorusElement commutative_exp(const TorusElement& x) {
  if (!x.at({}).is_zero()) throw std::invalid_argument("exp needs zero constant term");
  for (auto& [m, v] : x.c)
    for (auto& [n, w] : x.c)
      if (det(m.front(), n.front()) != 0) throw std::invalid_argument("exp of non-commuting letters");
  TorusElement r = TorusElement::unit(x.cone, x.N);
  TorusElement term = r;
  for (int k = 1; k <= x.N; ++k) {
    term = multiply(term, x) * Scalar(QField::rational(mpq_class(1, k)));
    if (term.is_zero()) break;
    r += term;
  }
  return r;
}

TorusElement normal_order(const PBWMonomial& word, Cone k, int N,
                          const std::function<size_t(const std::vector<size_t>&)>& choose) {
  std::map<PBWMonomial, QField> work;
  work[word] = QField(1);
  TorusElement r(k, N);
  while (!work.empty()) {
    auto it = work.begin();
    PBWMonomial w = it->first;
    QField c = it->second;
    work.erase(it);
    if (c.is_zero()) continue;
    std::vector<size_t> desc;
    for (size_t p = 0; p + 1 < w.size(); ++p)
      if (pbw_less(w[p + 1], w[p])) desc.push_back(p);
    if (desc.empty()) {
      r.add(w, Scalar(c));
      continue;
    }
    size_t p = choose ? desc.at(choose(desc) % desc.size()) : desc.front();
    // x y = y x + {det(x,y)} P_{x+y}
    auto [b, v] = bracket(w[p], w[p + 1]);
    PBWMonomial sw = w;
    std::swap(sw[p], sw[p + 1]);
    work[sw] += c;
    if (!b.is_zero()) {
      PBWMonomial sh(w.begin(), w.begin() + p);
      sh.push_back(v);
      sh.insert(sh.end(), w.begin() + p + 2, w.end());
      work[sh] += c * b;
    }
  }
  return r;
}

TorusElement dilog_element(const LatticeVector& x, const Scalar& xi, int N, Cone k) {
  int w = k.weight(x);
  if (w <= 0) throw std::domain_error("dilog_element: class " + x.str() + " has nonpositive weight");
  TorusElement e(k, N);
  for (int d = 1; d * w <= N; ++d) e.add({x * d}, -xi.pow(d) / (Scalar(d) * Scalar(qbracket(d))));
  return commutative_exp(e);
}

// ---- reports

VerificationReport compare(const std::string& identity, const std::string& parameter, const TorusElement& lhs,
                           const TorusElement& rhs, double seconds) {
  VerificationReport rep{identity, parameter};
  TorusElement diff = lhs - rhs;
  auto cls = [](const PBWMonomial& m) {
    LatticeVector s;
    for (auto& x : m) s = s + x;
    return s;
  };
  std::map<std::pair<int, LatticeVector>, std::vector<PBWMonomial>> classes;
  for (const TorusElement* e : {&lhs, &rhs, static_cast<const TorusElement*>(&diff)})
    for (auto& [m, v] : e->c) classes[std::make_pair(lhs.weight(m), cls(m))];
  for (auto& [m, v] : diff.c) classes[std::make_pair(lhs.weight(m), cls(m))].push_back(m);
  for (auto& [key, ms] : classes) {
    std::string name = "w=" + std::to_string(key.first) + " " + key.second.str();
    if (ms.empty()) rep.check(name, Scalar());
    for (auto& m : ms) rep.check(name + " " + monomial_str(m), diff.at(m));
  }
  rep.seconds = seconds;
  return rep;
}

VerificationReport verify_pentagon(int N) {
  Stopwatch sw;
  Cone k = Cone::quadrant();
  TorusElement p10 = dilog_element({1, 0}, Scalar(1), N, k);
  TorusElement p01 = dilog_element({0, 1}, Scalar(1), N, k);
  TorusElement p11 = dilog_element({1, 1}, Scalar(-1), N, k);
  TorusElement lhs = multiply(p10, p01);
  TorusElement rhs = product({p01, p11, p10});
  return compare("pentagon Psi(1,0) Psi(0,1) = Psi(0,1) Psi(1,1)[-1] Psi(1,0)", "N=" + std::to_string(N), lhs, rhs,
                 sw.seconds());
}

std::pair<TorusElement, TorusElement> a10_a01_elements(int N) {
  Cone k = Cone::upper();
  Scalar half(QField::rational(mpq_class(1, 2)));
  TorusElement sym(k, N), sq(k, N);
  sym.add({{0, 2}}, half * Scalar(qint(2)));  // (s + s^-1)/2
  sq.add({{0, 1}, {0, 1}}, half * sZ());
  return {sym + sq, sym - sq};
}

std::pair<TorusElement, TorusElement> sw_middle_factors(int N, bool literal) {
  Cone k = Cone::upper();
  TorusElement e10(k, N), e01(k, N);
  for (int d = 1; 2 * d <= N; ++d) {
    int r = literal ? 1 : d;
    // (s^r + s^-r)/(s^r - s^-r)
    Scalar ratio = Scalar(QField::s_pow(r) + QField::s_pow(-r)) / Scalar(qbracket(r));
    Scalar inv2d(QField::rational(mpq_class(1, 2 * d)));
    TorusElement t(k, N), sq(k, N);
    t.add({{0, 2 * d}}, inv2d * ratio);
    sq.add({{0, d}, {0, d}}, inv2d);
    e10 += t + sq;
    e01 += t - sq;
  }
  return {commutative_exp(e10), commutative_exp(e01)};
}

std::pair<TorusElement, TorusElement> sw_sides(int N, bool literal) {
  Cone k = Cone::upper();
  TorusElement lhs = multiply(dilog_element({1, 1}, Scalar(1), N, k), dilog_element({-1, 1}, Scalar(1), N, k));
  std::vector<TorusElement> fs;
  for (int j = 1; j <= N; j += 2) fs.push_back(dilog_element({-1, j}, Scalar(1), N, k));
  auto [m10, m01] = sw_middle_factors(N, literal);
  fs.push_back(m10);
  fs.push_back(m01);
  int top = N % 2 ? N : N - 1;
  for (int j = top; j >= 1; j -= 2) fs.push_back(dilog_element({1, j}, Scalar(1), N, k));
  return {lhs, product(fs)};
}

VerificationReport verify_sw(int N, bool literal) {
  Stopwatch sw;
  auto [lhs, rhs] = sw_sides(N, literal);
  return compare(std::string("Seiberg-Witten wall crossing") + (literal ? " (literal middle factor)" : ""),
                 "N=" + std::to_string(N), lhs, rhs, sw.seconds());
}

int quadratic_refinement(const LatticeVector& x) {
  long e = static_cast<long>(x.i) * x.j + x.i + x.j;
  return (e % 2 == 0) ? 1 : -1;
}

VerificationReport verify_cocycle(int bound) {
  Stopwatch sw;
  VerificationReport rep{"quadratic refinement cocycle", "|entries|<=" + std::to_string(bound)};
  for (int i = -bound; i <= bound; ++i)
    for (int j = -bound; j <= bound; ++j)
      for (int k = -bound; k <= bound; ++k)
        for (int l = -bound; l <= bound; ++l) {
          int lhs = quadratic_refinement({i, j}) * quadratic_refinement({k, l});
          int e = j * k - i * l;
          int rhs = quadratic_refinement({i + k, j + l}) * (e % 2 == 0 ? 1 : -1);
          rep.check("(" + std::to_string(i) + "," + std::to_string(j) + ")(" + std::to_string(k) + "," +
                        std::to_string(l) + ")",
                    Scalar(lhs - rhs));
        }
  rep.seconds = sw.seconds();
  return rep;
}

VerificationReport verify_twisted_pentagon(int N) {
  Stopwatch sw;
  Cone k = Cone::quadrant();
  auto tw = [&](LatticeVector x) { return dilog_element(x, Scalar(quadratic_refinement(x)), N, k); };
  TorusElement lhs = multiply(tw({1, 0}), tw({0, 1}));
  TorusElement rhs = product({tw({0, 1}), tw({1, 1}), tw({1, 0})});
  return compare("twisted pentagon", "N=" + std::to_string(N), lhs, rhs, sw.seconds());
}

SymSeries vertical_to_symmetric(const TorusElement& x) {
  SymSeries r(Basis::PowerSum, x.N);
  for (auto& [m, v] : x.c) {
    Partition key;
    for (auto& l : m) {
      if (l.i != 0 || l.j <= 0) throw std::invalid_argument("not a vertical element: " + monomial_str(m));
      key.push_back(l.j);
    }
    std::sort(key.rbegin(), key.rend());
    r.add(key, v);
  }
  return powersum_to_schur(r);
}

// ---- Fock module

bool fock_constructible(const LatticeVector& x) { return x.j >= 1 || (x.j == 0 && std::abs(x.i) == 1); }

SymSeries fock_apply(const LatticeVector& x, const SymSeries& v) {
  if (!fock_constructible(x)) throw std::invalid_argument("no Fock operator for class " + x.str());
  if (x.j == 0) return apply_meridian(v, x.i);
  if (x.i == 0) return multiply(power_sum_element(x.j, v.N), v);
  LatticeVector a, b;
  int d;
  if (x.j == 1) {
    a = {x.i > 0 ? 1 : -1, 0};
    b = {x.i - a.i, 1};
  } else {
    a = {0, 1};
    b = {x.i, x.j - 1};
  }
  d = det(a, b);
  SymSeries comm = fock_apply(a, fock_apply(b, v)) - fock_apply(b, fock_apply(a, v));
  return comm * Scalar(qbracket(d).inverse());
}

VerificationReport fock_crosscheck(const std::vector<std::pair<LatticeVector, LatticeVector>>& pairs, int degree) {
  Stopwatch sw;
  VerificationReport rep{"Fock module bracket cross-check", "degree<=" + std::to_string(degree)};
  for (auto& [x, y] : pairs) {
    if (!fock_constructible(x) || !fock_constructible(y)) throw std::invalid_argument("pair not constructible");
    int d = det(x, y);
    LatticeVector s = x + y;
    if (d != 0 && !fock_constructible(s)) throw std::invalid_argument("sum not constructible: " + s.str());
    int shift = x.j + y.j;
    for (int n = 0; n + shift <= degree; ++n)
      for (auto& lam : partitions_of(n)) {
        SymSeries w = SymSeries::single(Basis::Schur, degree, lam);
        SymSeries lhs = fock_apply(x, fock_apply(y, w)) - fock_apply(y, fock_apply(x, w));
        SymSeries rhs(Basis::Schur, degree);
        if (d != 0) rhs = fock_apply(s, w) * Scalar(qbracket(d));
        SymSeries diff = lhs - rhs;
        std::string name = "[P" + x.str() + ",P" + y.str() + "] W" + part_str(lam);
        if (diff.is_zero()) rep.check(name, Scalar());
        for (auto& [mu, c] : diff.c) rep.check(name + " -> W" + part_str(mu), c);
      }
  }
  rep.seconds = sw.seconds();
  return rep;
}

// ---- structural checks

VerificationReport verify_jacobi(int bound) {
  Stopwatch sw;
  VerificationReport rep{"Jacobi identity for the bracket", "|entries|<=" + std::to_string(bound)};
  std::vector<LatticeVector> vs;
  for (int i = -bound; i <= bound; ++i)
    for (int j = -bound; j <= bound; ++j)
      if (i || j) vs.push_back({i, j});
  std::map<int, QField> br;
  auto B = [&](int n) -> const QField& {
    auto it = br.find(n);
    if (it == br.end()) it = br.emplace(n, n == 0 ? QField() : qbracket(n)).first;
    return it->second;
  };
  for (auto& x : vs)
    for (auto& y : vs)
      for (auto& w : vs) {
        QField t = B(det(x, y)) * B(det(x + y, w)) + B(det(y, w)) * B(det(y + w, x)) + B(det(w, x)) * B(det(w + x, y));
        rep.check(x.str() + y.str() + w.str(), Scalar(t));
      }
  rep.seconds = sw.seconds();
  return rep;
}

namespace {

LatticeVector random_class(int max_j, std::mt19937& rng) {
  int j = std::uniform_int_distribution<int>(1, max_j)(rng);
  int i = std::uniform_int_distribution<int>(-j, j)(rng);
  return {i, j};
}

}  // namespace

TorusElement random_torus_element(int max_w, int N, std::mt19937& rng) {
  Cone k = Cone::upper();
  TorusElement r(k, N);
  std::uniform_int_distribution<int> coef(-3, 3), sp(-2, 2), len(0, 2);
  for (int t = 0; t < 3; ++t) {
    PBWMonomial m;
    int w = 0, L = len(rng);
    for (int q = 0; q < L && w < max_w; ++q) {
      LatticeVector x = random_class(max_w - w, rng);
      w += x.j;
      m.push_back(x);
    }
    std::sort(m.begin(), m.end(), pbw_less);
    r.add(m, Scalar(QField(coef(rng)) * QField::s_pow(sp(rng))));
  }
  return r;
}

VerificationReport verify_associativity(int samples, int max_weight, std::mt19937& rng) {
  Stopwatch sw;
  VerificationReport rep{"PBW product associativity", "samples=" + std::to_string(samples) + " N=" + std::to_string(max_weight)};
  for (int t = 0; t < samples; ++t) {
    int third = std::max(1, max_weight / 3);
    TorusElement x = random_torus_element(third, max_weight, rng), y = random_torus_element(third, max_weight, rng),
                 z = random_torus_element(max_weight - 2 * third, max_weight, rng);
    TorusElement d = multiply(multiply(x, y), z) - multiply(x, multiply(y, z));
    std::string name = "sample " + std::to_string(t);
    if (d.is_zero()) rep.check(name, Scalar());
    for (auto& [m, v] : d.c) rep.check(name + " " + monomial_str(m), v);
  }
  rep.seconds = sw.seconds();
  return rep;
}

VerificationReport verify_confluence(int samples, int max_weight, std::mt19937& rng) {
  Stopwatch sw;
  VerificationReport rep{"PBW normal ordering confluence", "samples=" + std::to_string(samples) + " N=" + std::to_string(max_weight)};
  Cone k = Cone::upper();
  for (int t = 0; t < samples; ++t) {
    PBWMonomial word;
    int w = 0;
    while (w < max_weight) {
      LatticeVector x = random_class(std::min(2, max_weight - w), rng);
      word.push_back(x);
      w += x.j;
      if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) break;
    }
    TorusElement first = normal_order(word, k, max_weight);
    TorusElement rand = normal_order(word, k, max_weight, [&](const std::vector<size_t>& d) {
      return std::uniform_int_distribution<size_t>(0, d.size() - 1)(rng);
    });
    // left-to-right product of generators as a third route
    TorusElement prod = TorusElement::unit(k, max_weight);
    for (auto& x : word) prod = multiply(prod, TorusElement::gen(x, k, max_weight));
    std::string name = "word " + monomial_str(word);
    TorusElement d1 = first - rand, d2 = first - prod;
    if (d1.is_zero() && d2.is_zero()) rep.check(name, Scalar());
    for (auto& [m, v] : d1.c) rep.check(name + " random order " + monomial_str(m), v);
    for (auto& [m, v] : d2.c) rep.check(name + " via product " + monomial_str(m), v);
  }
  rep.seconds = sw.seconds();
  return rep;
}

}  // namespace skein
