#include "skein/triangulate.hpp"

#include <fstream>
#include <functional>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace skein {

std::string quad_name(int type) {
  static const char* names[] = {"theta", "theta'", "theta''"};
  if (type < 0 || type > 2) throw std::invalid_argument("bad quad type");
  return names[type];
}

void IdealTriangulation::validate() const {
  if (tets < 0 || edges < 0) throw std::invalid_argument("negative sizes");
  if (static_cast<int>(m.size()) != edges || static_cast<int>(boundary.size()) != edges)
    throw std::invalid_argument("incidence table has wrong shape");
  for (int d = 0; d < tets; ++d)
    for (int t = 0; t < 3; ++t) {
      int tot = 0;
      for (int e = 0; e < edges; ++e) {
        if (m[e][d][t] < 0) throw std::invalid_argument("negative incidence count");
        tot += m[e][d][t];
      }
      if (tot != 2)
        throw std::invalid_argument("tet " + std::to_string(d + 1) + " has " + std::to_string(tot) + " slots of type " +
                                    quad_name(t) + ", expected 2");
    }
}

IdealTriangulation parse_triangulation(const std::string& text) {
  IdealTriangulation T;
  std::istringstream in(text);
  std::string line;
  bool header = false;
  int lineno = 0;
  static const std::regex head(R"(\s*tets\s+(\d+)\s+edges\s+(\d+)\s*)");
  static const std::regex inc(
      R"(\s*edge\s+(\d+)\s*:\s*tet\s+(\d+)\s+theta\s+(\d+)\s+theta'\s+(\d+)\s+theta''\s+(\d+)\s*)");
  static const std::regex bnd(R"(\s*boundary((\s+\d+)*)\s*)");
  static const std::regex cusp(R"(\s*cusps\s+(\d+)\s*)");
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::smatch sm;
    if (std::regex_match(line, sm, head)) {
      if (header) fail("duplicate header");
      header = true;
      T.tets = std::stoi(sm[1]);
      T.edges = std::stoi(sm[2]);
      T.m.assign(T.edges, std::vector<std::array<int, 3>>(T.tets, {0, 0, 0}));
      T.boundary.assign(T.edges, false);
      continue;
    }
    if (!header) fail("expected header 'tets t edges e'");
    if (std::regex_match(line, sm, inc)) {
      int e = std::stoi(sm[1]), d = std::stoi(sm[2]);
      if (e < 1 || e > T.edges) fail("edge index out of range");
      if (d < 1 || d > T.tets) fail("tet index out of range");
      for (int t = 0; t < 3; ++t) T.m[e - 1][d - 1][t] += std::stoi(sm[3 + t]);
    } else if (std::regex_match(line, sm, bnd)) {
      std::istringstream ks(sm[1].str());
      int k;
      while (ks >> k) {
        if (k < 1 || k > T.edges) fail("boundary edge out of range");
        T.boundary[k - 1] = true;
      }
    } else if (std::regex_match(line, sm, cusp)) {
      T.cusps = std::stoi(sm[1]);
    } else {
      fail("cannot parse '" + line + "'");
    }
  }
  if (!header) throw std::invalid_argument("missing header 'tets t edges e'");
  T.validate();
  return T;
}

IdealTriangulation load_triangulation(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_triangulation(ss.str());
}

IdealTriangulation figure_eight() {
  return parse_triangulation(
      "tets 2 edges 2\n"
      "edge 1: tet 1 theta 2 theta' 0 theta'' 1\n"
      "edge 1: tet 2 theta 2 theta' 0 theta'' 1\n"
      "edge 2: tet 1 theta 0 theta' 2 theta'' 1\n"
      "edge 2: tet 2 theta 0 theta' 2 theta'' 1\n");
}

std::string Marking::str() const {
  std::string out = "(";
  for (size_t d = 0; d < type.size(); ++d) {
    if (d) out += ", ";
    out += quad_name(type[d]);
    if (d < sign.size() && sign[d]) out += sign[d] > 0 ? "+" : "-";
  }
  return out + ")";
}

std::vector<Marking> all_markings(int tets) {
  std::vector<Marking> out;
  Marking cur;
  cur.type.assign(tets, 0);
  std::function<void(int)> rec = [&](int d) {
    if (d == tets) {
      out.push_back(cur);
      return;
    }
    for (int t = 0; t < 3; ++t) {
      cur.type[d] = t;
      rec(d + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<TautStructure> enumerate_taut(const IdealTriangulation& T) {
  std::vector<TautStructure> out;
  for (auto& mk : all_markings(T.tets)) {
    bool ok = true;
    for (int e = 0; e < T.edges && ok; ++e) {
      int tot = 0;  // units of pi
      for (int d = 0; d < T.tets; ++d) tot += T.m[e][d][mk.type[d]];
      ok = tot == (T.boundary[e] ? 1 : 2);
    }
    if (ok) out.push_back(mk.type);
  }
  return out;
}

QVector taut_angles(const TautStructure& s) {
  QVector v(3 * s.size());
  for (size_t d = 0; d < s.size(); ++d) v[3 * d + s[d]] = 1;
  return v;
}

AngleSystem angle_system(const IdealTriangulation& T) {
  AngleSystem S;
  int n = 3 * T.tets;
  for (int d = 0; d < T.tets; ++d) {
    QVector row(n);
    for (int t = 0; t < 3; ++t) row[3 * d + t] = 1;
    S.A.push_back(row);
    S.b.push_back(1);
  }
  for (int e = 0; e < T.edges; ++e) {
    QVector row(n);
    for (int d = 0; d < T.tets; ++d)
      for (int t = 0; t < 3; ++t) row[3 * d + t] = T.m[e][d][t];
    S.A.push_back(row);
    S.b.push_back(T.boundary[e] ? 1 : 2);
  }
  return S;
}

AffineSpace generalized_angle_solver(const IdealTriangulation& T) {
  AngleSystem S = angle_system(T);
  if (S.A.empty()) return {};
  return solve_linear(S.A, S.b);
}

int slot_sign(int slot, int marked) {
  if (slot == marked) return 0;
  return marked == (slot + 1) % 3 ? 1 : -1;
}

GluingMatrix gluing_matrix(const IdealTriangulation& T, const Marking& mk) {
  if (static_cast<int>(mk.type.size()) != T.tets) throw std::invalid_argument("marking size differs from tet count");
  GluingMatrix G(T.edges, std::vector<int>(T.tets, 0));
  for (int e = 0; e < T.edges; ++e)
    for (int d = 0; d < T.tets; ++d)
      for (int t = 0; t < 3; ++t) G[e][d] += T.m[e][d][t] * slot_sign(t, mk.type[d]);
  return G;
}

bool check_witness(const GluingMatrix& G, const QVector& z) {
  for (auto& v : z)
    if (v <= 0) return false;
  for (auto& row : G) {
    mpq_class s = 0;
    for (size_t d = 0; d < row.size(); ++d) s += row[d] * z[d];
    if (s != 0) return false;
  }
  return true;
}

bool check_certificate(const GluingMatrix& G, const QVector& p) {
  if (G.empty()) return false;
  size_t t = G[0].size();
  bool nonzero = false;
  for (size_t d = 0; d < t; ++d) {
    mpq_class s = 0;
    for (size_t e = 0; e < G.size(); ++e) s += p[e] * G[e][d];
    if (s < 0) return false;
    if (s > 0) nonzero = true;
  }
  return nonzero;
}

Effectivity is_effective(const IdealTriangulation& T, const Marking& mk) {
  GluingMatrix G = gluing_matrix(T, mk);
  size_t E = G.size(), t = T.tets;
  Effectivity out;
  if (E == 0) {
    out.effective = true;
    out.witness.assign(t, 1);
    return out;
  }
  // z = 1 + y, y >= 0:  G y = -G 1
  QMatrix A(E, QVector(t));
  QVector b(E);
  for (size_t e = 0; e < E; ++e)
    for (size_t d = 0; d < t; ++d) {
      A[e][d] = G[e][d];
      b[e] -= G[e][d];
    }
  if (auto y = lp_feasible(A, b)) {
    out.effective = true;
    out.witness.resize(t);
    for (size_t d = 0; d < t; ++d) out.witness[d] = 1 + (*y)[d];
    return out;
  }
  // Stiemke alternative: p = p+ - p-, w >= 0, G^T p - w = 0, sum w = 1
  size_t nv = 2 * E + t;
  QMatrix B(t + 1, QVector(nv));
  QVector c(t + 1);
  for (size_t d = 0; d < t; ++d) {
    for (size_t e = 0; e < E; ++e) {
      B[d][e] = G[e][d];
      B[d][E + e] = -G[e][d];
    }
    B[d][2 * E + d] = -1;
    B[t][2 * E + d] = 1;
  }
  c[t] = 1;
  auto sol = lp_feasible(B, c);
  if (!sol) throw std::logic_error("neither witness nor certificate found");
  out.certificate.resize(E);
  for (size_t e = 0; e < E; ++e) out.certificate[e] = (*sol)[e] - (*sol)[E + e];
  return out;
}

}  // namespace skein
