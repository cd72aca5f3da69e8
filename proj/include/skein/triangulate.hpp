// Ideal triangulations given by edge/quad-type incidence counts; taut and
// generalised angle structures; marked gluing equations and effectivity.
#pragma once

#include "skein/lp.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace skein {

// quad types theta, theta', theta'' are 0, 1, 2
std::string quad_name(int type);

struct IdealTriangulation {
  int tets = 0, edges = 0;
  int cusps = 1;  // only used by the rank bound
  // m[e][d][type]
  std::vector<std::vector<std::array<int, 3>>> m;
  std::vector<bool> boundary;

  void validate() const;  // throws std::invalid_argument
};

IdealTriangulation parse_triangulation(const std::string& text);
IdealTriangulation load_triangulation(const std::string& path);
IdealTriangulation figure_eight();

struct Marking {
  std::vector<int> type;  // per tetrahedron
  std::vector<int> sign;  // optional, +1/-1; carried but not used by the gluing matrix
  std::string str() const;
};
std::vector<Marking> all_markings(int tets);

// per-tetrahedron quad type carrying pi
using TautStructure = std::vector<int>;
std::vector<TautStructure> enumerate_taut(const IdealTriangulation& T);
// angle vector in units of pi, 3 entries per tetrahedron
QVector taut_angles(const TautStructure& s);

// linear system for generalised angle structures (units of pi)
struct AngleSystem {
  QMatrix A;
  QVector b;
};
AngleSystem angle_system(const IdealTriangulation& T);
AffineSpace generalized_angle_solver(const IdealTriangulation& T);

// +1 if marked follows slot in theta -> theta' -> theta'' -> theta, -1 if it precedes, 0 if equal
int slot_sign(int slot, int marked);
using GluingMatrix = std::vector<std::vector<int>>;  // [edge][tet]
GluingMatrix gluing_matrix(const IdealTriangulation& T, const Marking& m);

struct Effectivity {
  bool effective = false;
  QVector witness;      // z > 0 with G z = 0
  QVector certificate;  // p with p^T G >= 0, not zero
};
Effectivity is_effective(const IdealTriangulation& T, const Marking& m);
// direct substitution
bool check_witness(const GluingMatrix& G, const QVector& z);
bool check_certificate(const GluingMatrix& G, const QVector& p);

}  // namespace skein
