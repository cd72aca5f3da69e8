#include "doctest.h"
#include "skein/triangulate.hpp"

#include <random>
#include <set>

using namespace skein;

TEST_CASE("lp feasibility") {
  // x + y = 1, x - y = 3 has no nonnegative solution
  CHECK_FALSE(lp_feasible({{1, 1}, {1, -1}}, {1, 3}));
  auto x = lp_feasible({{1, 1}, {1, -1}}, {3, 1});
  REQUIRE(x);
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == 1);
  // random feasible systems
  std::mt19937 g(4);
  std::uniform_int_distribution<int> c(-4, 4), v(0, 3);
  for (int it = 0; it < 200; ++it) {
    int m = 1 + it % 4, n = 1 + (it / 4) % 5;
    QMatrix A(m, QVector(n));
    QVector x0(n), b(m);
    for (auto& t : x0) t = v(g);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) {
        A[i][j] = c(g);
        b[i] += A[i][j] * x0[j];
      }
    auto s = lp_feasible(A, b);
    REQUIRE(s);
    for (int i = 0; i < m; ++i) {
      mpq_class r = 0;
      for (int j = 0; j < n; ++j) r += A[i][j] * (*s)[j];
      CHECK(r == b[i]);
    }
    for (auto& t : *s) CHECK(t >= 0);
  }
}

TEST_CASE("figure-eight incidence reproduces the edge equation") {
  IdealTriangulation T = load_triangulation(SKEIN_DATA_DIR "/fig8.tri");
  CHECK(T.tets == 2);
  CHECK(T.edges == 2);
  // 2 theta + theta'' + 2 eta + eta'' = 2 pi
  CHECK(T.m[0][0] == std::array<int, 3>{2, 0, 1});
  CHECK(T.m[0][1] == std::array<int, 3>{2, 0, 1});
}

TEST_CASE("taut structures") {
  IdealTriangulation T = figure_eight();
  auto taut = enumerate_taut(T);
  std::set<TautStructure> got(taut.begin(), taut.end());
  // (pi,0,0,0,pi,0), (0,0,pi,0,0,pi), (0,pi,0,pi,0,0)
  CHECK(got == std::set<TautStructure>{{0, 1}, {2, 2}, {1, 0}});
  AngleSystem S = angle_system(T);
  for (auto& s : taut) {
    QVector a = taut_angles(s);
    for (size_t r = 0; r < S.A.size(); ++r) {
      mpq_class v = 0;
      for (size_t k = 0; k < a.size(); ++k) v += S.A[r][k] * a[k];
      CHECK(v == S.b[r]);
    }
  }
  // any pair of quad types is zero in some taut structure
  for (int t1 = 0; t1 < 3; ++t1)
    for (int t2 = 0; t2 < 3; ++t2) {
      bool found = false;
      for (auto& s : taut) found |= s[0] != t1 && s[1] != t2;
      CHECK(found);
    }
  // a single tetrahedron whose edges are all boundary edges
  IdealTriangulation one = parse_triangulation(
      "tets 1 edges 3\nedge 1: tet 1 theta 2 theta' 0 theta'' 0\nedge 2: tet 1 theta 0 theta' 2 theta'' 0\n"
      "edge 3: tet 1 theta 0 theta' 0 theta'' 2\nboundary 1 2 3\n");
  CHECK(enumerate_taut(one).empty());  // a pi angle counted twice on one boundary edge
  IdealTriangulation two = parse_triangulation(
      "tets 1 edges 6\nedge 1: tet 1 theta 1 theta' 0 theta'' 0\nedge 2: tet 1 theta 1 theta' 0 theta'' 0\n"
      "edge 3: tet 1 theta 0 theta' 1 theta'' 0\nedge 4: tet 1 theta 0 theta' 1 theta'' 0\n"
      "edge 5: tet 1 theta 0 theta' 0 theta'' 1\nedge 6: tet 1 theta 0 theta' 0 theta'' 1\nboundary 1 2 3 4 5 6\n");
  CHECK(enumerate_taut(two).empty());  // boundary edges need pi each
  IdealTriangulation bad = figure_eight();
  bad.m[1][0] = {1, 2, 1};
  CHECK_THROWS(bad.validate());
}

TEST_CASE("generalized angle structures") {
  AffineSpace sp = generalized_angle_solver(figure_eight());
  CHECK(sp.consistent);
  CHECK(sp.kernel.size() == 3);  // 6 unknowns, 3 independent equations
  CHECK(rank(angle_system(figure_eight()).A) == 3);
  AffineSpace empty = generalized_angle_solver(IdealTriangulation{});
  CHECK(empty.consistent);
  CHECK(empty.kernel.empty());
}

TEST_CASE("gluing matrix") {
  IdealTriangulation T = figure_eight();
  CHECK(slot_sign(0, 0) == 0);
  CHECK(slot_sign(0, 1) == 1);
  CHECK(slot_sign(0, 2) == -1);
  // coefficient of z_d on edge 1 is 2 sign(theta, m) + sign(theta'', m)
  for (auto& mk : all_markings(2)) {
    GluingMatrix G = gluing_matrix(T, mk);
    for (int d = 0; d < 2; ++d) CHECK(G[0][d] == 2 * slot_sign(0, mk.type[d]) + slot_sign(2, mk.type[d]));
    CHECK(rank({{G[0][0], G[0][1]}, {G[1][0], G[1][1]}}) <= T.tets - T.cusps);
  }
  GluingMatrix G = gluing_matrix(T, Marking{{2, 0}, {}});
  CHECK(G[0][0] * G[0][1] < 0);
}

TEST_CASE("effectivity") {
  IdealTriangulation T = figure_eight();
  std::set<std::vector<int>> eff;
  for (auto& mk : all_markings(2)) {
    Effectivity r = is_effective(T, mk);
    GluingMatrix G = gluing_matrix(T, mk);
    if (r.effective) {
      eff.insert(mk.type);
      CHECK(check_witness(G, r.witness));
      CHECK(r.certificate.empty());
    } else {
      CHECK(check_certificate(G, r.certificate));
      CHECK(r.witness.empty());
    }
    // two tetrahedra, one independent equation: opposite signs
    CHECK(r.effective == (G[0][0] * G[0][1] < 0));
  }
  // (theta, eta''), (theta', eta''), (theta'', eta), (theta'', eta')
  CHECK(eff == std::set<std::vector<int>>{{0, 2}, {1, 2}, {2, 0}, {2, 1}});
  // no constraints
  IdealTriangulation none;
  none.tets = 1;
  Effectivity r = is_effective(none, Marking{{0}, {}});
  CHECK(r.effective);
  CHECK(r.witness == QVector{1});
}

TEST_CASE("parse errors") {
  CHECK_THROWS(parse_triangulation("edge 1: tet 1 theta 2 theta' 0 theta'' 1\n"));
  CHECK_THROWS(parse_triangulation("tets 1 edges 1\nedge 2: tet 1 theta 2 theta' 2 theta'' 2\n"));
  CHECK_THROWS(parse_triangulation("tets 1 edges 1\nnonsense\n"));
  CHECK_NOTHROW(parse_triangulation("tets 1 edges 1\nedge 1: tet 1 theta 2 theta' 2 theta'' 2  # all\n"));
}
