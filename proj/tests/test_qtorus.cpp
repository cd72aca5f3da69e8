#include "doctest.h"
#include "skein/parse.hpp"
#include "skein/qtorus.hpp"

using namespace skein;

namespace {
const Cone Q = Cone::quadrant();
QTElement M(int i, int j, const QField& v = QField(1), int N = 6) { return QTElement::mono(i, j, Q, N, v); }
QField F(const char* t) { return parse_scalar(t).constant(); }
}  // namespace

TEST_CASE("quantum torus product") {
  CHECK(qt_multiply(M(1, 0), M(0, 1)) == M(1, 1));
  CHECK(qt_multiply(M(0, 1), M(1, 0)) == M(1, 1, F("q^-1")));
  CHECK(qt_multiply(M(1, 1), M(1, 1)) == M(2, 2, F("q^-1")));
  // y x = q x y
  CHECK(qt_multiply(M(1, 0), M(0, 1)) == qt_multiply(M(0, 1), M(1, 0)) * F("q"));
}

TEST_CASE("specialize_P") {
  CHECK(specialize_P({1, 0}, Q, 4) == QTElement::mono(1, 0, Q, 4));
  CHECK(specialize_P({0, 1}, Q, 4) == QTElement::mono(0, 1, Q, 4));
  CHECK(specialize_P({1, 1}, Q, 4) == QTElement::mono(1, 1, Q, 4, F("q^(-1/2)")));
}

TEST_CASE("gl1 dilogarithm") {
  QTElement d = gl1_dilog({0, 1}, 1, 1, Q);
  CHECK(d == QTElement::unit(Q, 1) + QTElement::mono(0, 1, Q, 1, F("q^(1/2)/(1 - q)")));
  CHECK(gl1_dilog({1, 1}, 0, 6, Q) == QTElement::unit(Q, 6));
  CHECK(verify_gl1_dilog_agreement(4).verified());
  CHECK(verify_gl1_functional_equation(8).verified());
}

TEST_CASE("gl1 wall crossing") {
  int N = 2;
  QTElement lhs = qt_multiply(gl1_dilog({1, 0}, 1, N, Q), gl1_dilog({0, 1}, 1, N, Q));
  QTElement rhs0 = qt_multiply(gl1_dilog({0, 1}, 1, N, Q), gl1_dilog({1, 0}, 1, N, Q));
  // class (1,1): q/(1-q)^2 (1 - q^-1) y x, the image of P11/z
  QTElement defect = (lhs - rhs0).degree_part(2);
  CHECK(defect == QTElement::mono(1, 1, Q, N, F("q^(-1/2)/z")));
  for (int n = 1; n <= 8; ++n) {
    CHECK(verify_gl1_pentagon(n).verified());
    CHECK(verify_gl1_sw(n).verified());
  }
}

TEST_CASE("gl1 homomorphism") {
  auto r = gl1_homomorphism_check({{{1, 0}, {0, 1}}, {{0, 1}, {0, 2}}, {{1, 1}, {-1, 1}}, {{2, -1}, {3, 5}}, {{-2, 0}, {1, -3}}});
  CHECK(r.verified());
  CHECK(r.checked == 5);
  std::mt19937 g(2);
  CHECK(verify_gl1_intertwining(20, 6, g).verified());
}
