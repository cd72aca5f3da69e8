// Exact rational linear feasibility, phase-one simplex with Bland's rule.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace skein {

using QMatrix = std::vector<std::vector<mpq_class>>;
using QVector = std::vector<mpq_class>;

// some x >= 0 with A x = b, or nothing
std::optional<QVector> lp_feasible(const QMatrix& A, const QVector& b);

// exact row reduction helpers
int rank(QMatrix A);
struct AffineSpace {
  bool consistent = true;
  QVector particular;
  std::vector<QVector> kernel;
};
AffineSpace solve_linear(const QMatrix& A, const QVector& b);

}  // namespace skein
