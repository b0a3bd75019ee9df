#pragma once

#include <random>

#include "affina/affine.hpp"
#include "affina/line_groups.hpp"

namespace affina::testing {

inline Vector random_vector(std::mt19937_64& rng, int n, double lo = -2.0,
                            double hi = 2.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = dist(rng);
  return v;
}

inline Matrix random_matrix(std::mt19937_64& rng, int n, double lo = -2.0,
                            double hi = 2.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = dist(rng);
  }
  return m;
}

// Random invertible matrix with a healthy determinant margin.
inline Matrix random_invertible(std::mt19937_64& rng, int n) {
  while (true) {
    Matrix m = random_matrix(rng, n);
    if (std::abs(m.determinant()) > 0.1) return m;
  }
}

inline AffineMap random_affine(std::mt19937_64& rng, int n) {
  return AffineMap(random_invertible(rng, n), random_vector(rng, n));
}

// Random invertible matrix whose (A - I) stays well away from singular,
// so 1 is not an eigenvalue.
inline Matrix random_no_eigenvalue_one(std::mt19937_64& rng, int n) {
  while (true) {
    Matrix m = random_invertible(rng, n);
    Eigen::JacobiSVD<Matrix> svd(m - Matrix::Identity(n, n));
    if (svd.singularValues().minCoeff() > 0.2) return m;
  }
}

// A (unit eigenvector u, matrix A) pair with Au = u and ker(A - I) exactly
// the span of u.
inline std::pair<Vector, Matrix> random_planted_eigenvector(
    std::mt19937_64& rng, int n) {
  Vector u = random_vector(rng, n);
  while (u.norm() < 0.3) u = random_vector(rng, n);
  u.normalize();
  // Orthonormal frame with first column u.
  Matrix seed = Matrix::Identity(n, n);
  seed.col(0) = u;
  Eigen::HouseholderQR<Matrix> qr(seed);
  Matrix frame = qr.householderQ();
  if ((frame.col(0) + u).norm() < (frame.col(0) - u).norm()) {
    frame = -frame;
  }
  Matrix core = Matrix::Identity(n, n);
  core.bottomRightCorner(n - 1, n - 1) =
      random_no_eigenvalue_one(rng, n - 1);
  Matrix a = frame * core * frame.transpose();
  return {u, a};
}

}  // namespace affina::testing
