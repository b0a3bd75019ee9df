#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

#include "affina/errors.hpp"
#include "affina/tolerances.hpp"

namespace affina {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// An invertible affine automorphism of R^n: p |-> linear * p + translation.
/// Construction rejects singular linear parts (|det| < tol::singular).
class AffineMap {
 public:
  AffineMap(Matrix linear, Vector translation);

  static AffineMap identity(int dim);
  static AffineMap translation(const Vector& v);

  int dim() const { return static_cast<int>(translation_.size()); }
  const Matrix& linear() const { return linear_; }
  const Vector& translation() const { return translation_; }

  bool approx_equal(const AffineMap& other, double tol = tol::entry) const;
  bool is_identity(double tol = tol::entry) const;

 private:
  Matrix linear_;
  Vector translation_;
};

AffineMap compose(const AffineMap& f, const AffineMap& g);
AffineMap inverse(const AffineMap& f);
Vector apply(const AffineMap& f, const Vector& p);

/// A finitely generated subgroup of Aff(n,R), given by named generators.
class GroupPresentation {
 public:
  GroupPresentation(int dimension,
                    std::vector<std::pair<std::string, AffineMap>> generators);

  int dimension() const { return dimension_; }
  int generator_count() const { return static_cast<int>(generators_.size()); }
  const AffineMap& generator(int index) const;
  const std::string& generator_name(int index) const;
  const std::vector<std::pair<std::string, AffineMap>>& generators() const {
    return generators_;
  }

 private:
  int dimension_;
  std::vector<std::pair<std::string, AffineMap>> generators_;
};

/// A formal word in the generators: list of (generator index, exponent).
struct Word {
  std::vector<std::pair<int, int>> letters;

  static Word empty() { return Word{}; }
};

/// Human-readable form, e.g. "a b^-2"; empty word prints as "1".
std::string word_to_string(const GroupPresentation& group, const Word& word);

/// Left-to-right product of generator images. Exponents expand to repeated
/// multiplication; negative exponents invert once then repeat.
AffineMap evaluate_word(const GroupPresentation& group, const Word& word);

/// Solution set of apply(f, x) = x.
struct FixedPointSet {
  enum class Kind { Unique, Flat, None };
  Kind kind = Kind::None;
  Vector point;                    // valid for Unique and Flat
  std::vector<Vector> directions;  // Flat: orthonormal basis of ker(A - I)
};

FixedPointSet fixed_points(const AffineMap& f);

/// Orthonormal basis of ker(A - I), empty when 1 is not an eigenvalue.
/// Rank decisions threshold singular values at tol::rank_rel * sigma_max.
std::vector<Vector> eigen_one_space(const Matrix& a);

/// Orthonormal basis of ker(m) under the same thresholding.
std::vector<Vector> kernel_basis(const Matrix& m);

}  // namespace affina
