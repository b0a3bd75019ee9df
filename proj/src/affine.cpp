#include "affina/affine.hpp"

#include <cmath>
#include <cstdlib>
#include <set>
#include <sstream>

namespace affina {

namespace {

void require_same_dim(int a, int b, const char* what) {
  if (a != b) {
    std::ostringstream msg;
    msg << what << ": dimension mismatch (" << a << " vs " << b << ")";
    throw DimensionMismatch(msg.str());
  }
}

}  // namespace

AffineMap::AffineMap(Matrix linear, Vector translation)
    : linear_(std::move(linear)), translation_(std::move(translation)) {
  if (translation_.size() < 1) {
    throw InvalidInput("AffineMap: dimension must be >= 1");
  }
  if (linear_.rows() != linear_.cols()) {
    throw InvalidInput("AffineMap: linear part must be square");
  }
  require_same_dim(static_cast<int>(linear_.rows()),
                   static_cast<int>(translation_.size()), "AffineMap");
  const double det = linear_.determinant();
  if (std::abs(det) < tol::singular) {
    std::ostringstream msg;
    msg << "AffineMap: singular linear part (|det| = " << std::abs(det) << ")";
    throw SingularMap(msg.str());
  }
}

AffineMap AffineMap::identity(int dim) {
  return AffineMap(Matrix::Identity(dim, dim), Vector::Zero(dim));
}

AffineMap AffineMap::translation(const Vector& v) {
  return AffineMap(Matrix::Identity(v.size(), v.size()), v);
}

bool AffineMap::approx_equal(const AffineMap& other, double tol) const {
  if (dim() != other.dim()) return false;
  return (linear_ - other.linear_).cwiseAbs().maxCoeff() <= tol &&
         (translation_ - other.translation_).cwiseAbs().maxCoeff() <= tol;
}

bool AffineMap::is_identity(double tol) const {
  return approx_equal(identity(dim()), tol);
}

AffineMap compose(const AffineMap& f, const AffineMap& g) {
  require_same_dim(f.dim(), g.dim(), "compose");
  return AffineMap(f.linear() * g.linear(),
                   f.linear() * g.translation() + f.translation());
}

AffineMap inverse(const AffineMap& f) {
  Matrix inv = f.linear().inverse();
  return AffineMap(inv, -(inv * f.translation()));
}

Vector apply(const AffineMap& f, const Vector& p) {
  require_same_dim(f.dim(), static_cast<int>(p.size()), "apply");
  return f.linear() * p + f.translation();
}

GroupPresentation::GroupPresentation(
    int dimension, std::vector<std::pair<std::string, AffineMap>> generators)
    : dimension_(dimension), generators_(std::move(generators)) {
  if (dimension_ < 1) {
    throw InvalidInput("GroupPresentation: dimension must be >= 1");
  }
  std::set<std::string> names;
  for (const auto& [name, map] : generators_) {
    require_same_dim(dimension_, map.dim(), "GroupPresentation");
    if (!names.insert(name).second) {
      throw InvalidInput("GroupPresentation: duplicate generator name '" +
                         name + "'");
    }
  }
}

const AffineMap& GroupPresentation::generator(int index) const {
  if (index < 0 || index >= generator_count()) {
    throw InvalidWord("generator index out of range: " +
                      std::to_string(index));
  }
  return generators_[static_cast<size_t>(index)].second;
}

const std::string& GroupPresentation::generator_name(int index) const {
  if (index < 0 || index >= generator_count()) {
    throw InvalidWord("generator index out of range: " +
                      std::to_string(index));
  }
  return generators_[static_cast<size_t>(index)].first;
}

std::string word_to_string(const GroupPresentation& group, const Word& word) {
  if (word.letters.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& [index, exponent] : word.letters) {
    if (!first) out << " ";
    first = false;
    out << group.generator_name(index);
    if (exponent != 1) out << "^" << exponent;
  }
  return out.str();
}

AffineMap evaluate_word(const GroupPresentation& group, const Word& word) {
  AffineMap result = AffineMap::identity(group.dimension());
  for (const auto& [index, exponent] : word.letters) {
    if (exponent == 0) {
      throw InvalidWord("word letter with zero exponent");
    }
    const AffineMap& gen = group.generator(index);
    const AffineMap factor = exponent > 0 ? gen : inverse(gen);
    for (int k = 0; k < std::abs(exponent); ++k) {
      result = compose(result, factor);
    }
  }
  return result;
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const double cutoff =
      sigma.size() > 0 ? tol::rank_rel * sigma(0) : 0.0;
  std::vector<Vector> basis;
  for (int i = 0; i < sigma.size(); ++i) {
    if (sigma(i) <= cutoff) {
      basis.push_back(svd.matrixV().col(i));
    }
  }
  return basis;
}

std::vector<Vector> eigen_one_space(const Matrix& a) {
  if (a.rows() != a.cols()) {
    throw InvalidInput("eigen_one_space: matrix must be square");
  }
  return kernel_basis(a - Matrix::Identity(a.rows(), a.cols()));
}

FixedPointSet fixed_points(const AffineMap& f) {
  const int n = f.dim();
  const Matrix shifted = f.linear() - Matrix::Identity(n, n);
  const Vector rhs = -f.translation();

  Eigen::JacobiSVD<Matrix> svd(shifted,
                               Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const double cutoff = sigma.size() > 0 ? tol::rank_rel * sigma(0) : 0.0;
  int rank = 0;
  for (int i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > cutoff && sigma(i) > 0.0) ++rank;
  }

  // Least-squares solution; consistent iff the residual vanishes.
  Vector coeffs = svd.matrixU().transpose() * rhs;
  Vector solution = Vector::Zero(n);
  for (int i = 0; i < rank; ++i) {
    solution += (coeffs(i) / sigma(i)) * svd.matrixV().col(i);
  }
  const double residual = (shifted * solution - rhs).norm();
  const double scale = std::max(1.0, rhs.norm());

  FixedPointSet result;
  if (residual > tol::entry * scale) {
    result.kind = FixedPointSet::Kind::None;
    return result;
  }
  if (rank == n) {
    result.kind = FixedPointSet::Kind::Unique;
    result.point = solution;
    return result;
  }
  result.kind = FixedPointSet::Kind::Flat;
  result.point = solution;
  result.directions = kernel_basis(shifted);
  return result;
}

}  // namespace affina
