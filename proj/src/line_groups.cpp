#include "affina/line_groups.hpp"

#include <cmath>
#include <sstream>

namespace affina {

namespace {

// First column of the linear part is (scale, 0, ..., 0) and the translation
// is (shift, 0, ..., 0), both to tolerance.
bool line_block_pattern(const AffineMap& f, double* scale, double* offending) {
  const int dim = f.dim();
  double worst = 0.0;
  for (int i = 1; i < dim; ++i) {
    worst = std::max(worst, std::abs(f.linear()(i, 0)));
    worst = std::max(worst, std::abs(f.translation()(i)));
  }
  if (scale) *scale = f.linear()(0, 0);
  if (offending) *offending = worst;
  return worst <= tol::entry;
}

bool first_column_unit(const AffineMap& f) {
  if (std::abs(f.linear()(0, 0) - 1.0) > tol::entry) return false;
  for (int i = 1; i < f.dim(); ++i) {
    if (std::abs(f.linear()(i, 0)) > tol::entry) return false;
  }
  return true;
}

}  // namespace

AffineMap BlockForm::reassemble() const {
  const int n = transverse_dim();
  Matrix linear = Matrix::Zero(n + 1, n + 1);
  linear(0, 0) = line_scale;
  linear.row(0).tail(n) = shear.transpose();
  linear.bottomRightCorner(n, n) = transverse;
  Vector translation = Vector::Zero(n + 1);
  translation(0) = line_shift;
  return AffineMap(linear, translation);
}

BlockForm block_decompose(const AffineMap& f) {
  const int dim = f.dim();
  if (dim < 2) {
    throw InvalidInput("block_decompose: need dimension n+1 >= 2");
  }
  double scale = 0.0;
  double offending = 0.0;
  if (!line_block_pattern(f, &scale, &offending)) {
    std::ostringstream msg;
    msg << "map does not preserve the line R x 0: off-line first column or "
           "transverse translation entries reach "
        << offending;
    throw NotLinePreserving(msg.str());
  }
  if (std::abs(scale) < tol::singular) {
    throw SingularMap("block_decompose: line scale r is zero");
  }
  const int n = dim - 1;
  BlockForm block;
  block.line_scale = scale;
  block.shear = f.linear().row(0).tail(n).transpose();
  block.transverse = f.linear().bottomRightCorner(n, n);
  block.line_shift = f.translation()(0);
  return block;
}

double translation_character(const BlockForm& h) {
  if (std::abs(h.line_scale - 1.0) > tol::entry) {
    std::ostringstream msg;
    msg << "translation_character: element scales the line (r = "
        << h.line_scale << ")";
    throw ScalesLine(msg.str());
  }
  return h.line_shift;
}

ShearNormalForm shear_normal_form(const BlockForm& h) {
  if (std::abs(h.line_scale - 1.0) > tol::entry) {
    throw ScalesLine("shear_normal_form: requires r = 1");
  }
  const int n = h.transverse_dim();
  const Matrix shifted =
      h.transverse - Matrix::Identity(n, n);
  if (!eigen_one_space(h.transverse).empty()) {
    throw EigenvalueOne(
        "shear_normal_form: 1 is an eigenvalue of the transverse part");
  }
  // v(A - I) = -w, i.e. (A - I)^T v^T = -w.
  const Vector v = shifted.transpose().colPivHouseholderQr().solve(-h.shear);

  Matrix shear_linear = Matrix::Identity(n + 1, n + 1);
  shear_linear.row(0).tail(n) = v.transpose();
  AffineMap conjugator(shear_linear, Vector::Zero(n + 1));

  const AffineMap conjugated =
      compose(conjugator, compose(h.reassemble(), inverse(conjugator)));
  return ShearNormalForm{conjugator, block_decompose(conjugated)};
}

std::optional<Vector> freeness_violation_witness(const BlockForm& h,
                                                 const Vector& u) {
  if (std::abs(h.line_scale - 1.0) > tol::entry) {
    throw ScalesLine("freeness_violation_witness: requires r = 1");
  }
  if (u.size() != h.transverse_dim()) {
    throw DimensionMismatch("freeness_violation_witness: bad u dimension");
  }
  const double defect = (h.transverse * u - u).norm();
  if (defect > tol::entry * std::max(1.0, u.norm())) {
    throw NotAnEigenvector(
        "freeness_violation_witness: Au != u (defect " +
        std::to_string(defect) + ")");
  }
  const double pairing = h.shear.dot(u);
  if (std::abs(pairing) <= tol::entry) {
    return std::nullopt;
  }
  const double k = -h.line_shift / pairing;
  Vector fixed = Vector::Zero(h.transverse_dim() + 1);
  fixed.tail(h.transverse_dim()) = k * u;
  return fixed;
}

std::string to_string(VerdictTag tag) {
  switch (tag) {
    case VerdictTag::NonProperScaling: return "NonProperScaling";
    case VerdictTag::LineFixedPoints: return "LineFixedPoints";
    case VerdictTag::FreenessViolation: return "FreenessViolation";
    case VerdictTag::NonCompactInvariantPlane:
      return "NonCompactInvariantPlane";
    case VerdictTag::MappingTorus: return "MappingTorus";
    case VerdictTag::CompleteObstruction: return "CompleteObstruction";
  }
  return "?";
}

ClassificationVerdict classify_cyclic(const AffineMap& h,
                                      const ClassifyOptions& options) {
  BlockForm block = block_decompose(h);
  AffineMap element = h;
  bool reflected = false;
  if (block.line_scale < 0.0) {
    // Reduce to positive line scale by passing to the square (the
    // orientation double cover of the cyclic group).
    element = compose(h, h);
    block = block_decompose(element);
    reflected = true;
  }

  ClassificationVerdict verdict;
  verdict.input_was_reflected = reflected;
  const double r = block.line_scale;
  const double d = block.line_shift;
  const int n = block.transverse_dim();

  if (std::abs(r - 1.0) > tol::entry) {
    // The line action x -> rx + d has the unique fixed point d/(1-r);
    // iterating the contracting direction from unit distance shows orbit
    // accumulation on the line.
    OrbitWitness witness;
    witness.line_fixed_point = Vector::Zero(n + 1);
    witness.line_fixed_point(0) = d / (1.0 - r);
    const AffineMap step = r < 1.0 ? element : inverse(element);
    Vector p = witness.line_fixed_point;
    p(0) += 1.0;
    witness.orbit.push_back(p);
    for (int k = 0; k < options.orbit_horizon; ++k) {
      p = apply(step, p);
      witness.orbit.push_back(p);
      witness.final_distance = (p - witness.line_fixed_point).norm();
      if (witness.final_distance < options.orbit_target) {
        witness.reached_target = true;
        break;
      }
    }
    verdict.tag = VerdictTag::NonProperScaling;
    verdict.notes =
        "orbit on the invariant line accumulates at the fixed point of "
        "x -> rx + d; the action is not proper";
    verdict.witness = std::move(witness);
  } else if (std::abs(d) <= tol::entry) {
    verdict.tag = VerdictTag::LineFixedPoints;
    FixedPointWitness witness;
    witness.point = Vector::Zero(n + 1);
    verdict.notes = "r = 1 and d = 0: every point of the line is fixed";
    verdict.witness = std::move(witness);
  } else {
    const std::vector<Vector> kernel = eigen_one_space(block.transverse);
    if (kernel.empty()) {
      ShearNormalForm normal = shear_normal_form(block);
      MappingTorusWitness witness{normal.conjugator, block.transverse, d};
      verdict.tag = VerdictTag::MappingTorus;
      verdict.notes =
          "CompleteObstruction: the quotient is the mapping torus of an "
          "invertible linear map on R^n, whose top homology vanishes; a "
          "closed oriented (n+1)-manifold has nontrivial top homology, so "
          "no complete structure with this holonomy exists";
      verdict.witness = std::move(witness);
    } else {
      for (const Vector& u : kernel) {
        if (auto fixed = freeness_violation_witness(block, u)) {
          verdict.tag = VerdictTag::FreenessViolation;
          verdict.notes =
              "a transverse eigenvector pairs nontrivially with the shear "
              "row: the element fixes a point, so the action is not free";
          verdict.witness = FixedPointWitness{*fixed};
          if (reflected) {
            verdict.notes += "; input had r < 0 and was squared first";
          }
          return verdict;
        }
      }
      PlaneWitness witness;
      witness.line_direction = Vector::Unit(n + 1, 0);
      witness.transverse_direction = Vector::Zero(n + 1);
      witness.transverse_direction.tail(n) = kernel.front();
      verdict.tag = VerdictTag::NonCompactInvariantPlane;
      verdict.notes =
          "the invariant plane spanned by the line and a fixed transverse "
          "direction descends to a non-compact cylinder S^1 x R in the "
          "quotient";
      verdict.witness = std::move(witness);
    }
  }
  if (reflected) {
    verdict.notes += "; input had r < 0 and was squared first";
  }
  return verdict;
}

std::optional<RadiantConjugation> radiant_conjugator(
    const GroupPresentation& group) {
  const int n = group.dimension();
  const int m = group.generator_count();
  Matrix stacked = Matrix::Zero(std::max(1, m) * n, n);
  Vector rhs = Vector::Zero(std::max(1, m) * n);
  for (int g = 0; g < m; ++g) {
    const AffineMap& gen = group.generator(g);
    stacked.middleRows(g * n, n) =
        gen.linear() - Matrix::Identity(n, n);
    rhs.segment(g * n, n) = -gen.translation();
  }

  const Vector p = stacked.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV)
                       .solve(rhs);
  const double residual = (stacked * p - rhs).norm();
  if (residual > tol::entry * std::max(1.0, rhs.norm())) {
    return std::nullopt;
  }

  const AffineMap conjugator = AffineMap::translation(-p);
  const AffineMap back = inverse(conjugator);
  std::vector<std::pair<std::string, AffineMap>> linearized;
  linearized.reserve(group.generators().size());
  for (const auto& [name, map] : group.generators()) {
    linearized.emplace_back(name, compose(conjugator, compose(map, back)));
  }
  return RadiantConjugation{p, conjugator,
                            GroupPresentation(n, std::move(linearized))};
}

bool membership(const AffineMap& f, LineGroup group_tag) {
  double scale = 0.0;
  const bool line_block = line_block_pattern(f, &scale, nullptr);
  switch (group_tag) {
    case LineGroup::Full:
      return line_block && std::abs(scale) > tol::singular;
    case LineGroup::PositiveScale:
      return line_block && scale > tol::singular;
    case LineGroup::ParallelVector:
      return first_column_unit(f);
    case LineGroup::TranslationOnLine:
      return line_block && std::abs(scale - 1.0) <= tol::entry;
    case LineGroup::TranslationReflectionOnLine:
      return line_block && std::abs(std::abs(scale) - 1.0) <= tol::entry;
  }
  return false;
}

}  // namespace affina
