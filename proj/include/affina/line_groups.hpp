#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "affina/affine.hpp"

namespace affina {

/// Block decomposition of a line-preserving map on R x R^n:
///
///   [ r  w ] [ d ]
///   [ 0  A ] [ 0 ]
///
/// r scales the invariant line, d translates along it, w is the shear row
/// and A the transverse linear part.
struct BlockForm {
  double line_scale = 1.0;  // r
  Vector shear;             // w (row covector, length n)
  Matrix transverse;        // A (n x n)
  double line_shift = 0.0;  // d

  int transverse_dim() const { return static_cast<int>(shear.size()); }

  /// The (n+1)-dimensional AffineMap this block form encodes.
  AffineMap reassemble() const;
};

/// Splits f into its BlockForm; throws NotLinePreserving when the first
/// column of the linear part is not (r,0,...,0) or the translation is not
/// (d,0,...,0) to tolerance.
BlockForm block_decompose(const AffineMap& f);

/// d, the translation along the invariant line. Defined only on elements
/// translating the line (r = 1); throws ScalesLine otherwise.
double translation_character(const BlockForm& h);

struct ShearNormalForm {
  AffineMap conjugator;  // shear along the line with row v
  BlockForm normalized;  // conjugator * h * conjugator^-1, with w = 0
};

/// Solves v(A - I) = -w and conjugates the shear away. Requires r = 1 and
/// ker(A - I) = 0; throws EigenvalueOne when 1 is an eigenvalue of A.
ShearNormalForm shear_normal_form(const BlockForm& h);

/// Given r = 1 and an eigenvector u with Au = u: when w.u != 0, the point
/// (0, ku) with k = -d/(w.u) is fixed by the reassembled map; returns it.
/// Returns nullopt in the perpendicular case w.u = 0.
std::optional<Vector> freeness_violation_witness(const BlockForm& h,
                                                 const Vector& u);

enum class VerdictTag {
  NonProperScaling,
  LineFixedPoints,
  FreenessViolation,
  NonCompactInvariantPlane,
  MappingTorus,
  CompleteObstruction,
};

std::string to_string(VerdictTag tag);

/// Orbit of a line point contracting toward the fixed point of the line
/// action x -> rx + d.
struct OrbitWitness {
  std::vector<Vector> orbit;
  Vector line_fixed_point;
  double final_distance = 0.0;
  bool reached_target = false;
};

struct FixedPointWitness {
  Vector point;
};

/// Invariant plane spanned by a line direction and a transverse eigen
/// direction, both expressed in R^{n+1}.
struct PlaneWitness {
  Vector line_direction;
  Vector transverse_direction;
};

/// The shear conjugator that kills w, plus the transverse linear part and
/// line shift of the normalized element.
struct MappingTorusWitness {
  AffineMap conjugator;
  Matrix transverse;
  double line_shift = 0.0;
};

using Witness = std::variant<OrbitWitness, FixedPointWitness, PlaneWitness,
                             MappingTorusWitness>;

struct ClassificationVerdict {
  VerdictTag tag;
  Witness witness;
  std::string notes;
  bool input_was_reflected = false;  // r < 0 inputs are squared first
};

struct ClassifyOptions {
  int orbit_horizon = tol::orbit_horizon;
  double orbit_target = tol::orbit_target;
};

/// Decision tree for the cyclic group generated by a line-preserving map.
ClassificationVerdict classify_cyclic(const AffineMap& h,
                                      const ClassifyOptions& options = {});

struct RadiantConjugation {
  Vector fixed_point;
  AffineMap conjugator;  // translation moving the fixed point to the origin
  GroupPresentation linearized;
};

/// Joint fixed point of all generators, found by stacked least squares;
/// nullopt when the system is inconsistent (residual >= tolerance).
std::optional<RadiantConjugation> radiant_conjugator(
    const GroupPresentation& group);

enum class LineGroup {
  Full,                        // r != 0
  PositiveScale,               // r > 0
  ParallelVector,              // first linear column (1,0,...,0), any translation
  TranslationOnLine,           // r = 1, translation (d,0,...,0)
  TranslationReflectionOnLine, // r = +-1, translation (d,0,...,0)
};

bool membership(const AffineMap& f, LineGroup group_tag);

}  // namespace affina
