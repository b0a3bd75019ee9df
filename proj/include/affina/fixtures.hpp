#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "affina/affine.hpp"

namespace affina {

enum class ExampleKind {
  TranslationTorus,     // rank-two translation lattice on the plane
  HopfCylinder,         // cyclic dilation group on the punctured plane
  SimilarityTorus,      // rotation-scale + translation quadrilateral gluing
  InvariantLine3Torus,  // line translation + transverse dilation on R x R^2
  IrrationalScrew,      // screw motion: line translation + irrational rotation
  HopfManifold,         // homothety on punctured R^n
};

std::string to_string(ExampleKind kind);
std::optional<ExampleKind> example_kind_from_string(std::string_view name);

struct ExampleParams {
  double lambda = 2.0;
  // Defaults to 2*pi times the fractional part of the golden ratio.
  double theta = 3.8832220774509327;
  int dimension = 3;  // HopfManifold only
};

struct ExampleFixture {
  std::string name;
  GroupPresentation group;
  // Fundamental domain when one is part of the construction.
  std::vector<Vector> fundamental_polygon;
  // Formula string for a preserved metric, empty when none is recorded.
  std::string preserved_metric;
  std::string invariant_structure;
};

ExampleFixture build_example(ExampleKind kind, const ExampleParams& params = {});

/// m(p)(v) = |v|^2 / |p|^2 on the punctured plane; invariant under every
/// linear similarity.
double scale_invariant_metric(const Vector& p, const Vector& v);

struct MetricCheck {
  bool invariant = true;
  double max_error = 0.0;
};

/// Compares the pullback of the scale-invariant metric under g with the
/// metric itself at sampled (point, vector) pairs away from the origin.
MetricCheck check_metric_invariance(const AffineMap& g, int samples,
                                    uint64_t seed);

}  // namespace affina
