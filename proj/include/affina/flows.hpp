#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "affina/affine.hpp"
#include "affina/line_groups.hpp"

namespace affina {

enum class FlowKind { Parallel, Radial, Cylindrical };

/// Parallel: (x,y) -> (x+t, y) on R x R^{n}.
/// Radial: p -> e^{-t} p on R^n (contracting for t > 0).
/// Cylindrical: (x,y) -> (x, e^{-t} y), radial on each leaf {x} x R^n.
struct FlowSpec {
  FlowKind kind = FlowKind::Radial;
  int dimension = 1;
};

Vector flow(const FlowSpec& spec, double t, const Vector& p);

struct CommutationReport {
  bool commutes = true;
  // First counterexample, when commutes is false.
  double t = 0.0;
  Vector point;
  Vector map_then_flow;
  Vector flow_then_map;
};

/// Samples random (t, p) pairs and checks apply(f, flow(t,p)) against
/// flow(t, apply(f,p)) to tolerance. Deterministic for a given seed.
CommutationReport commutes_with_flow(const FlowSpec& spec, const AffineMap& f,
                                     int samples, uint64_t seed);

struct Ball {
  Ball(Vector center, double radius);
  Vector center;
  double radius;
};

/// Whether the radial-flow orbit of q meets the open ball, i.e. whether
/// some e^t q lies in U. The orbit of 0 is {0}, so q = 0 is in the
/// saturation exactly when the ball contains the origin.
bool radial_saturation_contains(const Ball& u, const Vector& q);

/// Whether e^{-t} U is contained in U for every t >= 0. For a ball this
/// holds exactly when the origin lies in its closure.
bool forward_absorbing(const Ball& u);

struct AvoidanceReport {
  int samples = 0;
  int max_word_length = 0;
  double min_transverse_norm = 0.0;
  Word worst_word;
  Vector worst_point;
  bool line_hit = false;  // some image came within tolerance of the line
};

/// Applies random words (length <= max_word_length) to points with nonzero
/// transverse part and reports the smallest transverse norm seen. All
/// generators must translate the invariant line (TranslationOnLine).
/// Points with |y| below tolerance are rejected up front.
AvoidanceReport line_avoidance_check(const GroupPresentation& group,
                                     std::span<const Vector> points,
                                     int max_word_length, uint64_t seed);

/// Convenience sampler: random points in [-2,2]^{n+1} with transverse norm
/// at least 0.05, deterministic for a given seed.
std::vector<Vector> sample_transverse_points(int dimension, int count,
                                             uint64_t seed);

/// For an element with r = 1, the affine action y -> Ay + v induced on the
/// transverse factor R^n (v is the transverse translation block; zero for
/// TranslationOnLine members). Throws ScalesLine when r != 1.
AffineMap induced_transverse_action(const AffineMap& f);

}  // namespace affina
