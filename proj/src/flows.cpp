#include "affina/flows.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace affina {

namespace {

void require_flow_dim(const FlowSpec& spec, const Vector& p) {
  if (static_cast<int>(p.size()) != spec.dimension) {
    throw DimensionMismatch("flow: point dimension does not match spec");
  }
}

}  // namespace

Vector flow(const FlowSpec& spec, double t, const Vector& p) {
  require_flow_dim(spec, p);
  switch (spec.kind) {
    case FlowKind::Parallel: {
      if (spec.dimension < 2) {
        throw InvalidInput("Parallel flow needs dimension >= 2");
      }
      Vector out = p;
      out(0) += t;
      return out;
    }
    case FlowKind::Radial:
      return std::exp(-t) * p;
    case FlowKind::Cylindrical: {
      if (spec.dimension < 2) {
        throw InvalidInput("Cylindrical flow needs dimension >= 2");
      }
      Vector out = p;
      out.tail(p.size() - 1) *= std::exp(-t);
      return out;
    }
  }
  throw InvalidInput("unknown flow kind");
}

CommutationReport commutes_with_flow(const FlowSpec& spec, const AffineMap& f,
                                     int samples, uint64_t seed) {
  if (f.dim() != spec.dimension) {
    throw DimensionMismatch("commutes_with_flow: dimension mismatch");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> time_dist(-3.0, 3.0);
  std::uniform_real_distribution<double> coord_dist(-5.0, 5.0);

  CommutationReport report;
  for (int i = 0; i < samples; ++i) {
    const double t = time_dist(rng);
    Vector p(spec.dimension);
    for (int k = 0; k < spec.dimension; ++k) p(k) = coord_dist(rng);

    const Vector map_then_flow = flow(spec, t, apply(f, p));
    const Vector flow_then_map = apply(f, flow(spec, t, p));
    const double gap = (map_then_flow - flow_then_map).norm();
    if (gap > tol::entry * std::max(1.0, map_then_flow.norm())) {
      report.commutes = false;
      report.t = t;
      report.point = p;
      report.map_then_flow = map_then_flow;
      report.flow_then_map = flow_then_map;
      return report;
    }
  }
  return report;
}

Ball::Ball(Vector center_in, double radius_in)
    : center(std::move(center_in)), radius(radius_in) {
  if (!(radius > 0.0)) {
    throw InvalidInput("Ball: radius must be positive");
  }
}

bool radial_saturation_contains(const Ball& u, const Vector& q) {
  if (q.size() != u.center.size()) {
    throw DimensionMismatch("radial_saturation_contains: dimension mismatch");
  }
  const double q2 = q.squaredNorm();
  if (q2 == 0.0) {
    // The orbit of the origin is a single point.
    return u.center.norm() < u.radius;
  }
  // Minimize |s q - c|^2 over the open ray s > 0.
  const double qc = q.dot(u.center);
  const double c2 = u.center.squaredNorm();
  const double r2 = u.radius * u.radius;
  if (qc > 0.0) {
    return c2 - qc * qc / q2 < r2;
  }
  // Best approach is the s -> 0 limit; some small s works iff 0 is in U.
  return c2 < r2;
}

bool forward_absorbing(const Ball& u) {
  // e^{-t} carries the ball into itself for all t >= 0 exactly when the
  // t -> infinity images (points near the origin) stay inside, i.e. the
  // origin lies in the closed ball.
  return u.center.norm() <= u.radius + tol::entry;
}

std::vector<Vector> sample_transverse_points(int dimension, int count,
                                             uint64_t seed) {
  if (dimension < 2) {
    throw InvalidInput("sample_transverse_points: need dimension >= 2");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  std::vector<Vector> points;
  points.reserve(static_cast<size_t>(count));
  while (static_cast<int>(points.size()) < count) {
    Vector p(dimension);
    for (int k = 0; k < dimension; ++k) p(k) = coord(rng);
    if (p.tail(dimension - 1).norm() >= 0.05) {
      points.push_back(std::move(p));
    }
  }
  return points;
}

AvoidanceReport line_avoidance_check(const GroupPresentation& group,
                                     std::span<const Vector> points,
                                     int max_word_length, uint64_t seed) {
  for (int g = 0; g < group.generator_count(); ++g) {
    if (!membership(group.generator(g), LineGroup::TranslationOnLine)) {
      throw InvalidInput("line_avoidance_check: generator '" +
                         group.generator_name(g) +
                         "' does not act by translation on the line");
    }
  }
  const int n = group.dimension() - 1;
  for (const Vector& p : points) {
    if (static_cast<int>(p.size()) != group.dimension()) {
      throw DimensionMismatch("line_avoidance_check: point dimension");
    }
    if (p.tail(n).norm() <= tol::entry) {
      throw InvalidInput(
          "line_avoidance_check: sample point lies on the invariant line");
    }
  }
  if (group.generator_count() == 0) {
    throw InvalidInput("line_avoidance_check: empty presentation");
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> length_dist(0, max_word_length);
  std::uniform_int_distribution<int> gen_dist(0, group.generator_count() - 1);
  std::uniform_int_distribution<int> sign_dist(0, 1);

  AvoidanceReport report;
  report.samples = static_cast<int>(points.size());
  report.max_word_length = max_word_length;
  report.min_transverse_norm = std::numeric_limits<double>::infinity();

  for (const Vector& p : points) {
    Word word;
    const int length = length_dist(rng);
    int prev_index = -1;
    int prev_sign = 0;
    for (int k = 0; k < length; ++k) {
      int index = gen_dist(rng);
      int sign = sign_dist(rng) == 0 ? 1 : -1;
      // Avoid an immediate cancellation so words stay reduced.
      if (index == prev_index && sign == -prev_sign) sign = -sign;
      word.letters.emplace_back(index, sign);
      prev_index = index;
      prev_sign = sign;
    }
    const Vector image = apply(evaluate_word(group, word), p);
    const double transverse = image.tail(n).norm();
    if (transverse < report.min_transverse_norm) {
      report.min_transverse_norm = transverse;
      report.worst_word = word;
      report.worst_point = p;
    }
    if (transverse <= tol::entry) report.line_hit = true;
  }
  return report;
}

AffineMap induced_transverse_action(const AffineMap& f) {
  const int dim = f.dim();
  if (dim < 2) {
    throw InvalidInput("induced_transverse_action: need dimension >= 2");
  }
  if (std::abs(f.linear()(0, 0) - 1.0) > tol::entry) {
    throw ScalesLine("induced_transverse_action: requires r = 1");
  }
  for (int i = 1; i < dim; ++i) {
    if (std::abs(f.linear()(i, 0)) > tol::entry) {
      throw NotLinePreserving(
          "induced_transverse_action: first column is not (1,0,...,0)");
    }
  }
  const int n = dim - 1;
  return AffineMap(f.linear().bottomRightCorner(n, n),
                   f.translation().tail(n));
}

}  // namespace affina
