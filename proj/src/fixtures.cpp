#include "affina/fixtures.hpp"

#include <cmath>
#include <random>

namespace affina {

namespace {

Vector vec2(double x, double y) {
  Vector v(2);
  v << x, y;
  return v;
}

Vector vec3(double x, double y, double z) {
  Vector v(3);
  v << x, y, z;
  return v;
}

}  // namespace

std::string to_string(ExampleKind kind) {
  switch (kind) {
    case ExampleKind::TranslationTorus: return "TranslationTorus";
    case ExampleKind::HopfCylinder: return "HopfCylinder";
    case ExampleKind::SimilarityTorus: return "SimilarityTorus";
    case ExampleKind::InvariantLine3Torus: return "InvariantLine3Torus";
    case ExampleKind::IrrationalScrew: return "IrrationalScrew";
    case ExampleKind::HopfManifold: return "HopfManifold";
  }
  return "?";
}

std::optional<ExampleKind> example_kind_from_string(std::string_view name) {
  for (ExampleKind kind :
       {ExampleKind::TranslationTorus, ExampleKind::HopfCylinder,
        ExampleKind::SimilarityTorus, ExampleKind::InvariantLine3Torus,
        ExampleKind::IrrationalScrew, ExampleKind::HopfManifold}) {
    if (name == to_string(kind)) return kind;
  }
  return std::nullopt;
}

ExampleFixture build_example(ExampleKind kind, const ExampleParams& params) {
  switch (kind) {
    case ExampleKind::TranslationTorus: {
      GroupPresentation group(
          2, {{"a", AffineMap::translation(vec2(1, 0))},
              {"b", AffineMap::translation(vec2(0, 1))}});
      return ExampleFixture{
          to_string(kind), std::move(group),
          {vec2(0, 0), vec2(1, 0), vec2(1, 1), vec2(0, 1)},
          "dx^2+dy^2",
          "euclidean structure; the unit square is a fundamental domain"};
    }
    case ExampleKind::HopfCylinder: {
      if (!(params.lambda > 0.0)) {
        throw InvalidInput("HopfCylinder: lambda must be positive");
      }
      Matrix linear = params.lambda * Matrix::Identity(2, 2);
      GroupPresentation group(2,
                              {{"g", AffineMap(linear, Vector::Zero(2))}});
      return ExampleFixture{
          to_string(kind), std::move(group), {},
          "(dx^2+dy^2)/(x^2+y^2)",
          "radiant: fixed point at the origin; dilations preserve the "
          "scale-invariant metric on the punctured plane"};
    }
    case ExampleKind::SimilarityTorus: {
      Matrix la(2, 2);
      la << 0.5, 0.0, 0.0, 0.5;
      Matrix lb(2, 2);
      lb << 1.0, -1.0, 1.0, 1.0;
      GroupPresentation group(2, {{"a", AffineMap(la, vec2(0, 1))},
                                  {"b", AffineMap(lb, vec2(2, 0))}});
      return ExampleFixture{
          to_string(kind), std::move(group),
          {vec2(0, 0), vec2(2, 0), vec2(1, 1), vec2(0, 1)},
          "(dx^2+dy^2)/(x^2+y^2)",
          "similarity structure on the torus; the quadrilateral Q is a "
          "fundamental domain and the generators glue its edges"};
    }
    case ExampleKind::InvariantLine3Torus: {
      if (!(params.lambda > 1.0)) {
        throw InvalidInput("InvariantLine3Torus: lambda must exceed 1");
      }
      Matrix lb = Matrix::Identity(3, 3);
      lb(1, 1) = params.lambda;
      lb(2, 2) = params.lambda;
      GroupPresentation group(
          3, {{"a", AffineMap::translation(vec3(1, 0, 0))},
              {"b", AffineMap(lb, Vector::Zero(3))}});
      return ExampleFixture{
          to_string(kind), std::move(group), {}, "",
          "the x-axis is an invariant line on which the group acts by "
          "pure translations; the line avoids the developing image"};
    }
    case ExampleKind::IrrationalScrew: {
      const double c = std::cos(params.theta);
      const double s = std::sin(params.theta);
      Matrix linear = Matrix::Identity(3, 3);
      linear(1, 1) = c;
      linear(1, 2) = -s;
      linear(2, 1) = s;
      linear(2, 2) = c;
      GroupPresentation group(3,
                              {{"a", AffineMap(linear, vec3(1, 0, 0))}});
      return ExampleFixture{
          to_string(kind), std::move(group), {}, "",
          "screw motion along the x-axis; the induced rotation on the "
          "transverse disk has dense orbits, so the induced action is "
          "neither free nor proper"};
    }
    case ExampleKind::HopfManifold: {
      if (params.dimension < 2) {
        throw InvalidInput("HopfManifold: dimension must be >= 2");
      }
      if (!(params.lambda > 0.0)) {
        throw InvalidInput("HopfManifold: lambda must be positive");
      }
      const int n = params.dimension;
      Matrix linear = params.lambda * Matrix::Identity(n, n);
      GroupPresentation group(n,
                              {{"g", AffineMap(linear, Vector::Zero(n))}});
      return ExampleFixture{
          to_string(kind), std::move(group), {}, "",
          "radiant with fixed point at the origin; the quotient of "
          "punctured space is S^1 x S^{n-1}"};
    }
  }
  throw InvalidInput("build_example: unknown example kind");
}

double scale_invariant_metric(const Vector& p, const Vector& v) {
  const double p2 = p.squaredNorm();
  if (p2 == 0.0) {
    throw InvalidInput("scale_invariant_metric: undefined at the origin");
  }
  return v.squaredNorm() / p2;
}

MetricCheck check_metric_invariance(const AffineMap& g, int samples,
                                    uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  MetricCheck check;
  int done = 0;
  while (done < samples) {
    Vector p(g.dim());
    Vector v(g.dim());
    for (int k = 0; k < g.dim(); ++k) {
      p(k) = coord(rng);
      v(k) = coord(rng);
    }
    if (p.norm() < 0.5 || apply(g, p).norm() < 0.5) continue;
    ++done;
    const double direct = scale_invariant_metric(p, v);
    const double pullback =
        scale_invariant_metric(apply(g, p), g.linear() * v);
    const double err = std::abs(pullback - direct) / std::max(1.0, direct);
    check.max_error = std::max(check.max_error, err);
  }
  check.invariant = check.max_error <= tol::entry;
  return check;
}

}  // namespace affina
