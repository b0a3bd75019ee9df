#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "affina/fixtures.hpp"
#include "affina/tiling.hpp"
#include "helpers.hpp"

using namespace affina;

namespace {

Vector vec2(double x, double y) {
  Vector v(2);
  v << x, y;
  return v;
}

bool same_polygon(const std::vector<Vector>& got,
                  const std::vector<Vector>& want) {
  if (got.size() != want.size()) return false;
  for (size_t i = 0; i < got.size(); ++i) {
    if ((got[i] - want[i]).norm() > 1e-9) return false;
  }
  return true;
}

const TileCopy* find_tile(const std::vector<TileCopy>& tiles,
                          const std::string& label) {
  for (const TileCopy& tile : tiles) {
    if (tile.label == label) return &tile;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("build_example") {
  SUBCASE("TranslationTorus") {
    const ExampleFixture fx = build_example(ExampleKind::TranslationTorus);
    CHECK(fx.group.generator_count() == 2);
    CHECK(fx.group.generator(0).approx_equal(
        AffineMap::translation(vec2(1, 0))));
    CHECK(fx.fundamental_polygon.size() == 4);
    CHECK(fx.preserved_metric == "dx^2+dy^2");
  }
  SUBCASE("HopfCylinder") {
    ExampleParams params;
    params.lambda = 3.0;
    const ExampleFixture fx =
        build_example(ExampleKind::HopfCylinder, params);
    CHECK(fx.group.generator_count() == 1);
    CHECK((fx.group.generator(0).linear() - 3.0 * Matrix::Identity(2, 2))
              .norm() < 1e-12);
    CHECK(fx.group.generator(0).translation().norm() == 0.0);
    params.lambda = 0.0;
    CHECK_THROWS_AS(build_example(ExampleKind::HopfCylinder, params),
                    InvalidInput);
  }
  SUBCASE("SimilarityTorus") {
    const ExampleFixture fx = build_example(ExampleKind::SimilarityTorus);
    REQUIRE(fx.group.generator_count() == 2);
    Matrix la(2, 2);
    la << 0.5, 0, 0, 0.5;
    Matrix lb(2, 2);
    lb << 1, -1, 1, 1;
    CHECK(fx.group.generator(0).approx_equal(AffineMap(la, vec2(0, 1))));
    CHECK(fx.group.generator(1).approx_equal(AffineMap(lb, vec2(2, 0))));
    REQUIRE(fx.fundamental_polygon.size() == 4);
    CHECK(same_polygon(fx.fundamental_polygon,
                       {vec2(0, 0), vec2(2, 0), vec2(1, 1), vec2(0, 1)}));
    // Gluing sanity: b carries the polygon's first edge endpoints onto
    // polygon vertices.
    const AffineMap& b = fx.group.generator(1);
    CHECK((apply(b, vec2(0, 0)) - vec2(2, 0)).norm() < 1e-12);
    CHECK((apply(b, vec2(0, 1)) - vec2(1, 1)).norm() < 1e-12);
    const AffineMap& a = fx.group.generator(0);
    CHECK((apply(a, vec2(2, 0)) - vec2(1, 1)).norm() < 1e-12);
    CHECK((apply(a, vec2(0, 0)) - vec2(0, 1)).norm() < 1e-12);
  }
  SUBCASE("InvariantLine3Torus") {
    ExampleParams params;
    params.lambda = 2.0;
    const ExampleFixture fx =
        build_example(ExampleKind::InvariantLine3Torus, params);
    REQUIRE(fx.group.generator_count() == 2);
    CHECK(fx.group.dimension() == 3);
    Vector e1(3);
    e1 << 1, 0, 0;
    CHECK(fx.group.generator(0).approx_equal(AffineMap::translation(e1)));
    Matrix lb = Matrix::Identity(3, 3);
    lb(1, 1) = 2.0;
    lb(2, 2) = 2.0;
    CHECK(fx.group.generator(1).approx_equal(
        AffineMap(lb, Vector::Zero(3))));
    // Generators commute.
    CHECK(compose(fx.group.generator(0), fx.group.generator(1))
              .approx_equal(compose(fx.group.generator(1),
                                    fx.group.generator(0))));
    params.lambda = 1.0;
    CHECK_THROWS_AS(build_example(ExampleKind::InvariantLine3Torus, params),
                    InvalidInput);
  }
  SUBCASE("IrrationalScrew") {
    const ExampleFixture fx = build_example(ExampleKind::IrrationalScrew);
    REQUIRE(fx.group.generator_count() == 1);
    const AffineMap& a = fx.group.generator(0);
    CHECK(a.dim() == 3);
    CHECK(a.translation()(0) == doctest::Approx(1.0));
    // The transverse block is a rotation: orthogonal with determinant 1.
    const Matrix rot = a.linear().bottomRightCorner(2, 2);
    CHECK((rot.transpose() * rot - Matrix::Identity(2, 2)).norm() < 1e-12);
    CHECK(rot.determinant() == doctest::Approx(1.0));
    // Default angle is 2*pi times the golden-ratio fractional part.
    const double golden_frac = (std::sqrt(5.0) - 1.0) / 2.0;
    CHECK(rot(1, 0) == doctest::Approx(std::sin(2 * M_PI * golden_frac)));
  }
  SUBCASE("HopfManifold") {
    ExampleParams params;
    params.dimension = 4;
    params.lambda = 2.0;
    const ExampleFixture fx =
        build_example(ExampleKind::HopfManifold, params);
    CHECK(fx.group.dimension() == 4);
    CHECK((fx.group.generator(0).linear() - 2.0 * Matrix::Identity(4, 4))
              .norm() < 1e-12);
    params.dimension = 1;
    CHECK_THROWS_AS(build_example(ExampleKind::HopfManifold, params),
                    InvalidInput);
  }
  SUBCASE("name round trip") {
    for (ExampleKind kind :
         {ExampleKind::TranslationTorus, ExampleKind::HopfCylinder,
          ExampleKind::SimilarityTorus, ExampleKind::InvariantLine3Torus,
          ExampleKind::IrrationalScrew, ExampleKind::HopfManifold}) {
      const auto parsed = example_kind_from_string(to_string(kind));
      REQUIRE(parsed.has_value());
      CHECK(*parsed == kind);
    }
    CHECK_FALSE(example_kind_from_string("NoSuchExample").has_value());
  }
}

TEST_CASE("scale_invariant_metric") {
  CHECK(scale_invariant_metric(vec2(2, 0), vec2(0, 4)) ==
        doctest::Approx(4.0));
  CHECK_THROWS_AS(scale_invariant_metric(Vector::Zero(2), vec2(1, 0)),
                  InvalidInput);

  // Invariant under the dilation generator and under a rotation-scale,
  // broken by the translation part of the full similarity generator.
  const ExampleFixture hopf = build_example(ExampleKind::HopfCylinder);
  CHECK(check_metric_invariance(hopf.group.generator(0), 100, 41).invariant);

  const ExampleFixture torus = build_example(ExampleKind::SimilarityTorus);
  const AffineMap& b = torus.group.generator(1);
  const AffineMap b_linear(b.linear(), Vector::Zero(2));
  CHECK(check_metric_invariance(b_linear, 100, 41).invariant);
  const MetricCheck broken = check_metric_invariance(b, 100, 41);
  CHECK_FALSE(broken.invariant);
  CHECK(broken.max_error > 1e-3);

  // Translations never preserve the metric.
  CHECK_FALSE(check_metric_invariance(AffineMap::translation(vec2(1, 0)),
                                      100, 41)
                  .invariant);
}

TEST_CASE("enumerate_reduced_words") {
  // One generator: 1, g, g^-1, g^2, g^-2 -> 2L+1 words.
  CHECK(enumerate_reduced_words(1, 2).size() == 5);
  // Two generators: 1 + 4 + 4*3 = 17 words at L = 2.
  const auto words = enumerate_reduced_words(2, 2);
  CHECK(words.size() == 17);
  CHECK(words.front().letters.empty());
  // Shortest first, and no immediate cancellations anywhere.
  size_t prev_len = 0;
  for (const Word& word : words) {
    CHECK(word.letters.size() >= prev_len);
    prev_len = word.letters.size();
    for (size_t i = 1; i < word.letters.size(); ++i) {
      const bool cancels =
          word.letters[i].first == word.letters[i - 1].first &&
          word.letters[i].second == -word.letters[i - 1].second;
      CHECK_FALSE(cancels);
    }
  }
}

TEST_CASE("enumerate_tiles") {
  const ExampleFixture fx = build_example(ExampleKind::SimilarityTorus);

  SUBCASE("length zero is the bare polygon") {
    const TilingJob job =
        make_tiling_job(fx.fundamental_polygon, fx.group, 0);
    const auto tiles = enumerate_tiles(job);
    REQUIRE(tiles.size() == 1);
    CHECK(tiles[0].word.letters.empty());
    CHECK(same_polygon(tiles[0].vertices, fx.fundamental_polygon));
  }
  SUBCASE("length one gives the five neighbor copies") {
    const TilingJob job =
        make_tiling_job(fx.fundamental_polygon, fx.group, 1);
    const auto tiles = enumerate_tiles(job);
    REQUIRE(tiles.size() == 5);
    CHECK(tiles[0].word.letters.empty());
    const TileCopy* b_tile = find_tile(tiles, "b");
    REQUIRE(b_tile != nullptr);
    CHECK(same_polygon(b_tile->vertices,
                       {vec2(2, 0), vec2(4, 2), vec2(2, 2), vec2(1, 1)}));
    const TileCopy* a_tile = find_tile(tiles, "a");
    REQUIRE(a_tile != nullptr);
    CHECK(same_polygon(a_tile->vertices,
                       {vec2(0, 1), vec2(1, 1), vec2(0.5, 1.5),
                        vec2(0, 1.5)}));
    CHECK(find_tile(tiles, "a^-1") != nullptr);
    CHECK(find_tile(tiles, "b^-1") != nullptr);
  }
  SUBCASE("fingerprint dedup collapses equal maps") {
    // Presenting the same dilation twice under different names halves
    // nothing: words a and b evaluate to the same map and only one copy
    // survives per distinct image.
    Matrix half(2, 2);
    half << 0.5, 0, 0, 0.5;
    const GroupPresentation doubled(
        2, {{"a", AffineMap(half, vec2(0, 1))},
            {"b", AffineMap(half, vec2(0, 1))}});
    const TilingJob job =
        make_tiling_job(fx.fundamental_polygon, doubled, 1);
    const auto tiles = enumerate_tiles(job);
    // Distinct images: identity, the map, its inverse.
    CHECK(tiles.size() == 3);
  }
  SUBCASE("copy count is nondecreasing in word length") {
    size_t prev = 0;
    for (int length = 0; length <= 4; ++length) {
      const TilingJob job =
          make_tiling_job(fx.fundamental_polygon, fx.group, length);
      const size_t count = enumerate_tiles(job).size();
      CHECK(count >= prev);
      prev = count;
    }
  }
  SUBCASE("validation") {
    CHECK_THROWS_AS(
        enumerate_tiles(make_tiling_job({vec2(0, 0), vec2(1, 0)}, fx.group,
                                        1)),
        InvalidInput);
    // Self-intersecting bowtie.
    CHECK_THROWS_AS(
        enumerate_tiles(make_tiling_job(
            {vec2(0, 0), vec2(1, 1), vec2(1, 0), vec2(0, 1)}, fx.group, 1)),
        InvalidInput);
    const ExampleFixture torus3 =
        build_example(ExampleKind::InvariantLine3Torus);
    CHECK_THROWS_AS(
        enumerate_tiles(make_tiling_job(fx.fundamental_polygon, torus3.group,
                                        1)),
        InvalidInput);
  }
}

TEST_CASE("render_tiling") {
  const ExampleFixture fx = build_example(ExampleKind::SimilarityTorus);
  const TilingJob job = make_tiling_job(fx.fundamental_polygon, fx.group, 2);
  const std::string svg = render_tiling(job);

  CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\"") !=
        std::string::npos);
  CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
  // Identity copy is highlighted and labeled with Greek edge names.
  CHECK(svg.find("#c02020") != std::string::npos);
  CHECK(svg.find("data-word=\"1\"") != std::string::npos);
  CHECK(svg.find("data-word=\"a b\"") != std::string::npos);
  CHECK(svg.find(">α<") != std::string::npos);
  CHECK(svg.find(">δ<") != std::string::npos);
  // One path element per enumerated copy.
  const size_t copies = enumerate_tiles(job).size();
  size_t paths = 0;
  for (size_t pos = svg.find("<path"); pos != std::string::npos;
       pos = svg.find("<path", pos + 1)) {
    ++paths;
  }
  CHECK(paths == copies);
  // Deterministic output.
  CHECK(render_tiling(job) == svg);
}
