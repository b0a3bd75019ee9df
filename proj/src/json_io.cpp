#include "affina/json_io.hpp"

#include <string>

namespace affina {

namespace {

const Json& require_field(const Json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidInput(std::string(where) + ": missing field '" + key + "'");
  }
  return j.at(key);
}

double number_at(const Json& j, const char* where) {
  if (!j.is_number()) {
    throw InvalidInput(std::string(where) + ": expected a number");
  }
  return j.get<double>();
}

}  // namespace

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Vector vector_from_json(const Json& j, const char* where) {
  if (!j.is_array() || j.empty()) {
    throw InvalidInput(std::string(where) + ": expected a non-empty array");
  }
  Vector v(static_cast<int>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) {
    v(static_cast<int>(i)) = number_at(j[i], where);
  }
  return v;
}

Json to_json(const AffineMap& map) {
  Json linear = Json::array();
  for (int i = 0; i < map.dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < map.dim(); ++j) row.push_back(map.linear()(i, j));
    linear.push_back(std::move(row));
  }
  return Json{{"linear", std::move(linear)},
              {"translation", to_json(map.translation())}};
}

AffineMap affine_map_from_json(const Json& j) {
  const Json& rows = require_field(j, "linear", "map");
  if (!rows.is_array() || rows.empty()) {
    throw InvalidInput("map.linear: expected a non-empty array of rows");
  }
  const int n = static_cast<int>(rows.size());
  Matrix linear(n, n);
  for (int i = 0; i < n; ++i) {
    const Json& row = rows[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw InvalidInput("map.linear: rows must form a square grid");
    }
    for (int k = 0; k < n; ++k) {
      linear(i, k) = number_at(row[static_cast<size_t>(k)], "map.linear");
    }
  }
  Vector translation = vector_from_json(
      require_field(j, "translation", "map"), "map.translation");
  if (static_cast<int>(translation.size()) != n) {
    throw InvalidInput("map.translation: length must match the linear part");
  }
  return AffineMap(std::move(linear), std::move(translation));
}

Json to_json(const GroupPresentation& group) {
  Json generators = Json::array();
  for (const auto& [name, map] : group.generators()) {
    generators.push_back(Json{{"name", name}, {"map", to_json(map)}});
  }
  return Json{{"dimension", group.dimension()},
              {"generators", std::move(generators)}};
}

GroupPresentation group_from_json(const Json& j) {
  const int dimension =
      require_field(j, "dimension", "group").get<int>();
  const Json& gens = require_field(j, "generators", "group");
  if (!gens.is_array()) {
    throw InvalidInput("group.generators: expected an array");
  }
  std::vector<std::pair<std::string, AffineMap>> generators;
  generators.reserve(gens.size());
  for (const Json& g : gens) {
    generators.emplace_back(
        require_field(g, "name", "generator").get<std::string>(),
        affine_map_from_json(require_field(g, "map", "generator")));
  }
  return GroupPresentation(dimension, std::move(generators));
}

Json to_json(const Word& word) {
  Json out = Json::array();
  for (const auto& [index, exponent] : word.letters) {
    out.push_back(Json::array({index, exponent}));
  }
  return out;
}

Word word_from_json(const Json& j) {
  if (!j.is_array()) {
    throw InvalidInput("word: expected an array of [index, exponent] pairs");
  }
  Word word;
  for (const Json& letter : j) {
    if (!letter.is_array() || letter.size() != 2) {
      throw InvalidInput("word: letters must be [index, exponent] pairs");
    }
    word.letters.emplace_back(letter[0].get<int>(), letter[1].get<int>());
  }
  return word;
}

namespace {

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json to_json(const BlockForm& block) {
  return Json{{"r", block.line_scale},
              {"w", to_json(block.shear)},
              {"A", matrix_to_json(block.transverse)},
              {"d", block.line_shift}};
}

Json to_json(const FixedPointSet& set) {
  switch (set.kind) {
    case FixedPointSet::Kind::None:
      return Json{{"kind", "none"}};
    case FixedPointSet::Kind::Unique:
      return Json{{"kind", "unique"}, {"point", to_json(set.point)}};
    case FixedPointSet::Kind::Flat: {
      Json directions = Json::array();
      for (const Vector& d : set.directions) directions.push_back(to_json(d));
      return Json{{"kind", "flat"},
                  {"point", to_json(set.point)},
                  {"directions", std::move(directions)}};
    }
  }
  return Json();
}

Json to_json(const ClassificationVerdict& verdict) {
  Json witness;
  if (const auto* orbit = std::get_if<OrbitWitness>(&verdict.witness)) {
    Json points = Json::array();
    for (const Vector& p : orbit->orbit) points.push_back(to_json(p));
    witness = Json{{"type", "orbit"},
                   {"orbit", std::move(points)},
                   {"line_fixed_point", to_json(orbit->line_fixed_point)},
                   {"final_distance", orbit->final_distance},
                   {"reached_target", orbit->reached_target}};
  } else if (const auto* fixed =
                 std::get_if<FixedPointWitness>(&verdict.witness)) {
    witness = Json{{"type", "fixed_point"}, {"point", to_json(fixed->point)}};
  } else if (const auto* plane = std::get_if<PlaneWitness>(&verdict.witness)) {
    witness = Json{{"type", "plane"},
                   {"line_direction", to_json(plane->line_direction)},
                   {"transverse_direction",
                    to_json(plane->transverse_direction)}};
  } else if (const auto* torus =
                 std::get_if<MappingTorusWitness>(&verdict.witness)) {
    witness = Json{{"type", "mapping_torus"},
                   {"conjugator", to_json(torus->conjugator)},
                   {"transverse", matrix_to_json(torus->transverse)},
                   {"line_shift", torus->line_shift}};
  }
  return Json{{"tag", to_string(verdict.tag)},
              {"witness", std::move(witness)},
              {"notes", verdict.notes},
              {"input_was_reflected", verdict.input_was_reflected}};
}

Json to_json(const AvoidanceReport& report) {
  return Json{{"samples", report.samples},
              {"max_word_length", report.max_word_length},
              {"min_transverse_norm", report.min_transverse_norm},
              {"worst_word", to_json(report.worst_word)},
              {"worst_point", to_json(report.worst_point)},
              {"line_hit", report.line_hit}};
}

Json to_json(const DevelopedPath& developed) {
  Json polyline = Json::array();
  for (const Vector& p : developed.polyline) polyline.push_back(to_json(p));
  return Json{{"polyline", std::move(polyline)},
              {"terminal", to_json(developed.terminal)},
              {"accumulated", to_json(developed.accumulated)}};
}

Json to_json(const ChartComplex& complex) {
  Json transitions = Json::array();
  for (const auto& [edge, map] : complex.transitions()) {
    transitions.push_back(Json{{"from", edge.first},
                               {"to", edge.second},
                               {"map", to_json(map)}});
  }
  return Json{{"dimension", complex.dimension()},
              {"charts", complex.charts()},
              {"transitions", std::move(transitions)}};
}

ChartComplex chart_complex_from_json(const Json& j) {
  const int dimension =
      require_field(j, "dimension", "complex").get<int>();
  const Json& chart_ids = require_field(j, "charts", "complex");
  if (!chart_ids.is_array()) {
    throw InvalidInput("complex.charts: expected an array of ids");
  }
  ChartComplex complex(dimension,
                       chart_ids.get<std::vector<std::string>>());
  const Json& transitions = require_field(j, "transitions", "complex");
  if (!transitions.is_array()) {
    throw InvalidInput("complex.transitions: expected an array");
  }
  for (const Json& t : transitions) {
    complex.add_transition(
        require_field(t, "from", "transition").get<std::string>(),
        require_field(t, "to", "transition").get<std::string>(),
        affine_map_from_json(require_field(t, "map", "transition")));
  }
  return complex;
}

Json to_json(const DevPath& path) {
  Json segments = Json::array();
  for (const PathSegment& segment : path.segments) {
    Json points = Json::array();
    for (const Vector& p : segment.points) points.push_back(to_json(p));
    segments.push_back(
        Json{{"chart", segment.chart}, {"points", std::move(points)}});
  }
  return Json{{"segments", std::move(segments)}};
}

DevPath dev_path_from_json(const Json& j) {
  const Json& segments = require_field(j, "segments", "path");
  if (!segments.is_array()) {
    throw InvalidInput("path.segments: expected an array");
  }
  DevPath path;
  for (const Json& s : segments) {
    PathSegment segment;
    segment.chart = require_field(s, "chart", "segment").get<std::string>();
    const Json& points = require_field(s, "points", "segment");
    if (!points.is_array() || points.empty()) {
      throw InvalidInput("segment.points: expected a non-empty array");
    }
    for (const Json& p : points) {
      segment.points.push_back(vector_from_json(p, "segment.points"));
    }
    path.segments.push_back(std::move(segment));
  }
  return path;
}

Json to_json(const ExampleFixture& fixture) {
  Json out = to_json(fixture.group);
  out["name"] = fixture.name;
  Json metadata{{"invariant_structure", fixture.invariant_structure}};
  if (!fixture.preserved_metric.empty()) {
    metadata["preserved_metric"] = fixture.preserved_metric;
  }
  out["metadata"] = std::move(metadata);
  if (!fixture.fundamental_polygon.empty()) {
    Json polygon = Json::array();
    for (const Vector& v : fixture.fundamental_polygon) {
      polygon.push_back(to_json(v));
    }
    out["polygon"] = std::move(polygon);
  }
  return out;
}

}  // namespace affina
