// Command-line front end for the affina library. Every subcommand reads
// JSON from stdin (or --input) and writes JSON (or SVG for `tile`) to
// stdout (or --output).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "affina/dev_chart.hpp"
#include "affina/fixtures.hpp"
#include "affina/flows.hpp"
#include "affina/json_io.hpp"
#include "affina/line_groups.hpp"
#include "affina/tiling.hpp"

namespace {

using affina::Json;

struct GlobalOptions {
  double tolerance = 1e-9;
  uint64_t seed = 0;
  int max_iter = 60;
  std::string input_path;
  std::string output_path;
};

std::string read_input(const GlobalOptions& options) {
  if (!options.input_path.empty()) {
    std::ifstream in(options.input_path);
    if (!in) {
      throw affina::InvalidInput("cannot open input file: " +
                                 options.input_path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ostringstream buffer;
  buffer << std::cin.rdbuf();
  return buffer.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw affina::InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

void write_output(const GlobalOptions& options, const std::string& text) {
  if (options.output_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(options.output_path);
  if (!out) {
    throw affina::InvalidInput("cannot open output file: " +
                               options.output_path);
  }
  out << text;
}

void emit_json(const GlobalOptions& options, const Json& value) {
  write_output(options, value.dump(2));
}

affina::Vector parse_point(const std::string& csv) {
  std::vector<double> entries;
  std::stringstream stream(csv);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      entries.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw affina::InvalidInput("bad coordinate in point: '" + item + "'");
    }
  }
  if (entries.empty()) {
    throw affina::InvalidInput("point must have at least one coordinate");
  }
  affina::Vector p(static_cast<int>(entries.size()));
  for (size_t i = 0; i < entries.size(); ++i) {
    p(static_cast<int>(i)) = entries[i];
  }
  return p;
}

// A presentation JSON is recognized by its "generators" field; anything
// with "linear" is a single map.
bool looks_like_group(const Json& j) {
  return j.is_object() && j.contains("generators");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"affine structure computations: group algebra, invariant-line "
               "classification, model flows, developing maps, and tilings"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--tolerance", global.tolerance,
                 "absolute tolerance for coordinate comparisons");
  app.add_option("--seed", global.seed, "seed for randomized harnesses");
  app.add_option("--max-iter", global.max_iter,
                 "iteration horizon for orbit witnesses");
  app.add_option("--input", global.input_path,
                 "read input JSON from a file instead of stdin");
  app.add_option("--output", global.output_path,
                 "write output to a file instead of stdout");

  // example
  auto* example_cmd =
      app.add_subcommand("example", "emit a built-in example presentation");
  std::string example_name;
  affina::ExampleParams example_params;
  example_cmd->add_option("name", example_name, "example identifier")
      ->required();
  example_cmd->add_option("--lambda", example_params.lambda,
                          "scale parameter");
  example_cmd->add_option("--theta", example_params.theta,
                          "rotation angle (radians)");
  example_cmd->add_option("--dim", example_params.dimension,
                          "ambient dimension (HopfManifold)");

  auto* classify_cmd = app.add_subcommand(
      "classify", "run the invariant-line decision tree on a map or on "
                  "every generator of a presentation");
  auto* block_cmd =
      app.add_subcommand("block", "block-decompose a line-preserving map");
  auto* normal_cmd = app.add_subcommand(
      "normal-form", "conjugate the shear row away (r = 1, ker(A-I) = 0)");
  auto* fixed_cmd = app.add_subcommand(
      "fixed-point", "fixed points of a map, or the joint fixed point and "
                     "linearization of a presentation");

  auto* orbit_cmd =
      app.add_subcommand("orbit", "iterate a map on a point");
  std::string orbit_point;
  orbit_cmd->add_option("--point", orbit_point, "comma-separated start point")
      ->required();

  auto* develop_cmd = app.add_subcommand(
      "develop", "develop a path over a chart complex "
                 "(input: {\"complex\":..., \"path\":...})");
  auto* holonomy_cmd = app.add_subcommand(
      "holonomy", "holonomy of a loop (same input as develop)");

  auto* avoid_cmd = app.add_subcommand(
      "avoid-line", "sample random words of a translation-on-line group and "
                    "report the smallest transverse norm reached");
  int avoid_samples = 10000;
  int avoid_word_length = 8;
  avoid_cmd->add_option("--samples", avoid_samples, "number of sample points");
  avoid_cmd->add_option("--max-word-length", avoid_word_length,
                        "maximum random word length");

  auto* saturate_cmd = app.add_subcommand(
      "saturate", "radial-saturation membership for a batch of query points "
                  "(input: {\"ball\":{...}, \"queries\":[...]})");

  auto* tile_cmd = app.add_subcommand(
      "tile", "render the orbit of a fundamental polygon as SVG");
  int tile_word_length = 4;
  std::string tile_viewport;
  tile_cmd->add_option("--max-word-length", tile_word_length,
                       "maximum word length to enumerate");
  tile_cmd->add_option("--viewport", tile_viewport,
                       "viewport as minx,miny,maxx,maxy (default -1,-1,5,3)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    affina::tol::entry = global.tolerance;

    if (example_cmd->parsed()) {
      auto kind = affina::example_kind_from_string(example_name);
      if (!kind) {
        throw affina::InvalidInput("unknown example '" + example_name + "'");
      }
      emit_json(global,
                affina::to_json(affina::build_example(*kind, example_params)));
      return 0;
    }

    const Json input = parse_json(read_input(global));

    if (classify_cmd->parsed()) {
      affina::ClassifyOptions options;
      options.orbit_horizon = global.max_iter;
      if (looks_like_group(input)) {
        const auto group = affina::group_from_json(input);
        Json out = Json::array();
        for (const auto& [name, map] : group.generators()) {
          Json entry = affina::to_json(affina::classify_cyclic(map, options));
          entry["generator"] = name;
          out.push_back(std::move(entry));
        }
        emit_json(global, out);
      } else {
        emit_json(global,
                  affina::to_json(affina::classify_cyclic(
                      affina::affine_map_from_json(input), options)));
      }
    } else if (block_cmd->parsed()) {
      emit_json(global, affina::to_json(affina::block_decompose(
                            affina::affine_map_from_json(input))));
    } else if (normal_cmd->parsed()) {
      const auto normal = affina::shear_normal_form(
          affina::block_decompose(affina::affine_map_from_json(input)));
      emit_json(global,
                Json{{"conjugator", affina::to_json(normal.conjugator)},
                     {"normalized", affina::to_json(normal.normalized)}});
    } else if (fixed_cmd->parsed()) {
      if (looks_like_group(input)) {
        const auto group = affina::group_from_json(input);
        if (auto radiant = affina::radiant_conjugator(group)) {
          emit_json(global,
                    Json{{"fixed_point", affina::to_json(radiant->fixed_point)},
                         {"conjugator", affina::to_json(radiant->conjugator)},
                         {"linearized", affina::to_json(radiant->linearized)}});
        } else {
          emit_json(global, Json{{"fixed_point", nullptr}});
        }
      } else {
        emit_json(global, affina::to_json(affina::fixed_points(
                              affina::affine_map_from_json(input))));
      }
    } else if (orbit_cmd->parsed()) {
      const auto map = affina::affine_map_from_json(input);
      affina::Vector p = parse_point(orbit_point);
      Json trajectory = Json::array();
      trajectory.push_back(affina::to_json(p));
      for (int k = 0; k < global.max_iter; ++k) {
        p = affina::apply(map, p);
        trajectory.push_back(affina::to_json(p));
      }
      emit_json(global, Json{{"trajectory", std::move(trajectory)}});
    } else if (develop_cmd->parsed() || holonomy_cmd->parsed()) {
      if (!input.is_object() || !input.contains("complex") ||
          !input.contains("path")) {
        throw affina::InvalidInput(
            "expected an object with 'complex' and 'path' fields");
      }
      const auto complex = affina::chart_complex_from_json(input["complex"]);
      const auto path = affina::dev_path_from_json(input["path"]);
      if (develop_cmd->parsed()) {
        emit_json(global, affina::to_json(affina::develop(complex, path)));
      } else {
        emit_json(global,
                  affina::to_json(affina::loop_holonomy(complex, path)));
      }
    } else if (avoid_cmd->parsed()) {
      const auto group = affina::group_from_json(input);
      const auto points = affina::sample_transverse_points(
          group.dimension(), avoid_samples, global.seed);
      emit_json(global, affina::to_json(affina::line_avoidance_check(
                            group, points, avoid_word_length, global.seed)));
    } else if (saturate_cmd->parsed()) {
      if (!input.is_object() || !input.contains("ball") ||
          !input.contains("queries")) {
        throw affina::InvalidInput(
            "expected an object with 'ball' and 'queries' fields");
      }
      const Json& ball_json = input["ball"];
      if (!ball_json.contains("center") || !ball_json.contains("radius")) {
        throw affina::InvalidInput("ball needs 'center' and 'radius'");
      }
      const affina::Ball ball(
          affina::vector_from_json(ball_json["center"], "ball.center"),
          ball_json["radius"].get<double>());
      Json results = Json::array();
      for (const Json& q : input["queries"]) {
        results.push_back(affina::radial_saturation_contains(
            ball, affina::vector_from_json(q, "query")));
      }
      emit_json(global, Json{{"results", std::move(results)},
                             {"forward_absorbing",
                              affina::forward_absorbing(ball)}});
    } else if (tile_cmd->parsed()) {
      const auto group = affina::group_from_json(input);
      if (!input.contains("polygon")) {
        throw affina::InvalidInput(
            "tile: input needs a 'polygon' field (list of 2D vertices)");
      }
      std::vector<affina::Vector> polygon;
      for (const Json& v : input["polygon"]) {
        polygon.push_back(affina::vector_from_json(v, "polygon"));
      }
      auto job = affina::make_tiling_job(std::move(polygon), group,
                                         tile_word_length);
      if (!tile_viewport.empty()) {
        const affina::Vector corners = parse_point(tile_viewport);
        if (corners.size() != 4) {
          throw affina::InvalidInput(
              "viewport must be minx,miny,maxx,maxy");
        }
        job.viewport_min << corners(0), corners(1);
        job.viewport_max << corners(2), corners(3);
      }
      write_output(global, affina::render_tiling(job));
    }
    return 0;
  } catch (const affina::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
