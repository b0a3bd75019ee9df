#pragma once

#include <json.hpp>

#include "affina/affine.hpp"
#include "affina/dev_chart.hpp"
#include "affina/fixtures.hpp"
#include "affina/flows.hpp"
#include "affina/line_groups.hpp"

namespace affina {

using Json = nlohmann::json;

// Interchange encodings used by every CLI subcommand. All parsers throw
// InvalidInput with a short location hint on malformed data.

Json to_json(const Vector& v);
Vector vector_from_json(const Json& j, const char* where = "vector");

Json to_json(const AffineMap& map);
AffineMap affine_map_from_json(const Json& j);

Json to_json(const GroupPresentation& group);
GroupPresentation group_from_json(const Json& j);

Json to_json(const Word& word);
Word word_from_json(const Json& j);

Json to_json(const BlockForm& block);
Json to_json(const FixedPointSet& set);
Json to_json(const ClassificationVerdict& verdict);
Json to_json(const AvoidanceReport& report);
Json to_json(const DevelopedPath& developed);

Json to_json(const ChartComplex& complex);
ChartComplex chart_complex_from_json(const Json& j);

Json to_json(const DevPath& path);
DevPath dev_path_from_json(const Json& j);

Json to_json(const ExampleFixture& fixture);

}  // namespace affina
