#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "signsum/bounds.hpp"
#include "signsum/geom2d.hpp"
#include "signsum/optimizer.hpp"
#include "signsum/report.hpp"
#include "signsum/zonotope.hpp"

namespace signsum {

using nlohmann::json;

/// Malformed or unreadable input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"vertices": [[x, y], ...]}; any vertex order on input.
json to_json(const ConvexPolygon& p);
ConvexPolygon polygon_from_json(const json& j);

// {"generators": [[x, y], ...]}
json to_json(const GeneratorSet& g);
GeneratorSet generators_from_json(const json& j);

// {"bodies": [{"vertices": ...}, ...]}
json bodies_to_json(const std::vector<ConvexPolygon>& bodies);
std::vector<ConvexPolygon> bodies_from_json(const json& j);

json to_json(const BoundReport& r);
json to_json(const std::vector<BoundReport>& reports);
json to_json(const SignedSumResult& r);
json to_json(const CValue& c);
json to_json(const UnitConfiguration& c);
json to_json(const ConfigurationEstimate& e);
json to_json(const OptimizerSettings& s);
OptimizerSettings settings_from_json(const json& j, OptimizerSettings defaults = {});

/// Number rendered with 12 significant digits, as used in CSV output.
std::string format_number(double v);

/// "context,lhs,rhs,slack,equality" header plus one row per report.
std::string reports_to_csv(const std::vector<BoundReport>& reports);

json read_json_file(const std::filesystem::path& path);

/// Writes to a sibling temporary file, then renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace signsum
