#include "signsum/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

namespace signsum {
namespace {

std::vector<Vec2> planar_points(const json& arr, const char* what) {
  if (!arr.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<Vec2> out;
  for (const auto& p : arr) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
      throw InputError(std::string(what) + " entries must be [x, y] number pairs");
    }
    out.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return out;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

}  // namespace

json to_json(const ConvexPolygon& p) {
  json v = json::array();
  for (const auto& q : p.vertices()) v.push_back({q.x, q.y});
  return {{"vertices", v}};
}

ConvexPolygon polygon_from_json(const json& j) {
  const auto pts = planar_points(field(j, "vertices"), "vertices");
  try {
    return ConvexPolygon::hull_of(pts);
  } catch (const GeometryError& e) {
    throw InputError(e.what());
  }
}

json to_json(const GeneratorSet& g) {
  return {{"generators", g.generators()}};
}

GeneratorSet generators_from_json(const json& j) {
  const json& arr = field(j, "generators");
  if (!arr.is_array()) throw InputError("generators must be an array");
  std::vector<VecN> gens;
  for (const auto& u : arr) {
    if (!u.is_array() || u.empty()) throw InputError("generators must be coordinate arrays");
    VecN v;
    for (const auto& c : u) {
      if (!c.is_number()) throw InputError("generator coordinates must be numbers");
      v.push_back(c.get<double>());
    }
    gens.push_back(std::move(v));
  }
  try {
    return GeneratorSet(std::move(gens));
  } catch (const GeometryError& e) {
    throw InputError(e.what());
  }
}

json bodies_to_json(const std::vector<ConvexPolygon>& bodies) {
  json arr = json::array();
  for (const auto& b : bodies) arr.push_back(to_json(b));
  return {{"bodies", arr}};
}

std::vector<ConvexPolygon> bodies_from_json(const json& j) {
  const json& arr = field(j, "bodies");
  if (!arr.is_array() || arr.empty()) throw InputError("bodies must be a non-empty array");
  std::vector<ConvexPolygon> out;
  for (const auto& b : arr) out.push_back(polygon_from_json(b));
  return out;
}

json to_json(const BoundReport& r) {
  return {{"lhs", r.lhs},
          {"rhs", r.rhs},
          {"slack", r.slack},
          {"equality", r.equality},
          {"context", r.context}};
}

json to_json(const std::vector<BoundReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr;
}

json to_json(const SignedSumResult& r) {
  return {{"value", r.value}, {"pattern", r.pattern}, {"vector", r.vector}};
}

json to_json(const CValue& c) {
  return {{"d", c.d}, {"n", c.n}, {"k", c.k}, {"value", c.value}, {"kind", to_string(c.kind)}};
}

json to_json(const UnitConfiguration& c) {
  return {{"d", c.d}, {"angles", c.angles}, {"vectors", c.vectors}};
}

json to_json(const ConfigurationEstimate& e) {
  return {{"params", {{"d", e.d}, {"n", e.n}, {"k", e.k}}},
          {"best_value", e.best_value},
          {"best_config", to_json(e.best_config)},
          {"restarts_used", e.restarts_used},
          {"seed", e.seed},
          {"converged", e.converged}};
}

json to_json(const OptimizerSettings& s) {
  return {{"restarts", s.restarts}, {"seed", s.seed}, {"max_iters", s.max_iters}, {"tol", s.tol}};
}

OptimizerSettings settings_from_json(const json& j, OptimizerSettings s) {
  if (!j.is_object()) throw InputError("settings must be a JSON object");
  try {
    if (j.contains("restarts")) s.restarts = j.at("restarts").get<int>();
    if (j.contains("seed")) s.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("max_iters")) s.max_iters = j.at("max_iters").get<int>();
    if (j.contains("tol")) s.tol = j.at("tol").get<double>();
  } catch (const json::exception& e) {
    throw InputError(std::string("bad settings: ") + e.what());
  }
  return s;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string reports_to_csv(const std::vector<BoundReport>& reports) {
  std::ostringstream out;
  out << "context,lhs,rhs,slack,equality\n";
  for (const auto& r : reports) {
    out << '"' << r.context << "\"," << format_number(r.lhs) << ',' << format_number(r.rhs) << ','
        << format_number(r.slack) << ',' << (r.equality ? "true" : "false") << '\n';
  }
  return out.str();
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in " + path.string() + ": " + e.what());
  }
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw InputError("cannot write " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw InputError("cannot rename onto " + path.string() + ": " + ec.message());
  }
}

}  // namespace signsum
