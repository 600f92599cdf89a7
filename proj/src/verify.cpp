#include "signsum/verify.hpp"

#include <algorithm>
#include <numbers>

#include "signsum/bounds.hpp"
#include "signsum/circumball.hpp"
#include "signsum/instances.hpp"
#include "signsum/zonotope.hpp"

namespace signsum {
namespace {

constexpr double kPi = std::numbers::pi;

class Recorder {
 public:
  explicit Recorder(std::string suite) { result_.suite = std::move(suite); }

  void expect(bool ok, std::string check, std::string detail, json instance = nullptr) {
    ++result_.checks;
    if (!ok) result_.violations.push_back({std::move(check), std::move(detail), std::move(instance)});
  }

  void fixture(const BoundReport& r) { result_.fixture_reports.push_back(r); }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::string describe(const BoundReport& r) {
  return r.context + ": lhs=" + format_number(r.lhs) + " rhs=" + format_number(r.rhs) +
         " slack=" + format_number(r.slack);
}

json algebra(double got, double want) { return {{"got", got}, {"want", want}}; }

SuiteResult dowker_suite(int count, InstanceRng& rng, const std::filesystem::path& dir) {
  Recorder rec("dowker");
  const json polygons = read_json_file(dir / "regular_polygons.json");
  for (const auto& f : polygons.at("polygons")) {
    const int m = f.at("m").get<int>();
    const ConvexPolygon p = regular_polygon(m, f.at("rho").get<double>(), f.at("phase").get<double>());
    const BoundReport r = dowker_check(p, m);
    rec.fixture(r);
    rec.expect(r.equality, "regular polygon equality", describe(r), f);
  }
  {
    const json f = read_json_file(dir / "perturbed_hexagon.json");
    const BoundReport r = dowker_check(polygon_from_json(f), 6);
    rec.fixture(r);
    rec.expect(!r.equality && r.slack >= 1e-7, "perturbed hexagon strict", describe(r), f);
  }
  for (int i = 0; i < count; ++i) {
    const ConvexPolygon p = random_convex_polygon(rng, 12);
    const int n = rng.integer(static_cast<int>(p.size()), 12);
    const BoundReport r = dowker_check(p, n);
    rec.expect(r.holds(), "dowker inequality", describe(r), {{"polygon", to_json(p)}, {"n", n}});
  }
  return rec.take();
}

SuiteResult zonotope_suite(int count, InstanceRng& rng, const std::filesystem::path& dir) {
  Recorder rec("zonotope");
  const json configurations = read_json_file(dir / "regular_configurations.json");
  for (const auto& f : configurations.at("configurations")) {
    const int n = f.at("n").get<int>();
    const GeneratorSet g = generators_from_json(f);
    const double value = max_signed_sum_sweep(g).value;
    const double exact = c_exact_2nn(n).value;
    const BoundReport r = make_report(value, signed_sum_lower_bound(g),
                                      "regular configuration n=" + std::to_string(n));
    rec.fixture(r);
    rec.expect(std::abs(value - exact) <= 1e-9, "regular configuration value",
               describe(r), algebra(value, exact));
    rec.expect(r.equality && equality_case_check(g, 1e-9), "regular configuration equality",
               describe(r), f);
  }
  for (const char* name : {"hexagonal_generators.json", "zero_generator.json"}) {
    const json f = read_json_file(dir / name);
    const GeneratorSet g = generators_from_json(f);
    const double want = g.size() == 1 ? 0.0 : 2.0;
    const BoundReport r = make_report(max_signed_sum_sweep(g).value, signed_sum_lower_bound(g), name);
    rec.fixture(r);
    rec.expect(std::abs(r.lhs - want) <= 1e-9 && r.equality && equality_case_check(g, 1e-9),
               std::string("fixture ") + name, describe(r), f);
  }
  for (int i = 0; i < count; ++i) {
    const GeneratorSet g = random_generator_set(rng, 1, 14);
    const json inst = to_json(g);
    const SignedSumResult sweep = max_signed_sum_sweep(g);
    const SignedSumResult brute = max_signed_sum_brute(g);
    rec.expect(std::abs(sweep.value - brute.value) <= 1e-12 * (1.0 + brute.value),
               "sweep matches brute force", "", algebra(sweep.value, brute.value));
    rec.expect(evaluate_pattern(g, sweep.pattern).value == sweep.value, "sweep pattern replays", "",
               inst);
    double total = 0.0;
    for (const auto& u : g.generators()) total += norm(u);
    const ConvexPolygon z = build_zonotope(g);
    rec.expect(std::abs(perimeter(z) - 4.0 * total) <= 1e-9, "zonotope perimeter identity", "",
               algebra(perimeter(z), 4.0 * total));
    rec.expect(std::abs(circumradius(z).radius - sweep.value) <= 1e-9, "zonotope radius identity",
               "", algebra(circumradius(z).radius, sweep.value));
    rec.expect(z.size() <= 2 * g.size(), "zonotope vertex count", "", inst);
    const BoundReport r = make_report(sweep.value, signed_sum_lower_bound(g), "signed sum bound");
    rec.expect(r.holds(), "signed sum inequality", describe(r), inst);
  }
  return rec.take();
}

SuiteResult minkowski_suite(int count, InstanceRng& rng, const std::filesystem::path& dir) {
  Recorder rec("minkowski");
  {
    const json f = read_json_file(dir / "rhombus_pair_equal.json");
    const SymmetricBodySet s(bodies_from_json(f));
    BoundReport r = minkowski_circumradius_check(s);
    r.context = "equal rhombi: " + r.context;
    rec.fixture(r);
    rec.expect(r.equality && std::abs(r.lhs - std::sqrt(2.0)) <= 1e-9, "equal rhombi equality",
               describe(r), f);
    rec.expect(longest_segment_condition(s, 1e-9), "equal rhombi longest segments", "", f);
  }
  {
    const json f = read_json_file(dir / "rhombus_pair_strict.json");
    const SymmetricBodySet s(bodies_from_json(f));
    BoundReport r = minkowski_circumradius_check(s);
    r.context = "strict rhombi: " + r.context;
    rec.fixture(r);
    rec.expect(!r.equality && std::abs(r.lhs - 1.5) <= 1e-9 &&
                   std::abs(r.slack - (1.5 - std::sqrt(2.0))) <= 1e-9,
               "strict rhombi strict", describe(r), f);
    // The necessary direction condition holds here although equality fails.
    rec.expect(longest_segment_condition(s, 1e-9), "strict rhombi longest segments", "", f);
  }
  for (int n = 2; n <= 10; ++n) {
    const SymmetricBodySet s(regular_segments(n));
    BoundReport r = minkowski_circumradius_check(s);
    r.context = "segments: " + r.context;
    rec.fixture(r);
    rec.expect(r.equality && equality_direction_check(s, 1e-9), "segment sharpness", describe(r),
               bodies_to_json(s.bodies()));
  }
  for (int i = 0; i < count; ++i) {
    const auto bodies = random_symmetric_bodies(rng, 6, 10);
    const SymmetricBodySet s(bodies);
    const BoundReport r = minkowski_circumradius_check(s);
    rec.expect(r.holds(), "symmetric sum inequality", describe(r), bodies_to_json(bodies));
  }
  return rec.take();
}

void chain_checks(Recorder& rec, const SymmetricBodySet& s, const json& inst, bool keep) {
  const auto reports = remark_chain_check(s);
  for (std::size_t j = 0; j < reports.size(); ++j) {
    const bool ok = j == 1 ? reports[j].equality : reports[j].holds();
    if (keep) rec.fixture(reports[j]);
    rec.expect(ok, reports[j].context, describe(reports[j]), inst);
  }
}

SuiteResult remark_suite(int count, InstanceRng& rng) {
  Recorder rec("remark");
  rec.expect(std::abs(remark_constant(2) - 2.0 / kPi) <= 1e-12, "constant d=2", "",
             algebra(remark_constant(2), 2.0 / kPi));
  rec.expect(std::abs(remark_constant(3) - 0.5) <= 1e-12, "constant d=3", "",
             algebra(remark_constant(3), 0.5));
  rec.expect(std::abs(remark_constant(1) - 1.0) <= 1e-12, "constant d=1", "",
             algebra(remark_constant(1), 1.0));

  bool decreasing = true;
  for (int n = 1; n < 10000 && decreasing; ++n) {
    decreasing = zonoid_disc_ratio(n + 1) < zonoid_disc_ratio(n) && zonoid_disc_ratio(n) > 2.0 / kPi;
  }
  rec.expect(decreasing, "zonoid ratio strictly decreasing", "");
  rec.expect(zonoid_disc_ratio(10000) - 2.0 / kPi < 1e-8, "zonoid ratio limit", "",
             algebra(zonoid_disc_ratio(10000), 2.0 / kPi));
  for (int n = 1; n <= 64; ++n) {
    rec.expect(std::abs(zonoid_disc_ratio_geometric(n) - zonoid_disc_ratio(n)) <= 1e-9,
               "zonoid ratio geometric n=" + std::to_string(n), "",
               algebra(zonoid_disc_ratio_geometric(n), zonoid_disc_ratio(n)));
  }

  {
    const double h = std::sqrt(0.5);
    const std::vector<Vec2> sq = {{-h, -h}, {h, -h}, {h, h}, {-h, h}};
    const SymmetricBodySet s({ConvexPolygon::hull_of(sq), ConvexPolygon::hull_of(sq)});
    chain_checks(rec, s, bodies_to_json(s.bodies()), true);
    const auto reports = remark_chain_check(s);
    rec.expect(!reports.back().equality, "squares end-to-end strict", describe(reports.back()));
  }
  {
    const SymmetricBodySet s(regular_segments(2));
    chain_checks(rec, s, bodies_to_json(s.bodies()), true);
    rec.expect(remark_chain_check(s)[2].equality, "segments attain the lower link", "");
  }
  {
    const Vec2 o[] = {{0.0, 0.0}};
    const SymmetricBodySet s({ConvexPolygon::hull_of(o), ConvexPolygon::hull_of(o)});
    chain_checks(rec, s, bodies_to_json(s.bodies()), true);
    bool all_eq = true;
    for (const auto& r : remark_chain_check(s)) all_eq = all_eq && r.equality;
    rec.expect(all_eq, "singletons equality throughout", "");
  }
  for (int i = 0; i < count; ++i) {
    const auto bodies = random_symmetric_bodies(rng, 6, 10);
    chain_checks(rec, SymmetricBodySet(bodies), bodies_to_json(bodies), false);
  }
  return rec.take();
}

}  // namespace

std::vector<SuiteResult> run_verification(const std::string& suite, int count,
                                          std::uint64_t seed,
                                          const std::filesystem::path& fixture_dir) {
  if (count < 1) throw InputError("count must be >= 1");
  const bool all = suite == "all";
  if (!all && std::find(kSuites.begin(), kSuites.end(), suite) == kSuites.end()) {
    throw InputError("unknown suite: " + suite);
  }
  std::vector<SuiteResult> out;
  for (std::size_t i = 0; i < kSuites.size(); ++i) {
    if (!all && kSuites[i] != suite) continue;
    InstanceRng rng(seed * 0x9e3779b97f4a7c15ULL + i);
    if (kSuites[i] == "dowker") out.push_back(dowker_suite(count, rng, fixture_dir));
    if (kSuites[i] == "zonotope") out.push_back(zonotope_suite(count, rng, fixture_dir));
    if (kSuites[i] == "minkowski") out.push_back(minkowski_suite(count, rng, fixture_dir));
    if (kSuites[i] == "remark") out.push_back(remark_suite(count, rng));
  }
  return out;
}

json to_json(const SuiteResult& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"check", v.check}, {"detail", v.detail}, {"instance", v.instance}});
  }
  return {{"suite", r.suite},
          {"checks", r.checks},
          {"passed", r.passed()},
          {"fixtures", to_json(r.fixture_reports)},
          {"violations", violations}};
}

}  // namespace signsum
