#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "signsum/io.hpp"
#include "signsum/report.hpp"

namespace signsum {

struct Violation {
  std::string check;
  std::string detail;
  json instance;
};

/// Outcome of one verification suite: fixed fixtures first, then `count`
/// seeded random instances.
struct SuiteResult {
  std::string suite;
  std::size_t checks = 0;
  std::vector<BoundReport> fixture_reports;
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
};

inline const std::vector<std::string> kSuites = {"dowker", "zonotope", "minkowski", "remark"};

/// Runs one named suite, or every suite for "all". Fixture files are read
/// from `fixture_dir`. Throws InputError for an unknown suite name.
std::vector<SuiteResult> run_verification(const std::string& suite, int count,
                                          std::uint64_t seed,
                                          const std::filesystem::path& fixture_dir);

json to_json(const SuiteResult& r);

}  // namespace signsum
