#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mixsing/deform.hpp"
#include "mixsing/handles.hpp"
#include "mixsing/homogeneity.hpp"
#include "mixsing/monodromy.hpp"
#include "mixsing/numeric.hpp"
#include "mixsing/seifert.hpp"

namespace mixsing {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kExitOk = 0, kExitInconsistent = 1, kExitInvalidInput = 2, kExitInconclusive = 3 };

Json to_json(const WeightData& w);
Json to_json(const CyclicPoly& c);
Json to_json(const HandleDecomposition& h);
Json to_json(const FoldOrbitReport& r);
Json to_json(const GenericityReport& r);
Json to_json(const DeformationSpec& d);
Json seifert_json(const SeifertLinkData& s);
Json monodromy_json(std::int64_t p, std::int64_t q, std::int64_t m, std::int64_t n);

struct AnalysisInput {
  std::string f;
  std::string g;
  DeformationOptions options;
  bool numeric = false;
  NumericConfig numeric_config;
};

struct AnalysisReport {
  Json json;
  bool consistent = true;
  bool numeric_inconclusive = false;
  int exit_code() const;
};

// Throws ParseError / DomainError on invalid input.
AnalysisReport analyze(const AnalysisInput& in);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Identity grid over coprime 1 <= q < p <= max_p and 0 <= n < m <= max_m.
std::vector<Check> verify_grid(std::int64_t max_m, std::int64_t max_p);
// f = z1^m + z2^m, g = z1 + 2 z2.
std::vector<Check> verify_example1(std::int64_t m);
// Numeric fold count of F_t against the predicted ell.
std::vector<Check> verify_folds(const DeformationSpec& d, const NumericConfig& cfg, FoldOrbitReport* out = nullptr);

// Human-readable rendering of a report.
std::string render_table(const Json& j);

}  // namespace mixsing
