#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cyclo/rational.hpp"

namespace cyclo::cli {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::string subcommand;
  int l = 0;
  std::optional<RatVec> lambda;
  std::optional<IntVec> theta;
  int m = 1;
  std::pair<int, int> cap{6, 6};
  int window = 15;
  std::optional<unsigned long long> seed;
  std::string out_path;  // empty: stdout only
};

// Exit codes: 0 all identities pass, 1 identity failure (minimal witness in
// the report), 2 parameter-regime rejection or bad config.
struct RunResult {
  int exit_code = 0;
  Json report;
};

RunResult run(const RunConfig& config);

RatVec parse_lambda(const std::string& csv);
IntVec parse_theta(const std::string& csv);

// Seeded sample used by sweep: denominators <= 6, renormalized to sum 1.
RatVec random_lambda(int l, unsigned long long& state);

int max_threads();  // CHK_THREADS, default 1

}  // namespace cyclo::cli
