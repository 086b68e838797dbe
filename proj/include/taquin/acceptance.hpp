#pragma once

#include "taquin/kernels.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace taquin {

struct AcceptanceOptions {
  std::uint64_t seed = 20240601;
  std::size_t random_round_trips = 10000;
  std::size_t random_separations = 1000;
  Execution execution = Execution::parallel;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// Runs the ten acceptance checks in order.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

/// "criterion 3 PASS  <title>: <detail> (0.12 s)"
std::string format_line(const CriterionResult& r);

}  // namespace taquin
