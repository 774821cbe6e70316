#pragma once

#include <string>
#include <vector>

#include "hgs/context.hpp"

namespace hgs {

/// One verifiable claim from the published counts, with a stable id
/// (section-prefixed), an expected value, and the computed value.
struct ScenarioResult {
  std::string id;
  std::string description;
  std::string expected;
  std::string actual;
  enum class Status { pass, fail, skipped } status = Status::fail;
  std::string note;  // names the cap for skips
  double seconds = 0.0;
};

/// Runs every scenario whose id starts with `filter` (all when empty).
/// Deterministic across runs and worker counts; throws SpecError when the
/// filter matches nothing.
std::vector<ScenarioResult> run_scenarios(const std::string& filter,
                                          const Caps& caps);

std::vector<std::string> scenario_ids();

/// Long-running optional probes for the questions the classification
/// leaves open; results are reported, never asserted.
std::vector<std::string> probe_names();
ScenarioResult run_probe(const std::string& name, const Caps& caps);

}  // namespace hgs
