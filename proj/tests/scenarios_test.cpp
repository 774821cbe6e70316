#include <set>

#include "doctest.h"
#include "hgs/scenarios.hpp"

using namespace hgs;

TEST_CASE("scenario ids are unique, stable, and section-prefixed") {
  auto ids = scenario_ids();
  CHECK(ids.size() >= 20);
  std::set<std::string> unique(ids.begin(), ids.end());
  CHECK(unique.size() == ids.size());
  for (const auto& id : ids) {
    CAPTURE(id);
    CHECK((id.rfind("3.1-", 0) == 0 || id.rfind("3.2-", 0) == 0 ||
           id.rfind("4.1-", 0) == 0 || id.rfind("4.2-", 0) == 0 ||
           id.rfind("4.3-", 0) == 0 || id.rfind("4.4-", 0) == 0));
  }
}

TEST_CASE("unknown filters are rejected") {
  Caps caps;
  CHECK_THROWS_AS(run_scenarios("nonexistent", caps), SpecError);
  CHECK_THROWS_AS(run_probe("nonexistent", caps), SpecError);
}

TEST_CASE("section 4.1 scenarios pass") {
  Caps caps;
  for (const auto& r : run_scenarios("4.1", caps)) {
    CAPTURE(r.id);
    CAPTURE(r.expected);
    CAPTURE(r.actual);
    CHECK(r.status == ScenarioResult::Status::pass);
  }
}

TEST_CASE("section 3.2 scenarios pass") {
  Caps caps;
  auto results = run_scenarios("3.2", caps);
  CHECK(results.size() == 4);
  for (const auto& r : results) {
    CAPTURE(r.id);
    CAPTURE(r.actual);
    CHECK(r.status == ScenarioResult::Status::pass);
  }
}

TEST_CASE("section 4.3 scenarios pass") {
  Caps caps;
  for (const auto& r : run_scenarios("4.3", caps)) {
    CAPTURE(r.id);
    CAPTURE(r.expected);
    CAPTURE(r.actual);
    CHECK(r.status == ScenarioResult::Status::pass);
  }
}

TEST_CASE("the full scenario suite passes") {
  Caps caps;
  for (const auto& r : run_scenarios("", caps)) {
    CAPTURE(r.id);
    CAPTURE(r.expected);
    CAPTURE(r.actual);
    CHECK(r.status == ScenarioResult::Status::pass);
  }
}

TEST_CASE("results are deterministic across worker counts") {
  Caps serial;
  serial.jobs = 1;
  Caps parallel;
  parallel.jobs = 4;
  auto a = run_scenarios("3.1", serial);
  auto b = run_scenarios("3.1", parallel);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].id == b[i].id);
    CHECK(a[i].expected == b[i].expected);
    CHECK(a[i].actual == b[i].actual);
    CHECK(a[i].status == b[i].status);
  }
}

TEST_CASE("a low holomorph cap skips instead of failing") {
  Caps caps;
  caps.max_hol_order = 4;  // blocks every scenario that needs the holomorph side
  auto results = run_scenarios("4.3-burnside-c15", caps);
  REQUIRE(results.size() == 1);
  CHECK(results[0].status == ScenarioResult::Status::skipped);
  CHECK(!results[0].note.empty());
}
