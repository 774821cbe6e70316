#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "hgs/report.hpp"
#include "hgs/gpside.hpp"

using namespace hgs;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

// Runs the installed CLI binary (path from HGS_BIN) and captures stdout.
RunResult run_cli_binary(const std::string& args) {
  const char* bin = std::getenv("HGS_BIN");
  REQUIRE(bin != nullptr);
  RunResult r;
  const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.output.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("enumerate S3 prints five rows") {
  auto r = run_cli_binary("enumerate S3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("S3") != std::string::npos);
  CHECK(r.output.find("C6") != std::string::npos);
  // 5 data rows: header + rule + 5
  unsigned lines = 0;
  for (char c : r.output)
    if (c == '\n') ++lines;
  CHECK(lines == 7);
}

TEST_CASE("enumerate C1 prints the trivial structure") {
  auto r = run_cli_binary("enumerate C1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("C1") != std::string::npos);
}

TEST_CASE("count A4 A4") {
  auto r = run_cli_binary("count A4 A4");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("10") != std::string::npos);
}

TEST_CASE("count C4 all lists both order-4 types") {
  auto r = run_cli_binary("count C4 all --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("C4,C4,1") != std::string::npos);
  CHECK(r.output.find("C4,C2xC2,1") != std::string::npos);
}

TEST_CASE("count with an order mismatch exits 2") {
  auto r = run_cli_binary("count C4 C6");
  CHECK(r.exit_code == 2);
}

TEST_CASE("bad spec exits 2, low cap exits 3") {
  CHECK(run_cli_binary("enumerate NotAGroup").exit_code == 2);
  CHECK(run_cli_binary("enumerate C6 --unknown-flag").exit_code == 2);
  CHECK(run_cli_binary("enumerate C30 --max-hol-order 10").exit_code == 3);
}

TEST_CASE("induced Q8 reports no decomposition") {
  auto r = run_cli_binary("induced Q8");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("no semidirect decomposition") != std::string::npos);
}

TEST_CASE("induced A4 lists four structures") {
  auto r = run_cli_binary("induced A4 --format csv");
  CHECK(r.exit_code == 0);
  unsigned rows = 0;
  for (char c : r.output)
    if (c == '\n') ++rows;
  CHECK(rows == 5);  // header + 4 structures
}

TEST_CASE("json output is byte-identical across runs and worker counts") {
  for (const char* cmd : {"enumerate C6 --format json", "count C6 all --format json",
                          "induced S3 --format json", "group D12 --format json"}) {
    CAPTURE(cmd);
    auto a = run_cli_binary(cmd);
    auto b = run_cli_binary(std::string(cmd) + " --jobs 4");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK_NOTHROW(nlohmann::json::parse(a.output));
  }
  // the group export carries the canonical schema
  auto g = nlohmann::json::parse(run_cli_binary("group Q8 --format json").output);
  CHECK(g.at("order") == 8);
  CHECK(g.at("labels").size() == 8);
  CHECK(g.at("table").size() == 64);
  CHECK(g.at("name") == "Q8");
}

TEST_CASE("group inspection") {
  auto r = run_cli_binary("group Q8");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("order") != std::string::npos);
  CHECK(r.output.find("Q8") != std::string::npos);
}

TEST_CASE("verify-paper filters and exit codes") {
  auto ok = run_cli_binary("verify-paper --filter 3.2");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("PASS") != std::string::npos);

  auto bad = run_cli_binary("verify-paper --filter nonexistent");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("classify and restrict round-trip through files") {
  // write a structure file: the classical structure on S3
  CayleyGroup s3 = construct_named("S3");
  auto ctx = GaloisContext::galois_of(s3);
  HgsStructure classical = make_structure(
      ctx, PermGroup::from_elements(6, right_translations(s3), false));
  const std::string path = "/tmp/hgs_cli_test_structure.json";
  {
    std::ofstream out(path);
    out << structure_to_json(classical).dump(2) << "\n";
  }

  auto r = run_cli_binary("classify --structure " + path);
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j.at("type") == "S3");
  CHECK(j.at("flags").at("classical") == true);
  CHECK(j.at("flags").at("induced") == "no");

  // restrict to the order-3 subgroup of rho(S3): indices of the identity
  // and the two order-3 elements in the canonical N listing
  std::string indices;
  const auto& elems = classical.group.elements();
  for (unsigned i = 0; i < elems.size(); ++i)
    if (elems[i].is_identity() || elems[i].order() == 3)
      indices += (indices.empty() ? "" : ",") + std::to_string(i);
  auto rr = run_cli_binary("restrict --structure " + path + " --subgroup " + indices);
  CHECK(rr.exit_code == 0);
  auto jj = nlohmann::json::parse(rr.output);
  CHECK(jj.at("structure").at("type") == "C3");
  CHECK(jj.at("Gp").size() == 3);

  std::remove(path.c_str());
}

TEST_CASE("structure json round-trips through the library helpers") {
  CayleyGroup c6 = construct_named("C6");
  auto ctx = GaloisContext::galois_of(c6);
  auto structures = enumerate_regular_normalized(ctx, Caps{});
  for (const auto& s : structures) {
    auto j = structure_to_json(s);
    HgsStructure back = structure_from_json(j);
    CHECK(back.group == s.group);
    CHECK(back.type == s.type);
  }
}
