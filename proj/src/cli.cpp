#include "hgs/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "hgs/gpside.hpp"
#include "hgs/parallel.hpp"
#include "hgs/report.hpp"
#include "hgs/scenarios.hpp"

namespace hgs {

namespace {

struct CliOptions {
  std::string format = "table";
  std::string output;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  Caps caps = Caps::from_env();
};

void add_common(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("--format", opt.format, "output format: table, json, csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  cmd->add_option("--output", opt.output, "write the result to a file");
  cmd->add_option("--jobs", opt.jobs, "worker threads (never changes output)");
  cmd->add_option("--max-direct-degree", opt.caps.max_direct_degree,
                  "degree cap of the direct search (hard max 12)");
  cmd->add_option("--max-hol-order", opt.caps.max_hol_order,
                  "order cap of holomorph bases (env HGS_MAX_HOL_ORDER)");
  cmd->add_option("--max-group-order", opt.caps.max_group_order,
                  "order cap of subgroup machinery");
}

void emit(const CliOptions& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output);
  if (!out) throw SpecError("cannot open output file '" + opt.output + "'");
  out << text;
}

Caps effective_caps(const CliOptions& opt) {
  Caps caps = opt.caps;
  caps.jobs = opt.jobs;
  return caps;
}

std::string structures_to_text(const std::vector<HgsStructure>& structures,
                               Format format, bool with_recipes) {
  if (format == Format::json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& s : structures) arr.push_back(structure_to_json(s));
    return arr.dump(2) + "\n";
  }
  Table t;
  t.columns = {"index", "type", "flags", "recipes"};
  unsigned idx = 0;
  for (const auto& s : structures) {
    std::ostringstream recipes;
    if (with_recipes) {
      bool first = true;
      for (const auto& r : s.recipes) {
        if (!first) recipes << "; ";
        recipes << "H=" << r.outer->type << " G'=" << r.inner->type;
        first = false;
      }
    }
    t.rows.push_back({std::to_string(idx++), s.type, flags_to_string(s.flags),
                      with_recipes ? recipes.str() : ""});
  }
  if (!with_recipes) {
    t.columns.pop_back();
    for (auto& row : t.rows) row.pop_back();
  }
  return render_table(t, format);
}

int cmd_group(const CliOptions& opt, const std::string& spec) {
  CayleyGroup g = construct_named(spec);
  if (parse_format(opt.format) == Format::json) {
    // canonical export: {order, labels, table, name} plus the inspection
    nlohmann::ordered_json j = group_to_json(g);
    nlohmann::ordered_json analysis;
    analysis["type"] = identify_type(g);
    analysis["abelian"] = g.is_abelian();
    analysis["exponent"] = g.exponent();
    Subgroup z = g.center();
    analysis["center"] = z.members;
    nlohmann::ordered_json normals = nlohmann::ordered_json::array();
    for (const Subgroup& h : all_subgroups(g, effective_caps(opt).max_group_order)) {
      if (!is_normal(g, h)) continue;
      nlohmann::ordered_json entry;
      entry["members"] = h.members;
      entry["type"] = identify_type(subgroup_group(g, h));
      entry["complements"] = complements_of_normal(g, h).size();
      normals.push_back(std::move(entry));
    }
    analysis["normal_subgroups"] = std::move(normals);
    j["analysis"] = std::move(analysis);
    emit(opt, j.dump(2) + "\n");
    return 0;
  }
  Table t;
  t.columns = {"property", "value"};
  t.rows.push_back({"spec", spec});
  t.rows.push_back({"order", std::to_string(g.order())});
  t.rows.push_back({"type", identify_type(g)});
  t.rows.push_back({"abelian", g.is_abelian() ? "yes" : "no"});
  t.rows.push_back({"exponent", std::to_string(g.exponent())});
  Subgroup z = g.center();
  t.rows.push_back({"center",
                    "order " + std::to_string(z.size()) + ", type " +
                        identify_type(subgroup_group(g, z))});
  unsigned n = g.order();
  for (unsigned p = 2; p <= n; ++p) {
    if (n % p) continue;
    bool prime = true;
    for (unsigned d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (!prime) continue;
    auto sylows = sylow_subgroups(g, p);
    t.rows.push_back({"sylow-" + std::to_string(p),
                      std::to_string(sylows.size()) + " of order " +
                          std::to_string(sylows.front().size())});
  }
  unsigned idx = 0;
  for (const Subgroup& h : all_subgroups(g, effective_caps(opt).max_group_order)) {
    if (!is_normal(g, h)) continue;
    std::ostringstream val;
    val << "order " << h.size() << ", type "
        << identify_type(subgroup_group(g, h)) << ", "
        << complements_of_normal(g, h).size() << " complement(s)";
    t.rows.push_back({"normal-subgroup-" + std::to_string(idx++), val.str()});
  }
  emit(opt, render_table(t, parse_format(opt.format)));
  return 0;
}

int cmd_enumerate(const CliOptions& opt, const std::string& spec,
                  const std::string& via) {
  Caps caps = effective_caps(opt);
  Engine engine = Engine::automatic;
  if (via == "direct") engine = Engine::direct;
  else if (via == "holomorph") engine = Engine::holomorph;
  else if (via == "both") engine = Engine::both;
  else if (via != "auto") throw SpecError("unknown engine '" + via + "'");

  auto ctx = GaloisContext::galois_of(construct_named(spec));
  auto structures = enumerate_regular_normalized(ctx, caps, engine);
  std::vector<HgsStructure> classified(structures.size());
  parallel_for_index(structures.size(), caps.jobs, [&](std::size_t i) {
    classified[i] = classify_structure(structures[i], caps);
  });
  emit(opt, structures_to_text(classified, parse_format(opt.format),
                               /*with_recipes=*/false));
  return 0;
}

int cmd_count(const CliOptions& opt, const std::string& spec_g,
              const std::string& spec_n) {
  Caps caps = effective_caps(opt);
  CayleyGroup g = construct_named(spec_g);
  Table t;
  t.columns = {"G", "N", "e(G,N)"};
  if (spec_n == "all") {
    const auto& types = all_types(g.order());
    std::vector<long long> counts(types.size());
    parallel_for_index(types.size(), caps.jobs, [&](std::size_t i) {
      counts[i] = count_e(g, types[i].group, caps);
    });
    for (std::size_t i = 0; i < types.size(); ++i)
      t.rows.push_back({spec_g, types[i].name, std::to_string(counts[i])});
  } else {
    CayleyGroup n = construct_named(spec_n);
    t.rows.push_back({spec_g, spec_n, std::to_string(count_e(g, n, caps))});
  }
  emit(opt, render_table(t, parse_format(opt.format)));
  return 0;
}

int cmd_induced(const CliOptions& opt, const std::string& spec) {
  Caps caps = effective_caps(opt);
  auto structures = enumerate_induced(construct_named(spec), caps);
  if (structures.empty() && parse_format(opt.format) == Format::table) {
    emit(opt, "no induced structures: " + spec +
                  " has no semidirect decomposition\n");
    return 0;
  }
  emit(opt, structures_to_text(structures, parse_format(opt.format),
                               /*with_recipes=*/true));
  return 0;
}

int cmd_classify(const CliOptions& opt, const std::string& path) {
  Caps caps = effective_caps(opt);
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open structure file '" + path + "'");
  nlohmann::json j = nlohmann::json::parse(in);
  HgsStructure s = classify_structure(structure_from_json(j), caps);
  emit(opt, structure_to_json(s).dump(2) + "\n");
  return 0;
}

int cmd_restrict(const CliOptions& opt, const std::string& path,
                 const std::string& subgroup) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open structure file '" + path + "'");
  nlohmann::json j = nlohmann::json::parse(in);
  HgsStructure s = structure_from_json(j);
  std::vector<unsigned> indices;
  std::stringstream ss(subgroup);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    indices.push_back(static_cast<unsigned>(std::stoul(tok)));
    if (indices.back() >= s.group.order())
      throw SpecError("subgroup index out of range");
  }
  auto [gp, restricted] = restrict_structure(s, indices);
  nlohmann::ordered_json out;
  out["Gp"] = gp.members;
  out["structure"] = structure_to_json(restricted);
  emit(opt, out.dump(2) + "\n");
  return 0;
}

int cmd_verify_paper(const CliOptions& opt, const std::string& filter,
                     const std::vector<std::string>& probes) {
  Caps caps = effective_caps(opt);
  auto results = run_scenarios(filter, caps);
  for (const std::string& p : probes) results.push_back(run_probe(p, caps));

  Table t;
  t.columns = {"id", "expected", "actual", "status", "seconds"};
  unsigned fails = 0;
  for (const auto& r : results) {
    const char* status = r.status == ScenarioResult::Status::pass ? "PASS"
                         : r.status == ScenarioResult::Status::fail
                             ? "FAIL"
                             : "SKIPPED";
    if (r.status == ScenarioResult::Status::fail) ++fails;
    std::ostringstream sec;
    sec.setf(std::ios::fixed);
    sec.precision(3);
    sec << r.seconds;
    std::string detail = r.status == ScenarioResult::Status::skipped
                             ? "skipped: " + r.note
                             : r.actual;
    t.rows.push_back({r.id, r.expected, detail, status, sec.str()});
  }
  emit(opt, render_table(t, parse_format(opt.format)));
  if (fails == 0) return 0;
  return static_cast<int>(std::min(3u + fails, 125u));
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Hopf Galois structure toolkit: enumerate, classify and count "
               "regular subgroups attached to field extensions"};
  app.require_subcommand(1);

  CliOptions opt;
  std::string spec, spec_n, via = "auto", path, subgroup, filter;
  std::vector<std::string> probes;

  CLI::App* group = app.add_subcommand("group", "inspect a group");
  group->add_option("spec", spec, "group spec, e.g. S3, C2xC2, C5:C4@pow2")
      ->required();
  add_common(group, opt);

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "enumerate structures on a Galois extension");
  enumerate->add_option("spec", spec, "Galois group spec")->required();
  enumerate->add_option("--via", via, "engine: auto, direct, holomorph, both")
      ->check(CLI::IsMember({"auto", "direct", "holomorph", "both"}));
  add_common(enumerate, opt);

  CLI::App* count = app.add_subcommand("count", "count structures of type N");
  count->add_option("G", spec, "Galois group spec")->required();
  count->add_option("N", spec_n, "type spec or 'all'")->required();
  add_common(count, opt);

  CLI::App* induced =
      app.add_subcommand("induced", "enumerate induced structures with recipes");
  induced->add_option("spec", spec, "Galois group spec")->required();
  add_common(induced, opt);

  CLI::App* classify =
      app.add_subcommand("classify", "classify a structure from a JSON file");
  classify->add_option("--structure", path, "structure JSON file")->required();
  add_common(classify, opt);

  CLI::App* restrict_cmd =
      app.add_subcommand("restrict", "restrict a structure to a stable subgroup");
  restrict_cmd->add_option("--structure", path, "structure JSON file")
      ->required();
  restrict_cmd
      ->add_option("--subgroup", subgroup,
                   "comma-separated indices into the N element list")
      ->required();
  add_common(restrict_cmd, opt);

  CLI::App* verify =
      app.add_subcommand("verify-paper", "run the published-count scenarios");
  verify->add_option("--filter", filter, "id prefix filter, e.g. 4.1");
  verify->add_option("--probe", probes,
                     "optional probes: f42-split, a5-split (reported only)");
  add_common(verify, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (group->parsed()) return cmd_group(opt, spec);
    if (enumerate->parsed()) return cmd_enumerate(opt, spec, via);
    if (count->parsed()) return cmd_count(opt, spec, spec_n);
    if (induced->parsed()) return cmd_induced(opt, spec);
    if (classify->parsed()) return cmd_classify(opt, path);
    if (restrict_cmd->parsed()) return cmd_restrict(opt, path, subgroup);
    if (verify->parsed()) return cmd_verify_paper(opt, filter, probes);
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const CapError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace hgs
