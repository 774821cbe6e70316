#include "hgs/report.hpp"

#include <algorithm>
#include <sstream>

namespace hgs {

Format parse_format(const std::string& name) {
  if (name == "table") return Format::table;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw SpecError("unknown format '" + name + "' (table, json, csv)");
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string render_table(const Table& t, Format f) {
  std::ostringstream out;
  switch (f) {
    case Format::table: {
      std::vector<std::size_t> width(t.columns.size());
      for (std::size_t c = 0; c < t.columns.size(); ++c)
        width[c] = t.columns[c].size();
      for (const auto& row : t.rows)
        for (std::size_t c = 0; c < row.size(); ++c)
          width[c] = std::max(width[c], row[c].size());
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
          if (c) out << "  ";
          out << cells[c];
          if (c + 1 < cells.size())
            out << std::string(width[c] - cells[c].size(), ' ');
        }
        out << '\n';
      };
      line(t.columns);
      std::vector<std::string> rule;
      for (std::size_t c = 0; c < t.columns.size(); ++c)
        rule.push_back(std::string(width[c], '-'));
      line(rule);
      for (const auto& row : t.rows) line(row);
      break;
    }
    case Format::csv: {
      for (std::size_t c = 0; c < t.columns.size(); ++c)
        out << (c ? "," : "") << csv_escape(t.columns[c]);
      out << '\n';
      for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
          out << (c ? "," : "") << csv_escape(row[c]);
        out << '\n';
      }
      break;
    }
    case Format::json: {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (const auto& row : t.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t c = 0; c < t.columns.size() && c < row.size(); ++c)
          obj[t.columns[c]] = row[c];
        rows.push_back(std::move(obj));
      }
      out << rows.dump(2) << '\n';
      break;
    }
  }
  return out.str();
}

// ---- structure (de)serialization -------------------------------------------

nlohmann::ordered_json group_to_json(const CayleyGroup& g) {
  nlohmann::ordered_json j;
  j["order"] = g.order();
  j["labels"] = g.labels();
  j["table"] = g.table();
  j["name"] = g.name();
  return j;
}

CayleyGroup group_from_json(const nlohmann::json& j) {
  if (j.is_string()) return construct_named(j.get<std::string>());
  if (j.contains("spec")) return construct_named(j.at("spec").get<std::string>());
  const unsigned order = j.at("order").get<unsigned>();
  std::vector<Elem> table = j.at("table").get<std::vector<Elem>>();
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  CayleyGroup g(order, std::move(table), std::move(labels));
  if (j.contains("name")) g.set_name(j.at("name").get<std::string>());
  g.validate();
  return g;
}

namespace {

const char* tri_name(Tri t) {
  switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    default: return "unknown";
  }
}

nlohmann::ordered_json flags_json(const StructureFlags& f) {
  nlohmann::ordered_json j;
  j["classical"] = f.classical;
  j["canonical_nonclassical"] = f.canonical_nonclassical;
  if (f.classified) {
    j["split_abstract"] = f.split_abstract;
    j["split_gstable"] = f.split_gstable;
  }
  j["induced"] = tri_name(f.induced);
  return j;
}

nlohmann::ordered_json perm_group_json(const PermGroup& n) {
  nlohmann::ordered_json cycles = nlohmann::ordered_json::array();
  for (const Perm& p : n.elements()) cycles.push_back(p.to_cycles());
  return cycles;
}

}  // namespace

std::string flags_to_string(const StructureFlags& f) {
  std::string out;
  auto add = [&](const char* tag) {
    if (!out.empty()) out += ",";
    out += tag;
  };
  if (f.classical) add("classical");
  if (f.canonical_nonclassical) add("canonical-nonclassical");
  if (f.classified) {
    if (f.split_abstract) add("split");
    if (f.split_gstable) add("split-gstable");
  }
  if (f.induced == Tri::yes) add("induced");
  if (f.classified && f.induced == Tri::no) add("not-induced");
  if (out.empty()) out = "-";
  return out;
}

nlohmann::ordered_json structure_to_json(const HgsStructure& s) {
  nlohmann::ordered_json j;
  j["context"]["group"] = group_to_json(s.context->group);
  j["context"]["stabilizer"] = s.context->stabilizer.members;
  j["N"] = perm_group_json(s.group);
  j["type"] = s.type;
  j["flags"] = flags_json(s.flags);
  nlohmann::ordered_json recipes = nlohmann::ordered_json::array();
  for (const InducedRecipe& r : s.recipes) {
    nlohmann::ordered_json rec;
    rec["H"] = r.normal_part.members;
    rec["Gp"] = r.complement.members;
    rec["N1"]["type"] = r.outer->type;
    rec["N1"]["N"] = perm_group_json(r.outer->group);
    rec["N2"]["type"] = r.inner->type;
    rec["N2"]["N"] = perm_group_json(r.inner->group);
    recipes.push_back(std::move(rec));
  }
  j["recipes"] = std::move(recipes);
  return j;
}

HgsStructure structure_from_json(const nlohmann::json& j) {
  CayleyGroup g = group_from_json(j.at("context").at("group"));
  Subgroup stab{{0}};
  if (j.at("context").contains("stabilizer"))
    stab.members = j.at("context").at("stabilizer").get<std::vector<Elem>>();
  auto ctx = GaloisContext::make(std::move(g), std::move(stab));
  std::vector<Perm> perms;
  for (const auto& cyc : j.at("N"))
    perms.push_back(Perm::from_cycles(ctx->degree, cyc.get<std::string>()));
  PermGroup n = PermGroup::from_elements(ctx->degree, std::move(perms),
                                         /*verify=*/true);
  return make_structure(std::move(ctx), std::move(n));
}

}  // namespace hgs
