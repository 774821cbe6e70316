#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hgs/context.hpp"

namespace hgs {

enum class Format { table, json, csv };

Format parse_format(const std::string& name);

/// Column-oriented output rendered as an aligned text table, a CSV body,
/// or a JSON array of objects.  JSON output is deterministic: ordered
/// keys, no floats unless explicitly formatted by the caller.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string render_table(const Table& t, Format f);

// ---- structure (de)serialization -------------------------------------------

nlohmann::ordered_json group_to_json(const CayleyGroup& g);
CayleyGroup group_from_json(const nlohmann::json& j);

/// {context: {group, stabilizer}, N: [cycle strings], type, flags,
/// recipes: [{H, Gp, N1, N2}]}
nlohmann::ordered_json structure_to_json(const HgsStructure& s);

/// Reads context and N back; flags are recomputed downstream, recipes are
/// ignored on input.
HgsStructure structure_from_json(const nlohmann::json& j);

std::string flags_to_string(const StructureFlags& f);

}  // namespace hgs
