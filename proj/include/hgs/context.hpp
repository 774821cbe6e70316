#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hgs/cayley.hpp"
#include "hgs/named.hpp"

namespace hgs {

/// Resource caps.  Degrees above max_direct_degree route through the
/// holomorph side; max_hol_order bounds the base-group order for
/// holomorph construction; max_group_order bounds subgroup and
/// automorphism machinery.
struct Caps {
  static constexpr unsigned kDirectHardMax = 12;

  unsigned max_direct_degree = 8;
  unsigned max_hol_order = 24;
  unsigned max_group_order = 63;
  unsigned jobs = 1;

  /// Applies the HGS_MAX_HOL_ORDER environment override.
  static Caps from_env();

  unsigned direct_degree() const {
    return std::min(max_direct_degree, kDirectHardMax);
  }
};

/// A Galois extension K/k together with the intermediate data that drives
/// every action: the group G, a stabilizer subgroup G' (trivial in the
/// Galois case), and the left-translation action on G/G'.
struct GaloisContext {
  CayleyGroup group;
  Subgroup stabilizer;
  CosetAction cosets;
  PermGroup image;  // image of the coset action
  unsigned degree = 1;

  bool galois() const { return stabilizer.size() == 1; }
  const GroupAction& action() const { return cosets.action; }

  static std::shared_ptr<const GaloisContext> make(CayleyGroup g, Subgroup stab);
  static std::shared_ptr<const GaloisContext> galois_of(CayleyGroup g);
};

enum class Tri : std::uint8_t { unknown, yes, no };

struct StructureFlags {
  bool classical = false;
  bool canonical_nonclassical = false;
  bool split_abstract = false;
  bool split_gstable = false;
  Tri induced = Tri::unknown;
  bool classified = false;  // split/induced flags computed
};

struct HgsStructure;

/// A decomposition G = H ⋊ G' plus the two sub-structures feeding the
/// induced construction.
struct InducedRecipe {
  Subgroup normal_part;  // H, the transversal
  Subgroup complement;   // G'
  std::shared_ptr<const HgsStructure> outer;  // on context (G, G'), degree |H|
  std::shared_ptr<const HgsStructure> inner;  // on Galois G'
};

/// A regular subgroup of Sym(G/G') normalized by the context action,
/// with its type and classification flags.
struct HgsStructure {
  std::shared_ptr<const GaloisContext> context;
  PermGroup group;  // N
  std::string type;
  StructureFlags flags;
  std::vector<InducedRecipe> recipes;
};

/// Verifies regularity and normalization, identifies the type, and sets
/// the classical / canonical flags.  Every structure in the system is
/// born through this gate.
HgsStructure make_structure(std::shared_ptr<const GaloisContext> ctx,
                            PermGroup n);

/// Canonical ordering for structure sets: lexicographic on the sorted
/// element list of N.
inline bool structure_less(const HgsStructure& a, const HgsStructure& b) {
  return a.group < b.group;
}

}  // namespace hgs
