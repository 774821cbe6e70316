#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hgs/permgroup.hpp"

namespace hgs {

using Elem = std::uint16_t;

/// Sorted member list of a subgroup, as element indices of its parent.
struct Subgroup {
  std::vector<Elem> members;

  std::size_t size() const { return members.size(); }
  bool contains(Elem x) const {
    return std::binary_search(members.begin(), members.end(), x);
  }
  bool operator==(const Subgroup& o) const = default;
  bool operator<(const Subgroup& o) const {
    if (members.size() != o.members.size())
      return members.size() < o.members.size();
    return members < o.members;
  }
};

/// An abstract finite group as a multiplication table.  Index 0 is the
/// identity.  Everything is dense and eager; the configured caps keep
/// orders small enough for that to be the right trade.
class CayleyGroup {
 public:
  static constexpr unsigned kMaxOrder = 4096;

  CayleyGroup() : n_(1), table_{0}, labels_{"1"} {}
  CayleyGroup(unsigned order, std::vector<Elem> table,
              std::vector<std::string> labels, std::string name = "");

  unsigned order() const { return n_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Elem x) const { return labels_[x]; }
  const std::vector<Elem>& table() const { return table_; }

  Elem mul(Elem a, Elem b) const { return table_[a * n_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }
  unsigned order_of(Elem a) const { return elem_order_[a]; }

  bool is_abelian() const;
  unsigned exponent() const;
  Subgroup center() const;
  std::vector<std::vector<Elem>> conjugacy_classes() const;
  std::vector<unsigned> order_histogram() const;

  /// Exhaustive check of the table axioms; throws SpecError on failure.
  void validate() const;

  bool operator==(const CayleyGroup& o) const {
    return n_ == o.n_ && table_ == o.table_;
  }

 private:
  unsigned n_;
  std::vector<Elem> table_;  // row-major, table_[a*n+b] = a*b
  std::vector<std::string> labels_;
  std::string name_;
  std::vector<Elem> inverse_;
  std::vector<unsigned> elem_order_;

  void build_derived();
};

/// A homomorphism between abstract groups, stored as the full image map.
struct GroupHom {
  const CayleyGroup* source = nullptr;
  const CayleyGroup* target = nullptr;
  std::vector<Elem> images;
  bool injective = false;

  Elem operator()(Elem x) const { return images[x]; }
};

/// A homomorphism from an abstract group into Sym(degree), one
/// permutation per element (lambda, lambda_t, rho and friends).
struct GroupAction {
  unsigned degree = 1;
  std::vector<Perm> perm_of;  // indexed by group element

  const Perm& operator()(Elem x) const { return perm_of[x]; }
  PermGroup image() const;
  PermGroup image_from(const std::vector<Elem>& generating_set) const;
};

// ---- subgroup machinery ----------------------------------------------------

/// Closure of `seed` under multiplication and inverse.
Subgroup closure_subgroup(const CayleyGroup& g, std::vector<Elem> seed);

bool is_subgroup(const CayleyGroup& g, const Subgroup& s);
bool is_normal(const CayleyGroup& g, const Subgroup& s);

/// Every subgroup, sorted by (size, members).  Bottom-up closure over
/// cyclic subgroups and pairwise joins; `cap` guards the group order.
std::vector<Subgroup> all_subgroups(const CayleyGroup& g, unsigned cap = 63);

/// Normal subgroups H with H ∩ Gp = 1 and |H|·|Gp| = |G|.
std::vector<Subgroup> normal_complements(const CayleyGroup& g, const Subgroup& gp);

/// All complements of a normal subgroup H (subgroups Gp with trivial
/// intersection and |Gp|·|H| = |G|).
std::vector<Subgroup> complements_of_normal(const CayleyGroup& g, const Subgroup& h);

std::vector<Subgroup> sylow_subgroups(const CayleyGroup& g, unsigned p);

/// The index-2 subgroup of even elements of the regular representation;
/// defined for |G| = 2m with m odd, where it has order m.
Subgroup parity_kernel(const CayleyGroup& g);

bool are_conjugate_subgroups(const CayleyGroup& g, const Subgroup& a,
                             const Subgroup& b);

/// The subgroup as a group of its own: members reindexed 0..k-1 in member
/// order (identity first since 0 is the smallest member).
CayleyGroup subgroup_group(const CayleyGroup& g, const Subgroup& s);

// ---- actions ---------------------------------------------------------------

/// Left translation x -> g*x on element indices.
GroupAction regular_representation(const CayleyGroup& g);

/// Right translation x -> x*g (a regular subgroup of Sym(G), not an
/// action homomorphism; returned as the set of permutations).
std::vector<Perm> right_translations(const CayleyGroup& g);

struct CosetAction {
  GroupAction action;
  std::vector<Elem> coset_rep;  // transversal, coset of the subgroup first
  std::vector<Elem> coset_of;   // element index -> coset index
};

/// Left-translation action on left cosets g*Gp; cosets are indexed by
/// first appearance scanning element indices upward, so the coset Gp
/// itself comes first.
CosetAction coset_action(const CayleyGroup& g, const Subgroup& gp);

// ---- structure -------------------------------------------------------------

/// All multiplication-preserving bijections of g, as a permutation group
/// on element indices.
PermGroup automorphism_group(const CayleyGroup& g, unsigned cap = 256);

/// First isomorphism in canonical search order, or nullopt.
std::optional<GroupHom> find_isomorphism(const CayleyGroup& a, const CayleyGroup& b);

/// Greedy small generating sequence (identity excluded).
std::vector<Elem> minimal_generators(const CayleyGroup& g);

// ---- constructions ---------------------------------------------------------

CayleyGroup direct_product(const CayleyGroup& a, const CayleyGroup& b);

/// H ⋊ Gp where `action` assigns to every Gp element an automorphism of
/// H (as a permutation of H's element indices):
/// (x, y)(x', y') = (x · action(y)(x'), y·y').
CayleyGroup semidirect_product(const CayleyGroup& h, const CayleyGroup& gp,
                               const std::vector<Perm>& action);

/// Abstract group carried by a permutation group: elements reindexed in
/// the PermGroup's canonical order with the identity moved to index 0.
/// Returns the group and, aligned with the PermGroup's element order, the
/// abstract index of each permutation.
std::pair<CayleyGroup, std::vector<Elem>> reconstruct_group(const PermGroup& pg);

}  // namespace hgs
