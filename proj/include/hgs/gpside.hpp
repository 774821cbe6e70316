#pragma once

#include <memory>
#include <vector>

#include "hgs/context.hpp"
#include "hgs/holoside.hpp"

namespace hgs {

enum class Engine { automatic, direct, holomorph, both };

/// All regular subgroups of Sym(degree) normalized by the context action.
/// The direct engine searches unions of conjugation orbits of the action
/// image on uniform-cycle fixed-point-free elements; degrees above the
/// direct cap route through the holomorph correspondence.  Engine::both
/// runs both and insists on agreement.
std::vector<HgsStructure> enumerate_regular_normalized(
    std::shared_ptr<const GaloisContext> ctx, const Caps& caps,
    Engine via = Engine::automatic);

/// Subgroups of N (as index sets into N's canonical element list) stable
/// under conjugation by the context action.
std::vector<std::vector<unsigned>> g_stable_subgroups(const HgsStructure& s);

/// Unordered pairs of nontrivial subgroups forming an internal direct
/// product N = N1 x N2; with require_stable both factors must be G-stable.
std::vector<std::pair<std::vector<unsigned>, std::vector<unsigned>>>
split_decompositions(const HgsStructure& s, bool require_stable);

/// The induced structure of a recipe: N1 x N2 embedded into Sym(G) along
/// the identification g = x_i y_j over the transversal H (its members in
/// index order) and the pairing (i, j) -> i*r + j.  Verifies regularity,
/// normalization, and that conjugation acts componentwise (the N1 part of
/// a conjugate depends only on the N1 part and g).
HgsStructure construct_induced(const InducedRecipe& recipe, const Caps& caps);

/// Iterates every decomposition G = H ⋊ G' (H normal, nontrivial,
/// proper), every structure on the degree-|H| context and every structure
/// on Galois G', and dedups the induced structures by their subgroup of
/// Sym(G); all generating recipes are attached to each structure.
std::vector<HgsStructure> enumerate_induced(const CayleyGroup& g,
                                            const Caps& caps);

/// Fills in the split flags, and on Galois contexts decides inducedness:
/// N is induced iff some G-stable decomposition N1 x N2 yields a subgroup
/// G' = b^{-1}(N2) with a normal complement; the witnessing recipe is
/// attached and verified by reconstruction.
HgsStructure classify_structure(const HgsStructure& s, const Caps& caps);

/// Proposition-style restriction: for a G-stable N2 ≤ N on a Galois
/// context, returns Gal(K/F) = the N2-orbit of the base point (verified
/// to be a subgroup of matching order) together with the structure that
/// N2 induces on the Galois context of that subgroup.
std::pair<Subgroup, HgsStructure> restrict_structure(
    const HgsStructure& s, const std::vector<unsigned>& n2_indices);

/// The split structure every semidirect product G = H ⋊ G' carries: the
/// almost classically Galois structure lambda_t(H) on F/k paired with the
/// classical structure rho(G') on K/F; its type is type(H) x type(G').
HgsStructure guaranteed_split_structure(const CayleyGroup& g, const Subgroup& h,
                                        const Subgroup& gp, const Caps& caps);

}  // namespace hgs
