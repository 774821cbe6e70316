#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hgs/context.hpp"

namespace hgs {

/// Hol(N) = N ⋊ Aut(N) as a permutation group on N: the pair (m, σ) acts
/// by x ↦ m·σ(x).  Left translations are the pairs (m, id).
struct Holomorph {
  CayleyGroup base;  // N
  PermGroup autos;   // Aut(N) on N's element indices
  PermGroup image;   // the full permutation image, order |N|·|Aut N|

  /// Left-translation permutation of a base element.
  Perm translation(Elem m) const;
};

Holomorph build_holomorph(const CayleyGroup& n, const Caps& caps);

/// All regular subgroups of Hol(N), each tagged with its isomorphism
/// type.  Found by backtracking over gamma maps m -> sigma_m constrained
/// by the closure law sigma_{m·sigma_m(m')} = sigma_m ∘ sigma_{m'};
/// every regular subgroup {(m, sigma_m)} arises from exactly one gamma.
std::vector<std::pair<PermGroup, std::string>> regular_subgroups_of_hol(
    const CayleyGroup& n, const Caps& caps);

/// e(G, N): the number of Hopf Galois structures of type N on a Galois
/// extension with group G, computed on the holomorph side as
/// (#{regular R ≤ Hol(N) : R ≅ G} · |Aut G|) / |Aut N| (exact division).
long long count_e(const CayleyGroup& g, const CayleyGroup& n, const Caps& caps);

/// An embedding beta: G -> Hol(N) ≤ Sym(N) with beta(G') the stabilizer
/// of 1_N, plus the induced bijection b: g -> beta(g)(1_N).
struct ByottEmbedding {
  CayleyGroup source;           // G
  CayleyGroup base;             // N
  std::vector<Perm> beta;       // per G element, a permutation of N's indices
};

/// b(g) = beta(g)(1_N) as an element index of N.
Elem bijection_b(const ByottEmbedding& emb, Elem g);

/// Transports N's left translations through b^{-1} to a regular subgroup
/// of Sym(G) normalized by lambda(G).
HgsStructure beta_to_alpha(const ByottEmbedding& emb);

/// Rebuilds the embedding from a structure on a Galois context (the
/// conjugation of lambda(G) by the base-point bijection).
ByottEmbedding alpha_to_beta(const HgsStructure& s);

/// Full enumeration of structures on an arbitrary context through the
/// holomorph correspondence: for every type N of order [G:G'], every
/// embedding beta: G -> Hol(N) with beta(G') the stabilizer of 1_N is
/// transported back to a regular subgroup of Sym(G/G').  Works at any
/// degree the type catalog covers; this is the engine behind contexts
/// beyond the direct-search cap.
std::vector<HgsStructure> byott_enumerate(
    std::shared_ptr<const GaloisContext> ctx, const Caps& caps);

}  // namespace hgs
