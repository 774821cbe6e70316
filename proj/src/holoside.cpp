#include "hgs/holoside.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace hgs {

namespace {

Perm hol_perm(const CayleyGroup& n, const Perm& sigma, Elem m) {
  std::vector<unsigned> img(n.order());
  for (unsigned x = 0; x < n.order(); ++x)
    img[x] = n.mul(m, static_cast<Elem>(sigma(x)));
  return Perm(n.order(), img);
}

unsigned aut_cap(const Caps& caps) {
  return std::max(caps.max_group_order, caps.max_hol_order);
}

}  // namespace

Perm Holomorph::translation(Elem m) const {
  return hol_perm(base, Perm::identity(base.order()), m);
}

Holomorph build_holomorph(const CayleyGroup& n, const Caps& caps) {
  if (n.order() > caps.max_hol_order)
    throw CapError("holomorph base order " + std::to_string(n.order()) +
                   " exceeds the cap " + std::to_string(caps.max_hol_order) +
                   " (raise --max-hol-order)");
  Holomorph h;
  h.base = n;
  h.autos = automorphism_group(n, aut_cap(caps));
  std::vector<Perm> elems;
  elems.reserve(n.order() * h.autos.order());
  for (const Perm& sigma : h.autos.elements())
    for (unsigned m = 0; m < n.order(); ++m)
      elems.push_back(hol_perm(n, sigma, static_cast<Elem>(m)));
  h.image = PermGroup::from_elements(n.order(), std::move(elems), /*verify=*/false);
  if (h.image.order() != static_cast<std::size_t>(n.order()) * h.autos.order())
    throw InternalError("holomorph image has wrong order");
  return h;
}

// ---- gamma search ----------------------------------------------------------

namespace {

// Backtracking over gamma maps.  A candidate regular subgroup of Hol(N)
// holds exactly one pair (m, sigma_m) per base element m; fixing the
// automorphism at one uncovered m forces others through the closure law,
// so the branch factor stays |Aut N| per free choice.
class GammaSearch {
 public:
  GammaSearch(const CayleyGroup& n, const PermGroup& autos)
      : n_(n), na_(static_cast<unsigned>(autos.order())),
        aut_of_(autos.elements()) {
    std::unordered_map<Perm, unsigned, PermHash> index;
    for (unsigned i = 0; i < na_; ++i) index.emplace(aut_of_[i], i);
    amul_.assign(static_cast<std::size_t>(na_) * na_, 0);
    ainv_.assign(na_, 0);
    for (unsigned i = 0; i < na_; ++i) {
      for (unsigned j = 0; j < na_; ++j)
        amul_[static_cast<std::size_t>(i) * na_ + j] =
            index.at(aut_of_[i] * aut_of_[j]);
      ainv_[i] = index.at(aut_of_[i].inverse());
    }
  }

  std::vector<std::vector<unsigned>> run() {
    gamma_.assign(n_.order(), kUnset);
    members_.clear();
    results_.clear();
    std::vector<Elem> trail;
    assign(0, 0, trail);  // the identity pair (1_N, id)
    if (propagate(0, trail)) recurse();
    return std::move(results_);
  }

 private:
  static constexpr unsigned kUnset = ~0u;

  unsigned amul(unsigned a, unsigned b) const {
    return amul_[static_cast<std::size_t>(a) * na_ + b];
  }
  unsigned aut_apply(unsigned a, Elem x) const { return aut_of_[a](x); }

  void assign(Elem m, unsigned a, std::vector<Elem>& trail) {
    gamma_[m] = a;
    members_.push_back(m);
    trail.push_back(m);
  }

  // Closes members_[from..] under products and inverses; false on conflict.
  bool propagate(std::size_t from, std::vector<Elem>& trail) {
    for (std::size_t i = from; i < members_.size(); ++i) {
      const Elem x = members_[i];
      const unsigned ax = gamma_[x];
      const unsigned ai = ainv_[ax];
      const Elem xi = static_cast<Elem>(aut_apply(ai, n_.inv(x)));
      if (gamma_[xi] == kUnset) {
        assign(xi, ai, trail);
      } else if (gamma_[xi] != ai) {
        return false;
      }
      for (std::size_t j = 0; j <= i; ++j) {
        const Elem y = members_[j];
        const unsigned ay = gamma_[y];
        const Elem xy = n_.mul(x, static_cast<Elem>(aut_apply(ax, y)));
        const unsigned axy = amul(ax, ay);
        if (gamma_[xy] == kUnset) {
          assign(xy, axy, trail);
        } else if (gamma_[xy] != axy) {
          return false;
        }
        const Elem yx = n_.mul(y, static_cast<Elem>(aut_apply(ay, x)));
        const unsigned ayx = amul(ay, ax);
        if (gamma_[yx] == kUnset) {
          assign(yx, ayx, trail);
        } else if (gamma_[yx] != ayx) {
          return false;
        }
      }
    }
    return true;
  }

  void recurse() {
    if (members_.size() == n_.order()) {
      results_.push_back(gamma_);
      return;
    }
    Elem next = 0;
    while (gamma_[next] != kUnset) ++next;
    for (unsigned a = 0; a < na_; ++a) {
      const std::size_t mark = members_.size();
      std::vector<Elem> trail;
      assign(next, a, trail);
      if (propagate(mark, trail)) recurse();
      for (Elem e : trail) gamma_[e] = kUnset;
      members_.resize(mark);
    }
  }

  const CayleyGroup& n_;
  unsigned na_;
  std::vector<Perm> aut_of_;
  std::vector<unsigned> amul_, ainv_;
  std::vector<unsigned> gamma_;
  std::vector<Elem> members_;
  std::vector<std::vector<unsigned>> results_;
};

}  // namespace

std::vector<std::pair<PermGroup, std::string>> regular_subgroups_of_hol(
    const CayleyGroup& n, const Caps& caps) {
  Holomorph hol = build_holomorph(n, caps);
  GammaSearch search(n, hol.autos);
  std::vector<std::pair<PermGroup, std::string>> out;
  for (const auto& gamma : search.run()) {
    std::vector<Perm> perms;
    perms.reserve(n.order());
    for (unsigned m = 0; m < n.order(); ++m)
      perms.push_back(hol_perm(n, hol.autos.elements()[gamma[m]],
                               static_cast<Elem>(m)));
    PermGroup r = PermGroup::from_elements(n.order(), std::move(perms),
                                           /*verify=*/false);
    if (!r.is_regular() || !r.is_subgroup_of(hol.image))
      throw InternalError("gamma search produced an invalid subgroup");
    auto [abstract, aligned] = reconstruct_group(r);
    (void)aligned;
    out.push_back({std::move(r), identify_type(abstract)});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

long long count_e(const CayleyGroup& g, const CayleyGroup& n, const Caps& caps) {
  if (g.order() != n.order()) throw SpecError("e(G, N) needs |G| = |N|");
  long long matching = 0;
  for (const auto& [r, type] : regular_subgroups_of_hol(n, caps)) {
    auto [abstract, aligned] = reconstruct_group(r);
    (void)aligned;
    if (find_isomorphism(abstract, g)) ++matching;
  }
  const long long aut_g =
      static_cast<long long>(automorphism_group(g, aut_cap(caps)).order());
  const long long aut_n =
      static_cast<long long>(automorphism_group(n, aut_cap(caps)).order());
  const long long numerator = matching * aut_g;
  if (numerator % aut_n != 0)
    throw InternalError("e(G, N) division is not exact");
  return numerator / aut_n;
}

// ---- embeddings ------------------------------------------------------------

Elem bijection_b(const ByottEmbedding& emb, Elem g) {
  return static_cast<Elem>(emb.beta[g](0));
}

HgsStructure beta_to_alpha(const ByottEmbedding& emb) {
  const CayleyGroup& g = emb.source;
  const CayleyGroup& n = emb.base;
  if (emb.beta.size() != g.order()) throw SpecError("beta has wrong size");
  if (g.order() != n.order()) throw SpecError("|G| and |N| differ");
  std::vector<Elem> b(g.order());
  std::vector<Elem> binv(n.order(), static_cast<Elem>(n.order()));
  for (unsigned x = 0; x < g.order(); ++x) {
    b[x] = static_cast<Elem>(emb.beta[x](0));
    if (binv[b[x]] != n.order()) throw SpecError("b is not a bijection");
    binv[b[x]] = static_cast<Elem>(x);
  }
  if (b[0] != 0) throw SpecError("b does not fix the identity");
  for (unsigned x = 0; x < g.order(); ++x)
    for (unsigned y = 0; y < g.order(); ++y)
      if (!(emb.beta[g.mul(static_cast<Elem>(x), static_cast<Elem>(y))] ==
            emb.beta[x] * emb.beta[y]))
        throw SpecError("beta is not a homomorphism");

  // transport the RIGHT translations of N through b, which pairs the
  // plain translation embedding with the classical structure rho(G)
  std::vector<Perm> perms;
  perms.reserve(n.order());
  for (unsigned m = 0; m < n.order(); ++m) {
    std::vector<unsigned> img(g.order());
    for (unsigned x = 0; x < g.order(); ++x)
      img[x] = binv[n.mul(b[x], static_cast<Elem>(m))];
    perms.emplace_back(g.order(), img);
  }
  PermGroup alpha = PermGroup::from_elements(g.order(), std::move(perms),
                                             /*verify=*/false);
  return make_structure(GaloisContext::galois_of(g), std::move(alpha));
}

ByottEmbedding alpha_to_beta(const HgsStructure& s) {
  if (!s.context->galois())
    throw SpecError("alpha_to_beta needs a Galois context");
  const CayleyGroup& g = s.context->group;
  auto [n_abs, aligned] = reconstruct_group(s.group);
  (void)aligned;
  const auto& elems = s.group.elements();
  // b sends the point p to the inverse of the element of N carrying the
  // base point there; that is the bijection under which the right
  // translations of N come back as N itself (see beta_to_alpha)
  std::vector<Elem> b(g.order(), 0);
  std::vector<Elem> binv(g.order(), 0);
  auto index_of = [&](const Perm& p) {
    auto it = std::lower_bound(elems.begin(), elems.end(), p);
    return static_cast<Elem>(it - elems.begin());
  };
  for (unsigned idx = 0; idx < elems.size(); ++idx) {
    const unsigned p = elems[idx](0);
    b[p] = index_of(elems[idx].inverse());
    binv[b[p]] = static_cast<Elem>(p);
  }
  GroupAction lambda = regular_representation(g);
  ByottEmbedding emb;
  emb.source = g;
  emb.base = std::move(n_abs);
  emb.beta.reserve(g.order());
  for (unsigned x = 0; x < g.order(); ++x) {
    std::vector<unsigned> img(g.order());
    for (unsigned m = 0; m < g.order(); ++m)
      img[m] = b[lambda.perm_of[x](binv[m])];
    emb.beta.emplace_back(g.order(), img);
  }
  return emb;
}

// ---- context enumeration through the correspondence ------------------------

namespace {

// Definition chain: each non-identity element is a previously defined
// element times a generator, so homomorphisms extend along it and the
// (element, generator) product checks suffice for full multiplicativity.
struct WordChain {
  std::vector<Elem> order;
  std::vector<std::pair<Elem, unsigned>> def;
};

WordChain word_chain(const CayleyGroup& g, const std::vector<Elem>& gens,
                     std::size_t prefix) {
  WordChain wc;
  wc.def.assign(g.order(), {0, 0});
  std::vector<bool> seen(g.order(), false);
  seen[0] = true;
  wc.order.push_back(0);
  for (std::size_t head = 0; head < wc.order.size(); ++head) {
    const Elem u = wc.order[head];
    for (unsigned gi = 0; gi < prefix; ++gi) {
      const Elem v = g.mul(u, gens[gi]);
      if (!seen[v]) {
        seen[v] = true;
        wc.def[v] = {u, gi};
        wc.order.push_back(v);
      }
    }
  }
  return wc;
}

}  // namespace

std::vector<HgsStructure> byott_enumerate(
    std::shared_ptr<const GaloisContext> ctx, const Caps& caps) {
  const CayleyGroup& g = ctx->group;
  const unsigned t = ctx->degree;
  std::vector<HgsStructure> out;

  if (t == 1) {
    out.push_back(make_structure(ctx, PermGroup::generate(1, {})));
    return out;
  }
  if (t > caps.max_hol_order)
    throw CapError("context degree " + std::to_string(t) +
                   " exceeds the holomorph cap (raise --max-hol-order)");
  const auto& types = all_types(t, /*require_complete=*/true);

  const std::vector<Elem> gens = minimal_generators(g);

  // per-level word chains: level k covers the subgroup <gens[0..k]>, so a
  // partial assignment is checked on that subgroup before branching deeper
  std::vector<WordChain> chains(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k)
    chains[k] = word_chain(g, gens, k + 1);
  if (!gens.empty() && chains.back().order.size() != g.order())
    throw InternalError("generating set does not generate");

  std::vector<PermGroup> found;

  for (const NamedGroup& type : types) {
    const CayleyGroup& n = type.group;
    Holomorph hol = build_holomorph(n, caps);
    if (hol.image.order() % g.order() != 0) continue;

    // candidates per generator: order must match; the base-point criterion
    // (beta(x) fixes 1_N iff x lies in the stabilizer) already applies
    std::vector<std::vector<Perm>> cands(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const bool in_stab = ctx->stabilizer.contains(gens[i]);
      for (const Perm& p : hol.image.elements())
        if (p.order() == g.order_of(gens[i]) && (p(0) == 0) == in_stab)
          cands[i].push_back(p);
    }
    if (std::any_of(cands.begin(), cands.end(),
                    [](const auto& c) { return c.empty(); }))
      continue;

    std::vector<Perm> translations;
    translations.reserve(n.order());
    for (unsigned m = 0; m < n.order(); ++m)
      translations.push_back(hol.translation(static_cast<Elem>(m)));

    std::vector<Perm> beta(g.order(), Perm::identity(t));
    std::vector<Perm> gen_img(gens.size(), Perm::identity(t));

    // extends beta over <gens[0..k]> and validates it there
    auto check_level = [&](std::size_t k) -> bool {
      const WordChain& chain = chains[k];
      beta[0] = Perm::identity(t);
      for (const Elem e : chain.order) {
        if (e == 0) continue;
        const auto [parent, gi] = chain.def[e];
        beta[e] = beta[parent] * gen_img[gi];
      }
      for (const Elem x : chain.order)
        for (unsigned gi = 0; gi <= k; ++gi)
          if (!(beta[g.mul(x, gens[gi])] == beta[x] * gen_img[gi]))
            return false;
      std::vector<Perm> sorted;
      sorted.reserve(chain.order.size());
      for (const Elem x : chain.order) {
        const bool fixes = beta[x](0) == 0;
        if (fixes != ctx->stabilizer.contains(x)) return false;
        sorted.push_back(beta[x]);
      }
      std::sort(sorted.begin(), sorted.end());
      return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    };

    std::function<void(std::size_t)> descend = [&](std::size_t k) {
      if (k == gens.size()) {
        // transport: coset index -> base point of N through beta
        std::vector<Elem> c(t), cinv(n.order());
        std::vector<bool> hit(n.order(), false);
        for (unsigned i = 0; i < t; ++i) {
          c[i] = static_cast<Elem>(beta[ctx->cosets.coset_rep[i]](0));
          if (hit[c[i]]) throw InternalError("transport map is not injective");
          hit[c[i]] = true;
          cinv[c[i]] = static_cast<Elem>(i);
        }
        std::vector<Perm> perms;
        perms.reserve(n.order());
        for (unsigned m = 0; m < n.order(); ++m) {
          std::vector<unsigned> img(t);
          for (unsigned i = 0; i < t; ++i) img[i] = cinv[translations[m](c[i])];
          perms.emplace_back(t, img);
        }
        PermGroup transported =
            PermGroup::from_elements(t, std::move(perms), /*verify=*/false);
        if (std::find(found.begin(), found.end(), transported) == found.end())
          found.push_back(std::move(transported));
        return;
      }
      for (const Perm& cand : cands[k]) {
        gen_img[k] = cand;
        if (check_level(k)) descend(k + 1);
      }
    };
    descend(0);
  }

  out.reserve(found.size());
  for (PermGroup& n_sub : found)
    out.push_back(make_structure(ctx, std::move(n_sub)));
  std::sort(out.begin(), out.end(), structure_less);
  return out;
}

}  // namespace hgs
