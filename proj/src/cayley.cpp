#include "hgs/cayley.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace hgs {

CayleyGroup::CayleyGroup(unsigned order, std::vector<Elem> table,
                         std::vector<std::string> labels, std::string name)
    : n_(order), table_(std::move(table)), labels_(std::move(labels)),
      name_(std::move(name)) {
  if (n_ == 0 || n_ > kMaxOrder) throw SpecError("group order out of range");
  if (table_.size() != static_cast<std::size_t>(n_) * n_)
    throw SpecError("multiplication table has wrong size");
  if (labels_.empty()) {
    labels_.resize(n_);
    for (unsigned i = 0; i < n_; ++i) labels_[i] = "g" + std::to_string(i);
  }
  if (labels_.size() != n_) throw SpecError("label list has wrong size");
  build_derived();
}

void CayleyGroup::build_derived() {
  for (unsigned x = 0; x < n_; ++x) {
    if (mul(0, x) != x || mul(x, 0) != x)
      throw SpecError("index 0 is not a two-sided identity");
  }
  inverse_.assign(n_, 0);
  for (unsigned a = 0; a < n_; ++a) {
    bool found = false;
    for (unsigned b = 0; b < n_; ++b) {
      if (mul(a, b) == 0 && mul(b, a) == 0) {
        inverse_[a] = static_cast<Elem>(b);
        found = true;
        break;
      }
    }
    if (!found) throw SpecError("element without a two-sided inverse");
  }
  elem_order_.assign(n_, 1);
  for (unsigned a = 0; a < n_; ++a) {
    unsigned ord = 1;
    Elem x = static_cast<Elem>(a);
    while (x != 0) {
      x = mul(x, static_cast<Elem>(a));
      ++ord;
      if (ord > n_) throw SpecError("element order exceeds group order");
    }
    elem_order_[a] = ord;
  }
}

void CayleyGroup::validate() const {
  for (unsigned a = 0; a < n_; ++a) {
    std::vector<bool> row(n_, false), col(n_, false);
    for (unsigned b = 0; b < n_; ++b) {
      Elem r = mul(static_cast<Elem>(a), static_cast<Elem>(b));
      Elem c = mul(static_cast<Elem>(b), static_cast<Elem>(a));
      if (r >= n_ || c >= n_) throw SpecError("table entry out of range");
      if (row[r] || col[c]) throw SpecError("table is not a Latin square");
      row[r] = col[c] = true;
    }
  }
  for (unsigned a = 0; a < n_; ++a)
    for (unsigned b = 0; b < n_; ++b)
      for (unsigned c = 0; c < n_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw SpecError("multiplication is not associative");
}

bool CayleyGroup::is_abelian() const {
  for (unsigned a = 0; a < n_; ++a)
    for (unsigned b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

unsigned CayleyGroup::exponent() const {
  unsigned e = 1;
  for (unsigned a = 0; a < n_; ++a) e = std::lcm(e, elem_order_[a]);
  return e;
}

Subgroup CayleyGroup::center() const {
  Subgroup z;
  for (unsigned a = 0; a < n_; ++a) {
    bool central = true;
    for (unsigned b = 0; b < n_ && central; ++b)
      central = mul(a, b) == mul(b, a);
    if (central) z.members.push_back(static_cast<Elem>(a));
  }
  return z;
}

std::vector<std::vector<Elem>> CayleyGroup::conjugacy_classes() const {
  std::vector<std::vector<Elem>> classes;
  std::vector<bool> seen(n_, false);
  for (unsigned a = 0; a < n_; ++a) {
    if (seen[a]) continue;
    std::set<Elem> cls;
    for (unsigned g = 0; g < n_; ++g) cls.insert(conj(static_cast<Elem>(g), static_cast<Elem>(a)));
    std::vector<Elem> v(cls.begin(), cls.end());
    for (Elem x : v) seen[x] = true;
    classes.push_back(std::move(v));
  }
  return classes;
}

std::vector<unsigned> CayleyGroup::order_histogram() const {
  std::vector<unsigned> h(n_ + 1, 0);
  for (unsigned a = 0; a < n_; ++a) ++h[elem_order_[a]];
  return h;
}

PermGroup GroupAction::image() const {
  std::vector<Perm> perms = perm_of;
  return PermGroup::from_elements(degree, std::move(perms), /*verify=*/false);
}

PermGroup GroupAction::image_from(const std::vector<Elem>& generating_set) const {
  std::vector<Perm> gens;
  gens.reserve(generating_set.size());
  for (Elem x : generating_set) gens.push_back(perm_of[x]);
  return PermGroup::generate(degree, gens);
}

// ---- subgroup machinery ----------------------------------------------------

Subgroup closure_subgroup(const CayleyGroup& g, std::vector<Elem> seed) {
  std::vector<bool> in(g.order(), false);
  std::vector<Elem> members{0};
  in[0] = true;
  std::vector<Elem> todo{0};
  for (Elem x : seed) {
    if (!in[x]) {
      in[x] = true;
      members.push_back(x);
      todo.push_back(x);
    }
  }
  while (!todo.empty()) {
    Elem u = todo.back();
    todo.pop_back();
    std::size_t snapshot = members.size();
    for (std::size_t i = 0; i < snapshot; ++i) {
      for (Elem v : {g.mul(u, members[i]), g.mul(members[i], u)}) {
        if (!in[v]) {
          in[v] = true;
          members.push_back(v);
          todo.push_back(v);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup{std::move(members)};
}

bool is_subgroup(const CayleyGroup& g, const Subgroup& s) {
  if (s.members.empty() || s.members.front() != 0) return false;
  for (Elem a : s.members)
    for (Elem b : s.members)
      if (!s.contains(g.mul(a, b))) return false;
  return true;
}

bool is_normal(const CayleyGroup& g, const Subgroup& s) {
  for (unsigned x = 0; x < g.order(); ++x)
    for (Elem a : s.members)
      if (!s.contains(g.conj(static_cast<Elem>(x), a))) return false;
  return true;
}

std::vector<Subgroup> all_subgroups(const CayleyGroup& g, unsigned cap) {
  if (g.order() > cap)
    throw CapError("group order " + std::to_string(g.order()) +
                   " exceeds the subgroup enumeration cap " + std::to_string(cap));
  std::set<std::vector<Elem>> subs;
  std::vector<std::vector<Elem>> cyclic;
  for (unsigned x = 0; x < g.order(); ++x) {
    auto c = closure_subgroup(g, {static_cast<Elem>(x)}).members;
    if (subs.insert(c).second) cyclic.push_back(c);
  }
  std::vector<std::vector<Elem>> frontier(subs.begin(), subs.end());
  while (!frontier.empty()) {
    std::vector<std::vector<Elem>> next;
    for (const auto& s : frontier) {
      for (const auto& c : cyclic) {
        if (std::includes(s.begin(), s.end(), c.begin(), c.end())) continue;
        std::vector<Elem> seed = s;
        seed.insert(seed.end(), c.begin(), c.end());
        auto join = closure_subgroup(g, std::move(seed)).members;
        if (subs.insert(join).second) next.push_back(join);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out;
  out.reserve(subs.size());
  for (auto& m : subs) out.push_back(Subgroup{m});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> normal_complements(const CayleyGroup& g, const Subgroup& gp) {
  if (!is_subgroup(g, gp)) throw SpecError("complement base is not a subgroup");
  std::vector<Subgroup> out;
  if (g.order() % gp.size() != 0) return out;
  const std::size_t want = g.order() / gp.size();
  for (const Subgroup& h : all_subgroups(g)) {
    if (h.size() != want) continue;
    bool trivial_meet = true;
    for (Elem x : h.members)
      if (x != 0 && gp.contains(x)) {
        trivial_meet = false;
        break;
      }
    if (trivial_meet && is_normal(g, h)) out.push_back(h);
  }
  return out;
}

std::vector<Subgroup> complements_of_normal(const CayleyGroup& g, const Subgroup& h) {
  if (!is_subgroup(g, h)) throw SpecError("not a subgroup");
  if (!is_normal(g, h)) throw SpecError("subgroup is not normal");
  std::vector<Subgroup> out;
  if (g.order() % h.size() != 0) return out;
  const std::size_t want = g.order() / h.size();
  for (const Subgroup& gp : all_subgroups(g)) {
    if (gp.size() != want) continue;
    bool trivial_meet = true;
    for (Elem x : gp.members)
      if (x != 0 && h.contains(x)) {
        trivial_meet = false;
        break;
      }
    if (trivial_meet) out.push_back(gp);
  }
  return out;
}

std::vector<Subgroup> sylow_subgroups(const CayleyGroup& g, unsigned p) {
  if (p < 2 || g.order() % p != 0)
    throw SpecError("p does not divide the group order");
  unsigned part = 1;
  unsigned n = g.order();
  while (n % p == 0) {
    part *= p;
    n /= p;
  }
  std::vector<Subgroup> out;
  for (const Subgroup& s : all_subgroups(g))
    if (s.size() == part) out.push_back(s);
  return out;
}

Subgroup parity_kernel(const CayleyGroup& g) {
  const unsigned n = g.order();
  if (n % 2 != 0 || (n / 2) % 2 == 0)
    throw SpecError("parity kernel needs order 2m with m odd");
  GroupAction lambda = regular_representation(g);
  Subgroup k;
  for (unsigned x = 0; x < n; ++x)
    if (lambda.perm_of[x].is_even()) k.members.push_back(static_cast<Elem>(x));
  if (k.members.size() != n / 2)
    throw InternalError("even part of the regular representation has wrong index");
  return k;
}

bool are_conjugate_subgroups(const CayleyGroup& g, const Subgroup& a,
                             const Subgroup& b) {
  if (a.size() != b.size()) return false;
  for (unsigned x = 0; x < g.order(); ++x) {
    std::vector<Elem> image;
    image.reserve(a.size());
    for (Elem m : a.members) image.push_back(g.conj(static_cast<Elem>(x), m));
    std::sort(image.begin(), image.end());
    if (image == b.members) return true;
  }
  return false;
}

CayleyGroup subgroup_group(const CayleyGroup& g, const Subgroup& s) {
  if (!is_subgroup(g, s)) throw SpecError("member set is not a subgroup");
  const unsigned k = static_cast<unsigned>(s.size());
  std::vector<Elem> index_of(g.order(), 0);
  for (unsigned i = 0; i < k; ++i) index_of[s.members[i]] = static_cast<Elem>(i);
  std::vector<Elem> table(k * k);
  std::vector<std::string> labels(k);
  for (unsigned i = 0; i < k; ++i) {
    labels[i] = g.label(s.members[i]);
    for (unsigned j = 0; j < k; ++j)
      table[i * k + j] = index_of[g.mul(s.members[i], s.members[j])];
  }
  return CayleyGroup(k, std::move(table), std::move(labels));
}

// ---- actions ---------------------------------------------------------------

GroupAction regular_representation(const CayleyGroup& g) {
  GroupAction a;
  a.degree = g.order();
  a.perm_of.reserve(g.order());
  for (unsigned x = 0; x < g.order(); ++x) {
    std::vector<unsigned> img(g.order());
    for (unsigned y = 0; y < g.order(); ++y)
      img[y] = g.mul(static_cast<Elem>(x), static_cast<Elem>(y));
    a.perm_of.emplace_back(g.order(), img);
  }
  return a;
}

std::vector<Perm> right_translations(const CayleyGroup& g) {
  std::vector<Perm> out;
  out.reserve(g.order());
  for (unsigned x = 0; x < g.order(); ++x) {
    std::vector<unsigned> img(g.order());
    for (unsigned y = 0; y < g.order(); ++y)
      img[y] = g.mul(static_cast<Elem>(y), static_cast<Elem>(x));
    out.emplace_back(g.order(), img);
  }
  return out;
}

CosetAction coset_action(const CayleyGroup& g, const Subgroup& gp) {
  if (!is_subgroup(g, gp)) throw SpecError("stabilizer is not a subgroup");
  CosetAction out;
  const unsigned n = g.order();
  out.coset_of.assign(n, static_cast<Elem>(n));
  for (unsigned x = 0; x < n; ++x) {
    if (out.coset_of[x] != n) continue;
    const Elem rep = static_cast<Elem>(x);
    out.coset_rep.push_back(rep);
    const Elem id = static_cast<Elem>(out.coset_rep.size() - 1);
    for (Elem h : gp.members) out.coset_of[g.mul(rep, h)] = id;
  }
  const unsigned t = static_cast<unsigned>(out.coset_rep.size());
  if (t > Perm::kMaxDegree) throw CapError("coset action degree exceeds 64");
  out.action.degree = t;
  out.action.perm_of.reserve(n);
  for (unsigned x = 0; x < n; ++x) {
    std::vector<unsigned> img(t);
    for (unsigned i = 0; i < t; ++i)
      img[i] = out.coset_of[g.mul(static_cast<Elem>(x), out.coset_rep[i])];
    out.action.perm_of.emplace_back(t, img);
  }
  return out;
}

// ---- structure -------------------------------------------------------------

std::vector<Elem> minimal_generators(const CayleyGroup& g) {
  std::vector<Elem> gens;
  Subgroup s = closure_subgroup(g, {});
  while (s.size() < g.order()) {
    Elem next = 0;
    for (unsigned x = 0; x < g.order(); ++x)
      if (!s.contains(static_cast<Elem>(x))) {
        next = static_cast<Elem>(x);
        break;
      }
    gens.push_back(next);
    std::vector<Elem> seed = s.members;
    seed.push_back(next);
    s = closure_subgroup(g, std::move(seed));
  }
  return gens;
}

namespace {

// Per-element invariant used to prune candidate generator images.
struct ElemInvariant {
  unsigned order;
  unsigned class_size;
  bool operator==(const ElemInvariant&) const = default;
};

std::vector<ElemInvariant> element_invariants(const CayleyGroup& g) {
  std::vector<ElemInvariant> inv(g.order());
  for (const auto& cls : g.conjugacy_classes())
    for (Elem x : cls)
      inv[x] = {g.order_of(x), static_cast<unsigned>(cls.size())};
  return inv;
}

// Backtracking over generator images shared by automorphism_group and
// find_isomorphism.  Emits every bijection extending the generator
// assignment that respects the full multiplication tables.
class IsoSearch {
 public:
  IsoSearch(const CayleyGroup& a, const CayleyGroup& b)
      : a_(a), b_(b), gens_(minimal_generators(a)),
        inv_a_(element_invariants(a)), inv_b_(element_invariants(b)) {}

  // emit returns false to stop the search early.
  template <typename Emit>
  void run(Emit&& emit) {
    if (a_.order() != b_.order()) return;
    std::vector<Elem> images(a_.order(), 0);
    std::vector<bool> assigned(a_.order(), false);
    std::vector<bool> used(b_.order(), false);
    assigned[0] = true;
    used[0] = true;
    stopped_ = false;
    if (gens_.empty()) {
      emit(images);
      return;
    }
    descend(0, images, assigned, used, emit);
  }

 private:
  template <typename Emit>
  void descend(std::size_t k, const std::vector<Elem>& images,
               const std::vector<bool>& assigned, const std::vector<bool>& used,
               Emit&& emit) {
    if (stopped_) return;
    if (k == gens_.size()) {
      for (unsigned x = 0; x < a_.order(); ++x)
        for (unsigned y = 0; y < a_.order(); ++y)
          if (images[a_.mul(static_cast<Elem>(x), static_cast<Elem>(y))] !=
              b_.mul(images[x], images[y]))
            return;
      if (!emit(images)) stopped_ = true;
      return;
    }
    const Elem gen = gens_[k];
    for (unsigned c = 0; c < b_.order(); ++c) {
      if (used[c] || !(inv_a_[gen] == inv_b_[c])) continue;
      auto images2 = images;
      auto assigned2 = assigned;
      auto used2 = used;
      images2[gen] = static_cast<Elem>(c);
      assigned2[gen] = true;
      used2[c] = true;
      if (extend(images2, assigned2, used2))
        descend(k + 1, images2, assigned2, used2, emit);
      if (stopped_) return;
    }
  }

  // Closes the assigned set under multiplication, propagating images and
  // rejecting on conflicts or lost injectivity.
  bool extend(std::vector<Elem>& images, std::vector<bool>& assigned,
              std::vector<bool>& used) {
    std::vector<Elem> members;
    for (unsigned x = 0; x < a_.order(); ++x)
      if (assigned[x]) members.push_back(static_cast<Elem>(x));
    std::vector<Elem> worklist = members;
    while (!worklist.empty()) {
      Elem u = worklist.back();
      worklist.pop_back();
      const std::size_t snapshot = members.size();
      for (std::size_t i = 0; i < snapshot; ++i) {
        const Elem v = members[i];
        for (auto [p, q] : {std::pair{u, v}, std::pair{v, u}}) {
          const Elem prod = a_.mul(p, q);
          const Elem img = b_.mul(images[p], images[q]);
          if (assigned[prod]) {
            if (images[prod] != img) return false;
          } else {
            if (used[img] || !(inv_a_[prod] == inv_b_[img])) return false;
            images[prod] = img;
            assigned[prod] = true;
            used[img] = true;
            members.push_back(prod);
            worklist.push_back(prod);
          }
        }
      }
    }
    return true;
  }

  const CayleyGroup& a_;
  const CayleyGroup& b_;
  std::vector<Elem> gens_;
  std::vector<ElemInvariant> inv_a_, inv_b_;
  bool stopped_ = false;
};

bool same_invariant_multiset(const CayleyGroup& a, const CayleyGroup& b) {
  if (a.order() != b.order()) return false;
  if (a.is_abelian() != b.is_abelian()) return false;
  if (a.order_histogram() != b.order_histogram()) return false;
  auto sizes = [](const CayleyGroup& g) {
    std::vector<std::size_t> s;
    for (const auto& c : g.conjugacy_classes()) s.push_back(c.size());
    std::sort(s.begin(), s.end());
    return s;
  };
  return sizes(a) == sizes(b);
}

}  // namespace

PermGroup automorphism_group(const CayleyGroup& g, unsigned cap) {
  if (g.order() > cap) throw CapError("automorphism search cap exceeded");
  std::vector<Perm> autos;
  IsoSearch search(g, g);
  search.run([&](const std::vector<Elem>& images) {
    std::vector<unsigned> img(images.begin(), images.end());
    autos.emplace_back(g.order(), img);
    return true;
  });
  return PermGroup::from_elements(g.order(), std::move(autos), /*verify=*/false);
}

std::optional<GroupHom> find_isomorphism(const CayleyGroup& a, const CayleyGroup& b) {
  if (!same_invariant_multiset(a, b)) return std::nullopt;
  std::optional<GroupHom> out;
  IsoSearch search(a, b);
  search.run([&](const std::vector<Elem>& images) {
    out = GroupHom{&a, &b, images, true};
    return false;  // first found in canonical order
  });
  return out;
}

// ---- constructions ---------------------------------------------------------

CayleyGroup direct_product(const CayleyGroup& a, const CayleyGroup& b) {
  std::vector<Perm> trivial(b.order(), Perm::identity(a.order()));
  return semidirect_product(a, b, trivial);
}

CayleyGroup semidirect_product(const CayleyGroup& h, const CayleyGroup& gp,
                               const std::vector<Perm>& action) {
  const unsigned m = h.order(), q = gp.order();
  if (action.size() != q) throw SpecError("action must assign a map to every element");
  if (static_cast<std::size_t>(m) * q > CayleyGroup::kMaxOrder)
    throw CapError("product order exceeds the table cap");
  for (unsigned y = 0; y < q; ++y) {
    const Perm& s = action[y];
    if (s.degree() != m) throw SpecError("action degree mismatch");
    for (unsigned x = 0; x < m; ++x)
      for (unsigned x2 = 0; x2 < m; ++x2)
        if (s(h.mul(static_cast<Elem>(x), static_cast<Elem>(x2))) !=
            h.mul(static_cast<Elem>(s(x)), static_cast<Elem>(s(x2))))
          throw SpecError("action image is not an automorphism");
  }
  for (unsigned y = 0; y < q; ++y)
    for (unsigned y2 = 0; y2 < q; ++y2)
      if (!(action[gp.mul(static_cast<Elem>(y), static_cast<Elem>(y2))] ==
            action[y] * action[y2]))
        throw SpecError("action is not a homomorphism");

  const unsigned n = m * q;
  auto idx = [&](unsigned x, unsigned y) { return x * q + y; };
  std::vector<Elem> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (unsigned x = 0; x < m; ++x)
    for (unsigned y = 0; y < q; ++y) {
      labels[idx(x, y)] = "(" + h.label(x) + "," + gp.label(y) + ")";
      for (unsigned x2 = 0; x2 < m; ++x2)
        for (unsigned y2 = 0; y2 < q; ++y2)
          table[static_cast<std::size_t>(idx(x, y)) * n + idx(x2, y2)] =
              static_cast<Elem>(idx(h.mul(static_cast<Elem>(x),
                                          static_cast<Elem>(action[y](x2))),
                                    gp.mul(static_cast<Elem>(y),
                                           static_cast<Elem>(y2))));
    }
  return CayleyGroup(n, std::move(table), std::move(labels));
}

std::pair<CayleyGroup, std::vector<Elem>> reconstruct_group(const PermGroup& pg) {
  const auto& elems = pg.elements();
  const unsigned n = static_cast<unsigned>(elems.size());
  if (n > CayleyGroup::kMaxOrder) throw CapError("permutation group too large");
  // the identity is lexicographically least, so it already sits at index 0
  if (!elems[0].is_identity())
    throw InternalError("canonical element order lost the identity");
  auto index_of = [&](const Perm& p) {
    auto it = std::lower_bound(elems.begin(), elems.end(), p);
    if (it == elems.end() || !(*it == p))
      throw InternalError("product escaped the element set");
    return static_cast<Elem>(it - elems.begin());
  };
  std::vector<Elem> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (unsigned i = 0; i < n; ++i) {
    labels[i] = elems[i].to_cycles();
    for (unsigned j = 0; j < n; ++j)
      table[static_cast<std::size_t>(i) * n + j] = index_of(elems[i] * elems[j]);
  }
  std::vector<Elem> aligned(n);
  for (unsigned i = 0; i < n; ++i) aligned[i] = static_cast<Elem>(i);
  return {CayleyGroup(n, std::move(table), std::move(labels)), aligned};
}

}  // namespace hgs
