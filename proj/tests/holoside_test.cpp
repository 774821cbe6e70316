#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "hgs/holoside.hpp"

using namespace hgs;

namespace {

Caps caps() { return Caps{}; }

// All regular subgroups of Sym(n) of a given abstract type, by scanning
// the (n-1)! base-point-fixing bijections onto the type's elements and
// transporting its left translations.  Independent of the gamma search
// and of the embedding engine; only usable at small n.
std::vector<PermGroup> regular_subgroups_oracle(unsigned n,
                                                const CayleyGroup& type) {
  std::vector<unsigned> points(n - 1);
  for (unsigned i = 0; i + 1 < n; ++i) points[i] = i + 1;
  std::vector<PermGroup> out;
  std::set<std::vector<Perm>> seen;
  std::vector<Elem> c(n);  // point -> type element
  do {
    c[0] = 0;
    for (unsigned i = 0; i + 1 < n; ++i) c[points[i]] = static_cast<Elem>(i + 1);
    std::vector<Elem> cinv(n);
    for (unsigned p = 0; p < n; ++p) cinv[c[p]] = static_cast<Elem>(p);
    std::vector<Perm> perms;
    for (unsigned m = 0; m < n; ++m) {
      std::vector<unsigned> img(n);
      for (unsigned p = 0; p < n; ++p) img[p] = cinv[type.mul(static_cast<Elem>(m), c[p])];
      perms.emplace_back(n, img);
    }
    std::sort(perms.begin(), perms.end());
    if (seen.insert(perms).second)
      out.push_back(PermGroup::from_elements(n, perms, /*verify=*/false));
  } while (std::next_permutation(points.begin(), points.end()));
  return out;
}

// Direct-side oracle: every regular subgroup of Sym(|G|) normalized by
// lambda(G), counted by type.
std::map<std::string, unsigned> galois_counts_oracle(const CayleyGroup& g) {
  PermGroup lambda = regular_representation(g).image();
  std::map<std::string, unsigned> counts;
  for (const NamedGroup& type : all_types(g.order())) {
    for (const PermGroup& m : regular_subgroups_oracle(g.order(), type.group))
      if (lambda.normalizes(m)) ++counts[type.name];
  }
  return counts;
}

}  // namespace

TEST_CASE("holomorph construction") {
  Holomorph h4 = build_holomorph(construct_named("C4"), caps());
  CHECK(h4.image.order() == 8);
  auto [a4c, al] = reconstruct_group(h4.image);
  (void)al;
  CHECK(identify_type(a4c) == "D8");

  Holomorph hv = build_holomorph(construct_named("C2xC2"), caps());
  CHECK(hv.image.order() == 24);
  auto [s4c, al2] = reconstruct_group(hv.image);
  (void)al2;
  CHECK(identify_type(s4c) == "S4");

  Holomorph h5 = build_holomorph(construct_named("C5"), caps());
  CHECK(h5.image.order() == 20);
  auto [f20c, al3] = reconstruct_group(h5.image);
  (void)al3;
  CHECK(identify_type(f20c) == "F20");

  CHECK_THROWS_AS(build_holomorph(construct_named("C30"), caps()), CapError);
}

TEST_CASE("regular subgroups of the holomorph") {
  auto by_type = [](const std::vector<std::pair<PermGroup, std::string>>& rs) {
    std::map<std::string, unsigned> counts;
    for (const auto& [r, type] : rs) ++counts[type];
    return counts;
  };

  auto c4 = by_type(regular_subgroups_of_hol(construct_named("C4"), caps()));
  CHECK(c4 == std::map<std::string, unsigned>{{"C4", 1}, {"C2xC2", 1}});

  auto v4 = by_type(regular_subgroups_of_hol(construct_named("C2xC2"), caps()));
  CHECK(v4 == std::map<std::string, unsigned>{{"C4", 3}, {"C2xC2", 1}});

  auto c5 = by_type(regular_subgroups_of_hol(construct_named("C5"), caps()));
  CHECK(c5 == std::map<std::string, unsigned>{{"C5", 1}});
}

TEST_CASE("gamma search agrees with the brute-force scan") {
  for (const char* spec : {"C4", "C2xC2", "C5", "C6", "S3", "C7", "C8", "D8",
                           "Q8", "C4xC2", "C2xC2xC2"}) {
    CAPTURE(spec);
    CayleyGroup n = construct_named(spec);
    Holomorph hol = build_holomorph(n, caps());
    // brute force: all regular subgroups of Sym(n) lying inside Hol(N)
    std::set<std::vector<Perm>> brute;
    for (const NamedGroup& type : all_types(n.order()))
      for (const PermGroup& m : regular_subgroups_oracle(n.order(), type.group))
        if (m.is_subgroup_of(hol.image)) brute.insert(m.elements());
    auto found = regular_subgroups_of_hol(n, caps());
    CHECK(found.size() == brute.size());
    for (const auto& [r, type] : found) CHECK(brute.count(r.elements()));
  }
}

TEST_CASE("count_e examples") {
  CHECK(count_e(construct_named("C4"), construct_named("C4"), caps()) == 1);
  CHECK(count_e(construct_named("C4"), construct_named("C2xC2"), caps()) == 1);
  CHECK(count_e(construct_named("C2xC2"), construct_named("C4"), caps()) == 3);
  CHECK(count_e(construct_named("C2xC2"), construct_named("C2xC2"), caps()) == 1);
  CHECK(count_e(construct_named("C6"), construct_named("S3"), caps()) == 2);
  CHECK(count_e(construct_named("C6"), construct_named("C6"), caps()) == 1);
  CHECK(count_e(construct_named("S3"), construct_named("S3"), caps()) == 2);
  CHECK(count_e(construct_named("S3"), construct_named("C6"), caps()) == 3);

  CHECK_THROWS_AS(count_e(construct_named("C4"), construct_named("C6"), caps()),
                  SpecError);
}

TEST_CASE("count_e(A4, A4) is 10") {
  CHECK(count_e(construct_named("A4"), construct_named("A4"), caps()) == 10);
}

TEST_CASE("cross-side consistency at small orders") {
  for (const char* spec : {"C1", "C2", "C3", "C4", "C2xC2", "C5", "C6", "S3"}) {
    CAPTURE(spec);
    CayleyGroup g = construct_named(spec);
    auto oracle = galois_counts_oracle(g);
    for (const NamedGroup& type : all_types(g.order())) {
      const long long e = count_e(g, type.group, caps());
      const unsigned want = oracle.count(type.name) ? oracle.at(type.name) : 0;
      CAPTURE(type.name);
      CHECK(e == want);
    }
  }
}

TEST_CASE("the classical structure always exists: e(G, G) >= 1") {
  for (const char* spec : {"C2", "C4", "C2xC2", "S3", "C8", "D8", "Q8", "C12",
                           "D12", "Dic3", "A4"}) {
    CAPTURE(spec);
    CayleyGroup g = construct_named(spec);
    CHECK(count_e(g, g, Caps{}) >= 1);
  }
}

TEST_CASE("byott enumeration matches the direct oracle on Galois contexts") {
  for (const char* spec : {"C4", "C2xC2", "C6", "S3", "C8", "D8", "Q8"}) {
    CAPTURE(spec);
    CayleyGroup g = construct_named(spec);
    auto structures = byott_enumerate(GaloisContext::galois_of(g), caps());
    PermGroup lambda = regular_representation(g).image();
    std::set<std::vector<Perm>> oracle;
    for (const NamedGroup& type : all_types(g.order()))
      for (const PermGroup& m : regular_subgroups_oracle(g.order(), type.group))
        if (lambda.normalizes(m)) oracle.insert(m.elements());
    CHECK(structures.size() == oracle.size());
    for (const auto& s : structures) CHECK(oracle.count(s.group.elements()));
  }
}

TEST_CASE("bijection b and the embedding round trip") {
  for (const char* spec : {"C6", "S3", "Q8", "C12", "D12"}) {
    CAPTURE(spec);
    CayleyGroup g = construct_named(spec);
    auto structures = byott_enumerate(GaloisContext::galois_of(g), caps());
    CHECK(!structures.empty());
    for (const auto& s : structures) {
      ByottEmbedding emb = alpha_to_beta(s);
      CHECK(bijection_b(emb, 0) == 0);
      // b hits every element of N exactly once
      std::set<Elem> image;
      for (unsigned x = 0; x < g.order(); ++x) image.insert(bijection_b(emb, static_cast<Elem>(x)));
      CHECK(image.size() == g.order());
      // stabilizer criterion: b(g) = 1_N iff g = 1_G on Galois contexts
      for (unsigned x = 1; x < g.order(); ++x)
        CHECK(bijection_b(emb, static_cast<Elem>(x)) != 0);

      HgsStructure back = beta_to_alpha(emb);
      CHECK(back.group == s.group);
      CHECK(back.type == s.type);

      // beta lands inside Hol(N)
      Holomorph hol = build_holomorph(emb.base, caps());
      for (const Perm& p : emb.beta) CHECK(hol.image.contains(p));
    }
  }
}

TEST_CASE("classical structure from the translation embedding") {
  CayleyGroup g = construct_named("S3");
  ByottEmbedding emb;
  emb.source = g;
  emb.base = g;
  emb.beta = regular_representation(g).perm_of;
  HgsStructure s = beta_to_alpha(emb);
  CHECK(s.flags.classical);
  CHECK(s.type == "S3");
  PermGroup rho = PermGroup::from_elements(6, right_translations(g), false);
  CHECK(s.group == rho);
}

TEST_CASE("the quaternion extension carries an elementary abelian structure") {
  CayleyGroup q8 = construct_named("Q8");
  auto structures = byott_enumerate(GaloisContext::galois_of(q8), caps());
  PermGroup n = PermGroup::generate(
      8, {Perm::from_cycles(8, "(0 2)(1 3)(4 6)(5 7)"),
          Perm::from_cycles(8, "(0 3)(1 2)(4 5)(6 7)"),
          Perm::from_cycles(8, "(0 7)(1 4)(2 5)(3 6)")});
  bool found = false;
  for (const auto& s : structures)
    if (s.group == n) {
      found = true;
      CHECK(s.type == "C2xC2xC2");
    }
  CHECK(found);
}
