#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "hgs/perm.hpp"
#include "hgs/permgroup.hpp"

using namespace hgs;

namespace {

Perm cyc(unsigned degree, const char* text) {
  return Perm::from_cycles(degree, text);
}

Perm random_perm(std::mt19937& rng, unsigned degree) {
  std::vector<unsigned> img(degree);
  for (unsigned i = 0; i < degree; ++i) img[i] = i;
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(degree, img);
}

// Brute-force closure by repeated multiplication, independent of
// PermGroup::generate.
std::vector<Perm> closure_oracle(unsigned degree, std::vector<Perm> gens) {
  std::vector<Perm> elems{Perm::identity(degree)};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> next = elems;
    for (const Perm& a : elems)
      for (const Perm& g : gens) {
        Perm p = a * g;
        if (std::find(next.begin(), next.end(), p) == next.end()) {
          next.push_back(p);
          grew = true;
        }
      }
    elems = std::move(next);
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

}  // namespace

TEST_CASE("cycle notation round-trips") {
  std::mt19937 rng(99);
  for (unsigned degree : {1u, 2u, 5u, 8u, 12u, 63u, 64u}) {
    for (int rep = 0; rep < 30; ++rep) {
      Perm p = random_perm(rng, degree);
      CHECK(Perm::from_cycles(degree, p.to_cycles()) == p);
    }
  }
  CHECK(Perm::identity(6).to_cycles() == "()");
  CHECK(Perm::from_cycles(6, "()") == Perm::identity(6));
  CHECK(cyc(5, "(0 1 2)(3 4)").to_cycles() == "(0 1 2)(3 4)");
  CHECK_THROWS_AS(Perm::from_cycles(4, "(0 5)"), SpecError);
  CHECK_THROWS_AS(Perm::from_cycles(4, "(0 1)(1 2)"), SpecError);
}

TEST_CASE("perm arithmetic basics") {
  Perm a = cyc(4, "(0 1 2 3)");
  CHECK(a.order() == 4);
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.inverse().to_cycles() == "(0 3 2 1)");
  // composition applies the right factor first
  Perm b = cyc(3, "(0 1)");
  Perm c = cyc(3, "(1 2)");
  CHECK((b * c)(1) == b(c(1)));
  CHECK((b * c).to_cycles() == "(0 1 2)");

  std::mt19937 rng(3);
  for (int rep = 0; rep < 40; ++rep) {
    Perm x = random_perm(rng, 9), y = random_perm(rng, 9), z = random_perm(rng, 9);
    CHECK((x * y) * z == x * (y * z));
  }
}

TEST_CASE("generate_closure examples") {
  // degree 3, one 3-cycle
  PermGroup c3 = PermGroup::generate(3, {cyc(3, "(0 1 2)")});
  CHECK(c3.order() == 3);

  // degree 4 dihedral
  PermGroup d8 = PermGroup::generate(4, {cyc(4, "(0 1 2 3)"), cyc(4, "(0 2)")});
  CHECK(d8.order() == 8);
  CHECK(d8.elements() == closure_oracle(4, {cyc(4, "(0 1 2 3)"), cyc(4, "(0 2)")}));

  CHECK_THROWS_AS(PermGroup::generate(4, {cyc(3, "(0 1 2)")}), SpecError);
}

TEST_CASE("the quaternion example generators close to an elementary abelian group") {
  // points 0..7 = {1, i, i^2, i^3, j, ij, i^2j, i^3j}
  std::vector<Perm> gens = {
      cyc(8, "(0 2)(1 3)(4 6)(5 7)"),
      cyc(8, "(0 3)(1 2)(4 5)(6 7)"),
      cyc(8, "(0 7)(1 4)(2 5)(3 6)"),
  };
  PermGroup n = PermGroup::generate(8, gens);
  CHECK(n.order() == 8);
  for (const Perm& p : n.elements())
    if (!p.is_identity()) CHECK(p.order() == 2);
  CHECK(n.is_regular());

  PermGroup lambda = PermGroup::generate(
      8, {cyc(8, "(0 1 2 3)(4 5 6 7)"), cyc(8, "(0 4 2 6)(1 7 3 5)")});
  CHECK(lambda.order() == 8);
  CHECK(lambda.normalizes(n));
}

TEST_CASE("is_regular") {
  PermGroup c3 = PermGroup::generate(3, {cyc(3, "(0 1 2)")});
  CHECK(c3.is_regular());

  // A4 in its natural degree-4 action: order 12 != 4
  PermGroup a4 = PermGroup::generate(4, {cyc(4, "(0 1 2)"), cyc(4, "(1 2 3)")});
  CHECK(a4.order() == 12);
  CHECK_FALSE(a4.is_regular());
}

TEST_CASE("normalizes agrees with the all-pairs definition") {
  std::mt19937 rng(17);
  auto all_pairs = [](const PermGroup& a, const PermGroup& b) {
    for (const Perm& x : a.elements())
      for (const Perm& y : b.elements())
        if (!b.contains(x * (y * x.inverse()))) return false;
    return true;
  };

  // any group normalizes itself
  PermGroup d8 = PermGroup::generate(4, {cyc(4, "(0 1 2 3)"), cyc(4, "(0 2)")});
  CHECK(d8.normalizes(d8));

  for (int rep = 0; rep < 25; ++rep) {
    PermGroup a = PermGroup::generate(6, {random_perm(rng, 6)});
    PermGroup b = PermGroup::generate(6, {random_perm(rng, 6), random_perm(rng, 6)});
    CHECK(a.normalizes(b) == all_pairs(a, b));
  }
}

TEST_CASE("product_embedding") {
  CHECK(product_embedding(Perm::identity(3), Perm::identity(4)) ==
        Perm::identity(12));
  // t=2, r=2, both factors the transposition
  CHECK(product_embedding(cyc(2, "(0 1)"), cyc(2, "(0 1)")).to_cycles() ==
        "(0 3)(1 2)");

  std::mt19937 rng(5);
  for (int rep = 0; rep < 30; ++rep) {
    Perm a = random_perm(rng, 2), a2 = random_perm(rng, 2);
    Perm b = random_perm(rng, 3), b2 = random_perm(rng, 3);
    CHECK(product_embedding(a, b) * product_embedding(a2, b2) ==
          product_embedding(a * a2, b * b2));
  }
}

TEST_CASE("closure invariants hold for random generated groups") {
  std::mt19937 rng(31337);
  for (int rep = 0; rep < 15; ++rep) {
    PermGroup g = PermGroup::generate(5, {random_perm(rng, 5), random_perm(rng, 5)});
    CHECK(g.contains(Perm::identity(5)));
    for (const Perm& x : g.elements()) {
      CHECK(g.contains(x.inverse()));
      for (const Perm& y : g.elements()) CHECK(g.contains(x * y));
    }
    // Lagrange at degree 5: order divides 120
    CHECK(120 % g.order() == 0);
  }
}

TEST_CASE("embedded products of regular groups are regular, and only those") {
  // over all pairs of subgroups of Sym(2) x Sym(?) at degrees <= 4, the
  // embedded product generated factor-wise is regular iff both factors are
  auto groups_of_degree = [](unsigned d) {
    std::vector<PermGroup> out;
    std::vector<unsigned> img(d);
    for (unsigned i = 0; i < d; ++i) img[i] = i;
    std::vector<Perm> elems;
    do {
      elems.emplace_back(d, img);
    } while (std::next_permutation(img.begin(), img.end()));
    // all subgroups = closures of pairs (enough at these degrees)
    std::set<std::vector<Perm>> seen;
    for (const Perm& a : elems)
      for (const Perm& b : elems) {
        PermGroup g = PermGroup::generate(d, {a, b});
        if (seen.insert(g.elements()).second) out.push_back(g);
      }
    return out;
  };
  for (unsigned t = 2; t <= 3; ++t)
    for (unsigned r = 2; r <= 4 / t * 2; ++r) {
      for (const PermGroup& a : groups_of_degree(t))
        for (const PermGroup& b : groups_of_degree(r)) {
          std::vector<Perm> gens;
          for (const Perm& x : a.elements())
            gens.push_back(product_embedding(x, Perm::identity(r)));
          for (const Perm& y : b.elements())
            gens.push_back(product_embedding(Perm::identity(t), y));
          PermGroup prod = PermGroup::generate(t * r, gens);
          CHECK(prod.order() == a.order() * b.order());
          CHECK(prod.is_regular() == (a.is_regular() && b.is_regular()));
        }
    }
}

TEST_CASE("centralizer pool enumerates uniform-cycle centralizing elements") {
  // exhaustive oracle at degree 6
  auto oracle = [](const Perm& sigma, unsigned ell) {
    std::vector<unsigned> img(6);
    for (unsigned i = 0; i < 6; ++i) img[i] = i;
    std::vector<Perm> found;
    std::sort(img.begin(), img.end());
    do {
      Perm x(6, img);
      if (!(x * sigma == sigma * x)) continue;
      auto lens = x.cycle_type();
      bool uniform = std::all_of(lens.begin(), lens.end(),
                                 [&](unsigned l) { return l == ell; });
      if (uniform) found.push_back(x);
    } while (std::next_permutation(img.begin(), img.end()));
    std::sort(found.begin(), found.end());
    return found;
  };

  for (const char* text : {"(0 1)(2 3)(4 5)", "(0 1 2)(3 4 5)", "(0 1 2 3 4 5)",
                           "(0 1)", "(0 1 2)(3 4)", "()"}) {
    Perm sigma = Perm::from_cycles(6, text);
    for (unsigned ell : {2u, 3u, 6u}) {
      CAPTURE(text);
      CAPTURE(ell);
      CHECK(centralizer_uniform_elements(sigma, ell) == oracle(sigma, ell));
    }
  }
}
