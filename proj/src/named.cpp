#include "hgs/named.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace hgs {

namespace {

CayleyGroup cyclic(unsigned n) {
  if (n == 0 || n > CayleyGroup::kMaxOrder) throw SpecError("bad cyclic order");
  std::vector<Elem> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (unsigned i = 0; i < n; ++i) {
    labels[i] = i == 0 ? "1" : (i == 1 ? "a" : "a^" + std::to_string(i));
    for (unsigned j = 0; j < n; ++j)
      table[static_cast<std::size_t>(i) * n + j] = static_cast<Elem>((i + j) % n);
  }
  CayleyGroup g(n, std::move(table), std::move(labels));
  g.set_name("C" + std::to_string(n));
  return g;
}

// Dihedral group of ORDER n (n even): r^(n/2) = s^2 = 1, s r s = r^-1.
// Elements: r^i at i, r^i s at n/2 + i.
CayleyGroup dihedral(unsigned n) {
  if (n < 2 || n % 2 != 0) throw SpecError("dihedral order must be even");
  const unsigned m = n / 2;
  auto rot = [&](unsigned i) { return i % m; };
  std::vector<Elem> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels(n);
  auto idx = [&](bool flip, unsigned i) { return (flip ? m : 0) + i; };
  for (unsigned i = 0; i < m; ++i) {
    labels[idx(false, i)] = i == 0 ? "1" : "r^" + std::to_string(i);
    labels[idx(true, i)] = i == 0 ? "s" : "r^" + std::to_string(i) + " s";
  }
  for (unsigned f1 = 0; f1 < 2; ++f1)
    for (unsigned i = 0; i < m; ++i)
      for (unsigned f2 = 0; f2 < 2; ++f2)
        for (unsigned j = 0; j < m; ++j) {
          // (r^i s^f1)(r^j s^f2) = r^(i + j or i - j) s^(f1 xor f2)
          unsigned k = f1 ? rot(i + m - rot(j)) : rot(i + j);
          table[static_cast<std::size_t>(idx(f1, i)) * n + idx(f2, j)] =
              static_cast<Elem>(idx(f1 ^ f2, k));
        }
  CayleyGroup g(n, std::move(table), std::move(labels));
  g.set_name("D" + std::to_string(n));
  return g;
}

// Dicyclic group of order 4m: a^(2m) = 1, b^2 = a^m, b a b^-1 = a^-1.
// Elements: a^i at i, a^i b at 2m + i.  Dic2 is Q8 with the {1, i, i^2,
// i^3, j, ij, i^2j, i^3j} element order.
CayleyGroup dicyclic(unsigned m) {
  if (m == 0) throw SpecError("bad dicyclic parameter");
  const unsigned n = 4 * m;
  const unsigned c = 2 * m;
  if (n > CayleyGroup::kMaxOrder) throw SpecError("dicyclic order too large");
  std::vector<Elem> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels(n);
  const bool q8 = (m == 2);
  const char* a = q8 ? "i" : "a";
  const char* b = q8 ? "j" : "b";
  auto apow = [&](unsigned i) -> std::string {
    return i == 0 ? "1" : (i == 1 ? a : std::string(a) + "^" + std::to_string(i));
  };
  for (unsigned i = 0; i < c; ++i) {
    labels[i] = apow(i);
    labels[c + i] = (i == 0 ? std::string() : apow(i)) + b;
  }
  for (unsigned i = 0; i < c; ++i)
    for (unsigned j = 0; j < c; ++j) {
      table[static_cast<std::size_t>(i) * n + j] = static_cast<Elem>((i + j) % c);
      table[static_cast<std::size_t>(i) * n + (c + j)] =
          static_cast<Elem>(c + (i + j) % c);
      table[static_cast<std::size_t>(c + i) * n + j] =
          static_cast<Elem>(c + (i + c - j % c) % c);
      table[static_cast<std::size_t>(c + i) * n + (c + j)] =
          static_cast<Elem>((i + c - j % c + m) % c);
    }
  CayleyGroup g(n, std::move(table), std::move(labels));
  g.set_name(m == 2 ? "Q8" : "Dic" + std::to_string(m));
  return g;
}

CayleyGroup from_perm_group(const PermGroup& pg, std::string name) {
  auto [g, aligned] = reconstruct_group(pg);
  (void)aligned;
  g.set_name(std::move(name));
  return g;
}

CayleyGroup symmetric(unsigned n) {
  if (n == 0 || n > 5) throw SpecError("S<n> supported for n in [1, 5]");
  if (n == 1) return cyclic(1);
  std::vector<Perm> gens;
  std::vector<unsigned> cycle(n);
  for (unsigned i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  gens.emplace_back(n, cycle);
  std::vector<unsigned> swap(n);
  for (unsigned i = 0; i < n; ++i) swap[i] = i;
  std::swap(swap[0], swap[1]);
  gens.emplace_back(n, swap);
  return from_perm_group(PermGroup::generate(n, gens), "S" + std::to_string(n));
}

CayleyGroup alternating(unsigned n) {
  if (n == 0 || n > 5) throw SpecError("A<n> supported for n in [1, 5]");
  if (n <= 2) return cyclic(1);
  std::vector<Perm> gens;
  gens.push_back(Perm::from_cycles(n, "(0 1 2)"));
  if (n >= 4) {
    std::vector<unsigned> img(n);
    for (unsigned i = 0; i < n; ++i) img[i] = i;
    if (n == 4) {
      img = {1, 0, 3, 2};  // (0 1)(2 3)
    } else {
      img = {1, 2, 3, 4, 0};  // (0 1 2 3 4)
    }
    gens.emplace_back(n, img);
  }
  return from_perm_group(PermGroup::generate(n, gens), "A" + std::to_string(n));
}

CayleyGroup elementary(unsigned p, unsigned k) {
  if (p < 2 || k == 0) throw SpecError("bad elementary abelian parameters");
  CayleyGroup g = cyclic(p);
  for (unsigned i = 1; i < k; ++i) g = direct_product(g, cyclic(p));
  g.set_name("E" + std::to_string(p) + "^" + std::to_string(k));
  return g;
}

CayleyGroup holomorph_group(const CayleyGroup& n) {
  PermGroup autos = automorphism_group(n);
  auto [aut_group, aligned] = reconstruct_group(autos);
  (void)aligned;
  CayleyGroup h = semidirect_product(n, aut_group, autos.elements());
  h.set_name("Hol(" + (n.name().empty() ? "?" : n.name()) + ")");
  return h;
}

bool is_cyclic_group(const CayleyGroup& g) { return g.exponent() == g.order(); }

Perm power_automorphism(const CayleyGroup& h, unsigned k) {
  if (!is_cyclic_group(h)) throw SpecError("pow<k> action needs a cyclic base");
  if (std::gcd(k, h.order()) != 1)
    throw SpecError("pow<k> is not an automorphism for this order");
  // cyclic groups from this module index element i as a^i
  std::vector<unsigned> img(h.order());
  for (unsigned i = 0; i < h.order(); ++i)
    img[i] = static_cast<unsigned>((static_cast<unsigned long long>(i) * k) % h.order());
  return Perm(h.order(), img);
}

Perm inversion_automorphism(const CayleyGroup& h) {
  if (!h.is_abelian()) throw SpecError("inv action needs an abelian base");
  std::vector<unsigned> img(h.order());
  for (unsigned i = 0; i < h.order(); ++i) img[i] = h.inv(static_cast<Elem>(i));
  return Perm(h.order(), img);
}

CayleyGroup semidirect_cyclic(const CayleyGroup& h, const CayleyGroup& k,
                              const Perm& sigma, std::string name) {
  if (!is_cyclic_group(k)) throw SpecError("acting atom must be cyclic");
  std::vector<Perm> action(k.order(), Perm::identity(h.order()));
  Perm pw = Perm::identity(h.order());
  for (unsigned j = 1; j < k.order(); ++j) {
    pw = sigma * pw;
    action[j] = pw;
  }
  if (!(sigma * pw == Perm::identity(h.order())))
    throw SpecError("action order does not divide the acting group order");
  CayleyGroup g = semidirect_product(h, k, action);
  g.set_name(std::move(name));
  return g;
}

// ---- grammar ---------------------------------------------------------------

std::vector<std::string> split_top_level(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string strip(std::string s) {
  std::erase_if(s, [](char c) { return c == ' ' || c == '\t'; });
  return s;
}

unsigned parse_number(std::string_view s) {
  if (s.empty()) throw SpecError("expected a number in group spec");
  unsigned v = 0;
  for (char c : s) {
    if (!isdigit(static_cast<unsigned char>(c)))
      throw SpecError("malformed number in group spec");
    v = v * 10 + static_cast<unsigned>(c - '0');
    if (v > 100000) throw SpecError("number too large in group spec");
  }
  return v;
}

CayleyGroup parse_atom(const std::string& a) {
  if (a.empty()) throw SpecError("empty atom in group spec");
  if (a == "Q8") return dicyclic(2);
  if (a == "F20") {
    CayleyGroup g = semidirect_cyclic(cyclic(5), cyclic(4),
                                      power_automorphism(cyclic(5), 2), "F20");
    return g;
  }
  if (a == "F42") {
    CayleyGroup g = semidirect_cyclic(cyclic(7), cyclic(6),
                                      power_automorphism(cyclic(7), 3), "F42");
    return g;
  }
  if (a.starts_with("Hol(") && a.back() == ')')
    return holomorph_group(construct_named(a.substr(4, a.size() - 5)));
  if (a.starts_with("Dic")) return dicyclic(parse_number(a.substr(3)));
  if (a[0] == 'C') return cyclic(parse_number(a.substr(1)));
  if (a[0] == 'D') return dihedral(parse_number(a.substr(1)));
  if (a[0] == 'S') return symmetric(parse_number(a.substr(1)));
  if (a[0] == 'A') return alternating(parse_number(a.substr(1)));
  if (a[0] == 'E') {
    auto caret = a.find('^');
    if (caret == std::string::npos)
      throw SpecError("elementary abelian atom needs p^k");
    return elementary(parse_number(a.substr(1, caret - 1)),
                      parse_number(a.substr(caret + 1)));
  }
  throw SpecError("unknown atom '" + a + "' in group spec");
}

Perm swap_automorphism(const CayleyGroup& h, unsigned p) {
  // coordinate swap on E<p>^2, whose elements are indexed x*p + y
  if (h.order() != p * p) throw SpecError("swap action needs E<p>^2");
  std::vector<unsigned> img(h.order());
  for (unsigned x = 0; x < p; ++x)
    for (unsigned y = 0; y < p; ++y) img[x * p + y] = y * p + x;
  return Perm(h.order(), img);
}

CayleyGroup parse_factor(const std::string& f) {
  auto colon_parts = split_top_level(f, ':');
  if (colon_parts.size() == 1) return parse_atom(f);
  if (colon_parts.size() != 2)
    throw SpecError("a semidirect factor needs exactly one ':'");
  auto at = colon_parts[1].find('@');
  if (at == std::string::npos)
    throw SpecError("semidirect factor needs '@<action>'");
  const std::string lhs = colon_parts[0];
  const std::string rhs = colon_parts[1].substr(0, at);
  const std::string act = colon_parts[1].substr(at + 1);
  CayleyGroup h = parse_atom(lhs);
  CayleyGroup k = parse_atom(rhs);
  Perm sigma = Perm::identity(h.order());
  if (act == "triv") {
    sigma = Perm::identity(h.order());
  } else if (act == "inv") {
    sigma = inversion_automorphism(h);
  } else if (act.starts_with("pow")) {
    sigma = power_automorphism(h, parse_number(act.substr(3)));
  } else if (act == "swap") {
    if (!lhs.starts_with("E")) throw SpecError("swap action needs E<p>^2");
    sigma = swap_automorphism(h, parse_number(lhs.substr(1, lhs.find('^') - 1)));
  } else {
    throw SpecError("unknown action '" + act + "' (use triv, inv, pow<k>, swap)");
  }
  return semidirect_cyclic(h, k, sigma, lhs + ":" + rhs + "@" + act);
}

}  // namespace

CayleyGroup construct_named(std::string_view spec) {
  const std::string s = strip(std::string(spec));
  if (s.empty()) throw SpecError("empty group spec");
  auto factors = split_top_level(s, 'x');
  CayleyGroup g = parse_factor(factors[0]);
  for (std::size_t i = 1; i < factors.size(); ++i)
    g = direct_product(g, parse_factor(factors[i]));
  g.set_name(s);
  return g;
}

// ---- catalog ---------------------------------------------------------------

namespace {

// A000001: number of groups of order n, n = 1..63.
constexpr unsigned kGroupCount[64] = {
    0,  1, 1, 1, 2, 1, 2, 1, 5,  2, 2, 1, 5,  1, 2, 1, 14, 1, 5, 1, 5,
    2,  2, 1, 15, 2, 2, 5, 4, 1,  4, 1, 51, 1, 2, 1, 14, 1, 2, 2, 14,
    1,  6, 1, 4, 2, 2, 1, 52, 2, 5, 1, 5,  1, 15, 2, 13, 2, 2, 1, 13,
    1,  2, 4};

std::vector<std::vector<unsigned>> partitions(unsigned e) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned left, unsigned maxpart) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (unsigned p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(e, e);
  return out;
}

std::vector<std::pair<unsigned, unsigned>> factorize(unsigned n) {
  std::vector<std::pair<unsigned, unsigned>> f;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.push_back({p, e});
  }
  if (n > 1) f.push_back({n, 1});
  return f;
}

// All abelian types of order n as invariant-factor chains d1 | d2 | ...,
// named "C<d1>x..." with divisors ascending.
std::vector<NamedGroup> abelian_types(unsigned n) {
  std::vector<NamedGroup> out;
  if (n == 1) {
    out.push_back({"C1", cyclic(1)});
    return out;
  }
  auto fact = factorize(n);
  std::vector<std::vector<std::vector<unsigned>>> parts;
  for (auto [p, e] : fact) parts.push_back(partitions(e));

  std::vector<std::size_t> choice(fact.size(), 0);
  while (true) {
    // invariant factors: align each prime's partition from the largest part
    std::size_t rows = 0;
    for (std::size_t i = 0; i < fact.size(); ++i)
      rows = std::max(rows, parts[i][choice[i]].size());
    std::vector<unsigned> invariant(rows, 1);
    for (std::size_t i = 0; i < fact.size(); ++i) {
      const auto& pp = parts[i][choice[i]];
      for (std::size_t j = 0; j < pp.size(); ++j) {
        unsigned q = 1;
        for (unsigned k = 0; k < pp[j]; ++k) q *= fact[i].first;
        invariant[j] *= q;
      }
    }
    std::sort(invariant.begin(), invariant.end());
    std::string name;
    CayleyGroup g = cyclic(invariant[0]);
    name = "C" + std::to_string(invariant[0]);
    for (std::size_t j = 1; j < invariant.size(); ++j) {
      g = direct_product(g, cyclic(invariant[j]));
      name += "xC" + std::to_string(invariant[j]);
    }
    g.set_name(name);
    out.push_back({name, std::move(g)});

    std::size_t i = 0;
    while (i < choice.size()) {
      if (++choice[i] < parts[i].size()) break;
      choice[i] = 0;
      ++i;
    }
    if (i == choice.size()) break;
  }
  std::sort(out.begin(), out.end(),
            [](const NamedGroup& a, const NamedGroup& b) { return a.name < b.name; });
  return out;
}

struct CuratedEntry {
  const char* name;
  std::function<CayleyGroup()> build;
};

CayleyGroup build_sl23() {
  // Q8 : C3 with the order-3 automorphism i -> j -> ij
  CayleyGroup q8 = dicyclic(2);
  Perm sigma = Perm::from_cycles(8, "(1 4 5)(3 6 7)");
  return semidirect_cyclic(q8, cyclic(3), sigma, "SL(2,3)");
}

CayleyGroup build_heisenberg3() {
  // E3^2 : C3, shear (a, b) -> (a b, b); exponent-3 extraspecial group
  CayleyGroup e9 = elementary(3, 2);
  std::vector<unsigned> img(9);
  for (unsigned x = 0; x < 3; ++x)
    for (unsigned y = 0; y < 3; ++y) img[x * 3 + y] = x * 3 + (y + x) % 3;
  return semidirect_cyclic(e9, cyclic(3), Perm(9, img), "He3");
}

CayleyGroup build_c3_d8() {
  // C3 : D8 where the Klein subgroup <r^2, s> acts trivially and the
  // other reflections invert (distinct from D24, whose action kernel
  // meets the Sylow 2-subgroup in C4)
  CayleyGroup c3 = cyclic(3);
  CayleyGroup d8 = dihedral(8);
  const Perm inv = inversion_automorphism(c3);
  const Perm id = Perm::identity(3);
  std::vector<Perm> action(8, id);
  for (unsigned i : {1u, 3u, 5u, 7u}) action[i] = inv;  // r, r^3, r s, r^3 s
  CayleyGroup g = semidirect_product(c3, d8, action);
  g.set_name("C3:D8");
  return g;
}

CayleyGroup build_c4_circ_d8() {
  // central product C4 ∘ D8: (C2xC4) : C2 fixing i and sending u -> i^2 u
  CayleyGroup h = construct_named("C4xC2");
  // h elements indexed i-power * 2 + u-power with i of order 4, u of order 2
  std::vector<unsigned> img(8);
  for (unsigned a = 0; a < 4; ++a)
    for (unsigned b = 0; b < 2; ++b) img[a * 2 + b] = ((a + 2 * b) % 4) * 2 + b;
  return semidirect_cyclic(h, cyclic(2), Perm(8, img), "C4oD8");
}

std::map<unsigned, std::vector<CuratedEntry>> curated_nonabelian() {
  auto named = [](const char* display, const char* spec) {
    return CuratedEntry{display, [spec, display]() {
                          CayleyGroup g = construct_named(spec);
                          g.set_name(display);
                          return g;
                        }};
  };
  std::map<unsigned, std::vector<CuratedEntry>> m;
  m[6] = {named("S3", "S3")};
  m[8] = {named("D8", "D8"), named("Q8", "Q8")};
  m[10] = {named("D10", "D10")};
  m[12] = {named("D12", "D12"), named("Dic3", "Dic3"), named("A4", "A4")};
  m[14] = {named("D14", "D14")};
  m[16] = {named("D16", "D16"),
           named("SD16", "C8:C2@pow3"),
           named("M16", "C8:C2@pow5"),
           named("Q16", "Dic4"),
           named("C2xD8", "D8xC2"),
           named("C2xQ8", "Q8xC2"),
           named("C4:C4", "C4:C4@inv"),
           named("(C2xC2):C4", "E2^2:C4@swap"),
           CuratedEntry{"C4oD8", build_c4_circ_d8}};
  m[18] = {named("D18", "D18"), named("C3xS3", "S3xC3"),
           named("(C3xC3):C2", "E3^2:C2@inv")};
  m[20] = {named("D20", "D20"), named("Dic5", "Dic5"), named("F20", "F20")};
  m[21] = {named("C7:C3", "C7:C3@pow2")};
  m[22] = {named("D22", "D22")};
  m[24] = {named("D24", "D24"),
           named("Dic6", "Dic6"),
           named("S4", "S4"),
           CuratedEntry{"SL(2,3)", build_sl23},
           named("C2xA4", "A4xC2"),
           named("C2xD12", "D12xC2"),
           named("C2xDic3", "Dic3xC2"),
           named("C4xS3", "S3xC4"),
           CuratedEntry{"C3:D8", build_c3_d8},
           named("C3xD8", "D8xC3"),
           named("C3xQ8", "Q8xC3"),
           named("C3:C8", "C3:C8@inv")};
  m[26] = {named("D26", "D26")};
  m[27] = {CuratedEntry{"He3", build_heisenberg3}, named("C9:C3", "C9:C3@pow4")};
  m[28] = {named("D28", "D28"), named("Dic7", "Dic7")};
  m[30] = {named("D30", "D30"), named("C5xS3", "S3xC5"),
           named("C3xD10", "D10xC3")};
  m[34] = {named("D34", "D34")};
  m[38] = {named("D38", "D38")};
  m[39] = {named("C13:C3", "C13:C3@pow3")};
  m[42] = {named("D42", "D42"), named("F42", "F42"),
           named("C2xC7:C3", "C7:C3@pow2xC2"),
           named("C3xD14", "D14xC3"), named("C7xS3", "S3xC7")};
  m[46] = {named("D46", "D46")};
  m[50] = {named("D50", "D50"), named("C5xD10", "D10xC5"),
           named("(C5xC5):C2", "E5^2:C2@inv")};
  m[52] = {named("D52", "D52"), named("Dic13", "Dic13"),
           named("C13:C4", "C13:C4@pow5")};
  m[55] = {named("C11:C5", "C11:C5@pow3")};
  m[57] = {named("C19:C3", "C19:C3@pow7")};
  m[58] = {named("D58", "D58")};
  m[60] = {named("A5", "A5"),
           named("D60", "D60"),
           named("Dic15", "Dic15"),
           named("C3xF20", "F20xC3"),
           named("C5xA4", "A4xC5"),
           named("C3xDic5", "Dic5xC3"),
           named("C5xDic3", "Dic3xC5"),
           named("C5xD12", "D12xC5"),
           named("C3xD20", "D20xC3"),
           named("S3xD10", "S3xD10"),
           named("C15:C4", "C15:C4@pow2")};
  m[62] = {named("D62", "D62")};
  m[63] = {named("C7:C9", "C7:C9@pow2"), named("C3xC7:C3", "C7:C3@pow2xC3")};
  return m;
}

}  // namespace

const std::vector<NamedGroup>& all_types(unsigned order, bool require_complete) {
  static std::mutex mu;
  static std::map<unsigned, std::vector<NamedGroup>> cache;
  static const auto curated = curated_nonabelian();

  std::scoped_lock lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) {
    if (order == 0) throw SpecError("order must be positive");
    std::vector<NamedGroup> list = abelian_types(order);
    if (auto c = curated.find(order); c != curated.end())
      for (const CuratedEntry& e : c->second) list.push_back({e.name, e.build()});
    // sanity: entries pairwise non-isomorphic
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = i + 1; j < list.size(); ++j)
        if (find_isomorphism(list[i].group, list[j].group))
          throw InternalError("catalog entries " + list[i].name + " and " +
                              list[j].name + " are isomorphic");
    it = cache.emplace(order, std::move(list)).first;
  }
  if (require_complete) {
    const unsigned want = order < 64 ? kGroupCount[order] : 0;
    if (want == 0 || it->second.size() != want)
      throw CapError("type catalog is not complete for order " +
                     std::to_string(order));
  }
  return it->second;
}

bool types_complete(unsigned order) {
  if (order == 0 || order >= 64) return false;
  try {
    all_types(order, true);
    return true;
  } catch (const CapError&) {
    return false;
  }
}

std::string identify_type(const CayleyGroup& g) {
  const auto& list = all_types(g.order(), /*require_complete=*/false);
  for (const NamedGroup& cand : list)
    if (find_isomorphism(g, cand.group)) return cand.name;
  // fingerprint fallback
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(g.order());
  mix(g.is_abelian());
  mix(g.exponent());
  for (unsigned v : g.order_histogram()) mix(v);
  std::vector<std::size_t> sizes;
  for (const auto& c : g.conjugacy_classes()) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  for (std::size_t v : sizes) mix(v);
  std::ostringstream out;
  out << "order" << g.order() << "-unidentified-" << std::hex << (h & 0xffffffffull);
  return out.str();
}

bool type_matches(const CayleyGroup& g, std::string_view spec) {
  return find_isomorphism(g, construct_named(spec)).has_value();
}

}  // namespace hgs
