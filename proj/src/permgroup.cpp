#include "hgs/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <unordered_set>

namespace hgs {

PermGroup PermGroup::generate(unsigned degree, const std::vector<Perm>& gens) {
  for (const Perm& g : gens)
    if (g.degree() != degree)
      throw SpecError("generator degree mismatch");

  std::unordered_set<Perm, PermHash> seen;
  std::deque<Perm> todo;
  const Perm id = Perm::identity(degree);
  seen.insert(id);
  todo.push_back(id);
  while (!todo.empty()) {
    Perm u = todo.front();
    todo.pop_front();
    for (const Perm& g : gens) {
      Perm v = u * g;
      if (seen.insert(v).second) todo.push_back(v);
    }
  }

  PermGroup out;
  out.degree_ = degree;
  out.elements_.assign(seen.begin(), seen.end());
  std::sort(out.elements_.begin(), out.elements_.end());
  out.gens_ = gens.empty() ? std::vector<Perm>{id} : gens;
  return out;
}

PermGroup PermGroup::from_elements(unsigned degree, std::vector<Perm> elements,
                                   bool verify) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (verify) {
    if (elements.empty()) throw SpecError("empty element set");
    std::unordered_set<Perm, PermHash> set(elements.begin(), elements.end());
    if (!set.count(Perm::identity(degree)))
      throw SpecError("element set lacks identity");
    for (const Perm& a : elements) {
      if (a.degree() != degree) throw SpecError("element degree mismatch");
      if (!set.count(a.inverse())) throw SpecError("element set lacks an inverse");
      for (const Perm& b : elements)
        if (!set.count(a * b)) throw SpecError("element set not closed");
    }
  }
  PermGroup out;
  out.degree_ = degree;
  out.gens_ = elements;
  out.elements_ = std::move(elements);
  return out;
}

bool PermGroup::contains(const Perm& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree_ != other.degree_) return false;
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](const Perm& p) { return other.contains(p); });
}

bool PermGroup::is_transitive() const {
  std::vector<bool> hit(degree_, false);
  unsigned count = 0;
  for (const Perm& p : elements_) {
    unsigned q = p(0);
    if (!hit[q]) {
      hit[q] = true;
      ++count;
    }
  }
  return count == degree_;
}

bool PermGroup::is_regular() const {
  return order() == degree_ && is_transitive();
}

bool PermGroup::normalizes(const PermGroup& other) const {
  if (degree_ != other.degree_) throw SpecError("degree mismatch in normalizes");
  for (const Perm& a : gens_) {
    const Perm ainv = a.inverse();
    for (const Perm& b : other.generators())
      if (!other.contains(a * (b * ainv))) return false;
  }
  return true;
}

std::vector<Perm> PermGroup::conjugation_orbit(const Perm& seed) const {
  std::unordered_set<Perm, PermHash> seen{seed};
  std::deque<Perm> todo{seed};
  while (!todo.empty()) {
    Perm u = todo.front();
    todo.pop_front();
    for (const Perm& g : gens_) {
      Perm v = g * (u * g.inverse());
      if (seen.insert(v).second) todo.push_back(v);
    }
  }
  std::vector<Perm> orbit(seen.begin(), seen.end());
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

Perm product_embedding(const Perm& a, const Perm& b) {
  const unsigned t = a.degree(), r = b.degree();
  if (t * r > Perm::kMaxDegree)
    throw CapError("product embedding exceeds the degree cap");
  std::vector<unsigned> images(t * r);
  for (unsigned i = 0; i < t; ++i)
    for (unsigned j = 0; j < r; ++j) images[i * r + j] = a(i) * r + b(j);
  return Perm(t * r, images);
}

namespace {

// One length class of sigma's cycles.  A centralizing permutation maps
// each cycle to a same-length cycle sigma-equivariantly, so within a
// class it is a permutation pi of the cycles plus a rotation offset per
// cycle.  A pi-cycle of length d whose offsets sum to R yields point
// cycles of length d*L/gcd(L, R).
struct CycleClass {
  unsigned len = 0;
  std::vector<std::vector<unsigned>> cycles;  // points in sigma-orbit order
};

std::vector<CycleClass> cycle_classes(const Perm& sigma) {
  std::vector<bool> seen(sigma.degree(), false);
  std::vector<CycleClass> classes;
  for (unsigned i = 0; i < sigma.degree(); ++i) {
    if (seen[i]) continue;
    std::vector<unsigned> cyc;
    for (unsigned j = i; !seen[j]; j = sigma(j)) {
      seen[j] = true;
      cyc.push_back(j);
    }
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const CycleClass& c) { return c.len == cyc.size(); });
    if (it == classes.end()) {
      classes.push_back({static_cast<unsigned>(cyc.size()), {}});
      it = std::prev(classes.end());
    }
    it->cycles.push_back(std::move(cyc));
  }
  return classes;
}

// Enumerates (pi, offsets) for one class such that every induced point
// cycle has length exactly `ell`.  pi is built cycle by cycle from each
// cycle's minimal member, which visits every pi exactly once.
class ClassEnumerator {
 public:
  ClassEnumerator(const CycleClass& cls, unsigned ell) : cls_(cls), ell_(ell) {
    target_.assign(cls.cycles.size(), -1);
    offset_.assign(cls.cycles.size(), 0);
  }

  const std::vector<int>& targets() const { return target_; }
  const std::vector<unsigned>& offsets() const { return offset_; }

  template <typename Emit>
  void run(Emit&& emit) {
    next_cycle(emit);
  }

 private:
  template <typename Emit>
  void next_cycle(Emit&& emit) {
    std::size_t start = 0;
    while (start < target_.size() && target_[start] != -1) ++start;
    if (start == target_.size()) {
      emit();
      return;
    }
    extend(start, start, 0, 1, emit);
  }

  // Path so far: start -> ... -> current, with `sum` the offsets committed
  // on earlier edges and `depth` the number of cycles on the path.  Every
  // path member except `current` already has its target edge assigned.
  template <typename Emit>
  void extend(std::size_t start, std::size_t current, unsigned sum,
              unsigned depth, Emit&& emit) {
    const unsigned L = cls_.len;
    // close the pi-cycle: edge current -> start
    for (unsigned o = 0; o < L; ++o) {
      const unsigned r = (sum + o) % L;
      if (depth * (L / std::gcd(L, r)) != ell_) continue;
      target_[current] = static_cast<int>(start);
      offset_[current] = o;
      next_cycle(emit);
      target_[current] = -1;
    }
    if (depth >= ell_) return;  // point cycles of a depth-d pi-cycle are >= d long
    // extend the path; members other than the root must exceed it so each
    // pi-cycle is built exactly once, rooted at its minimum
    for (std::size_t next = start + 1; next < target_.size(); ++next) {
      if (target_[next] != -1 || next == current) continue;
      for (unsigned o = 0; o < L; ++o) {
        target_[current] = static_cast<int>(next);
        offset_[current] = o;
        extend(start, next, sum + o, depth + 1, emit);
      }
      target_[current] = -1;
    }
  }

  const CycleClass& cls_;
  unsigned ell_;
  std::vector<int> target_;
  std::vector<unsigned> offset_;
};

}  // namespace

std::vector<Perm> centralizer_uniform_elements(const Perm& sigma,
                                               unsigned cycle_len) {
  const unsigned deg = sigma.degree();
  std::vector<Perm> out;
  if (cycle_len < 2 || deg % cycle_len != 0) return out;

  auto classes = cycle_classes(sigma);
  for (const CycleClass& c : classes)
    if ((c.len * c.cycles.size()) % cycle_len != 0) return out;

  std::vector<ClassEnumerator> enums;
  enums.reserve(classes.size());
  for (const CycleClass& c : classes) enums.emplace_back(c, cycle_len);

  std::vector<unsigned> images(deg);
  std::size_t guard = 0;

  std::function<void(std::size_t)> step = [&](std::size_t ci) {
    if (ci == enums.size()) {
      if (++guard > 20000000) throw CapError("centralizer pool too large");
      out.emplace_back(deg, std::span<const unsigned>(images));
      return;
    }
    ClassEnumerator& en = enums[ci];
    const CycleClass& c = classes[ci];
    en.run([&] {
      const unsigned L = c.len;
      for (std::size_t j = 0; j < c.cycles.size(); ++j) {
        const auto& src = c.cycles[j];
        const auto& dst = c.cycles[static_cast<std::size_t>(en.targets()[j])];
        for (unsigned s = 0; s < L; ++s)
          images[src[s]] = dst[(s + en.offsets()[j]) % L];
      }
      step(ci + 1);
    });
  };
  step(0);

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace hgs
