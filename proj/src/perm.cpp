#include "hgs/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hgs {

unsigned Perm::order() const {
  unsigned ord = 1;
  for (unsigned len : cycle_type()) ord = std::lcm(ord, len);
  return ord;
}

unsigned Perm::count_fixed_points() const {
  unsigned n = 0;
  for (unsigned i = 0; i < deg_; ++i)
    if (img_[i] == i) ++n;
  return n;
}

std::vector<unsigned> Perm::cycle_type() const {
  std::vector<unsigned> lens;
  std::array<bool, kMaxDegree> seen{};
  for (unsigned i = 0; i < deg_; ++i) {
    if (seen[i]) continue;
    unsigned len = 0;
    for (unsigned j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

bool Perm::has_uniform_cycle_type() const {
  auto lens = cycle_type();
  return std::all_of(lens.begin(), lens.end(),
                     [&](unsigned l) { return l == lens.front(); });
}

bool Perm::is_even() const {
  unsigned transpositions = 0;
  for (unsigned len : cycle_type()) transpositions += len - 1;
  return transpositions % 2 == 0;
}

std::string Perm::to_cycles() const {
  std::array<bool, kMaxDegree> seen{};
  std::ostringstream out;
  bool any = false;
  for (unsigned i = 0; i < deg_; ++i) {
    if (seen[i] || img_[i] == i) {
      seen[i] = true;
      continue;
    }
    any = true;
    out << '(';
    bool first = true;
    for (unsigned j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      if (!first) out << ' ';
      out << j;
      first = false;
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Perm Perm::from_cycles(unsigned degree, std::string_view text) {
  check_degree(degree);
  std::vector<unsigned> images(degree);
  for (unsigned i = 0; i < degree; ++i) images[i] = i;

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  bool saw_cycle = false;
  while (pos < text.size()) {
    if (text[pos] != '(') throw SpecError("expected '(' in cycle notation");
    ++pos;
    std::vector<unsigned> cyc;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!isdigit(static_cast<unsigned char>(text[pos])))
        throw SpecError("expected point number in cycle notation");
      unsigned v = 0;
      while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        ++pos;
      }
      if (v >= degree) throw SpecError("cycle point out of range");
      cyc.push_back(v);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        skip_ws();
      }
    }
    if (pos >= text.size()) throw SpecError("unterminated cycle");
    ++pos;  // ')'
    skip_ws();
    saw_cycle = true;
    for (std::size_t k = 0; k + 1 < cyc.size(); ++k) {
      if (images[cyc[k]] != cyc[k]) throw SpecError("point repeated in cycles");
      images[cyc[k]] = cyc[k + 1];
    }
    if (cyc.size() >= 2) {
      if (images[cyc.back()] != cyc.back())
        throw SpecError("point repeated in cycles");
      images[cyc.back()] = cyc.front();
    }
  }
  if (!saw_cycle) throw SpecError("empty cycle expression");
  return Perm(degree, images);
}

}  // namespace hgs
