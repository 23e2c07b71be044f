#include "theta/component_group.hpp"

#include <stdexcept>

#include "theta/classify.hpp"

namespace theta {

int ComponentGroup::index_of(const Summand& s) const {
  for (size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == s) return static_cast<int>(i);
  return -1;
}

ComponentGroup component_group(const AParameter& psi, bool quotient) {
  AParameter p = psi;
  p.canonicalize();
  ComponentGroup g;
  g.quotient_by_z = quotient;
  for (const auto& ws : p.summands) {
    if (!same_parity(ws.s, p.case_tag, p.side)) continue;
    g.basis.push_back(ws.s);
    g.z.push_back(static_cast<std::uint8_t>(ws.mult % 2));
  }
  return g;
}

std::vector<Character> enumerate_characters(const ComponentGroup& g,
                                            size_t max_rank) {
  if (g.rank() > max_rank) throw std::domain_error("enumeration too large");
  const size_t n = g.rank();
  std::vector<Character> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    Character c;
    c.signs.resize(n);
    for (size_t j = 0; j < n; ++j)
      c.signs[j] = (mask >> j) & 1 ? -1 : +1;
    if (g.quotient_by_z && c.value(g.z) != 1) continue;
    out.push_back(std::move(c));
  }
  return out;
}

std::size_t character_count(const ComponentGroup& g) {
  std::size_t full = std::size_t(1) << g.rank();
  if (g.quotient_by_z && !g.z_trivial()) return full / 2;
  return full;
}

}  // namespace theta
