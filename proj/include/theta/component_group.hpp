#pragma once

#include <cstdint>
#include <vector>

#include "theta/parameter.hpp"

namespace theta {

/// F2 vector over the canonical basis of a component group.
using F2Vec = std::vector<std::uint8_t>;

struct ComponentGroup;

/// A character of a component group, stored as its sign on each basis vector.
struct Character {
  std::vector<int> signs;  // entries in {+1,-1}, one per basis element

  int value(const F2Vec& x) const {
    int v = 1;
    for (size_t i = 0; i < signs.size() && i < x.size(); ++i)
      if (x[i]) v *= signs[i];
    return v;
  }

  bool operator==(const Character& o) const { return signs == o.signs; }
  bool operator<(const Character& o) const { return signs < o.signs; }
};

/// The component group of a parameter: an elementary abelian 2-group with one
/// canonical basis vector per distinct same-parity summand, plus the image z
/// of -I (coordinates = multiplicities mod 2). When `quotient_by_z` is set,
/// characters of this group are those trivial on z.
struct ComponentGroup {
  std::vector<Summand> basis;
  F2Vec z;
  bool quotient_by_z = false;

  size_t rank() const { return basis.size(); }
  bool z_trivial() const {
    for (auto c : z)
      if (c) return false;
    return true;
  }

  /// Index of the basis vector carrying the given summand, or -1.
  int index_of(const Summand& s) const;
};

ComponentGroup component_group(const AParameter& psi, bool quotient);

/// All characters of the group (filtered by triviality on z when the group is
/// a quotient), in a deterministic order. Throws std::domain_error
/// ("enumeration too large") when rank exceeds `max_rank`.
std::vector<Character> enumerate_characters(const ComponentGroup& g,
                                            size_t max_rank = 20);

/// Number of characters of the (possibly quotiented) group.
std::size_t character_count(const ComponentGroup& g);

}  // namespace theta
