#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace theta {

/// Self-duality type of an irreducible Weil-group symbol (or of a summand).
enum class Duality {
  Orthogonal,
  Symplectic,
  ConjOrthogonal,
  ConjSymplectic,
  None,
};

/// Flips orthogonal <-> symplectic (and the conjugate pair). None stays None.
Duality flip(Duality d);

bool is_conjugate_type(Duality d);

std::string to_string(Duality d);
std::optional<Duality> duality_from_string(const std::string& s);

/// Element of the free abelian group on the two formal characters chi_V and
/// chi_W. Reduction is just integer arithmetic on the exponents, so it is
/// trivially confluent.
struct TwistWord {
  int v = 0;  // exponent of chi_V
  int w = 0;  // exponent of chi_W

  TwistWord inverse() const { return {-v, -w}; }
  TwistWord operator*(const TwistWord& o) const { return {v + o.v, w + o.w}; }
  bool trivial() const { return v == 0 && w == 0; }

  auto operator<=>(const TwistWord&) const = default;

  /// Canonical text form, e.g. "", "xV", "xV^2.xW^-1".
  std::string str() const;
};

/// An abstract irreducible Weil-group representation. Only the symbol-level
/// data the calculator needs: no actual representation is ever constructed.
/// `det_at` is an oracle table for det(rho) evaluated at named field elements.
struct IrrSymbol {
  std::string id;
  int dim = 1;
  Duality duality = Duality::None;
  TwistWord twist;
  bool contains_trivial = false;
  std::map<std::string, int> det_at;  // values in {+1,-1}

  /// Structural identity key; det_at and contains_trivial are metadata.
  auto key() const { return std::tie(id, twist, dim, duality); }

  int det_value(const std::string& element) const {
    auto it = det_at.find(element);
    if (it == det_at.end())
      throw std::domain_error("missing det oracle value for symbol '" + id +
                              "' at element '" + element + "'");
    return it->second;
  }

  IrrSymbol twisted(const TwistWord& t) const {
    IrrSymbol r = *this;
    r.twist = r.twist * t;
    return r;
  }

  IrrSymbol dual() const {
    IrrSymbol r = *this;
    r.twist = r.twist.inverse();
    return r;
  }
};

inline bool operator==(const IrrSymbol& a, const IrrSymbol& b) {
  return a.key() == b.key();
}
inline bool operator<(const IrrSymbol& a, const IrrSymbol& b) {
  return a.key() < b.key();
}

/// Renders a doubled-integer half-integer, e.g. 3 -> "3/2", 4 -> "2".
std::string half_str(int x2);

}  // namespace theta
