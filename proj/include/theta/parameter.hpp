#pragma once

#include <string>
#include <vector>

#include "theta/symbol.hpp"

namespace theta {

/// The three dual-pair cases: orthogonal-symplectic, and the two unitary
/// cases distinguished by the parity of dim V.
enum class CaseTag { O, U0, U1 };

/// G is the smaller group of the pair, H the larger one.
enum class Side { G, H };

std::string to_string(CaseTag c);
std::string to_string(Side s);

/// Expected duality type of a whole parameter for the given case and side.
/// Case O: both standard representations are orthogonal. In the unitary
/// cases the sign alternates with the parity of the standard dimension.
Duality parity_of(CaseTag c, Side s);

/// Witt-tower index n with dim V = 2n (Cases O, U0) or 2n-1 (Case U1).
int tower_index(CaseTag c, int dim);

/// One summand rho (x) S_a (x) S_b. `a` is the Weil-Deligne SL2 dimension,
/// `b` the Arthur SL2 dimension. `half_shift_x2` stores twice the exponent of
/// an unramified twist |.|^x produced by L-parameter expansion.
struct Summand {
  IrrSymbol rho;
  int a = 1;
  int b = 1;
  int half_shift_x2 = 0;

  int dim() const { return rho.dim * a * b; }

  auto key() const { return std::make_tuple(rho.key(), a, b, half_shift_x2); }

  Summand twisted(const TwistWord& t) const {
    Summand s = *this;
    s.rho = s.rho.twisted(t);
    return s;
  }

  Summand dual() const {
    Summand s = *this;
    s.rho = s.rho.dual();
    s.half_shift_x2 = -s.half_shift_x2;
    return s;
  }
};

inline bool operator==(const Summand& a, const Summand& b) {
  return a.key() == b.key();
}
inline bool operator<(const Summand& a, const Summand& b) {
  return a.key() < b.key();
}

struct WeightedSummand {
  Summand s;
  int mult = 1;
};

/// A formal multiset of summands with a case tag and a side tag. All
/// operations treat it as a value; `canonicalize` sorts and merges so that
/// structural equality is well-defined.
struct AParameter {
  CaseTag case_tag = CaseTag::O;
  Side side = Side::G;
  int target_dim = 0;
  std::vector<WeightedSummand> summands;

  int total_dim() const;
  void canonicalize();

  /// Structural invariant check. Empty result means well-formed; each entry
  /// names the violated rule.
  std::vector<std::string> violations() const;
};

bool operator==(const AParameter& a, const AParameter& b);

/// Expands the multiset into one entry per occurrence (multiplicity copies).
std::vector<Summand> expand_occurrences(const AParameter& p);

}  // namespace theta
