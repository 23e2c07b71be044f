#pragma once

#include <map>
#include <vector>

#include "theta/packet.hpp"

namespace theta {

/// zeta = +1 when a >= b, -1 when a < b.
int zeta(const Summand& s);

/// The three supercuspidality conditions on a discrete parameter phi and a
/// character eta of its quotient component group:
///   chain:       rho (x) S_a in phi with a > 2 forces rho (x) S_{a-2} in phi;
///   alternating: eta(x_{rho,a}) * eta(x_{rho,a-2}) = -1 when both present;
///   initial:     rho (x) S_2 in phi forces eta(x_{rho,2}) = -1.
/// Throws std::domain_error ("not a discrete parameter") when phi is not
/// discrete.
bool supercuspidal_support(const AParameter& phi, const Character& eta);

/// All characters of the quotient group passing supercuspidal_support, in
/// enumeration order.
std::vector<Character> enumerate_supercuspidals(const AParameter& phi);

/// The packet of an elementary parameter: one member per character of the
/// quotient component group, labeled by it. Member ids encode the sign
/// pattern. Throws std::domain_error ("not an elementary parameter").
LabeledPacket elementary_packet(const AParameter& psi);

/// A total preorder on the occurrences of a parameter (one rank per entry of
/// expand_occurrences, higher rank = greater). Only the relative order within
/// occurrences sharing the same rho symbol is significant.
struct OccurrenceOrder {
  std::vector<int> rank;
};

/// Checks the admissibility implication on all occurrence pairs with equal
/// rho and equal zeta: strict dominance in both a+b and |a-b| forces the
/// larger pair above the smaller. Also requires ranks distinct within each
/// rho class (a total order there).
bool validate_admissible_order(const AParameter& psi,
                               const OccurrenceOrder& order);

/// The order by a+b within each rho class (admissible whenever those sums
/// separate equal-zeta pairs, e.g. for any parameter with discrete diagonal
/// restriction).
OccurrenceOrder natural_order(const AParameter& psi);

struct DominationResult {
  AParameter psi_gg;
  std::vector<int> t;  // per occurrence, same indexing as order.rank
};

/// Finds a dominating parameter with discrete diagonal restriction such that
/// the given order becomes the natural order of the output. Greedy: per rho
/// class in increasing rank, minimal t keeping the accumulated diagonal
/// restriction multiplicity-free and the sums strictly increasing. Throws
/// std::domain_error on bad parity, inadmissible order, or when the search
/// cap (t <= 50 per occurrence) is exceeded ("search bound exceeded").
DominationResult dominate(const AParameter& psi, const OccurrenceOrder& order);

/// Matrix of exponents prescribing partial Jacquet operations. Entries are
/// half-integers stored doubled; application_order lists them column by
/// column, top to bottom, first-applied first.
struct GeneralizedSegment {
  IrrSymbol rho;
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<int>> entries_x2;  // rows x cols
  std::vector<int> application_order_x2;
};

/// Builds the segment taking the dominating occurrence s_gg back to s.
/// Corner values (doubled): top-left a'-b', top-right a-b+2*zeta,
/// bottom-left (a'+b'-2)*zeta, bottom-right (a+b)*zeta; entry(i,j) =
/// top-left + (i-j)*zeta. Throws std::domain_error ("not a dominating pair").
GeneralizedSegment segment(const Summand& s, const Summand& s_gg);

struct JacquetStep {
  IrrSymbol rho;
  int exponent_x2 = 0;
};

/// Concatenation of the per-occurrence segment schedules, occurrences visited
/// in decreasing rank. Occurrences of psi_gg are matched to those of psi
/// within each rho class by the order (psi side) and by a+b (psi_gg side).
std::vector<JacquetStep> jacquet_schedule(const AParameter& psi,
                                          const OccurrenceOrder& order,
                                          const AParameter& psi_gg);

/// Witt-tower descent exponents: n-r, n-r+1, ..., n-r0-1 (length r-r0).
/// Throws std::domain_error when r <= r0.
std::vector<int> descent_segment(int n, int r, int r0);

}  // namespace theta
