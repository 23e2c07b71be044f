#pragma once

#include <vector>

#include "theta/packet.hpp"

namespace theta {

/// The joint twist chi_W^{-1} chi_V applied to one summand. In the unitary
/// cases the two characters have conjugate-dual signs of opposite parity, so
/// the twist flips the conjugate duality of rho; in Case O it keeps it.
Summand theta_twist_summand(const Summand& s, CaseTag c);

/// Parameter-level theta lift in the stable range: every summand is twisted
/// by chi_W^{-1} chi_V and the summand chi_V (x) S_1 (x) S_{2r-2n+1} is
/// appended. Requires psi.side == G and r > dim V; throws std::domain_error
/// ("outside stable range") otherwise.
AParameter theta_parameter(const AParameter& psi, int r);

/// Basis map a_i -> a'_i of the component-group embedding: index i of the
/// G-side basis goes to entry i of the returned vector, an index into the
/// H-side basis. The extra H-side vector (the appended summand) is never hit.
/// Throws std::domain_error ("not a theta pair") on structural mismatch.
std::vector<int> embed_component_groups(const AParameter& psi,
                                        const AParameter& theta_psi);

/// Restricts every H-side member label along the embedding. The result lives
/// on the full (unquotiented) G-side group with the same member ids.
LabeledPacket pull_back_packet(const LabeledPacket& h_packet,
                               const AParameter& psi, int r);

/// The counting law: members of the H-packet and of its pullback are in
/// bijection (equal cardinality with distinct ids on both sides).
bool packet_cardinality_check(const LabeledPacket& h_packet,
                              const LabeledPacket& pulled);

}  // namespace theta
