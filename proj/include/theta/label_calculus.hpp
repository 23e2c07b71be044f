#pragma once

#include "theta/packet.hpp"

namespace theta {

/// Change of Whittaker datum: every member's character is multiplied by the
/// character a_i -> det(psi_i)(c) of the component group. Throws
/// std::domain_error when some basis summand misses the det oracle at c.
LabeledPacket whittaker_twist(const LabeledPacket& packet,
                              const std::string& c);

/// Contragredient: the parameter goes to its dual and every character is
/// multiplied by nu, nu(a_i) = det(psi_i)(-1), under the basis-to-basis
/// identification of the two component groups.
LabeledPacket contragredient_twist(const LabeledPacket& packet);

/// Extends a packet over psi_0 to one over psi_0 + psi_tau + (psi_tau^c)^dual.
/// When psi_tau is a new same-parity summand the group gains one basis vector
/// a_tau and every member extends in two ways (ids suffixed "+"/"-"); each
/// extension records the predicted intertwining eigenvalue
/// epsilon^k * eta(a_tau). When psi_tau has the wrong parity, or already
/// occurs in psi_0, the group is unchanged and members carry over.
/// `psi_tau` here is a single summand (an irreducible tau of GL_k, k = its
/// dimension).
LabeledPacket induct_packet(const LabeledPacket& packet0,
                            const Summand& psi_tau, int epsilon);

/// Restriction along S_{psi_0} -> S_{psi}: drops the coordinates of basis
/// vectors absent from psi_0's group. Inverse of induct_packet on labels.
LabeledPacket restrict_packet(const LabeledPacket& packet,
                              const AParameter& psi_0);

}  // namespace theta
