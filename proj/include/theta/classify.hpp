#pragma once

#include "theta/parameter.hpp"

namespace theta {

/// Duality type of rho (x) S_a (x) S_b: the tensor sign of S_a (x) S_b is +1
/// exactly when a and b have the same parity, and composition with the type
/// of rho flips orthogonal <-> symplectic under -1.
/// Throws std::domain_error ("undetermined parity") when rho has no duality.
Duality duality_of_summand(const Summand& s);

struct Classification {
  bool good_parity = false;
  bool ddr = false;        // discrete diagonal restriction
  bool elementary = false;
};

/// Pull-back along the diagonal SL2: rho (x) S_a (x) S_b decomposes into
/// rho (x) S_{a+b-1-2k} (x) S_1 for k = 0..min(a,b)-1.
AParameter diagonal_restriction(const AParameter& psi);

/// Expands the Arthur SL2 into unramified twists: rho (x) S_a (x) S_b turns
/// into the sum over j = 1..b of rho|.|^{(b+1)/2-j} (x) S_a (x) S_1.
AParameter l_parameter_of(const AParameter& psi);

Classification classify(const AParameter& psi);

/// True when the summand lies in I'_psi, i.e. is (conjugate) self-dual of the
/// same parity as the whole parameter.
bool same_parity(const Summand& s, CaseTag c, Side side);

/// Discrete parameter test: multiplicity-free, all Arthur SL2 trivial, every
/// summand of the parameter's parity.
bool is_discrete(const AParameter& phi);

}  // namespace theta
