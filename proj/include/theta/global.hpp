#pragma once

#include <map>
#include <string>
#include <vector>

#include "theta/parameter.hpp"

namespace theta {

/// A formal character word over named characters (e.g. {"chi_V": 1}); the
/// central-character bullet is checked by free reduction of these words.
using CharWord = std::map<std::string, int>;

struct GlobalSummand {
  IrrSymbol rho;   // rho.dim = n_i, duality per the parity bullets
  CharWord omega;  // central character of rho, as a word
  int d = 1;       // Arthur SL2 dimension
};

struct GlobalParameter {
  CaseTag case_tag = CaseTag::O;
  Side side = Side::G;
  int target_dim = 0;
  std::vector<GlobalSummand> summands;
};

/// Checks the elliptic-parameter bullets; empty result means valid. Each
/// violation names its bullet: "distinctness", "dimension", "parity bullet",
/// "central character".
std::vector<std::string> validate_global(const GlobalParameter& gp);

/// Per-place localization data: each global rho id maps to the local pieces
/// it decomposes into at that place.
struct PlaceData {
  std::string place;
  std::map<std::string, std::vector<IrrSymbol>> pieces;
};

/// Assembles the local parameter at one place: each global (rho_i, d_i) turns
/// into (local piece) (x) S_1 (x) S_{d_i} over the supplied pieces. Throws
/// std::domain_error on a dimension mismatch or a missing rho entry.
AParameter localize(const GlobalParameter& gp, const PlaceData& pd);

/// One member of a toy global packet: local label signs per place, keyed by
/// global basis index. Omitted places are unramified (all +1).
struct GlobalMember {
  std::map<std::string, std::vector<int>> local_signs;
};

/// Product over places of the local sign at basis index i; +1 at omitted
/// places. Throws std::domain_error on a size mismatch.
int global_character(const GlobalParameter& gp, const GlobalMember& m,
                     size_t basis_index);

/// Index of the same-parity global summands, in canonical order: the basis
/// the sign character lives on.
std::vector<size_t> global_basis(const GlobalParameter& gp);

/// Multiplicity-formula membership: true iff the global character equals the
/// supplied sign character epsilon_psi on every basis element. epsilon_psi is
/// an oracle vector over global_basis order.
bool multiplicity_test(const GlobalParameter& gp, const GlobalMember& m,
                       const std::vector<int>& epsilon_psi);

}  // namespace theta
