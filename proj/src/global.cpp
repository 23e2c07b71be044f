#include "theta/global.hpp"

#include <set>
#include <stdexcept>

namespace theta {

namespace {

Duality expected_duality(CaseTag c, Side side, int d) {
  const Duality base = parity_of(c, side);
  return d % 2 != 0 ? base : flip(base);
}

// All characters in sight are order two, so words reduce mod 2.
CharWord reduce_mod2(const CharWord& w) {
  CharWord out;
  for (const auto& [name, e] : w) {
    if (name == "1") continue;
    if (e % 2 != 0) out[name] = 1;
  }
  return out;
}

}  // namespace

std::vector<std::string> validate_global(const GlobalParameter& gp) {
  std::vector<std::string> out;
  std::set<std::pair<std::string, int>> seen;
  bool distinct = true;
  int dim = 0;
  bool parity_ok = true;
  for (const auto& s : gp.summands) {
    if (!seen.insert({s.rho.id, s.d}).second) distinct = false;
    dim += s.rho.dim * s.d;
    if (s.rho.duality != expected_duality(gp.case_tag, gp.side, s.d))
      parity_ok = false;
  }
  if (!distinct) out.push_back("distinctness");
  if (dim != gp.target_dim) out.push_back("dimension");
  if (!parity_ok) out.push_back("parity bullet");
  if (gp.case_tag == CaseTag::O) {
    CharWord prod;
    for (const auto& s : gp.summands)
      for (const auto& [name, e] : s.omega) prod[name] += e * s.d;
    CharWord target;
    target["chi_V"] = 1;
    if (!(reduce_mod2(prod) == target)) out.push_back("central character");
  }
  return out;
}

AParameter localize(const GlobalParameter& gp, const PlaceData& pd) {
  AParameter out;
  out.case_tag = gp.case_tag;
  out.side = gp.side;
  out.target_dim = gp.target_dim;
  for (const auto& s : gp.summands) {
    auto it = pd.pieces.find(s.rho.id);
    if (it == pd.pieces.end())
      throw std::domain_error("missing localization data for '" + s.rho.id +
                              "'");
    int dim = 0;
    for (const auto& piece : it->second) {
      dim += piece.dim;
      Summand loc;
      loc.rho = piece;
      loc.a = 1;
      loc.b = s.d;
      out.summands.push_back({loc, 1});
    }
    if (dim != s.rho.dim)
      throw std::domain_error("localization dimension mismatch for '" +
                              s.rho.id + "'");
  }
  out.canonicalize();
  return out;
}

std::vector<size_t> global_basis(const GlobalParameter& gp) {
  std::vector<size_t> out;
  for (size_t i = 0; i < gp.summands.size(); ++i)
    if (gp.summands[i].rho.duality ==
        expected_duality(gp.case_tag, gp.side, gp.summands[i].d))
      out.push_back(i);
  return out;
}

int global_character(const GlobalParameter& gp, const GlobalMember& m,
                     size_t basis_index) {
  const auto basis = global_basis(gp);
  if (basis_index >= basis.size())
    throw std::domain_error("basis index out of range");
  int v = +1;
  for (const auto& [place, signs] : m.local_signs) {
    if (signs.size() != basis.size())
      throw std::domain_error("local label size mismatch at place '" + place +
                              "'");
    v *= signs[basis_index];
  }
  return v;
}

bool multiplicity_test(const GlobalParameter& gp, const GlobalMember& m,
                       const std::vector<int>& epsilon_psi) {
  const auto basis = global_basis(gp);
  if (epsilon_psi.size() != basis.size())
    throw std::domain_error("missing oracle value for the sign character");
  for (size_t i = 0; i < basis.size(); ++i)
    if (global_character(gp, m, i) != epsilon_psi[i]) return false;
  return true;
}

}  // namespace theta
