#pragma once

#include <map>
#include <string>
#include <tuple>

#include "theta/parameter.hpp"

namespace theta {

/// One formal local factor in the variable s. `base` names the parameter the
/// factor is attached to (a rho symbol or a whole parameter like "phi_tau");
/// `conj`/`dual` mark Galois conjugation and contragredient; `neg_s` marks
/// that the argument is -s + shift rather than s + shift. Norm atoms stand
/// for |kappa|^{ks} pieces, identically 1 at s = 0.
struct Atom {
  enum class Kind { L, Gamma, Norm };
  Kind kind = Kind::L;
  std::string base;
  bool conj = false;
  bool dual = false;
  bool neg_s = false;
  int shift_x2 = 0;

  auto key() const { return std::tie(kind, base, conj, dual, neg_s, shift_x2); }
  std::string str() const;
};

inline bool operator==(const Atom& a, const Atom& b) {
  return a.key() == b.key();
}
inline bool operator<(const Atom& a, const Atom& b) { return a.key() < b.key(); }

/// Signed multiset of atoms; exponent map with exact cancellation. The empty
/// ledger is the constant 1.
struct FactorLedger {
  std::map<Atom, int> terms;

  void multiply(const Atom& a, int exponent);
  bool empty() const { return terms.empty(); }
  int total_exponent() const;
};

/// Formal product of named sign symbols with integer exponents and an overall
/// sign. Symbols with composite arguments (e.g. "omega_tau((-1)^{r-n+1}.c^-1)")
/// stay opaque strings.
struct SignWord {
  std::map<std::string, int> exp;
  int sign = +1;

  void multiply(const std::string& symbol, int exponent);
  void multiply(const SignWord& o);
  bool is_one() const { return sign == +1 && exp.empty(); }

  /// Replaces every power of `symbol` by the same power of `replacement`.
  SignWord substituted(const std::string& symbol,
                       const SignWord& replacement) const;

  /// Evaluates against a {symbol -> +-1} table; throws std::domain_error on a
  /// missing symbol ("missing oracle value ...").
  int evaluate(const std::map<std::string, int>& oracle) const;

  std::string str() const;
};

bool operator==(const SignWord& a, const SignWord& b);

/// Expands an Arthur-type GL parameter into its standard L-factor multiset:
/// atoms L(s + (a-1)/2 + (b+1)/2 - j, rho) for j = 1..b per summand.
FactorLedger l_factor_expansion(const AParameter& psi_tau);

/// Doubled half-integer N such that every (potential) pole line of the
/// expansion lies in |Re s| < N: the largest |shift| plus 1/2. Under the pole
/// model (L(s,rho) has poles on Re s = 0 iff rho.contains_trivial, never
/// zeros) this strictly bounds the pole stripe, and N < dim always holds.
int stripe_bound(const AParameter& psi_tau);

struct BetaResult {
  FactorLedger ledger;
  SignWord sign;  // carried constants; trivial for the assembled product
  int n = 0;
  int r = 0;
  int k = 0;  // dim tau
};

/// Assembles the normalizing-factor product in the formal variable s:
///   L(s-s0, phi_tau)^{-1} * L(-s-s0, (phi_tau^c)^dual)
///   * gamma(-s-s0, (phi_tau^c)^dual) * |kappa_W kappa_V^{-1}|^{ks}
///   * prod_{j=n-r}^{r-n} gamma(s+j, phi_tau)^{-1},
/// with s0 = r-n; the last product is the reduced form of the two mixed
/// gamma-terms. Checks that theta_phi_0 = phi_0 chi_W^{-1} chi_V
/// + chi_V (+) |.|^j for j = n-r..r-n; throws std::domain_error otherwise
/// ("inconsistent pair") or when r <= n.
BetaResult beta(const AParameter& psi_tau, const AParameter& phi_0,
                const AParameter& theta_phi_0, int n, int r);

/// Sets s = 0 and simplifies: the four boundary atoms at -s0 cancel jointly,
/// and each remaining pair gamma(j)^{-1} gamma(1-j)^{-1} rewrites to
/// omega_tau(-1) by the functional equation. The result is exactly
/// omega_tau(-1)^{n-r}. Throws std::domain_error ("ledger not in expected
/// form") when the input is not a beta ledger.
SignWord evaluate_beta_at_zero(const BetaResult& b);

/// The constant alpha of the comparison of intertwining operators, as a
/// formal sign word per case (O vs either unitary case). All constants stay
/// symbolic; evaluation and reduction happen through SignWord.
SignWord alpha_symbol(CaseTag c, int k);

}  // namespace theta
