#include "theta/factor_ledger.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "theta/theta_transfer.hpp"

namespace theta {

namespace {

std::string base_of(const IrrSymbol& rho) {
  std::string b = rho.id;
  if (!rho.twist.trivial()) b += "." + rho.twist.str();
  return b;
}

std::string shift_term(int x2) {
  if (x2 == 0) return "";
  std::string s = x2 > 0 ? "+" : "-";
  return s + half_str(std::abs(x2));
}

}  // namespace

std::string Atom::str() const {
  if (kind == Kind::Norm) return "|" + base + "|^{ks}";
  std::string name = base;
  if (conj) name += "^c";
  if (dual) name += "^dual";
  std::string arg = (neg_s ? "-s" : "s") + shift_term(shift_x2);
  return std::string(kind == Kind::L ? "L" : "gamma") + "(" + arg + ", " +
         name + ")";
}

void FactorLedger::multiply(const Atom& a, int exponent) {
  if (exponent == 0) return;
  auto it = terms.find(a);
  if (it == terms.end()) {
    terms.emplace(a, exponent);
    return;
  }
  it->second += exponent;
  if (it->second == 0) terms.erase(it);
}

int FactorLedger::total_exponent() const {
  int t = 0;
  for (const auto& [a, e] : terms) t += e;
  return t;
}

void SignWord::multiply(const std::string& symbol, int exponent) {
  if (exponent == 0) return;
  auto it = exp.find(symbol);
  if (it == exp.end()) {
    exp.emplace(symbol, exponent);
    return;
  }
  it->second += exponent;
  if (it->second == 0) exp.erase(it);
}

void SignWord::multiply(const SignWord& o) {
  sign *= o.sign;
  for (const auto& [s, e] : o.exp) multiply(s, e);
}

SignWord SignWord::substituted(const std::string& symbol,
                               const SignWord& replacement) const {
  SignWord out;
  out.sign = sign;
  for (const auto& [s, e] : exp) {
    if (s != symbol) {
      out.multiply(s, e);
      continue;
    }
    if (e % 2 != 0) out.sign *= replacement.sign;
    for (const auto& [rs, re] : replacement.exp) out.multiply(rs, re * e);
  }
  return out;
}

int SignWord::evaluate(const std::map<std::string, int>& oracle) const {
  int v = sign;
  for (const auto& [s, e] : exp) {
    if (e % 2 == 0) continue;
    auto it = oracle.find(s);
    if (it == oracle.end())
      throw std::domain_error("missing oracle value for symbol '" + s + "'");
    v *= it->second;
  }
  return v;
}

std::string SignWord::str() const {
  std::string out = sign < 0 ? "-" : "";
  for (const auto& [s, e] : exp) {
    if (!out.empty() && out != "-") out += ".";
    out += s;
    if (e != 1) out += "^" + std::to_string(e);
  }
  if (out.empty() || out == "-") out += "1";
  return out;
}

bool operator==(const SignWord& a, const SignWord& b) {
  return a.sign == b.sign && a.exp == b.exp;
}

FactorLedger l_factor_expansion(const AParameter& psi_tau) {
  FactorLedger out;
  for (const auto& ws : psi_tau.summands)
    for (int j = 1; j <= ws.s.b; ++j) {
      Atom a;
      a.kind = Atom::Kind::L;
      a.base = base_of(ws.s.rho);
      a.shift_x2 = ws.s.half_shift_x2 + ws.s.a + ws.s.b - 2 * j;
      out.multiply(a, ws.mult);
    }
  return out;
}

int stripe_bound(const AParameter& psi_tau) {
  if (psi_tau.summands.empty()) throw std::domain_error("empty parameter");
  int max_shift_x2 = 0;
  for (const auto& [atom, e] : l_factor_expansion(psi_tau).terms)
    max_shift_x2 = std::max(max_shift_x2, std::abs(atom.shift_x2));
  const int n_x2 = max_shift_x2 + 1;
  if (n_x2 >= 2 * psi_tau.total_dim())
    throw std::domain_error("stripe bound exceeds dimension");
  return n_x2;
}

namespace {

constexpr const char* kPhiTau = "phi_tau";
constexpr const char* kNormBase = "kappa_W.kappa_V^-1";

FactorLedger expected_beta_ledger(int n, int r, int k) {
  const int s0_x2 = 2 * (r - n);
  FactorLedger led;
  Atom l_pos{Atom::Kind::L, kPhiTau, false, false, false, -s0_x2};
  Atom l_neg{Atom::Kind::L, kPhiTau, true, true, true, -s0_x2};
  Atom g_neg{Atom::Kind::Gamma, kPhiTau, true, true, true, -s0_x2};
  Atom norm{Atom::Kind::Norm, kNormBase, false, false, false, 0};
  led.multiply(l_pos, -1);
  led.multiply(l_neg, +1);
  led.multiply(g_neg, +1);
  led.multiply(norm, k);
  for (int j = n - r; j <= r - n; ++j) {
    Atom g{Atom::Kind::Gamma, kPhiTau, false, false, false, 2 * j};
    led.multiply(g, -1);
  }
  return led;
}

}  // namespace

BetaResult beta(const AParameter& psi_tau, const AParameter& phi_0,
                const AParameter& theta_phi_0, int n, int r) {
  if (r <= n) throw std::domain_error("r must exceed n");

  // theta_phi_0 must be phi_0 chi_W^{-1} chi_V plus the chi_V |.|^j stripe.
  AParameter expected;
  expected.case_tag = phi_0.case_tag;
  for (const auto& ws : phi_0.summands)
    expected.summands.push_back(
        {theta_twist_summand(ws.s, phi_0.case_tag), ws.mult});
  for (int j = n - r; j <= r - n; ++j) {
    Summand s;
    s.rho.id = "1";
    s.rho.dim = 1;
    s.rho.duality = parity_of(phi_0.case_tag, Side::H);
    s.rho.twist = TwistWord{1, 0};
    s.half_shift_x2 = 2 * j;
    expected.summands.push_back({s, 1});
  }
  expected.canonicalize();
  AParameter given = theta_phi_0;
  given.canonicalize();
  bool match = phi_0.case_tag == theta_phi_0.case_tag &&
               expected.summands.size() == given.summands.size();
  for (size_t i = 0; match && i < given.summands.size(); ++i)
    match = expected.summands[i].s == given.summands[i].s &&
            expected.summands[i].mult == given.summands[i].mult;
  if (!match) throw std::domain_error("inconsistent pair");

  BetaResult res;
  res.n = n;
  res.r = r;
  res.k = psi_tau.total_dim();
  res.ledger = expected_beta_ledger(n, r, res.k);
  return res;
}

SignWord evaluate_beta_at_zero(const BetaResult& b) {
  // The only rewrites: joint cancellation of the four boundary atoms at -s0,
  // then gamma(j)^{-1} gamma(1-j)^{-1} -> omega_tau(-1) pairwise. Both need
  // the ledger in exactly the assembled shape.
  if (!(b.ledger.terms == expected_beta_ledger(b.n, b.r, b.k).terms))
    throw std::domain_error("ledger not in expected form");
  SignWord out;
  out.multiply("omega_tau(-1)", (b.r - b.n) % 2);
  return out;
}

SignWord alpha_symbol(CaseTag c, int k) {
  SignWord w;
  if (c == CaseTag::O) {
    w.multiply("gamma_V", k);
    w.multiply("chi_V(-1)", k);
    w.multiply("omega_tau((-1)^{r-n+1}.c^-1)", 1);
    w.multiply("lambda(w_P)", -1);
  } else {
    w.multiply("gamma_W", -k);
    w.multiply("gamma_V", k);
    w.multiply("chi_W((-1)^{n'-1}.kappa_V^-1)", k);
    w.multiply("chi_V((-1)^{r'-1}.kappa_W^-1)", k);
    w.multiply("(chi_W^{-dim V}.chi_V^{dim W})(delta)", k);
    w.multiply("omega_tau((-1)^{n'+r'-1}.kappa_W^c.kappa_V^-1)", 1);
    w.multiply("lambda(w_Q)", 1);
    w.multiply("lambda(w_P)", -1);
  }
  return w;
}

}  // namespace theta
