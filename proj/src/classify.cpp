#include "theta/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace theta {

Duality duality_of_summand(const Summand& s) {
  if (s.rho.duality == Duality::None)
    throw std::domain_error("undetermined parity");
  const bool plus = (s.a % 2) == (s.b % 2);
  return plus ? s.rho.duality : flip(s.rho.duality);
}

bool same_parity(const Summand& s, CaseTag c, Side side) {
  if (s.rho.duality == Duality::None) return false;
  if (s.half_shift_x2 != 0) return false;
  return duality_of_summand(s) == parity_of(c, side);
}

AParameter diagonal_restriction(const AParameter& psi) {
  AParameter out;
  out.case_tag = psi.case_tag;
  out.side = psi.side;
  out.target_dim = psi.target_dim;
  for (const auto& ws : psi.summands) {
    const int m = std::min(ws.s.a, ws.s.b);
    for (int k = 0; k < m; ++k) {
      Summand t = ws.s;
      t.a = ws.s.a + ws.s.b - 1 - 2 * k;
      t.b = 1;
      out.summands.push_back({t, ws.mult});
    }
  }
  out.canonicalize();
  return out;
}

AParameter l_parameter_of(const AParameter& psi) {
  AParameter out;
  out.case_tag = psi.case_tag;
  out.side = psi.side;
  out.target_dim = psi.target_dim;
  for (const auto& ws : psi.summands) {
    for (int j = 1; j <= ws.s.b; ++j) {
      Summand t = ws.s;
      t.b = 1;
      t.half_shift_x2 = ws.s.half_shift_x2 + (ws.s.b + 1 - 2 * j);
      out.summands.push_back({t, ws.mult});
    }
  }
  out.canonicalize();
  return out;
}

Classification classify(const AParameter& psi) {
  Classification c;
  c.good_parity =
      std::all_of(psi.summands.begin(), psi.summands.end(),
                  [&](const WeightedSummand& ws) {
                    return same_parity(ws.s, psi.case_tag, psi.side);
                  });
  if (!c.good_parity) return c;

  const AParameter diag = diagonal_restriction(psi);
  c.ddr = std::all_of(diag.summands.begin(), diag.summands.end(),
                      [&](const WeightedSummand& ws) {
                        return ws.mult == 1 &&
                               same_parity(ws.s, psi.case_tag, psi.side);
                      });
  if (!c.ddr) return c;

  c.elementary = std::all_of(
      psi.summands.begin(), psi.summands.end(),
      [](const WeightedSummand& ws) { return std::min(ws.s.a, ws.s.b) == 1; });
  return c;
}

bool is_discrete(const AParameter& phi) {
  return std::all_of(phi.summands.begin(), phi.summands.end(),
                     [&](const WeightedSummand& ws) {
                       return ws.mult == 1 && ws.s.b == 1 &&
                              same_parity(ws.s, phi.case_tag, phi.side);
                     });
}

}  // namespace theta
