#include "theta/theta_transfer.hpp"

#include <set>
#include <stdexcept>

#include "theta/classify.hpp"

namespace theta {

Summand theta_twist_summand(const Summand& s, CaseTag c) {
  Summand t = s.twisted(TwistWord{1, -1});
  if (c != CaseTag::O) t.rho.duality = flip(t.rho.duality);
  return t;
}

namespace {

Summand extra_summand(CaseTag c, int b) {
  Summand s;
  s.rho.id = "1";
  s.rho.dim = 1;
  s.rho.duality = parity_of(c, Side::H);
  s.rho.twist = TwistWord{1, 0};
  s.a = 1;
  s.b = b;
  return s;
}

}  // namespace

AParameter theta_parameter(const AParameter& psi, int r) {
  if (psi.side != Side::G)
    throw std::domain_error("theta lift is defined on the G side");
  if (r <= psi.target_dim) throw std::domain_error("outside stable range");
  const int n = tower_index(psi.case_tag, psi.target_dim);
  AParameter out;
  out.case_tag = psi.case_tag;
  out.side = Side::H;
  out.target_dim = psi.target_dim + 2 * r - 2 * n + 1;
  for (const auto& ws : psi.summands)
    out.summands.push_back({theta_twist_summand(ws.s, psi.case_tag), ws.mult});
  out.summands.push_back({extra_summand(psi.case_tag, 2 * r - 2 * n + 1), 1});
  out.canonicalize();
  return out;
}

std::vector<int> embed_component_groups(const AParameter& psi,
                                        const AParameter& theta_psi) {
  const int n = tower_index(psi.case_tag, psi.target_dim);
  bool matched = false;
  for (const auto& ws : theta_psi.summands) {
    const auto& s = ws.s;
    if (s.rho.id != "1" || !(s.rho.twist == TwistWord{1, 0}) || s.a != 1 ||
        s.b % 2 == 0)
      continue;
    const int r = (s.b - 1) / 2 + n;
    if (r <= psi.target_dim) continue;
    if (theta_parameter(psi, r) == theta_psi) {
      matched = true;
      break;
    }
  }
  if (!matched) throw std::domain_error("not a theta pair");

  const ComponentGroup g = component_group(psi, false);
  const ComponentGroup h = component_group(theta_psi, false);
  std::vector<int> map;
  map.reserve(g.rank());
  for (const auto& s : g.basis) {
    const int j = h.index_of(theta_twist_summand(s, psi.case_tag));
    if (j < 0) throw std::domain_error("not a theta pair");
    map.push_back(j);
  }
  return map;
}

LabeledPacket pull_back_packet(const LabeledPacket& h_packet,
                               const AParameter& psi, int r) {
  if (!(h_packet.parameter == theta_parameter(psi, r)))
    throw std::domain_error("packet parameter is not the theta lift");
  const auto map = embed_component_groups(psi, h_packet.parameter);
  LabeledPacket out;
  out.parameter = psi;
  out.quotient = false;
  for (const auto& m : h_packet.members) {
    PacketMember pm;
    pm.id = m.id;
    pm.inner_form = m.inner_form;
    pm.character.signs.reserve(map.size());
    for (int j : map) pm.character.signs.push_back(m.character.signs.at(j));
    out.members.push_back(std::move(pm));
  }
  return out;
}

bool packet_cardinality_check(const LabeledPacket& h_packet,
                              const LabeledPacket& pulled) {
  if (h_packet.members.size() != pulled.members.size()) return false;
  return !h_packet.duplicate_id() && !pulled.duplicate_id();
}

}  // namespace theta
