#include "theta/label_calculus.hpp"

#include <stdexcept>

#include "theta/classify.hpp"

namespace theta {

namespace {

// det of rho (x) S_a (x) S_b at a named element: the SL2 factors have
// trivial determinant, so this is det(rho)^{ab}.
int det_of_summand(const Summand& s, const std::string& c) {
  if ((s.a * s.b) % 2 == 0) return +1;
  return s.rho.det_value(c);
}

}  // namespace

LabeledPacket whittaker_twist(const LabeledPacket& packet,
                              const std::string& c) {
  const ComponentGroup g = packet.group();
  std::vector<int> eta_c(g.rank());
  for (size_t i = 0; i < g.rank(); ++i) eta_c[i] = det_of_summand(g.basis[i], c);
  LabeledPacket out = packet;
  for (auto& m : out.members) {
    for (size_t i = 0; i < g.rank() && i < m.character.signs.size(); ++i)
      m.character.signs[i] *= eta_c[i];
    m.eigenvalue.reset();
  }
  return out;
}

LabeledPacket contragredient_twist(const LabeledPacket& packet) {
  const ComponentGroup g = packet.group();
  LabeledPacket out;
  out.quotient = packet.quotient;
  out.parameter.case_tag = packet.parameter.case_tag;
  out.parameter.side = packet.parameter.side;
  out.parameter.target_dim = packet.parameter.target_dim;
  for (const auto& ws : packet.parameter.summands)
    out.parameter.summands.push_back({ws.s.dual(), ws.mult});
  out.parameter.canonicalize();

  // Basis-to-basis identification a_i <-> a_i^dual; canonical order may
  // permute, so signs are routed through the dual group's indices.
  const ComponentGroup gd = out.group();
  std::vector<int> route(g.rank());
  for (size_t i = 0; i < g.rank(); ++i) {
    route[i] = gd.index_of(g.basis[i].dual());
    if (route[i] < 0) throw std::domain_error("dual basis mismatch");
  }
  for (const auto& m : packet.members) {
    PacketMember pm;
    pm.id = m.id;
    pm.inner_form = m.inner_form;
    pm.character.signs.assign(gd.rank(), +1);
    for (size_t i = 0; i < g.rank(); ++i) {
      const int nu = det_of_summand(g.basis[i], "-1");
      pm.character.signs[route[i]] = m.character.signs.at(i) * nu;
    }
    out.members.push_back(std::move(pm));
  }
  return out;
}

LabeledPacket induct_packet(const LabeledPacket& packet0,
                            const Summand& psi_tau, int epsilon) {
  const AParameter& psi0 = packet0.parameter;
  const bool in_parity = same_parity(psi_tau, psi0.case_tag, psi0.side);
  const bool self_dual = psi_tau.dual() == psi_tau;
  if (in_parity && !self_dual)
    throw std::domain_error("psi_tau not of the same parity");

  LabeledPacket out;
  out.quotient = packet0.quotient;
  out.parameter = psi0;
  if (self_dual) {
    out.parameter.summands.push_back({psi_tau, 2});
  } else {
    out.parameter.summands.push_back({psi_tau, 1});
    out.parameter.summands.push_back({psi_tau.dual(), 1});
  }
  out.parameter.canonicalize();
  out.parameter.target_dim = psi0.target_dim + 2 * psi_tau.dim();

  const ComponentGroup g0 = packet0.group();
  const ComponentGroup g = out.group();
  const bool new_vector = in_parity && g0.index_of(psi_tau) < 0;
  if (!new_vector) {
    // The basis is unchanged (wrong parity, or psi_tau already present with
    // multiplicity raised by two): labels carry over verbatim, modulo the
    // possibly permuted canonical order.
    std::vector<int> route(g0.rank());
    for (size_t i = 0; i < g0.rank(); ++i) {
      route[i] = g.index_of(g0.basis[i]);
      if (route[i] < 0) throw std::domain_error("basis mismatch");
    }
    for (const auto& m : packet0.members) {
      PacketMember pm;
      pm.id = m.id;
      pm.inner_form = m.inner_form;
      pm.character.signs.assign(g.rank(), +1);
      for (size_t i = 0; i < g0.rank(); ++i)
        pm.character.signs[route[i]] = m.character.signs.at(i);
      out.members.push_back(std::move(pm));
    }
    return out;
  }

  const int a_tau = g.index_of(psi_tau);
  std::vector<int> route(g0.rank());
  for (size_t i = 0; i < g0.rank(); ++i) {
    route[i] = g.index_of(g0.basis[i]);
    if (route[i] < 0) throw std::domain_error("basis mismatch");
  }
  const int k = psi_tau.dim();
  const int eps_k = (epsilon == -1 && k % 2 != 0) ? -1 : +1;
  for (const auto& m : packet0.members)
    for (int sgn : {+1, -1}) {
      PacketMember pm;
      pm.id = m.id + (sgn > 0 ? "+" : "-");
      pm.inner_form = m.inner_form;
      pm.character.signs.assign(g.rank(), +1);
      for (size_t i = 0; i < g0.rank(); ++i)
        pm.character.signs[route[i]] = m.character.signs.at(i);
      pm.character.signs[a_tau] = sgn;
      pm.eigenvalue = eps_k * sgn;
      out.members.push_back(std::move(pm));
    }
  return out;
}

LabeledPacket restrict_packet(const LabeledPacket& packet,
                              const AParameter& psi_0) {
  const ComponentGroup g = packet.group();
  const ComponentGroup g0 = component_group(psi_0, packet.quotient);
  std::vector<int> route(g0.rank());
  for (size_t i = 0; i < g0.rank(); ++i) {
    route[i] = g.index_of(g0.basis[i]);
    if (route[i] < 0) throw std::domain_error("not a subparameter");
  }
  LabeledPacket out;
  out.parameter = psi_0;
  out.quotient = packet.quotient;
  for (const auto& m : packet.members) {
    PacketMember pm;
    pm.id = m.id;
    pm.inner_form = m.inner_form;
    for (int j : route) pm.character.signs.push_back(m.character.signs.at(j));
    out.members.push_back(std::move(pm));
  }
  return out;
}

}  // namespace theta
