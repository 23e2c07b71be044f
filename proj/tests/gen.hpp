#pragma once

#include <random>
#include <string>

#include "theta/classify.hpp"
#include "theta/packet.hpp"

namespace gen {

using namespace theta;

using Rng = std::mt19937;

inline int pick(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool coin(Rng& rng) { return pick(rng, 0, 1) == 1; }

inline IrrSymbol rho(const std::string& id, int dim, Duality d,
                     TwistWord t = {}, bool triv = false) {
  IrrSymbol r;
  r.id = id;
  r.dim = dim;
  r.duality = d;
  r.twist = t;
  r.contains_trivial = triv;
  return r;
}

inline Summand summand(const IrrSymbol& r, int a, int b, int shift_x2 = 0) {
  Summand s;
  s.rho = r;
  s.a = a;
  s.b = b;
  s.half_shift_x2 = shift_x2;
  return s;
}

inline Duality any_duality(Rng& rng) {
  switch (pick(rng, 0, 4)) {
    case 0: return Duality::Orthogonal;
    case 1: return Duality::Symplectic;
    case 2: return Duality::ConjOrthogonal;
    case 3: return Duality::ConjSymplectic;
    default: return Duality::None;
  }
}

inline CaseTag any_case(Rng& rng) {
  switch (pick(rng, 0, 2)) {
    case 0: return CaseTag::O;
    case 1: return CaseTag::U0;
    default: return CaseTag::U1;
  }
}

// Arbitrary parameter: mixed parities and twists, <= max_summands summands,
// total dimension <= ~12. target_dim is made consistent.
inline AParameter random_parameter(Rng& rng, int max_summands = 6) {
  AParameter p;
  p.case_tag = any_case(rng);
  p.side = coin(rng) ? Side::G : Side::H;
  const int count = pick(rng, 0, max_summands);
  for (int i = 0; i < count; ++i) {
    const int dim = pick(rng, 1, 2);
    const int a = pick(rng, 1, 3);
    const int b = pick(rng, 1, 3);
    TwistWord t;
    if (pick(rng, 0, 3) == 0) t = {pick(rng, -1, 1), pick(rng, -1, 1)};
    auto r = rho("r" + std::to_string(pick(rng, 0, 3)) + "d" +
                     std::to_string(dim),
                 dim, any_duality(rng), t);
    p.summands.push_back({summand(r, a, b), pick(rng, 1, 2)});
  }
  p.canonicalize();
  p.target_dim = p.total_dim();
  return p;
}

// The rho duality that makes (a, b) land in the parameter's parity.
inline Duality matching_duality(CaseTag c, Side side, int a, int b) {
  const Duality target = parity_of(c, side);
  return (a % 2) == (b % 2) ? target : flip(target);
}

// Good-parity parameter: every summand self-dual of the parameter's parity.
inline AParameter random_good_parity(Rng& rng, int max_summands = 4) {
  AParameter p;
  p.case_tag = any_case(rng);
  p.side = coin(rng) ? Side::G : Side::H;
  const int count = pick(rng, 1, max_summands);
  for (int i = 0; i < count; ++i) {
    const int dim = pick(rng, 1, 2);
    const int a = pick(rng, 1, 3);
    const int b = pick(rng, 1, 3);
    const Duality d = matching_duality(p.case_tag, p.side, a, b);
    auto r = rho("r" + std::to_string(pick(rng, 0, 2)) + "d" +
                     std::to_string(dim) + to_string(d),
                 dim, d);
    p.summands.push_back({summand(r, a, b), pick(rng, 1, 2)});
  }
  p.canonicalize();
  p.target_dim = p.total_dim();
  return p;
}

// Elementary up to multiplicity: min(a,b) = 1, distinct summands have
// multiplicity-free diagonal restriction (distinct a+b per rho class).
inline AParameter random_elementary(Rng& rng) {
  AParameter p;
  p.case_tag = any_case(rng);
  p.side = coin(rng) ? Side::G : Side::H;
  const int classes = pick(rng, 1, 2);
  for (int c = 0; c < classes; ++c) {
    const int dim = pick(rng, 1, 2);
    int v = pick(rng, 1, 2);
    const int picks = pick(rng, 1, 2);
    for (int i = 0; i < picks; ++i) {
      const bool weil = coin(rng);  // S_v on the Weil-Deligne or Arthur side
      const int a = weil ? v : 1;
      const int b = weil ? 1 : v;
      const Duality d = matching_duality(p.case_tag, p.side, a, b);
      auto r = rho("e" + std::to_string(c) + "d" + std::to_string(dim) +
                       to_string(d),
                   dim, d);
      p.summands.push_back({summand(r, a, b), pick(rng, 1, 2)});
      v += pick(rng, 1, 2);  // distinct a+b within the class
    }
  }
  p.canonicalize();
  p.target_dim = p.total_dim();
  return p;
}

// Discrete parameter with chain-friendly shapes: per rho class a set of
// distinct a values, sometimes full chains.
inline AParameter random_discrete(Rng& rng, int max_basis = 6) {
  AParameter p;
  p.case_tag = any_case(rng);
  p.side = coin(rng) ? Side::G : Side::H;
  int budget = std::max(1, pick(rng, 1, max_basis));
  int cls = 0;
  while (budget > 0) {
    const int dim = pick(rng, 1, 2);
    const bool chain = coin(rng);
    const int len = pick(rng, 1, std::min(3, budget));
    const int start = chain ? pick(rng, 1, 2) : pick(rng, 1, 4);
    for (int i = 0; i < len; ++i) {
      const int a = chain ? start + 2 * i : start + pick(rng, 0, 1) + 2 * i;
      const Duality d = matching_duality(p.case_tag, p.side, a, 1);
      auto r = rho("s" + std::to_string(cls) + "d" + std::to_string(dim) +
                       to_string(d),
                   dim, d);
      p.summands.push_back({summand(r, a, 1), 1});
    }
    budget -= len;
    ++cls;
  }
  p.canonicalize();
  for (auto& ws : p.summands) ws.mult = 1;  // merged duplicates collapse
  p.target_dim = p.total_dim();
  return p;
}

// GL-type Arthur parameter for the factor ledger, total dimension <= 12.
inline AParameter random_gl(Rng& rng) {
  AParameter p;
  p.case_tag = CaseTag::O;
  p.side = Side::G;
  int dim_left = 12;
  const int count = pick(rng, 1, 3);
  for (int i = 0; i < count && dim_left > 0; ++i) {
    const int rdim = pick(rng, 1, 2);
    const int a = pick(rng, 1, 3);
    const int b = pick(rng, 1, 3);
    if (rdim * a * b > dim_left) continue;
    dim_left -= rdim * a * b;
    auto r = rho("t" + std::to_string(i), rdim, any_duality(rng), {},
                 rdim == 1 && pick(rng, 0, 2) == 0);
    p.summands.push_back({summand(r, a, b), 1});
  }
  if (p.summands.empty())
    p.summands.push_back({summand(rho("t0", 1, Duality::None), 1, 1), 1});
  p.canonicalize();
  p.target_dim = p.total_dim();
  return p;
}

// Labeled packet over a random good-parity parameter: a random subset of the
// character group, one member each, with det oracles attached to every
// basis summand.
inline LabeledPacket random_packet(Rng& rng, bool quotient = false) {
  LabeledPacket p;
  p.parameter = random_good_parity(rng, 3);
  for (auto& ws : p.parameter.summands)
    for (const auto& elt : {"-1", "c", "cp"})
      ws.s.rho.det_at[elt] = coin(rng) ? +1 : -1;
  p.quotient = quotient;
  const auto chars = enumerate_characters(component_group(p.parameter, quotient));
  int id = 0;
  for (const auto& c : chars) {
    if (!coin(rng) && id > 0) continue;
    PacketMember m;
    m.id = "p" + std::to_string(id++);
    m.character = c;
    p.members.push_back(std::move(m));
  }
  return p;
}

}  // namespace gen
