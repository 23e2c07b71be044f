#include "theta/parameter.hpp"

#include <algorithm>
#include <sstream>

namespace theta {

Duality flip(Duality d) {
  switch (d) {
    case Duality::Orthogonal: return Duality::Symplectic;
    case Duality::Symplectic: return Duality::Orthogonal;
    case Duality::ConjOrthogonal: return Duality::ConjSymplectic;
    case Duality::ConjSymplectic: return Duality::ConjOrthogonal;
    case Duality::None: return Duality::None;
  }
  return Duality::None;
}

bool is_conjugate_type(Duality d) {
  return d == Duality::ConjOrthogonal || d == Duality::ConjSymplectic;
}

std::string to_string(Duality d) {
  switch (d) {
    case Duality::Orthogonal: return "orth";
    case Duality::Symplectic: return "symp";
    case Duality::ConjOrthogonal: return "corth";
    case Duality::ConjSymplectic: return "csymp";
    case Duality::None: return "none";
  }
  return "none";
}

std::optional<Duality> duality_from_string(const std::string& s) {
  if (s == "orth") return Duality::Orthogonal;
  if (s == "symp") return Duality::Symplectic;
  if (s == "corth") return Duality::ConjOrthogonal;
  if (s == "csymp") return Duality::ConjSymplectic;
  if (s == "none") return Duality::None;
  return std::nullopt;
}

std::string TwistWord::str() const {
  std::string out;
  auto piece = [&out](const char* name, int e) {
    if (e == 0) return;
    if (!out.empty()) out += '.';
    out += name;
    if (e != 1) out += "^" + std::to_string(e);
  };
  piece("xV", v);
  piece("xW", w);
  return out;
}

std::string half_str(int x2) {
  if (x2 % 2 == 0) return std::to_string(x2 / 2);
  return std::to_string(x2) + "/2";
}

std::string to_string(CaseTag c) {
  switch (c) {
    case CaseTag::O: return "O";
    case CaseTag::U0: return "U0";
    case CaseTag::U1: return "U1";
  }
  return "O";
}

std::string to_string(Side s) { return s == Side::G ? "G" : "H"; }

Duality parity_of(CaseTag c, Side s) {
  switch (c) {
    case CaseTag::O:
      return Duality::Orthogonal;
    case CaseTag::U0:
      // dim V = 2n (sign -1), dim W = 2r+1 (sign +1)
      return s == Side::G ? Duality::ConjSymplectic : Duality::ConjOrthogonal;
    case CaseTag::U1:
      // dim V = 2n-1 (sign +1), dim W = 2r (sign -1)
      return s == Side::G ? Duality::ConjOrthogonal : Duality::ConjSymplectic;
  }
  return Duality::Orthogonal;
}

int tower_index(CaseTag c, int dim) {
  if (c == CaseTag::U1) return (dim + 1) / 2;
  return dim / 2;
}

int AParameter::total_dim() const {
  int d = 0;
  for (const auto& ws : summands) d += ws.mult * ws.s.dim();
  return d;
}

void AParameter::canonicalize() {
  std::sort(summands.begin(), summands.end(),
            [](const WeightedSummand& x, const WeightedSummand& y) {
              return x.s < y.s;
            });
  std::vector<WeightedSummand> merged;
  for (const auto& ws : summands) {
    if (ws.mult == 0) continue;
    if (!merged.empty() && merged.back().s == ws.s)
      merged.back().mult += ws.mult;
    else
      merged.push_back(ws);
  }
  summands = std::move(merged);
}

std::vector<std::string> AParameter::violations() const {
  std::vector<std::string> out;
  for (const auto& ws : summands) {
    if (ws.s.rho.dim < 1 || ws.s.a < 1 || ws.s.b < 1 || ws.mult < 1)
      out.push_back("summand fields must be positive");
  }
  if (total_dim() != target_dim) {
    std::ostringstream os;
    os << "dimension mismatch: summands total " << total_dim()
       << " but target_dim is " << target_dim;
    out.push_back(os.str());
  }
  const bool even = target_dim % 2 == 0;
  switch (case_tag) {
    case CaseTag::O:
    case CaseTag::U0:
      if (side == Side::G && !even)
        out.push_back("target_dim must be even");
      if (side == Side::H && even)
        out.push_back("target_dim must be odd");
      break;
    case CaseTag::U1:
      if (side == Side::G && even)
        out.push_back("target_dim must be odd");
      if (side == Side::H && !even)
        out.push_back("target_dim must be even");
      break;
  }
  return out;
}

bool operator==(const AParameter& a, const AParameter& b) {
  AParameter x = a, y = b;
  x.canonicalize();
  y.canonicalize();
  if (x.case_tag != y.case_tag || x.side != y.side ||
      x.target_dim != y.target_dim || x.summands.size() != y.summands.size())
    return false;
  for (size_t i = 0; i < x.summands.size(); ++i)
    if (!(x.summands[i].s == y.summands[i].s) ||
        x.summands[i].mult != y.summands[i].mult)
      return false;
  return true;
}

std::vector<Summand> expand_occurrences(const AParameter& p) {
  std::vector<Summand> out;
  for (const auto& ws : p.summands)
    for (int k = 0; k < ws.mult; ++k) out.push_back(ws.s);
  return out;
}

}  // namespace theta
