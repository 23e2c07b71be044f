#include "theta/packet.hpp"

#include <set>

namespace theta {

std::optional<std::string> LabeledPacket::duplicate_id() const {
  std::set<std::string> seen;
  for (const auto& m : members)
    if (!seen.insert(m.id).second) return m.id;
  return std::nullopt;
}

}  // namespace theta
