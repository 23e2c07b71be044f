#pragma once

#include <optional>
#include <string>
#include <vector>

#include "theta/component_group.hpp"
#include "theta/parameter.hpp"

namespace theta {

/// One abstract packet member: an opaque id with its component-group label.
/// `inner_form` records which pure inner form carries it when the caller
/// supplies that data. `eigenvalue` is filled by induct_packet with the
/// predicted intertwining eigenvalue of the member.
struct PacketMember {
  std::string id;
  Character character;
  std::optional<int> inner_form;
  std::optional<int> eigenvalue;
};

/// A parameter together with a labeled abstract set of members. The group the
/// characters live on is recomputed from the parameter and the quotient flag;
/// members never model actual representations.
struct LabeledPacket {
  AParameter parameter;
  bool quotient = false;
  std::vector<PacketMember> members;

  ComponentGroup group() const { return component_group(parameter, quotient); }

  /// Checks member-id distinctness; returns the first duplicated id if any.
  std::optional<std::string> duplicate_id() const;
};

}  // namespace theta
