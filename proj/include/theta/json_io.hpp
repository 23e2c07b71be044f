#pragma once

#include <json.hpp>

#include "theta/factor_ledger.hpp"
#include "theta/global.hpp"
#include "theta/moeglin.hpp"
#include "theta/packet.hpp"

namespace theta {

using nlohmann::json;

// Readers throw std::invalid_argument on malformed input (the CLI maps this
// to its parse-error exit code); writers are total on well-formed values.
// Serialization is canonical: summands sorted, object keys sorted by the
// underlying ordered maps.

json to_json(const TwistWord& t);
std::optional<TwistWord> parse_twist(const std::string& s);

json to_json(const IrrSymbol& r);
IrrSymbol irr_symbol_from_json(const json& j);

json to_json(const AParameter& p);
AParameter parameter_from_json(const json& j);

json to_json(const LabeledPacket& p);
LabeledPacket packet_from_json(const json& j);

json to_json(const FactorLedger& l);
json to_json(const SignWord& w);

json to_json(const GeneralizedSegment& s);
json to_json(const std::vector<JacquetStep>& schedule);

json to_json(const GlobalParameter& gp);
GlobalParameter global_from_json(const json& j);

PlaceData place_data_from_json(const json& j);
GlobalMember global_member_from_json(const json& j);

std::map<std::string, int> sign_oracle_from_json(const json& j);

}  // namespace theta
