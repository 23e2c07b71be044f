#include "theta/json_io.hpp"

#include <stdexcept>

namespace theta {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("invalid input: " + what);
}

int get_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    bad(std::string("missing integer field '") + key + "'");
  return j[key].get<int>();
}

std::string get_str(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string())
    bad(std::string("missing string field '") + key + "'");
  return j[key].get<std::string>();
}

CaseTag case_from(const std::string& s) {
  if (s == "O") return CaseTag::O;
  if (s == "U0") return CaseTag::U0;
  if (s == "U1") return CaseTag::U1;
  bad("unknown case '" + s + "'");
}

Side side_from(const std::string& s) {
  if (s == "G") return Side::G;
  if (s == "H") return Side::H;
  bad("unknown side '" + s + "'");
}

int sign_from(const json& j) {
  if (!j.is_number_integer()) bad("sign must be +1 or -1");
  const int v = j.get<int>();
  if (v != 1 && v != -1) bad("sign must be +1 or -1");
  return v;
}

}  // namespace

json to_json(const TwistWord& t) { return t.str(); }

std::optional<TwistWord> parse_twist(const std::string& s) {
  TwistWord t;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t dot = s.find('.', pos);
    if (dot == std::string::npos) dot = s.size();
    std::string piece = s.substr(pos, dot - pos);
    int exp = 1;
    if (size_t caret = piece.find('^'); caret != std::string::npos) {
      try {
        size_t used = 0;
        exp = std::stoi(piece.substr(caret + 1), &used);
        if (used != piece.size() - caret - 1) return std::nullopt;
      } catch (const std::exception&) {
        return std::nullopt;
      }
      piece = piece.substr(0, caret);
    }
    if (piece == "xV")
      t.v += exp;
    else if (piece == "xW")
      t.w += exp;
    else
      return std::nullopt;
    pos = dot + 1;
  }
  return t;
}

json to_json(const IrrSymbol& r) {
  json j;
  j["id"] = r.id;
  j["dim"] = r.dim;
  j["duality"] = to_string(r.duality);
  j["twist"] = r.twist.str();
  j["contains_trivial"] = r.contains_trivial;
  j["det_at"] = r.det_at;
  return j;
}

IrrSymbol irr_symbol_from_json(const json& j) {
  if (!j.is_object()) bad("rho must be an object");
  IrrSymbol r;
  r.id = get_str(j, "id");
  r.dim = get_int(j, "dim");
  if (r.dim < 1) bad("dim must be positive");
  auto d = duality_from_string(get_str(j, "duality"));
  if (!d) bad("unknown duality");
  r.duality = *d;
  if (j.contains("twist")) {
    auto t = parse_twist(get_str(j, "twist"));
    if (!t) bad("malformed twist word");
    r.twist = *t;
  }
  if (j.contains("contains_trivial")) {
    if (!j["contains_trivial"].is_boolean()) bad("contains_trivial not a bool");
    r.contains_trivial = j["contains_trivial"].get<bool>();
  }
  if (j.contains("det_at")) {
    if (!j["det_at"].is_object()) bad("det_at must be an object");
    for (const auto& [key, val] : j["det_at"].items())
      r.det_at[key] = sign_from(val);
  }
  return r;
}

json to_json(const AParameter& p) {
  AParameter canon = p;
  canon.canonicalize();
  json j;
  j["case"] = to_string(canon.case_tag);
  j["side"] = to_string(canon.side);
  j["target_dim"] = canon.target_dim;
  j["summands"] = json::array();
  for (const auto& ws : canon.summands) {
    json s;
    s["rho"] = to_json(ws.s.rho);
    s["a"] = ws.s.a;
    s["b"] = ws.s.b;
    s["half_shift_x2"] = ws.s.half_shift_x2;
    s["mult"] = ws.mult;
    j["summands"].push_back(s);
  }
  return j;
}

AParameter parameter_from_json(const json& j) {
  if (!j.is_object()) bad("parameter must be an object");
  AParameter p;
  p.case_tag = case_from(get_str(j, "case"));
  p.side = side_from(get_str(j, "side"));
  p.target_dim = get_int(j, "target_dim");
  if (!j.contains("summands") || !j["summands"].is_array())
    bad("missing summands array");
  for (const auto& s : j["summands"]) {
    WeightedSummand ws;
    if (!s.is_object() || !s.contains("rho")) bad("summand must carry rho");
    ws.s.rho = irr_symbol_from_json(s["rho"]);
    ws.s.a = get_int(s, "a");
    ws.s.b = get_int(s, "b");
    if (s.contains("half_shift_x2")) ws.s.half_shift_x2 = get_int(s, "half_shift_x2");
    if (s.contains("mult")) ws.mult = get_int(s, "mult");
    if (ws.s.a < 1 || ws.s.b < 1 || ws.mult < 1)
      bad("summand fields must be positive");
    p.summands.push_back(ws);
  }
  p.canonicalize();
  return p;
}

json to_json(const LabeledPacket& p) {
  json j;
  j["parameter"] = to_json(p.parameter);
  j["quotient"] = p.quotient;
  j["members"] = json::array();
  for (const auto& m : p.members) {
    json mj;
    mj["id"] = m.id;
    mj["character"] = m.character.signs;
    if (m.inner_form) mj["inner_form"] = *m.inner_form;
    if (m.eigenvalue) mj["eigenvalue"] = *m.eigenvalue;
    j["members"].push_back(mj);
  }
  return j;
}

LabeledPacket packet_from_json(const json& j) {
  if (!j.is_object() || !j.contains("parameter")) bad("packet needs parameter");
  LabeledPacket p;
  p.parameter = parameter_from_json(j["parameter"]);
  if (j.contains("quotient")) {
    if (!j["quotient"].is_boolean()) bad("quotient not a bool");
    p.quotient = j["quotient"].get<bool>();
  }
  if (!j.contains("members") || !j["members"].is_array())
    bad("packet needs members array");
  for (const auto& mj : j["members"]) {
    PacketMember m;
    m.id = get_str(mj, "id");
    if (!mj.contains("character") || !mj["character"].is_array())
      bad("member needs character array");
    for (const auto& v : mj["character"]) m.character.signs.push_back(sign_from(v));
    if (mj.contains("inner_form")) m.inner_form = sign_from(mj["inner_form"]);
    if (mj.contains("eigenvalue")) m.eigenvalue = sign_from(mj["eigenvalue"]);
    p.members.push_back(std::move(m));
  }
  return p;
}

json to_json(const FactorLedger& l) {
  json arr = json::array();
  for (const auto& [a, e] : l.terms) {
    json aj;
    aj["kind"] = a.kind == Atom::Kind::L      ? "L"
                 : a.kind == Atom::Kind::Gamma ? "gamma"
                                               : "norm";
    aj["base"] = a.base;
    aj["conj"] = a.conj;
    aj["dual"] = a.dual;
    aj["neg_s"] = a.neg_s;
    aj["shift_x2"] = a.shift_x2;
    aj["exp"] = e;
    arr.push_back(aj);
  }
  return arr;
}

json to_json(const SignWord& w) {
  json j;
  j["sign"] = w.sign;
  j["symbols"] = json::array();
  for (const auto& [s, e] : w.exp) j["symbols"].push_back(json::array({s, e}));
  j["display"] = w.str();
  return j;
}

json to_json(const GeneralizedSegment& s) {
  json j;
  j["rho"] = to_json(s.rho);
  j["rows"] = s.rows;
  j["cols"] = s.cols;
  j["entries_x2"] = s.entries_x2;
  j["application_order_x2"] = s.application_order_x2;
  return j;
}

json to_json(const std::vector<JacquetStep>& schedule) {
  json arr = json::array();
  for (const auto& step : schedule) {
    json j;
    j["rho_id"] = step.rho.id;
    j["exponent_x2"] = step.exponent_x2;
    arr.push_back(j);
  }
  return arr;
}

json to_json(const GlobalParameter& gp) {
  json j;
  j["case"] = to_string(gp.case_tag);
  j["side"] = to_string(gp.side);
  j["target_dim"] = gp.target_dim;
  j["summands"] = json::array();
  for (const auto& s : gp.summands) {
    json sj;
    sj["rho"] = to_json(s.rho);
    sj["omega"] = s.omega;
    sj["d"] = s.d;
    j["summands"].push_back(sj);
  }
  return j;
}

GlobalParameter global_from_json(const json& j) {
  if (!j.is_object()) bad("global parameter must be an object");
  GlobalParameter gp;
  gp.case_tag = case_from(get_str(j, "case"));
  if (j.contains("side")) gp.side = side_from(get_str(j, "side"));
  gp.target_dim = get_int(j, "target_dim");
  if (!j.contains("summands") || !j["summands"].is_array())
    bad("missing summands array");
  for (const auto& sj : j["summands"]) {
    GlobalSummand s;
    if (!sj.is_object() || !sj.contains("rho")) bad("summand must carry rho");
    s.rho = irr_symbol_from_json(sj["rho"]);
    s.d = get_int(sj, "d");
    if (s.d < 1) bad("d must be positive");
    if (sj.contains("omega")) {
      if (!sj["omega"].is_object()) bad("omega must be an object");
      for (const auto& [name, e] : sj["omega"].items()) {
        if (!e.is_number_integer()) bad("omega exponent not an integer");
        s.omega[name] = e.get<int>();
      }
    }
    gp.summands.push_back(std::move(s));
  }
  return gp;
}

PlaceData place_data_from_json(const json& j) {
  if (!j.is_object()) bad("place data must be an object");
  PlaceData pd;
  pd.place = j.contains("place") ? get_str(j, "place") : "v";
  if (!j.contains("pieces") || !j["pieces"].is_object())
    bad("place data needs pieces");
  for (const auto& [id, arr] : j["pieces"].items()) {
    if (!arr.is_array()) bad("pieces entries must be arrays");
    for (const auto& pj : arr)
      pd.pieces[id].push_back(irr_symbol_from_json(pj));
  }
  return pd;
}

GlobalMember global_member_from_json(const json& j) {
  if (!j.is_object() || !j.contains("local_signs") ||
      !j["local_signs"].is_object())
    bad("member needs local_signs");
  GlobalMember m;
  for (const auto& [place, arr] : j["local_signs"].items()) {
    if (!arr.is_array()) bad("local_signs entries must be arrays");
    for (const auto& v : arr) m.local_signs[place].push_back(sign_from(v));
  }
  return m;
}

std::map<std::string, int> sign_oracle_from_json(const json& j) {
  if (!j.is_object()) bad("oracle table must be an object");
  std::map<std::string, int> out;
  for (const auto& [key, val] : j.items()) out[key] = sign_from(val);
  return out;
}

}  // namespace theta
