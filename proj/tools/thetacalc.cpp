#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "theta/classify.hpp"
#include "theta/dsl.hpp"
#include "theta/json_io.hpp"
#include "theta/label_calculus.hpp"
#include "theta/moeglin.hpp"
#include "theta/theta_transfer.hpp"

namespace {

using theta::json;

// Exit codes: 0 success, 1 domain error, 2 parse error (incl. usage).
struct ParseFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseFailure("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json parse_json_text(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseFailure("malformed JSON in " + what);
  return j;
}

// Parameters come in as DSL or JSON; anything starting with '{' is JSON.
theta::AParameter load_parameter(const std::string& path) {
  const std::string text = read_input(path);
  size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
    ++i;
  if (i < text.size() && text[i] == '{') {
    try {
      return theta::parameter_from_json(parse_json_text(text, "parameter"));
    } catch (const std::invalid_argument& e) {
      throw ParseFailure(e.what());
    }
  }
  auto res = theta::parse_parameter(text);
  if (!res.value) {
    std::string msg;
    for (const auto& d : res.diagnostics) {
      msg += d.message + " at " + std::to_string(d.span.line) + ":" +
             std::to_string(d.span.column) + "\n";
    }
    if (!msg.empty()) msg.pop_back();
    throw ParseFailure(msg);
  }
  return *res.value;
}

theta::LabeledPacket load_packet(const std::string& path) {
  try {
    return theta::packet_from_json(parse_json_text(read_input(path), "packet"));
  } catch (const std::invalid_argument& e) {
    throw ParseFailure(e.what());
  }
}

std::map<std::string, int> load_oracle(const std::string& path) {
  try {
    return theta::sign_oracle_from_json(
        parse_json_text(read_input(path), "oracle table"));
  } catch (const std::invalid_argument& e) {
    throw ParseFailure(e.what());
  }
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::exception&) {
      throw ParseFailure("malformed integer list '" + s + "'");
    }
  }
  return out;
}

size_t enum_bound() {
  if (const char* env = std::getenv("THETA_PACKET_MAX_ENUM")) {
    try {
      return static_cast<size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw ParseFailure("malformed THETA_PACKET_MAX_ENUM");
    }
  }
  return 20;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json parameter_out(const theta::AParameter& p, bool canonical) {
  json j = theta::to_json(p);
  if (canonical) j["dsl"] = theta::print_parameter(p);
  return j;
}

theta::OccurrenceOrder order_for(const theta::AParameter& psi,
                                 const std::string& order_csv) {
  if (order_csv.empty()) return theta::natural_order(psi);
  theta::OccurrenceOrder o;
  o.rank = parse_int_list(order_csv);
  if (o.rank.size() != theta::expand_occurrences(psi).size())
    throw std::domain_error("order length mismatch");
  return o;
}

json signword_out(const theta::SignWord& w,
                  const std::string& oracle_path) {
  json j;
  j["word"] = theta::to_json(w);
  if (!oracle_path.empty()) {
    const int v = w.evaluate(load_oracle(oracle_path));
    j["value"] = v > 0 ? "+1" : "-1";
  } else if (w.exp.empty()) {
    j["value"] = w.sign > 0 ? "+1" : "-1";
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact symbolic calculator for theta-correspondence parameter "
               "combinatorics"};
  app.require_subcommand(1);
  bool canonical = false;
  app.add_flag("--canonical", canonical, "include canonical DSL text");

  std::string input = "-";
  std::string packet_path, psi_path, order_csv, oracle_path, member_path,
      tau_path, eps_csv, case_name = "O", element = "-1";
  int r = 0, n = 0, r0 = 0, k = 1, epsilon = 1;
  bool quotient = false;

  auto* c_classify = app.add_subcommand("classify", "classification flags");
  c_classify->add_option("input", input);

  auto* c_comp = app.add_subcommand("compgroup", "component group");
  c_comp->add_option("input", input);
  c_comp->add_flag("--quotient", quotient);

  auto* c_chars = app.add_subcommand("characters", "enumerate characters");
  c_chars->add_option("input", input);
  c_chars->add_flag("--quotient", quotient);

  auto* c_theta = app.add_subcommand("theta", "theta-lift parameter");
  c_theta->add_option("input", input);
  c_theta->add_option("-r", r)->required();

  auto* c_pull = app.add_subcommand("pullback", "pull back an H-side packet");
  c_pull->add_option("packet", packet_path)->required();
  c_pull->add_option("--psi", psi_path)->required();
  c_pull->add_option("-r", r)->required();

  auto* c_sc = app.add_subcommand("supercuspidals", "supercuspidal characters");
  c_sc->add_option("input", input);

  auto* c_oc = app.add_subcommand("order-check", "validate an order");
  c_oc->add_option("input", input);
  c_oc->add_option("--order", order_csv);

  auto* c_dom = app.add_subcommand("dominate", "dominating parameter");
  c_dom->add_option("input", input);
  c_dom->add_option("--order", order_csv);

  auto* c_sched = app.add_subcommand("schedule", "Jacquet schedule");
  c_sched->add_option("input", input);
  c_sched->add_option("--order", order_csv);

  auto* c_desc = app.add_subcommand("descend", "descent exponents");
  c_desc->add_option("-n", n)->required();
  c_desc->add_option("-r", r)->required();
  c_desc->add_option("--r0", r0)->required();

  auto* c_lf = app.add_subcommand("lfactors", "L-factor expansion");
  c_lf->add_option("input", input);

  auto* c_stripe = app.add_subcommand("stripe", "pole stripe bound");
  c_stripe->add_option("input", input);

  auto* c_beta = app.add_subcommand("beta0", "normalizing factor at s=0");
  c_beta->add_option("input", input);
  c_beta->add_option("-n", n)->required();
  c_beta->add_option("-r", r)->required();
  c_beta->add_option("--oracle", oracle_path);

  auto* c_alpha = app.add_subcommand("alpha", "alpha sign word");
  c_alpha->add_option("--case", case_name);
  c_alpha->add_option("-k", k)->required();
  c_alpha->add_option("--oracle", oracle_path);

  auto* c_wt = app.add_subcommand("wtwist", "change of Whittaker datum");
  c_wt->add_option("packet", packet_path)->required();
  c_wt->add_option("-c", element);

  auto* c_dual = app.add_subcommand("dual", "contragredient packet");
  c_dual->add_option("packet", packet_path)->required();

  auto* c_ind = app.add_subcommand("induct", "parabolic-induction extension");
  c_ind->add_option("packet", packet_path)->required();
  c_ind->add_option("--tau", tau_path)->required();
  c_ind->add_option("--epsilon", epsilon);

  auto* c_gv = app.add_subcommand("global-validate", "global bullet checks");
  c_gv->add_option("input", input);

  auto* c_gt = app.add_subcommand("global-test", "multiplicity membership");
  c_gt->add_option("input", input);
  c_gt->add_option("--member", member_path)->required();
  c_gt->add_option("--epsilon", eps_csv)->required();

  for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; }))
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (*c_classify) {
      const auto c = theta::classify(load_parameter(input));
      emit(json{{"good_parity", c.good_parity},
                {"ddr", c.ddr},
                {"elementary", c.elementary}});
    } else if (*c_comp) {
      const auto g = theta::component_group(load_parameter(input), quotient);
      json basis = json::array();
      for (const auto& s : g.basis) {
        json b;
        b["rho"] = theta::to_json(s.rho);
        b["a"] = s.a;
        b["b"] = s.b;
        basis.push_back(b);
      }
      json z = json::array();
      for (auto c : g.z) z.push_back(static_cast<int>(c));
      emit(json{{"basis", basis}, {"z", z}, {"quotient", g.quotient_by_z}});
    } else if (*c_chars) {
      const auto g = theta::component_group(load_parameter(input), quotient);
      json arr = json::array();
      for (const auto& c : theta::enumerate_characters(g, enum_bound()))
        arr.push_back(c.signs);
      emit(json{{"characters", arr}});
    } else if (*c_theta) {
      emit(parameter_out(theta::theta_parameter(load_parameter(input), r),
                         canonical));
    } else if (*c_pull) {
      const auto pulled = theta::pull_back_packet(load_packet(packet_path),
                                                  load_parameter(psi_path), r);
      emit(theta::to_json(pulled));
    } else if (*c_sc) {
      json arr = json::array();
      for (const auto& c :
           theta::enumerate_supercuspidals(load_parameter(input)))
        arr.push_back(c.signs);
      emit(json{{"characters", arr}});
    } else if (*c_oc) {
      const auto psi = load_parameter(input);
      emit(json{{"admissible", theta::validate_admissible_order(
                                   psi, order_for(psi, order_csv))}});
    } else if (*c_dom) {
      const auto psi = load_parameter(input);
      const auto order = order_for(psi, order_csv);
      const auto res = theta::dominate(psi, order);
      emit(json{{"psi_gg", parameter_out(res.psi_gg, canonical)},
                {"t", res.t},
                {"order", order.rank}});
    } else if (*c_sched) {
      const auto psi = load_parameter(input);
      const auto order = order_for(psi, order_csv);
      const auto res = theta::dominate(psi, order);
      emit(json{{"psi_gg", parameter_out(res.psi_gg, canonical)},
                {"schedule", theta::to_json(theta::jacquet_schedule(
                                 psi, order, res.psi_gg))}});
    } else if (*c_desc) {
      const auto seg = theta::descent_segment(n, r, r0);
      json arr = json::array();
      for (int e : seg) arr.push_back(e);
      emit(json{{"exponents", arr}});
    } else if (*c_lf) {
      emit(theta::to_json(theta::l_factor_expansion(load_parameter(input))));
    } else if (*c_stripe) {
      emit(json{{"bound_x2", theta::stripe_bound(load_parameter(input))}});
    } else if (*c_beta) {
      const auto psi_tau = load_parameter(input);
      // The (phi_0, theta(phi_0)) pair only enters through the consistency
      // check; the CLI uses the empty phi_0 with its canonical lift.
      theta::AParameter phi0;
      phi0.case_tag = theta::CaseTag::O;
      phi0.side = theta::Side::G;
      theta::AParameter theta_phi0;
      theta_phi0.case_tag = theta::CaseTag::O;
      theta_phi0.side = theta::Side::H;
      for (int j = n - r; j <= r - n; ++j) {
        theta::Summand s;
        s.rho.id = "1";
        s.rho.dim = 1;
        s.rho.duality = theta::parity_of(theta::CaseTag::O, theta::Side::H);
        s.rho.twist = theta::TwistWord{1, 0};
        s.half_shift_x2 = 2 * j;
        theta_phi0.summands.push_back({s, 1});
      }
      theta_phi0.target_dim = theta_phi0.total_dim();
      const auto b = theta::beta(psi_tau, phi0, theta_phi0, n, r);
      emit(signword_out(theta::evaluate_beta_at_zero(b), oracle_path));
    } else if (*c_alpha) {
      theta::CaseTag c = theta::CaseTag::O;
      if (case_name == "U" || case_name == "U0")
        c = theta::CaseTag::U0;
      else if (case_name == "U1")
        c = theta::CaseTag::U1;
      else if (case_name != "O")
        throw ParseFailure("unknown case '" + case_name + "'");
      emit(signword_out(theta::alpha_symbol(c, k), oracle_path));
    } else if (*c_wt) {
      emit(theta::to_json(
          theta::whittaker_twist(load_packet(packet_path), element)));
    } else if (*c_dual) {
      emit(theta::to_json(
          theta::contragredient_twist(load_packet(packet_path))));
    } else if (*c_ind) {
      const auto tau_param = load_parameter(tau_path);
      if (tau_param.summands.size() != 1 || tau_param.summands[0].mult != 1)
        throw std::domain_error("tau must be a single summand");
      if (epsilon != 1 && epsilon != -1)
        throw ParseFailure("epsilon must be +1 or -1");
      emit(theta::to_json(theta::induct_packet(
          load_packet(packet_path), tau_param.summands[0].s, epsilon)));
    } else if (*c_gv) {
      const auto gp = theta::global_from_json(
          parse_json_text(read_input(input), "global parameter"));
      emit(json{{"violations", theta::validate_global(gp)}});
    } else if (*c_gt) {
      const auto gp = theta::global_from_json(
          parse_json_text(read_input(input), "global parameter"));
      const auto member = theta::global_member_from_json(
          parse_json_text(read_input(member_path), "member"));
      const auto eps = parse_int_list(eps_csv);
      const auto basis = theta::global_basis(gp);
      json out;
      out["accepted"] = true;
      if (eps.size() != basis.size())
        throw std::domain_error("epsilon length mismatch");
      for (size_t i = 0; i < basis.size(); ++i)
        if (theta::global_character(gp, member, i) != eps[i]) {
          out["accepted"] = false;
          out["offending_basis_index"] = i;
          break;
        }
      emit(out);
    }
  } catch (const ParseFailure& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}
