#include <doctest.h>

#include <algorithm>

#include "gen.hpp"
#include "theta/global.hpp"

using namespace theta;
using gen::rho;

namespace {

GlobalSummand gs(const std::string& id, int dim, Duality dual, int d,
                 CharWord omega = {}) {
  GlobalSummand s;
  s.rho = rho(id, dim, dual);
  s.omega = std::move(omega);
  s.d = d;
  return s;
}

// The bullets, restated naively for cross-checking.
std::vector<std::string> oracle_validate(const GlobalParameter& gp) {
  std::vector<std::string> out;
  bool dup = false;
  for (size_t i = 0; i < gp.summands.size(); ++i)
    for (size_t j = i + 1; j < gp.summands.size(); ++j)
      if (gp.summands[i].rho.id == gp.summands[j].rho.id &&
          gp.summands[i].d == gp.summands[j].d)
        dup = true;
  if (dup) out.push_back("distinctness");
  int dim = 0;
  for (const auto& s : gp.summands) dim += s.rho.dim * s.d;
  if (dim != gp.target_dim) out.push_back("dimension");
  bool parity = true;
  for (const auto& s : gp.summands) {
    const Duality odd = parity_of(gp.case_tag, gp.side);
    const Duality want = s.d % 2 != 0 ? odd : flip(odd);
    if (s.rho.duality != want) parity = false;
  }
  if (!parity) out.push_back("parity bullet");
  if (gp.case_tag == CaseTag::O) {
    CharWord prod;
    for (const auto& s : gp.summands)
      for (const auto& [n, e] : s.omega)
        if (n != "1") prod[n] += e * s.d;
    CharWord reduced;
    for (const auto& [n, e] : prod)
      if (e % 2 != 0) reduced[n] = 1;
    if (!(reduced == CharWord{{"chi_V", 1}})) out.push_back("central character");
  }
  return out;
}

}  // namespace

TEST_CASE("global validation on the three pinned shapes") {
  GlobalParameter gp;
  gp.case_tag = CaseTag::O;
  gp.side = Side::G;
  gp.summands = {gs("pi", 3, Duality::Orthogonal, 1, {{"chi_V", 1}})};
  gp.target_dim = 3;
  CHECK(validate_global(gp).empty());

  auto dup = gp;
  dup.summands.push_back(dup.summands[0]);
  dup.target_dim = 6;
  auto v = validate_global(dup);
  CHECK(std::count(v.begin(), v.end(), "distinctness") == 1);

  GlobalParameter even;
  even.case_tag = CaseTag::O;
  even.side = Side::G;
  even.summands = {gs("pi", 3, Duality::Orthogonal, 2, {{"chi_V", 2}}),
                   gs("chi", 1, Duality::Orthogonal, 1, {{"chi_V", 1}})};
  even.target_dim = 7;
  v = validate_global(even);
  CHECK(std::count(v.begin(), v.end(), "parity bullet") == 1);
}

TEST_CASE("central character bullet reduces words mod 2") {
  GlobalParameter gp;
  gp.case_tag = CaseTag::O;
  gp.side = Side::G;
  // omega = chi_V^3 . mu^2 reduces to chi_V
  gp.summands = {gs("pi", 3, Duality::Orthogonal, 1,
                    {{"chi_V", 3}, {"mu", 2}})};
  gp.target_dim = 3;
  CHECK(validate_global(gp).empty());

  gp.summands[0].omega = {{"mu", 1}};
  auto v = validate_global(gp);
  CHECK(std::count(v.begin(), v.end(), "central character") == 1);

  // Case U has no central-character bullet here
  GlobalParameter u;
  u.case_tag = CaseTag::U0;
  u.side = Side::G;
  u.summands = {gs("pi", 1, Duality::ConjSymplectic, 1, {{"mu", 1}})};
  u.target_dim = 1;
  CHECK(validate_global(u).empty());
}

TEST_CASE("validation agrees with the restated bullets on random input") {
  gen::Rng rng(601);
  for (int it = 0; it < 300; ++it) {
    GlobalParameter gp;
    gp.case_tag = gen::any_case(rng);
    gp.side = gen::coin(rng) ? Side::G : Side::H;
    const int count = gen::pick(rng, 0, 4);
    int dim = 0;
    for (int i = 0; i < count; ++i) {
      const int n = gen::pick(rng, 1, 3);
      const int d = gen::pick(rng, 1, 3);
      CharWord w;
      if (gen::coin(rng)) w["chi_V"] = gen::pick(rng, 0, 3);
      if (gen::coin(rng)) w["mu"] = gen::pick(rng, 0, 2);
      gp.summands.push_back(gs("p" + std::to_string(gen::pick(rng, 0, 2)), n,
                               gen::any_duality(rng), d, w));
      dim += n * d;
    }
    gp.target_dim = gen::coin(rng) ? dim : dim + gen::pick(rng, 1, 2);
    CHECK(validate_global(gp) == oracle_validate(gp));
  }
}

TEST_CASE("localization assembles pieces against S_d and checks dimensions") {
  GlobalParameter gp;
  gp.case_tag = CaseTag::O;
  gp.side = Side::G;
  gp.summands = {gs("pi", 2, Duality::Symplectic, 2, {}),
                 gs("chi", 1, Duality::Orthogonal, 1, {{"chi_V", 1}})};
  gp.target_dim = 5;
  REQUIRE(validate_global(gp).empty());

  // pi stays irreducible at this place
  PlaceData v1;
  v1.place = "v1";
  v1.pieces["pi"] = {rho("pi_v", 2, Duality::Symplectic)};
  v1.pieces["chi"] = {rho("chi_v", 1, Duality::Orthogonal)};
  const auto loc = localize(gp, v1);
  CHECK(loc.total_dim() == 5);
  REQUIRE(loc.summands.size() == 2);
  for (const auto& ws : loc.summands) {
    CHECK(ws.s.a == 1);
    if (ws.s.rho.id == "pi_v") CHECK(ws.s.b == 2);
    if (ws.s.rho.id == "chi_v") CHECK(ws.s.b == 1);
  }

  // pi splits into two characters at another place
  PlaceData v2;
  v2.place = "v2";
  v2.pieces["pi"] = {rho("a", 1, Duality::Orthogonal),
                     rho("b", 1, Duality::Orthogonal)};
  v2.pieces["chi"] = {rho("chi_v", 1, Duality::Orthogonal)};
  CHECK(localize(gp, v2).summands.size() == 3);

  PlaceData bad = v1;
  bad.pieces["pi"] = {rho("small", 1, Duality::Orthogonal)};
  CHECK_THROWS_WITH_AS(localize(gp, bad),
                       "localization dimension mismatch for 'pi'",
                       std::domain_error);
  PlaceData missing;
  missing.place = "v3";
  missing.pieces["chi"] = v1.pieces["chi"];
  CHECK_THROWS_WITH_AS(localize(gp, missing),
                       "missing localization data for 'pi'", std::domain_error);
}

TEST_CASE("global characters multiply local signs over places") {
  GlobalParameter gp;
  gp.case_tag = CaseTag::O;
  gp.side = Side::G;
  gp.summands = {gs("pi", 2, Duality::Orthogonal, 1, {}),
                 gs("chi", 1, Duality::Orthogonal, 1, {{"chi_V", 1}})};
  gp.target_dim = 3;
  REQUIRE(global_basis(gp).size() == 2);

  GlobalMember trivial;
  CHECK(global_character(gp, trivial, 0) == 1);
  CHECK(global_character(gp, trivial, 1) == 1);

  GlobalMember one_flip;
  one_flip.local_signs["v1"] = {-1, 1};
  CHECK(global_character(gp, one_flip, 0) == -1);
  CHECK(global_character(gp, one_flip, 1) == 1);

  GlobalMember two_flips = one_flip;
  two_flips.local_signs["v2"] = {-1, 1};
  CHECK(global_character(gp, two_flips, 0) == 1);

  CHECK_THROWS_WITH_AS(global_character(gp, trivial, 2),
                       "basis index out of range", std::domain_error);
  GlobalMember wrong;
  wrong.local_signs["v1"] = {1};
  CHECK_THROWS_WITH_AS(global_character(gp, wrong, 0),
                       "local label size mismatch at place 'v1'",
                       std::domain_error);
}

TEST_CASE("multiplicity test equals brute force over small member sets") {
  GlobalParameter gp;
  gp.case_tag = CaseTag::O;
  gp.side = Side::G;
  gp.summands = {gs("pi", 2, Duality::Orthogonal, 1, {}),
                 gs("chi", 1, Duality::Orthogonal, 1, {{"chi_V", 1}})};
  gp.target_dim = 3;
  const std::vector<std::string> places = {"v1", "v2", "v3"};
  const size_t basis = global_basis(gp).size();
  REQUIRE(basis == 2);

  for (const std::vector<int>& eps :
       {std::vector<int>{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}) {
    size_t accepted = 0;
    for (size_t mask = 0; mask < (size_t(1) << (places.size() * basis));
         ++mask) {
      GlobalMember m;
      size_t bit = 0;
      for (const auto& p : places) {
        std::vector<int> signs;
        for (size_t i = 0; i < basis; ++i)
          signs.push_back((mask >> bit++) & 1 ? -1 : +1);
        m.local_signs[p] = signs;
      }
      // independent product check
      bool expect = true;
      for (size_t i = 0; i < basis; ++i) {
        int prod = 1;
        for (const auto& [p, s] : m.local_signs) prod *= s[i];
        if (prod != eps[i]) expect = false;
      }
      CHECK(multiplicity_test(gp, m, eps) == expect);
      if (expect) ++accepted;
    }
    // product constraints cut the count by 2^basis
    CHECK(accepted == (size_t(1) << (places.size() * basis - basis)));
  }

  GlobalMember m;
  CHECK_THROWS_WITH_AS(multiplicity_test(gp, m, {1}),
                       "missing oracle value for the sign character",
                       std::domain_error);
}
