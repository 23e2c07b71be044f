#include <doctest.h>

#include <algorithm>
#include <set>

#include "gen.hpp"
#include "theta/factor_ledger.hpp"
#include "theta/theta_transfer.hpp"

using namespace theta;
using gen::rho;
using gen::summand;

namespace {

AParameter gl(std::vector<WeightedSummand> ws) {
  AParameter p;
  p.case_tag = CaseTag::O;
  p.side = Side::G;
  p.summands = std::move(ws);
  p.canonicalize();
  p.target_dim = p.total_dim();
  return p;
}

std::multiset<int> shifts_of(const FactorLedger& led) {
  std::multiset<int> out;
  for (const auto& [a, e] : led.terms)
    for (int i = 0; i < e; ++i) out.insert(a.shift_x2);
  return out;
}

// the canonical theta companion of phi_0 for the beta assembly
AParameter stripe_companion(const AParameter& phi_0, int n, int r) {
  AParameter out;
  out.case_tag = phi_0.case_tag;
  out.side = Side::H;
  for (const auto& ws : phi_0.summands)
    out.summands.push_back(
        {theta_twist_summand(ws.s, phi_0.case_tag), ws.mult});
  for (int j = n - r; j <= r - n; ++j) {
    Summand s;
    s.rho.id = "1";
    s.rho.dim = 1;
    s.rho.duality = parity_of(phi_0.case_tag, Side::H);
    s.rho.twist = TwistWord{1, 0};
    s.half_shift_x2 = 2 * j;
    out.summands.push_back({s, 1});
  }
  out.canonicalize();
  out.target_dim = out.total_dim();
  return out;
}

}  // namespace

TEST_CASE("L-factor expansion shifts on the three pinned shapes") {
  auto r = rho("r", 1, Duality::None);
  CHECK(shifts_of(l_factor_expansion(gl({{summand(r, 1, 1), 1}}))) ==
        std::multiset<int>{0});
  CHECK(shifts_of(l_factor_expansion(gl({{summand(r, 2, 3), 1}}))) ==
        std::multiset<int>{-1, 1, 3});
  CHECK(shifts_of(l_factor_expansion(gl({{summand(r, 3, 1), 1}}))) ==
        std::multiset<int>{2});
}

TEST_CASE("expansion atom count and shift sum match closed forms") {
  gen::Rng rng(401);
  for (int it = 0; it < 200; ++it) {
    const auto p = gen::random_gl(rng);
    const auto led = l_factor_expansion(p);
    int count = 0, sum_x2 = 0;
    for (const auto& ws : p.summands) {
      count += ws.mult * ws.s.b;
      sum_x2 += ws.mult * ws.s.b * (ws.s.a - 1);
    }
    CHECK(led.total_exponent() == count);
    int got_sum = 0;
    for (const auto& [a, e] : led.terms) got_sum += e * a.shift_x2;
    CHECK(got_sum == sum_x2);
  }
}

TEST_CASE("ledger cancellation is exact and order-independent") {
  gen::Rng rng(402);
  for (int it = 0; it < 100; ++it) {
    std::vector<std::pair<Atom, int>> ops;
    for (int i = 0; i < 12; ++i) {
      Atom a;
      a.kind = gen::coin(rng) ? Atom::Kind::L : Atom::Kind::Gamma;
      a.base = gen::coin(rng) ? "x" : "y";
      a.shift_x2 = gen::pick(rng, -2, 2);
      ops.emplace_back(a, gen::pick(rng, -2, 2));
    }
    FactorLedger l1, l2;
    for (const auto& [a, e] : ops) l1.multiply(a, e);
    std::shuffle(ops.begin(), ops.end(), rng);
    for (const auto& [a, e] : ops) l2.multiply(a, e);
    CHECK(l1.terms == l2.terms);
    for (const auto& [a, e] : l1.terms) CHECK(e != 0);
    // multiplying by the inverse empties the ledger
    for (const auto& [a, e] : l2.terms) l1.multiply(a, -e);
    CHECK(l1.empty());
  }
}

TEST_CASE("stripe bound on the pinned shapes and the dimension inequality") {
  auto triv = rho("1", 1, Duality::Orthogonal, {}, true);
  CHECK(stripe_bound(gl({{summand(triv, 1, 1), 1}})) == 1);  // N = 1/2 < 1

  auto r = rho("r", 1, Duality::None);
  CHECK(stripe_bound(gl({{summand(r, 2, 3), 1}})) == 4);  // N = 2 < 6

  CHECK_THROWS_WITH_AS(stripe_bound(AParameter{}), "empty parameter",
                       std::domain_error);

  gen::Rng rng(403);
  for (int it = 0; it < 200; ++it) {
    const auto p = gen::random_gl(rng);
    CHECK(stripe_bound(p) < 2 * p.total_dim());
  }
}

TEST_CASE("beta assembles the six-term product") {
  auto tau = gl({{summand(rho("t", 2, Duality::None), 1, 1), 1}});
  AParameter phi0;
  phi0.case_tag = CaseTag::O;
  phi0.side = Side::G;
  phi0.summands = {{summand(rho("p", 1, Duality::Orthogonal), 1, 1), 1}};
  phi0.target_dim = 1;
  const int n = 2, r = 3;  // n = r-1: gamma range j in {-1, 0, 1}
  const auto companion = stripe_companion(phi0, n, r);
  const auto res = beta(tau, phi0, companion, n, r);
  CHECK(res.k == 2);
  std::multiset<int> gamma_shifts;
  int l_count = 0, norm_exp = 0;
  for (const auto& [a, e] : res.ledger.terms) {
    if (a.kind == Atom::Kind::Gamma && !a.neg_s)
      for (int i = 0; i < -e; ++i) gamma_shifts.insert(a.shift_x2);
    if (a.kind == Atom::Kind::L) ++l_count;
    if (a.kind == Atom::Kind::Norm) norm_exp = e;
  }
  CHECK(gamma_shifts == std::multiset<int>{-2, 0, 2});
  CHECK(l_count == 2);   // L(s-s0)^{-1} and L(-s-s0) on the dual side
  CHECK(norm_exp == 2);  // |kappa_W kappa_V^{-1}|^{ks}, k = dim tau

  // empty phi_0: the ledger is still well-formed
  AParameter empty;
  empty.case_tag = CaseTag::O;
  empty.side = Side::G;
  empty.target_dim = 0;
  const auto res0 = beta(tau, empty, stripe_companion(empty, 0, 2), 0, 2);
  CHECK_FALSE(res0.ledger.empty());

  CHECK_THROWS_WITH_AS(beta(tau, phi0, companion, 3, 3), "r must exceed n",
                       std::domain_error);
  auto wrong = companion;
  wrong.summands.pop_back();
  CHECK_THROWS_WITH_AS(beta(tau, phi0, wrong, n, r), "inconsistent pair",
                       std::domain_error);
}

TEST_CASE("beta at zero telescopes to a central-sign power") {
  gen::Rng rng(404);
  for (int n = 1; n <= 7; ++n)
    for (int r = n + 1; r <= 8; ++r) {
      const auto tau = gen::random_gl(rng);
      AParameter empty;
      empty.case_tag = CaseTag::O;
      empty.side = Side::G;
      empty.target_dim = 0;
      const auto res = beta(tau, empty, stripe_companion(empty, n, r), n, r);
      const auto word = evaluate_beta_at_zero(res);
      if ((r - n) % 2 == 0) {
        CHECK(word.is_one());
      } else {
        CHECK(word.sign == 1);
        CHECK(word.exp == std::map<std::string, int>{{"omega_tau(-1)", 1}});
        CHECK(word.evaluate({{"omega_tau(-1)", -1}}) == -1);
      }
      CHECK(word.evaluate({{"omega_tau(-1)", 1}}) == 1);

      auto tampered = res;
      tampered.ledger.multiply(
          Atom{Atom::Kind::L, "stray", false, false, false, 0}, 1);
      CHECK_THROWS_WITH_AS(evaluate_beta_at_zero(tampered),
                           "ledger not in expected form", std::domain_error);
    }
}

TEST_CASE("alpha symbol: oracle evaluation and the epsilon reduction") {
  const auto a1 = alpha_symbol(CaseTag::O, 1);
  std::map<std::string, int> ones;
  for (const auto& [s, e] : a1.exp) ones[s] = 1;
  CHECK(a1.evaluate(ones) == 1);

  // gamma_V . lambda(w_P)^{-1} = eps . chi_V(c): substituting gamma_V =
  // eps . chi_V(c) . lambda(w_P) cancels the lambda factor for k = 1.
  SignWord gv;
  gv.multiply("eps", 1);
  gv.multiply("chi_V(c)", 1);
  gv.multiply("lambda(w_P)", 1);
  const auto reduced = a1.substituted("gamma_V", gv);
  CHECK(reduced.exp ==
        std::map<std::string, int>{{"eps", 1},
                                   {"chi_V(c)", 1},
                                   {"chi_V(-1)", 1},
                                   {"omega_tau((-1)^{r-n+1}.c^-1)", 1}});

  // Case U: k-th powers throughout, lambda(w_Q) lambda(w_P)^{-1} kept opaque
  for (int k = 1; k <= 4; ++k) {
    const auto u = alpha_symbol(CaseTag::U0, k);
    CHECK(u == alpha_symbol(CaseTag::U1, k));
    CHECK(u.exp.at("gamma_V") == k);
    CHECK(u.exp.at("gamma_W") == -k);
    CHECK(u.exp.at("lambda(w_Q)") == 1);
    CHECK(u.exp.at("lambda(w_P)") == -1);
    std::map<std::string, int> table;
    for (const auto& [s, e] : u.exp) table[s] = -1;
    // parity of the total odd-exponent count decides the value
    int expect = 1;
    for (const auto& [s, e] : u.exp)
      if (e % 2 != 0) expect = -expect;
    CHECK(u.evaluate(table) == expect);
  }
}

TEST_CASE("sign words form a group with partial evaluation") {
  gen::Rng rng(405);
  for (int it = 0; it < 100; ++it) {
    SignWord w;
    const char* names[] = {"a", "b", "c"};
    for (int i = 0; i < 6; ++i)
      w.multiply(names[gen::pick(rng, 0, 2)], gen::pick(rng, -2, 2));
    if (gen::coin(rng)) w.sign = -1;
    SignWord inv;
    inv.sign = w.sign;
    for (const auto& [s, e] : w.exp) inv.multiply(s, -e);
    SignWord prod = w;
    prod.multiply(inv);
    CHECK(prod.is_one());
    // even exponents never consult the oracle
    SignWord even;
    even.multiply("missing", 2);
    CHECK(even.evaluate({}) == 1);
  }
  SignWord odd;
  odd.multiply("missing", 1);
  CHECK_THROWS_AS(odd.evaluate({}), std::domain_error);
}
