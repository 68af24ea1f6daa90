#include "doctest.h"

#include <random>

#include "potentia/brylinski.hpp"

using namespace potentia;

namespace {

const JordanBridge& bridge() {
  static const JordanBridge br(11);
  return br;
}

CPoly mono(int i, int j, int k, long c = 1) { return CPoly::xyz(i, j, k, Rat(c)); }

NcPoly nc(const std::string& s) { return parse_ncpoly(bridge().koszul().potential().gens, s); }

// x^i y^j z^k as a word-polynomial
NcPoly word(int i, int j, int k) {
  Word w;
  w.insert(w.end(), std::size_t(i), 0);
  w.insert(w.end(), std::size_t(j), 1);
  w.insert(w.end(), std::size_t(k), 2);
  NcPoly p(bridge().koszul().potential().gens);
  p.add_term(w, Rat(1));
  return p;
}

SparseVec coords(const NcPoly& p) { return bridge().koszul().algebra().expand(p); }

// slots of a Koszul chain, each given as a word-polynomial of degree k
SparseVec chain_of(std::size_t k, const std::vector<NcPoly>& slots) {
  const auto& alg = bridge().koszul().algebra();
  SparseVec v;
  for (std::size_t s = 0; s < slots.size(); ++s) v = sv::sum(v, sv::shifted(alg.expand(slots[s]), s * alg.dim(k)));
  return v;
}

NcPoly mul(const NcPoly& a, const NcPoly& b) { return nc_mul(a, b); }

}  // namespace

TEST_CASE("commutation rules in B") {
  const auto x = nc("x"), y = nc("y"), z = nc("z");
  for (int k = 0; k <= 6; ++k) {
    CHECK(coords(mul(y, word(k, 0, 0))) == coords(word(k, 1, 0) + word(k + 1, 0, 0).scaled(Rat(k))));
    CHECK(coords(mul(word(0, 0, k), y)) == coords(word(0, 1, k) + word(1, 0, k).scaled(Rat(2 * k))));
    NcPoly ykx(x.gens()), zyk(x.gens());
    Rat f(1);  // k!/j! for j = k down to 0
    for (int j = k; j >= 0; --j) {
      ykx = ykx + word(k - j + 1, j, 0).scaled(f);
      zyk = zyk + word(k - j, j, 1).scaled(f * Rat(k - j + 1));
      f *= j;
    }
    CHECK(coords(mul(word(0, k, 0), x)) == coords(ykx));
    CHECK(coords(mul(z, word(0, k, 0))) == coords(zyk));
  }
}

TEST_CASE("Koszul differentials match the explicit commutator formulas") {
  const auto& br = bridge();
  const auto x = nc("x"), y = nc("y"), z = nc("z");
  std::mt19937 rng(11);
  for (int t = 0; t < 8; ++t) {
    const int k = 1 + t % 4;
    NcPoly a(x.gens());
    for (int i = k; i >= 0; --i)
      for (int j = k - i; j >= 0; --j)
        if (rng() % 2) a = a + word(i, j, k - i - j).scaled(make_rat(int(rng() % 9) - 4, 1));
    auto L = [&](const NcPoly& g) { return mul(g, a); };
    auto R = [&](const NcPoly& g) { return mul(a, g); };
    auto d2 = [&](std::size_t slot) {
      std::vector<NcPoly> s(3, NcPoly(x.gens()));
      s[slot] = a;
      return br.differential(2, std::size_t(k) + 2, chain_of(std::size_t(k), s));
    };
    CHECK(d2(0) == chain_of(std::size_t(k) + 1, {L(z) + R(z), L(z) - R(z), R(x) + L(x) + R(y) - L(y)}));
    CHECK(d2(1) == chain_of(std::size_t(k) + 1, {R(z) - L(z), NcPoly(x.gens()), L(x) - R(x)}));
    CHECK(d2(2) == chain_of(std::size_t(k) + 1, {L(x) + R(x) + L(y) - R(y), R(x) - L(x), NcPoly(x.gens())}));
    SparseVec d3 = br.differential(3, std::size_t(k) + 3, coords(a));
    CHECK(d3 == chain_of(std::size_t(k) + 1, {R(x) - L(x), R(y) - L(y), R(z) - L(z)}));
    for (std::size_t g = 0; g < 3; ++g) {
      std::vector<NcPoly> s(3, NcPoly(x.gens()));
      s[g] = a;
      const NcPoly& gen = g == 0 ? x : g == 1 ? y : z;
      CHECK(br.differential(1, std::size_t(k) + 1, chain_of(std::size_t(k), s)) == coords(R(gen) - L(gen)));
    }
  }
}

TEST_CASE("bridge coordinates") {
  const auto& br = bridge();
  CHECK(JordanBridge::slot_weight(1, 1) == 1);
  CHECK(JordanBridge::slot_weight(2, 1) == 0);
  CHECK(JordanBridge::slot_weight(3, 0) == 1);
  Chain ch{mono(1, 2, 0), mono(0, 0, 3, -2), CPoly()};
  SparseVec v = br.from_poisson(1, 4, ch);
  CHECK(br.to_poisson(1, 4, v) == ch);
  CHECK(br.filtration(1, 4, v) == 2);
  CHECK(br.graded_part(1, 4, v, 2) == Chain{mono(1, 2, 0), CPoly(), CPoly()});
  CHECK(br.filtration(1, 4, SparseVec{}) == -1);
  CHECK_THROWS_AS(br.from_poisson(1, 5, ch), Error);
  CHECK_THROWS_AS(br.from_poisson(2, 4, {CPoly()}), Error);
}

TEST_CASE("associated graded differentials") {
  const auto& br = bridge();
  // y (x) x -> yx - xy = x^2
  SparseVec yx{{br.coordinate(1, 2, {0, 1, 0}, 0), Rat(1)}};
  SparseVec img = br.differential(1, 2, yx);
  CHECK(br.graded_part(0, 2, img, 0) == Chain{mono(2, 0, 0)});
  CHECK(delta(br.poisson(), 1, br.to_poisson(1, 2, yx)) == Chain{mono(2, 0, 0)});
  // z (x) y -> 2xz
  SparseVec zy{{br.coordinate(1, 2, {0, 0, 1}, 1), Rat(1)}};
  CHECK(br.graded_part(0, 2, br.differential(1, 2, zy), 0) == Chain{mono(1, 0, 1, 2)});
  for (std::size_t p = 1; p <= 3; ++p)
    for (std::size_t s = 0; s < (p == 3 ? 1u : 3u); ++s)
      CHECK(br.differential(p, p, SparseVec{{br.coordinate(p, p, {0, 0, 0}, s), Rat(1)}}).empty() == (p != 2 || s == 1));

  auto checks = gr_compare(br, 8);
  REQUIRE(checks.size() == 8);
  for (const auto& c : checks) CHECK_MESSAGE(c.pass, (c.name + ": " + c.detail));
  CHECK_THROWS_AS(gr_compare(br, 9), Error);
}

TEST_CASE("explicit lifts") {
  const auto& br = bridge();
  auto a0 = build_lift(br, "A", {0});
  CHECK(a0.p == 1);
  CHECK(a0.degree == 3);
  CHECK(br.to_poisson(1, 3, a0.chain) == Chain{mono(1, 0, 1), CPoly(), mono(2, 0, 0, -1)});
  CHECK(br.differential(1, 3, a0.chain).empty());
  auto w0 = build_lift(br, "W", {0});
  CHECK(br.to_poisson(1, 1, w0.chain) == Chain{mono(0, 0, 0), CPoly(), CPoly()});
  CHECK(verify_lift(br, w0));
  for (int t = 0; t <= 4; ++t) {
    auto e = build_lift(br, "E", {t});
    CHECK(br.differential(2, e.degree, e.chain).empty());
    CHECK(verify_lift(br, e));
  }
  for (int k = 0; k <= 2; ++k) {
    CHECK(verify_lift(br, build_lift(br, "A", {k})));
    CHECK(verify_lift(br, build_lift(br, "B", {k})));
  }
  int low = 0, high = 0;
  for (int n = 0; n <= 4; ++n) {
    for (int k = 1; k <= n + 1; ++k) {
      (3 * k - 2 * (n + 2) < 0 ? low : high)++;
      auto u = build_lift(br, "U", {n, k});
      CHECK_MESSAGE(verify_lift(br, u), u.label);
    }
    for (int k = 0; k <= n; ++k) CHECK(verify_lift(br, build_lift(br, "O", {n, k})));
  }
  CHECK(low > 0);
  CHECK(high > 0);
  // U_{2,3}: second branch, correction x^3 y^2 z (x) x
  auto u23 = build_lift(br, "U", {2, 3});
  CHECK(br.to_poisson(1, 5, u23.chain)[0].coeff({1, 2, 1}) != 0);
  CHECK(verify_lift(br, build_lift(br, "top", {1})));
  CHECK(verify_lift(br, build_lift(br, "B", {-1}, true)));
  CHECK(verify_lift(br, build_lift(br, "E", {-1}, true)));

  // the lift of z^0 (z, 0, -x): z (x) x - x (x) z
  CHECK(br.to_poisson(1, 2, build_lift(br, "B", {-1}, true).chain) == Chain{mono(0, 0, 1), CPoly(), mono(1, 0, 0, -1)});

  // damaged chains are rejected
  auto bad = u23;
  bad.chain = sv::sum(bad.chain, SparseVec{{br.coordinate(1, 5, {1, 2, 1}, 1), Rat(1)}});
  CHECK_FALSE(verify_lift(br, bad));
  auto wrong = build_lift(br, "C", {0});
  wrong.target = build_lift(br, "O", {0, 0}).target;
  CHECK_FALSE(verify_lift(br, wrong));
  auto lower = build_lift(br, "V", {3, 2});
  lower.chain = sv::scaled(lower.chain, Rat(2));
  CHECK_FALSE(verify_lift(br, lower));

  CHECK_THROWS_AS(build_lift(br, "U", {2, 0}), Error);
  CHECK_THROWS_AS(build_lift(br, "U", {2, 4}), Error);
  CHECK_THROWS_AS(build_lift(br, "V", {0, 0}), Error);
  CHECK_THROWS_AS(build_lift(br, "O", {2, 3}), Error);
  CHECK_THROWS_AS(build_lift(br, "B", {-1}), Error);
  CHECK_THROWS_AS(build_lift(br, "E", {-2}, true), Error);
  CHECK_THROWS_AS(build_lift(br, "A", {0, 1}), Error);
  CHECK_THROWS_AS(build_lift(br, "Q", {0}), Error);
  CHECK_THROWS_AS(build_lift(br, "A", {4}), Error);
}

TEST_CASE("solver lifts") {
  const auto& br = bridge();
  auto pp = br.poisson();
  for (const auto& fe : family_elements("HP1", 8, true)) {
    auto x = lift_by_solver(br, 1, fe.chain);
    REQUIRE_MESSAGE(x, fe.label);
    CHECK(br.differential(1, fe.degree, *x).empty());
    CHECK(br.filtration(1, fe.degree, *x) == JordanBridge::filtration(1, fe.chain));
    CHECK(br.graded_part(1, fe.degree, *x, JordanBridge::filtration(1, fe.chain)) == fe.chain);
  }
  for (const char* f : {"HP2", "HP3", "HP0"})
    for (const auto& fe : family_elements(f, 8, true)) CHECK_MESSAGE(lift_by_solver(br, fe.p, fe.chain), fe.label);
  CHECK(lift_by_solver(br, 1, {CPoly(), CPoly(), CPoly()})->empty());
  // y dx is not a cycle
  CHECK_THROWS_AS(lift_by_solver(br, 1, {mono(0, 1, 0), CPoly(), CPoly()}), Error);
  CHECK_THROWS_AS(lift_by_solver(br, 1, {mono(0, 0, 1), CPoly(), mono(0, 0, 0)}), Error);
  CHECK_THROWS_AS(lift_by_solver(br, 1, {CPoly()}), Error);
  // a boundary has a lift as well
  Chain bd = delta(pp, 2, {mono(0, 2, 1), CPoly(), mono(1, 1, 1)});
  CHECK(lift_by_solver(br, 1, bd));

  auto suite = lift_suite(br, 8);
  std::size_t ext = 0;
  for (const auto& o : suite) {
    CHECK_MESSAGE(o.formula_ok, o.record.label);
    CHECK(o.solver);
    CHECK(o.agrees_with_solver);
    ext += o.extension;
  }
  CHECK(ext == 2);
  auto s = summarize_lifts(suite);
  CHECK(s.pass);
  CHECK(s.detail.find("formula failed") == std::string::npos);
  CHECK(lift_suite(br, 8, false).size() + 2 == suite.size());
}

TEST_CASE("flagged lifts") {
  LiftOutcome ok, fixed, lost;
  ok.formula_ok = true;
  ok.record.label = "A_0";
  fixed.record.label = "u_{1,1}";
  fixed.solver = SparseVec{};
  lost.record.label = "v_{2,1}";
  auto s = summarize_lifts({ok, fixed});
  CHECK(s.pass);
  CHECK(s.detail.find("solver witness used: u_{1,1}") != std::string::npos);
  auto t = summarize_lifts({ok, fixed, lost});
  CHECK_FALSE(t.pass);
  CHECK(t.detail.find("no lift found: v_{2,1}") != std::string::npos);
}

TEST_CASE("dimension comparison for the Jordan algebra") {
  const auto& br = bridge();
  auto rep = degeneration_check(br, 8);
  const std::size_t hh3[] = {1, 0, 0, 1, 0, 0};
  for (std::size_t d = 3; d <= 8; ++d) CHECK(rep.hh.at(3, d) == hh3[d - 3]);
  CHECK(rep.hh.at(1, 1) == 3);
  // w_1 and v_{2,s} give 4; z (x) x - x (x) z is a fifth class
  CHECK(rep.hh.at(1, 2) == 5);
  CHECK(rep.hh.at(2, 2) == 1);
  REQUIRE(rep.checks.size() == 4);
  CHECK(rep.checks[0].pass);
  CHECK_FALSE(rep.checks[1].pass);
  CHECK(rep.checks[1].detail == "2 mismatches: p=1 d=2: HH 5, listed 4; p=2 d=2: HH 1, listed 0; ");
  CHECK(rep.checks[2].pass);
  CHECK(rep.checks[3].pass);
  CHECK_FALSE(rep.pass());

  // both extra classes survive in Hochschild homology
  std::size_t d = 2;
  auto b = build_lift(br, "B", {-1}, true), e = build_lift(br, "E", {-1}, true);
  CHECK(br.koszul().slice(d).rank_mod_boundaries(1, {b.chain}) == 1);
  CHECK(br.koszul().slice(d).rank_mod_boundaries(2, {e.chain}) == 1);
  std::vector<SparseVec> deg2;
  for (const auto& o : lift_suite(br, 2))
    if (o.record.p == 1 && o.record.degree == 2) deg2.push_back(o.record.chain);
  CHECK(deg2.size() == 5);
  CHECK(br.koszul().slice(d).rank_mod_boundaries(1, deg2) == 5);
}

TEST_CASE("basis count tables") {
  auto lit = listed_basis_counts(8, false), ext = listed_basis_counts(8, true);
  for (std::size_t d = 0; d <= 8; ++d) {
    CHECK(lit.at(0, d) == (d >= 1 ? d + 2 : 1));
    CHECK(ext.at(1, d) == lit.at(1, d) + (d == 2));
    CHECK(ext.at(2, d) == lit.at(2, d) + (d == 2));
    CHECK(ext.at(3, d) == lit.at(3, d));
  }
  auto q = quantum_basis_counts(9);
  for (std::size_t d = 0; d <= 9; ++d) {
    bool z3 = d % 3 == 0 && d >= 3;
    CHECK(q.at(0, d) == (d % 3 == 0 ? 1u : 0u) + (d >= 1 ? 3u : 0u));
    CHECK(q.at(1, d) == (d >= 1 ? 3u : 0u) + (z3 ? 3u : 0u));
    CHECK(q.at(2, d) == (z3 ? 3u : 0u));
    CHECK(q.at(3, d) == (z3 ? 1u : 0u));
  }
}

TEST_CASE("quantum comparison") {
  auto rep = quantum_compare(Rat(2), 8);
  for (const auto& c : rep.checks) CHECK_MESSAGE(c.pass, (c.name + ": " + c.detail));
  CHECK(rep.hh.at(3, 3) == 1);
  CHECK(rep.hh.at(3, 6) == 1);
  CHECK(rep.hh.at(3, 4) == 0);
  CHECK(rep.hh.at(0, 3) == 4);
  CHECK(rep.hh.at(2, 3) == 3);
  CHECK(quantum_compare(make_rat(1, 3), 6).pass());
  CHECK(quantum_compare(Rat(-5), 5).pass());
  for (const Rat& q : {Rat(0), Rat(1), Rat(-1)}) CHECK_THROWS_AS(quantum_compare(q, 4), Error);
}
