#include "potentia/checks.hpp"

namespace potentia {

RatMatrix random_matrix(std::mt19937& rng, std::size_t n, bool invertible) {
  for (;;) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, make_rat(long(rng() % 9) - 4, long(rng() % 3) + 1));
    if (!invertible || rank(m) == n) return m;
  }
}

bool same_span(const Subspace& a, const Subspace& b) {
  return a.ambient_dim == b.ambient_dim && a.pivot_cols == b.pivot_cols && a.basis == b.basis;
}

CheckResult euler_for(const QuadMatrix& M) {
  auto pa = build_B(M);
  if (pa.free_algebra) return {"euler", true, "w = 0"};
  bool ok = euler_check(pa.w);
  return {"euler", ok, ok ? "both sides equal c(w)" : "Euler relation fails for w = " + render(pa.w)};
}

CheckResult hessian_for(const QuadMatrix& M) {
  auto pa = build_B(M);
  if (pa.free_algebra) return {"hessian", true, "w = 0"};
  bool ok = hessian_symmetry_check(pa.w);
  return {"hessian", ok, ok ? "second cyclic derivatives symmetric" : "asymmetric for w = " + render(pa.w)};
}

CheckResult confluence_for(const QuadMatrix& M) {
  auto pa = build_B(M);
  auto rs = RewriteSystem::from_presentation(pa.pres);
  auto bad = rs.confluence_check();
  CheckResult r{"confluence", bad.empty(), ""};
  r.detail = std::to_string(rs.rules().size()) + " rules, " + std::to_string(bad.size()) + " unresolved overlaps";
  for (std::size_t i = 0; i < bad.size() && i < 3; ++i)
    r.detail += "; " + render_word(*pa.gens, bad[i].word) + ": " + render(bad[i].via_left) + " vs " +
                render(bad[i].via_right);
  return r;
}

CheckResult duality_for(const QuadMatrix& M, std::size_t D) {
  bool ok = self_duality_check(M, D);
  return {"duality", ok, ok ? "d3 mirrors d1 and d2 is self-dual up to degree " + std::to_string(D)
                            : "Koszul complex is not self-dual"};
}

CheckResult koszul_complex_for(const QuadMatrix& M, std::size_t D) {
  KoszulComplex kc(build_B(M), D);
  bool ok = kc.squares_to_zero();
  return {"koszul d o d = 0", ok, ok ? "every slice up to degree " + std::to_string(D) : "some slice fails"};
}

namespace {

RatMatrix block_diag(const RatMatrix& P, const Rat& nu) {
  RatMatrix out(P.rows() + 1, P.cols() + 1);
  out.add_block(0, 0, P);
  out.set(P.rows(), P.cols(), nu);
  return out;
}

}  // namespace

CheckResult basis_change_for(const QuadMatrix& M, std::size_t samples, std::uint32_t seed) {
  std::mt19937 rng(seed);
  CheckResult r{"basis change", true, ""};
  for (std::size_t t = 0; t < samples; ++t) {
    RatMatrix P = random_matrix(rng, M.n(), true);
    Rat nu = make_rat(long(rng() % 5) + 1, long(rng() % 3) + 1) * (rng() % 2 ? 1 : -1);
    RatMatrix L = block_diag(P, nu);
    Subspace target = relation_span_B(congruent(M, P, nu));
    bool a = same_span(apply_basis_change(M, L), target), b = same_span(basis_change_by_substitution(M, L), target);
    if (!a || !b) {
      r.pass = false;
      r.detail += "sample " + std::to_string(t) + (a ? "" : " chain rule") + (b ? "" : " substitution") + "; ";
    }
  }
  if (r.pass) r.detail = std::to_string(samples) + " random (P, nu)";
  return r;
}

CheckResult swap_check(std::size_t samples, std::uint32_t seed) {
  std::mt19937 rng(seed);
  RatMatrix swap = RatMatrix::from_dense({{Rat(0), Rat(0), Rat(1)}, {Rat(0), Rat(1), Rat(0)}, {Rat(1), Rat(0), Rat(0)}});
  CheckResult r{"swap x and z", true, ""};
  for (std::size_t t = 0; t < samples; ++t) {
    Rat a = make_rat(long(rng() % 9) - 4, long(rng() % 3) + 1), b = make_rat(long(rng() % 9) - 4, long(rng() % 3) + 1);
    QuadMatrix M({{Rat(0), a}, {b, Rat(0)}});
    Subspace target = relation_span_B(M.transposed());
    if (!same_span(apply_basis_change(M, swap), target) || !same_span(basis_change_by_substitution(M, swap), target)) {
      r.pass = false;
      r.detail += "a=" + to_string(a) + " b=" + to_string(b) + "; ";
    }
  }
  if (r.pass) r.detail = std::to_string(samples) + " matrices [[0,a],[b,0]]";
  return r;
}

CheckResult center_check(std::size_t samples, std::size_t D, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<std::pair<Rat, Rat>> ab{{Rat(-1), Rat(-1)}};
  for (std::size_t t = 0; t < samples; ++t)
    ab.push_back({make_rat(long(rng() % 9) - 4, long(rng() % 3) + 1),
                  make_rat(long(rng() % 8) + 1, long(rng() % 3) + 1) * (rng() % 2 ? 1 : -1)});
  CheckResult r{"center", true, ""};
  for (const auto& [a, b] : ab)
    if (!center_test(a, b, D)) {
      r.pass = false;
      r.detail += "(a,b)=(" + to_string(a) + "," + to_string(b) + ") ";
    }
  if (r.pass) r.detail = std::to_string(ab.size()) + " pairs (a,b), words up to degree " + std::to_string(D > 3 ? D - 3 : 0);
  else r.detail = "not central at " + r.detail;
  return r;
}

}  // namespace potentia
