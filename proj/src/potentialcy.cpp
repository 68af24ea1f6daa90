#include "potentia/potentialcy.hpp"

#include <gmpxx.h>

namespace potentia {

// -------------------------------------------------------------- QuadMatrix

QuadMatrix::QuadMatrix(std::vector<std::vector<Rat>> rows) : m(std::move(rows)) {
  if (m.empty()) throw Error("empty matrix");
  for (const auto& r : m)
    if (r.size() != m.size()) throw Error("matrix is not square");
}

QuadMatrix QuadMatrix::from_strings(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Rat>> out;
  for (const auto& r : rows) {
    out.emplace_back();
    for (const auto& s : r) out.back().push_back(parse_rat(s));
  }
  return QuadMatrix(std::move(out));
}

RatMatrix QuadMatrix::matrix() const { return RatMatrix::from_dense(m); }

bool QuadMatrix::is_zero() const { return matrix().is_zero(); }

bool QuadMatrix::invertible() const { return rank(matrix()) == n(); }

QuadMatrix QuadMatrix::transposed() const { return QuadMatrix(matrix().transposed().dense()); }

QuadMatrix classical_matrix() { return QuadMatrix({{Rat(0), Rat(-1)}, {Rat(1), Rat(0)}}); }

QuadMatrix jordan_matrix() { return QuadMatrix({{Rat(1), Rat(1)}, {Rat(-1), Rat(0)}}); }

QuadMatrix quantum_matrix(const Rat& q) {
  if (q == 0) throw Error("quantum parameter must be nonzero");
  return QuadMatrix({{Rat(0), -1 / q}, {Rat(1), Rat(0)}});
}

QuadMatrix family_matrix(const Rat& a, const Rat& b) { return QuadMatrix({{a, b}, {Rat(1), Rat(0)}}); }

QuadMatrix preset_matrix(const std::string& name) {
  if (name == "classical") return classical_matrix();
  if (name == "jordan") return jordan_matrix();
  if (name.rfind("quantum:", 0) == 0) {
    Rat q = parse_rat(name.substr(8));
    if (q == 0 || q == 1) throw Error("quantum parameter must avoid 0 and 1");
    return quantum_matrix(q);
  }
  throw Error("unknown preset '" + name + "'");
}

QuadMatrix congruent(const QuadMatrix& M, const RatMatrix& P, const Rat& nu) {
  return QuadMatrix((P.transposed() * M.matrix() * P).scaled(nu).dense());
}

NcPoly quadratic_form(const QuadMatrix& M, GenSetPtr gens) {
  NcPoly f(gens);
  for (std::size_t i = 0; i < M.n(); ++i)
    for (std::size_t j = 0; j < M.n(); ++j) f.add_term({int(i), int(j)}, M(i, j));
  return f;
}

// ------------------------------------------------------------ construction

PotentialAlgebra build_B(const QuadMatrix& M) {
  PotentialAlgebra pa;
  pa.M = M;
  pa.gens = make_gens(M.n());
  pa.f = quadratic_form(M, pa.gens);
  pa.w = pa.f * NcPoly::gen(pa.gens, pa.gens->z());
  pa.cw = cyclic_sum(pa.w);
  pa.pres.gens = pa.gens;
  pa.free_algebra = M.is_zero();
  if (!pa.free_algebra) {
    for (std::size_t i = 0; i < M.n(); ++i) pa.pres.relations.push_back(cyclic_derivative(pa.w, i));
    pa.pres.relations.push_back(pa.f);
  }
  pa.relation_dim = relation_span(pa.pres, 2).dim();
  RewriteSystem rs = RewriteSystem::from_presentation(pa.pres);
  if (rs.confluence_check().empty()) pa.rewriting = std::move(rs);
  return pa;
}

std::size_t relation_dim_formula(const QuadMatrix& M) {
  RatMatrix J(M.n(), 2 * M.n());
  J.add_block(0, 0, M.matrix());
  J.add_block(0, M.n(), M.matrix().transposed());
  return rank(J) + 1;
}

QuadraticPresentation build_A(const QuadMatrix& M) {
  auto gens = make_gens(M.n(), false);
  QuadraticPresentation p{gens, {}};
  if (!M.is_zero()) p.relations.push_back(quadratic_form(M, gens));
  return p;
}

Subspace relation_span_B(const QuadMatrix& M) { return relation_span(build_B(M).pres, 2); }

RatMatrix sigma(const QuadMatrix& M) {
  auto inv = inverse(M.matrix().transposed());
  if (!inv) throw Error("sigma needs an invertible matrix");
  return (*inv * M.matrix()).scaled(Rat(-1));
}

std::optional<Rat> sigma_scale(const QuadMatrix& M) {
  RatMatrix S = sigma(M);
  RatMatrix N = S.transposed() * M.matrix() * S;
  for (std::size_t i = 0; i < M.n(); ++i)
    for (std::size_t j = 0; j < M.n(); ++j)
      if (M(i, j) != 0) {
        Rat lambda = N.get(i, j) / M(i, j);
        if (lambda != 0 && N == M.matrix().scaled(lambda)) return lambda;
        return std::nullopt;
      }
  return std::nullopt;
}

bool z_centrality(const QuadMatrix& M) {
  PotentialAlgebra pa = build_B(M);
  Subspace span = relation_span(pa.pres, 2);
  NcPoly z = NcPoly::gen(pa.gens, pa.gens->z());
  for (std::size_t i = 0; i < M.n(); ++i) {
    NcPoly x = NcPoly::gen(pa.gens, i);
    if (!span.contains(ambient_coords(z * x - x * z, 2))) return false;
  }
  return true;
}

// ---------------------------------------------------------- classification

std::string Type2Tag::name() const {
  switch (kind) {
    case Type2::Classical: return "classical";
    case Type2::Jordan: return "jordan";
    case Type2::Quantum: return "quantum";
    case Type2::Degenerate: return "degenerate";
  }
  return "degenerate";
}

bool Type2Tag::operator==(const Type2Tag& o) const {
  if (kind != o.kind) return false;
  return (kind != Type2::Quantum && kind != Type2::Degenerate) || s == o.s;
}

namespace {

std::optional<Rat> rational_sqrt(const Rat& x) {
  if (x < 0) return std::nullopt;
  mpz_class n = x.get_num(), d = x.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  Rat r(rn, rd);
  r.canonicalize();
  return r;
}

}  // namespace

Type2Tag classify2(const QuadMatrix& M) {
  if (M.n() != 2) throw Error("classification is implemented for 2x2 matrices");
  Type2Tag t;
  RatMatrix sym = M.matrix() + M.matrix().transposed();
  std::size_t rs = rank(sym);
  if (!M.invertible()) {
    // congruence classes of singular matrices are told apart by these two ranks
    t.kind = Type2::Degenerate;
    t.s = Rat(static_cast<long>(3 * rank(M.matrix()) + rs));
    return t;
  }
  if (rs == 0) {
    t.kind = Type2::Classical;
    t.s = 2;
    return t;
  }
  if (rs == 1) {
    t.kind = Type2::Jordan;
    t.s = 2;
    return t;
  }
  t.kind = Type2::Quantum;
  RatMatrix cosquare = *inverse(M.matrix().transposed()) * M.matrix();
  t.s = -(cosquare.get(0, 0) + cosquare.get(1, 1));
  if (auto r = rational_sqrt(t.s * t.s - 4)) {
    Rat q1 = (t.s + *r) / 2, q2 = (t.s - *r) / 2;
    t.q = abs(q1) >= abs(q2) ? q1 : q2;
  }
  return t;
}

bool isomorphic_B(const QuadMatrix& M, const QuadMatrix& N) { return classify2(M) == classify2(N); }

// ------------------------------------------------------------ basis change

namespace {

std::vector<NcPoly> primed_generators(const RatMatrix& Lambda, GenSetPtr gens) {
  if (Lambda.rows() != gens->size() || Lambda.cols() != gens->size())
    throw Error("basis change matrix has the wrong size");
  if (rank(Lambda) != gens->size()) throw Error("basis change matrix is singular");
  std::vector<NcPoly> images;
  for (std::size_t k = 0; k < gens->size(); ++k) {
    NcPoly p(gens);
    for (const auto& [l, c] : Lambda.row(k)) p.add_term({int(l)}, c);
    images.push_back(std::move(p));
  }
  return images;
}

}  // namespace

Subspace apply_basis_change(const QuadMatrix& M, const RatMatrix& Lambda) {
  PotentialAlgebra pa = build_B(M);
  auto images = primed_generators(Lambda, pa.gens);
  NcPoly w_new = substitute(pa.w, images);
  QuadraticPresentation p{pa.gens, {}};
  for (std::size_t l = 0; l < pa.gens->size(); ++l) p.relations.push_back(cyclic_derivative(w_new, l));
  return relation_span(p, 2);
}

Subspace basis_change_by_substitution(const QuadMatrix& M, const RatMatrix& Lambda) {
  PotentialAlgebra pa = build_B(M);
  auto images = primed_generators(Lambda, pa.gens);
  QuadraticPresentation p{pa.gens, {}};
  for (const auto& r : pa.pres.relations) p.relations.push_back(substitute(r, images));
  return relation_span(p, 2);
}

// ------------------------------------------------------------------ center

NcPoly family_central_element(const Rat& a, const Rat& b, GenSetPtr gens) {
  NcPoly phi(gens);
  phi.add_term({0, 0, 2}, a);
  phi.add_term({0, 1, 2}, b + 1);
  return phi;
}

bool center_test(const Rat& a, const Rat& b, std::size_t D) {
  if (b == 0) throw Error("center test needs b != 0");
  PotentialAlgebra pa = build_B(family_matrix(a, b));
  if (!pa.rewriting) throw Error("rewrite system for this family is not confluent");
  NcPoly phi = family_central_element(a, b, pa.gens);
  for (std::size_t g = 0; g < 3; ++g) {
    NcPoly x = NcPoly::gen(pa.gens, g);
    if (!pa.rewriting->normal_form(x * phi - phi * x).is_zero()) return false;
  }
  if (D < 3) return true;
  GradedAlgebra alg(pa.pres, D);
  SparseVec ph = alg.expand(phi);
  for (std::size_t k = 0; k + 3 <= D; ++k)
    for (std::size_t i = 0; i < alg.dim(k); ++i) {
      SparseVec u{{i, Rat(1)}};
      if (alg.multiply(3, ph, k, u) != alg.multiply(k, u, 3, ph)) return false;
    }
  return true;
}

// ---------------------------------------------------------- Koszul complex

RatMatrix tensor_action(const GradedAlgebra& alg, std::size_t k, const NcTensor& T) {
  if (T.terms.empty()) return RatMatrix(0, alg.dim(k));
  const std::size_t len = T.terms.begin()->first.first.size() + T.terms.begin()->first.second.size();
  std::vector<SparseVec> cols(alg.dim(k));
  for (const auto& [uv, c] : T.terms) {
    const auto& [u, v] = uv;
    if (u.size() + v.size() != len) throw Error("inhomogeneous tensor");
    for (std::size_t a = 0; a < alg.dim(k); ++a) {
      SparseVec t{{a, Rat(1)}};
      std::size_t deg = k;
      for (auto it = v.rbegin(); it != v.rend(); ++it) t = alg.left_mul(deg++, static_cast<std::size_t>(*it), t);
      for (int g : u) t = alg.right_mul(deg++, t, static_cast<std::size_t>(g));
      sv::axpy(cols[a], c, t);
    }
  }
  return RatMatrix::from_columns(alg.dim(k + len), cols);
}

KoszulComplex::KoszulComplex(const PotentialAlgebra& pa, std::size_t D)
    : pa_(pa), D_(D), alg_(pa.pres, D) {
  if (pa_.free_algebra || !pa_.M.invertible()) throw Error("Koszul complex needs an invertible matrix");
  const std::size_t m = pa_.gens->size();
  // c(w) = sum_i x_i rho_i = sum_i rho'_i x_i, with rho, rho' expressed in the relations
  std::vector<NcPoly> rho(m, NcPoly(pa_.gens)), rho_r(m, NcPoly(pa_.gens));
  for (const auto& [w, c] : pa_.cw.terms()) {
    rho[static_cast<std::size_t>(w[0])].add_term({w[1], w[2]}, c);
    rho_r[static_cast<std::size_t>(w[2])].add_term({w[0], w[1]}, c);
  }
  std::vector<SparseVec> rel_cols;
  for (const auto& r : pa_.pres.relations) rel_cols.push_back(ambient_coords(r, 2));
  RatMatrix R = RatMatrix::from_columns(m * m, rel_cols);
  lambda_ = RatMatrix(m, m);
  mu_ = RatMatrix(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    auto l = solve(R, ambient_coords(rho[i], 2));
    auto r = solve(R, ambient_coords(rho_r[i], 2));
    if (!l || !r) throw Error("c(w) does not split over the relations");
    lambda_.set_row(i, *l);
    mu_.set_row(i, *r);
  }
  for (std::size_t d = 0; d <= D_; ++d) slices_.push_back(build_slice(d));
}

std::size_t KoszulComplex::slots(std::size_t p) const {
  if (p == 1 || p == 2) return pa_.gens->size();
  if (p == 0 || p == 3) return 1;
  return 0;
}

std::optional<std::size_t> KoszulComplex::coeff_degree(std::size_t p, std::size_t d) const {
  if (p > d || p > 3) return std::nullopt;
  return d - p;
}

std::size_t KoszulComplex::chain_dim(std::size_t p, std::size_t d) const {
  auto k = coeff_degree(p, d);
  return k ? slots(p) * alg_.dim(*k) : 0;
}

RatMatrix KoszulComplex::commutator_block(std::size_t k, std::size_t g, const Rat& right, const Rat& left) const {
  RatMatrix out(alg_.dim(k + 1), alg_.dim(k));
  if (right != 0) out = out + alg_.right_matrix(k, g).scaled(right);
  if (left != 0) out = out - alg_.left_matrix(k, g).scaled(left);
  return out;
}

RatMatrix KoszulComplex::d2_block(std::size_t k, std::size_t i, std::size_t j, bool flipped) const {
  NcTensor T = partial_derivative(pa_.pres.relations.at(i), j);
  if (flipped) T = T.flipped();
  RatMatrix out = tensor_action(alg_, k, T);
  if (out.rows() == 0) return RatMatrix(alg_.dim(k + 1), alg_.dim(k));
  return out;
}

ComplexSlice KoszulComplex::build_slice(std::size_t d) const {
  const std::size_t m = pa_.gens->size();
  ComplexSlice s;
  s.degree = d;
  for (std::size_t p = 0; p <= 3; ++p) s.dims.push_back(chain_dim(p, d));
  s.diff.push_back(RatMatrix(0, s.dims[0]));
  for (std::size_t p = 1; p <= 3; ++p) s.diff.push_back(RatMatrix(s.dims[p - 1], s.dims[p]));

  if (d >= 1) {
    const std::size_t k = d - 1, dk = alg_.dim(k);
    for (std::size_t j = 0; j < m; ++j) s.diff[1].add_block(0, j * dk, commutator_block(k, j, Rat(1), Rat(1)));
  }
  if (d >= 2) {
    const std::size_t k = d - 2, dk = alg_.dim(k), dk1 = alg_.dim(k + 1);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) s.diff[2].add_block(j * dk1, i * dk, d2_block(k, i, j, false));
  }
  if (d >= 3) {
    const std::size_t k = d - 3, dk1 = alg_.dim(k + 1);
    for (std::size_t j = 0; j < m; ++j) {
      RatMatrix blk(dk1, alg_.dim(k));
      for (std::size_t i = 0; i < m; ++i) {
        Rat l = lambda_.get(i, j), r = mu_.get(i, j);
        if (l != 0 || r != 0) blk = blk + commutator_block(k, i, l, r);
      }
      s.diff[3].add_block(j * dk1, 0, blk);
    }
  }
  return s;
}

bool KoszulComplex::squares_to_zero() const {
  for (const auto& s : slices_)
    if (!s.squares_to_zero()) return false;
  return true;
}

HomologyTable KoszulComplex::homology(bool with_witnesses) const { return homology_table(slices_, with_witnesses); }

bool self_duality_check(const QuadMatrix& M, std::size_t D) {
  if (M.n() < 2 || !M.invertible()) throw Error("self-duality check needs an invertible matrix with n >= 2");
  PotentialAlgebra pa = build_B(M);
  if (!hessian_symmetry_check(pa.w)) return false;
  KoszulComplex K(pa, D);
  const std::size_t m = pa.gens->size();
  // c(w) pairs x_i with r_i on both sides
  if (!(K.left_split() == RatMatrix::identity(m)) || !(K.right_split() == RatMatrix::identity(m))) return false;
  const GradedAlgebra& B = K.algebra();
  for (std::size_t d = 3; d <= D; ++d) {
    const RatMatrix& d3 = K.slice(d).diff[3];
    const RatMatrix& d1 = K.slice(d - 2).diff[1];
    const std::size_t lo = B.dim(d - 3), hi = B.dim(d - 2);
    for (std::size_t j = 0; j < m; ++j)
      if (!(d3.block(j * hi, hi, 0, lo) == d1.block(0, hi, j * lo, lo))) return false;
  }
  for (std::size_t d = 2; d <= D; ++d) {
    const RatMatrix& d2 = K.slice(d).diff[2];
    const std::size_t lo = B.dim(d - 2), hi = B.dim(d - 1);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (!(d2.block(j * hi, hi, i * lo, lo) == K.d2_block(d - 2, j, i, true))) return false;
  }
  return true;
}

}  // namespace potentia
