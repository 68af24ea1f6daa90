#include "potentia/poisson.hpp"

#include <sstream>

namespace potentia {

// ------------------------------------------------------------------ CPoly

CPoly CPoly::constant(const Rat& c) { return monomial({0, 0, 0}, c); }

CPoly CPoly::var(std::size_t i) {
  Exp e{0, 0, 0};
  e.at(i) = 1;
  return monomial(e);
}

CPoly CPoly::monomial(const Exp& e, const Rat& c) {
  CPoly p;
  p.add_term(e, c);
  return p;
}

Rat CPoly::coeff(const Exp& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void CPoly::add_term(const Exp& e, const Rat& c) {
  if (c == 0) return;
  for (int v : e)
    if (v < 0) throw Error("negative exponent");
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int CPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

bool CPoly::is_homogeneous() const {
  int d = degree();
  for (const auto& [e, c] : terms_)
    if (e[0] + e[1] + e[2] != d) return false;
  return true;
}

CPoly CPoly::operator+(const CPoly& o) const {
  CPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

CPoly CPoly::operator-(const CPoly& o) const {
  CPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

CPoly CPoly::operator*(const CPoly& o) const {
  CPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
  return r;
}

CPoly CPoly::scaled(const Rat& c) const {
  CPoly r;
  if (c == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

CPoly CPoly::pow(unsigned k) const {
  CPoly r = constant(Rat(1));
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

CPoly CPoly::diff(std::size_t i) const {
  CPoly r;
  for (const auto& [e, c] : terms_) {
    if (e.at(i) == 0) continue;
    Exp f = e;
    --f[i];
    r.add_term(f, c * e[i]);
  }
  return r;
}

std::string render(const CPoly& p) {
  if (p.is_zero()) return "0";
  static const char* names[3] = {"x", "y", "z"};
  std::ostringstream os;
  bool first = true;
  // descending degree, then x-power descending
  std::vector<std::pair<Exp, Rat>> ts(p.terms().begin(), p.terms().end());
  std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    int da = a.first[0] + a.first[1] + a.first[2], db = b.first[0] + b.first[1] + b.first[2];
    if (da != db) return da > db;
    return a.first > b.first;
  });
  for (const auto& [e, c] : ts) {
    Rat a = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    bool unit = e[0] + e[1] + e[2] == 0;
    if (a != 1 || unit) os << to_string(a) << (unit ? "" : " ");
    bool star = false;
    for (int i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      if (star) os << "*";
      os << names[i];
      if (e[i] > 1) os << "^" << e[i];
      star = true;
    }
  }
  return os.str();
}

CPoly symmetrize(const NcPoly& p) {
  CPoly r;
  for (const auto& [w, c] : p.terms()) {
    Exp e{0, 0, 0};
    for (int g : w) {
      if (g > 2) throw Error("commutative polynomials use x, y, z only");
      ++e[static_cast<std::size_t>(g)];
    }
    r.add_term(e, c);
  }
  return r;
}

CPoly parse_cpoly(std::string_view text) { return symmetrize(parse_ncpoly(make_gens(2), text)); }

// ------------------------------------------------------------ vector calculus

Vec3 grad(const CPoly& F) { return {F.diff(0), F.diff(1), F.diff(2)}; }

Vec3 curl(const Vec3& F) {
  return {F[2].diff(1) - F[1].diff(2), F[0].diff(2) - F[2].diff(0), F[1].diff(0) - F[0].diff(1)};
}

CPoly div(const Vec3& F) { return F[0].diff(0) + F[1].diff(1) + F[2].diff(2); }

CPoly dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3 scaled(const Vec3& a, const CPoly& c) { return {a[0] * c, a[1] * c, a[2] * c}; }
Vec3 add(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
bool is_zero(const Vec3& a) { return a[0].is_zero() && a[1].is_zero() && a[2].is_zero(); }

std::string render(const Vec3& a) { return "(" + render(a[0]) + ", " + render(a[1]) + ", " + render(a[2]) + ")"; }

// ------------------------------------------------------------- potentials

namespace {

const CPoly X = CPoly::var(0), Y = CPoly::var(1), Z = CPoly::var(2);

}  // namespace

PoissonPotential::PoissonPotential(CPoly phi) : phi_(std::move(phi)), grad_(grad(phi_)) {
  if (!phi_.is_homogeneous()) throw Error("Poisson potential must be homogeneous");
  deg_ = phi_.is_zero() ? 3 : phi_.degree();
  if (deg_ < 2) throw Error("Poisson potential must have degree >= 2");
  if (!jacobi_check(*this)) throw Error("bracket fails the Jacobi identity");
}

PoissonPotential jordan_poisson() { return PoissonPotential(CPoly::xyz(2, 0, 1, Rat(-1))); }

PoissonPotential quantum_poisson(const Rat& q) {
  if (q == 0) throw Error("q must be nonzero");
  return PoissonPotential(CPoly::xyz(1, 1, 1, 1 - 1 / q));
}

PoissonPotential poisson_potential_of(const QuadMatrix& M) {
  if (M.n() != 2) throw Error("Poisson potential needs a 2x2 matrix");
  auto gens = make_gens(2);
  return PoissonPotential(symmetrize(quadratic_form(M, gens)) * Z);
}

CPoly bracket(const PoissonPotential& pp, const CPoly& F, const CPoly& G) {
  return dot(pp.gradient(), cross(grad(F), grad(G)));
}

bool jacobi_check(const PoissonPotential& pp) {
  auto b = [&](const CPoly& f, const CPoly& g) { return bracket(pp, f, g); };
  return (b(X, b(Y, Z)) + b(Y, b(Z, X)) + b(Z, b(X, Y))).is_zero();
}

CPoly delta1(const PoissonPotential& pp, const Vec3& F) { return dot(pp.gradient(), curl(F)); }

Vec3 delta2(const PoissonPotential& pp, const Vec3& F) {
  return sub(scaled(pp.gradient(), div(F)), grad(dot(F, pp.gradient())));
}

Vec3 delta3(const PoissonPotential& pp, const CPoly& F) {
  Vec3 v = cross(grad(F), pp.gradient());
  return {-v[0], -v[1], -v[2]};
}

namespace {

Vec3 as_vec(const Chain& c) {
  if (c.size() != 3) throw Error("expected a chain with three components");
  return {c[0], c[1], c[2]};
}

Chain as_chain(const Vec3& v) { return {v[0], v[1], v[2]}; }

}  // namespace

Chain delta(const PoissonPotential& pp, std::size_t p, const Chain& c) {
  switch (p) {
    case 0: return {};
    case 1: return {delta1(pp, as_vec(c))};
    case 2: return as_chain(delta2(pp, as_vec(c)));
    case 3:
      if (c.size() != 1) throw Error("3-chains have one component");
      return as_chain(delta3(pp, c[0]));
  }
  throw Error("no chains above degree 3");
}

Chain wedge_dphi(const PoissonPotential& pp, std::size_t p, const Chain& c) {
  switch (p) {
    case 0:
      if (c.size() != 1) throw Error("0-forms have one component");
      return as_chain(scaled(pp.gradient(), c[0]));
    case 1: return as_chain(cross(as_vec(c), pp.gradient()));
    case 2: return {dot(as_vec(c), pp.gradient())};
    case 3: return {};
  }
  throw Error("no forms above degree 3");
}

// ------------------------------------------------------------ coordinates

const std::vector<Exp>& monomials(int c) {
  static std::map<int, std::vector<Exp>> cache;
  if (c < 0) {
    static const std::vector<Exp> none;
    return none;
  }
  auto it = cache.find(c);
  if (it != cache.end()) return it->second;
  std::vector<Exp> out;
  for (int i = c; i >= 0; --i)
    for (int j = c - i; j >= 0; --j) out.push_back({i, j, c - i - j});
  return cache.emplace(c, std::move(out)).first->second;
}

std::size_t monomial_index(const Exp& e) {
  // position of (i, j, k) in the list above
  int c = e[0] + e[1] + e[2];
  int i = e[0], j = e[1];
  std::size_t before = 0;
  for (int a = c; a > i; --a) before += static_cast<std::size_t>(c - a + 1);
  return before + static_cast<std::size_t>(c - i - j);
}

std::size_t monomial_count(int c) { return c < 0 ? 0 : static_cast<std::size_t>((c + 1) * (c + 2) / 2); }

std::size_t chain_width(std::size_t p) {
  if (p == 0 || p == 3) return 1;
  if (p == 1 || p == 2) return 3;
  return 0;
}

SparseVec chain_coords(const Chain& ch, int c) {
  const std::size_t N = monomial_count(c);
  SparseVec out;
  for (std::size_t s = 0; s < ch.size(); ++s) {
    SparseVec part;
    for (const auto& [e, v] : ch[s].terms()) {
      if (e[0] + e[1] + e[2] != c) throw Error("chain component of the wrong degree");
      part.emplace_back(s * N + monomial_index(e), v);
    }
    std::sort(part.begin(), part.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Chain coords_chain(std::size_t p, const SparseVec& v, int c) {
  const std::size_t N = monomial_count(c);
  Chain ch(chain_width(p));
  const auto& mons = monomials(c);
  for (const auto& [i, val] : v) ch.at(i / N).add_term(mons.at(i % N), val);
  return ch;
}

namespace {

Chain basis_chain(std::size_t p, std::size_t idx, int c) { return coords_chain(p, {{idx, Rat(1)}}, c); }

// matrix of op : Omega^p (degree c) -> Omega^{p'} (degree c')
template <class Op>
RatMatrix operator_matrix(std::size_t p, int c, std::size_t p_out, int c_out, Op op) {
  const std::size_t cols = chain_width(p) * monomial_count(c);
  const std::size_t rows = chain_width(p_out) * monomial_count(c_out);
  std::vector<SparseVec> out(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    Chain img = op(basis_chain(p, j, c));
    bool zero = true;
    for (const auto& comp : img) zero = zero && comp.is_zero();
    if (!zero) out[j] = chain_coords(img, c_out);
  }
  return RatMatrix::from_columns(rows, out);
}

}  // namespace

std::vector<ComplexSlice> brylinski_slices(const PoissonPotential& pp, std::size_t D) {
  const int w = pp.weight();
  std::vector<ComplexSlice> out;
  for (std::size_t d = 0; d <= D; ++d) {
    ComplexSlice s;
    s.degree = d;
    auto cdeg = [&](std::size_t p) { return int(d) - w * int(p); };
    for (std::size_t p = 0; p <= 3; ++p) s.dims.push_back(chain_width(p) * monomial_count(cdeg(p)));
    s.diff.push_back(RatMatrix(0, s.dims[0]));
    for (std::size_t p = 1; p <= 3; ++p) {
      if (s.dims[p] == 0 || s.dims[p - 1] == 0) {
        s.diff.push_back(RatMatrix(s.dims[p - 1], s.dims[p]));
        continue;
      }
      s.diff.push_back(operator_matrix(p, cdeg(p), p - 1, cdeg(p - 1),
                                       [&](const Chain& ch) { return delta(pp, p, ch); }));
    }
    out.push_back(std::move(s));
  }
  return out;
}

HomologyTable hp_table(const PoissonPotential& pp, std::size_t D) { return homology_table(brylinski_slices(pp, D)); }

std::vector<WedgeSlice> wedge_slices(const PoissonPotential& pp, std::size_t D) {
  const int m = pp.degree();
  std::vector<WedgeSlice> out;
  // every (p, c) with c + p <= D has s = c - (m-1) p in this range
  for (int s = -3 * (m - 1); s <= int(D); ++s) {
    WedgeSlice ws;
    ws.s = s;
    ComplexSlice& cx = ws.cx;
    cx.degree = 0;
    for (std::size_t q = 0; q <= 3; ++q) {
      std::size_t p = 3 - q;
      cx.dims.push_back(chain_width(p) * monomial_count(ws.coeff_degree(p, m)));
    }
    bool empty = true;
    for (auto n : cx.dims) empty = empty && n == 0;
    if (empty) continue;
    cx.diff.push_back(RatMatrix(0, cx.dims[0]));
    for (std::size_t q = 1; q <= 3; ++q) {
      std::size_t p = 3 - q;
      if (cx.dims[q] == 0 || cx.dims[q - 1] == 0) {
        cx.diff.push_back(RatMatrix(cx.dims[q - 1], cx.dims[q]));
        continue;
      }
      cx.diff.push_back(operator_matrix(p, ws.coeff_degree(p, m), p + 1, ws.coeff_degree(p + 1, m),
                                        [&](const Chain& ch) { return wedge_dphi(pp, p, ch); }));
    }
    out.push_back(std::move(ws));
  }
  return out;
}

HomologyTable hphi_table(const PoissonPotential& pp, std::size_t D) {
  HomologyTable t;
  const int m = pp.degree();
  for (std::size_t d = 0; d <= D; ++d)
    for (std::size_t p = 0; p <= 3 && p <= d; ++p) t.dims[{p, d}] = 0;
  for (const auto& ws : wedge_slices(pp, D))
    for (std::size_t q = 0; q <= 3; ++q) {
      std::size_t p = 3 - q;
      int c = ws.coeff_degree(p, m);
      if (c < 0 || c + int(p) > int(D)) continue;
      t.dims[{p, std::size_t(c) + p}] = ws.cx.homology_dim(q);
    }
  return t;
}

// --------------------------------------------------------------- families

const std::vector<std::string> family_names{"HP0", "HP1", "HP2", "HP3", "Hphi1", "Hphi2", "Hphi3", "CurlQ"};

namespace {

std::string lbl(const std::string& name, std::initializer_list<int> idx) {
  std::string s = name + "_";
  if (idx.size() > 1) s += "{";
  bool first = true;
  for (int i : idx) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  if (idx.size() > 1) s += "}";
  return s;
}

CPoly m(int i, int j, int k, const Rat& c = Rat(1)) {
  if (i < 0 || j < 0 || k < 0) return CPoly();
  return CPoly::xyz(i, j, k, c);
}

Vec3 A_vec(int k) { return scaled({m(1, 0, 1), CPoly(), m(2, 0, 0, -1)}, m(2 * k, 0, k)); }
Vec3 B_vec(int r) { return {m(0, 0, r + 2), CPoly(), m(1, 0, r + 1, -1)}; }

Vec3 u_vec(int n, int k) {
  return {m(0, k, n + 2 - k, 2 * n + 3), m(1, k - 1, n + 2 - k, -3 * k), m(1, k, n + 1 - k, -2 * n + 3 * (k - 1))};
}

void push1(std::vector<FamilyElement>& out, std::string label, std::size_t p, int c, int shift, std::size_t D,
           Chain ch) {
  if (c < 0 || c + shift > int(D)) return;
  out.push_back({std::move(label), p, std::size_t(c + shift), std::move(ch)});
}

Chain ch3(const Vec3& v) { return {v[0], v[1], v[2]}; }

}  // namespace

std::vector<FamilyElement> family_elements(const std::string& family, std::size_t D, bool extended) {
  std::vector<FamilyElement> out;
  const int Di = int(D);
  if (family == "HP0") {
    for (int a = 0; a + 1 <= Di; ++a) push1(out, "x y^" + std::to_string(a), 0, a + 1, 0, D, {m(1, a, 0)});
    for (int c = 0; c <= Di; ++c)
      for (int a = c; a >= 0; --a)
        push1(out, "y^" + std::to_string(a) + " z^" + std::to_string(c - a), 0, c, 0, D, {m(0, a, c - a)});
  } else if (family == "HP1" || family == "CurlQ") {
    const int shift = family == "HP1" ? 1 : 0;
    for (int k = 0; 3 * k + 2 + shift <= Di; ++k) push1(out, lbl("A", {k}), 1, 3 * k + 2, shift, D, ch3(A_vec(k)));
    for (int r = extended ? -1 : 0; r + 2 + shift <= Di; ++r) push1(out, lbl("B", {r}), 1, r + 2, shift, D, ch3(B_vec(r)));
    for (int n = 0; n + 2 + shift <= Di; ++n)
      for (int k = 1; k <= n + 1; ++k) push1(out, lbl("u", {n, k}), 1, n + 2, shift, D, ch3(u_vec(n, k)));
    if (family == "HP1") {
      for (int mm = 1; mm <= Di; ++mm)
        for (int s = 0; s <= mm; ++s)
          push1(out, lbl("v", {mm, s}), 1, mm - 1, 1, D,
                {CPoly(), m(0, s - 1, mm - s, s), m(0, s, mm - 1 - s, mm - s)});
      for (int p = 0; p + 1 <= Di; ++p) push1(out, lbl("w", {p}), 1, p, 1, D, {m(0, p, 0), m(1, p - 1, 0, p), CPoly()});
    }
  } else if (family == "HP2") {
    for (int r = 0; 3 * r + 3 <= Di; ++r) {
      CPoly f = m(2 * r, 0, r);
      push1(out, lbl("C", {r}), 2, 3 * r + 1, 2, D, {f * m(1, 0, 0), f * m(0, 1, 0), f * m(0, 0, 1)});
      push1(out, lbl("D", {r}), 2, 3 * r + 1, 2, D, {CPoly(), m(2 * r + 1, 0, r), CPoly()});
    }
    for (int t = extended ? -1 : 0; t + 3 <= Di; ++t) push1(out, lbl("E", {t}), 2, t + 1, 2, D, {CPoly(), m(0, 0, t + 1), CPoly()});
    for (int n = 0; n + 3 <= Di; ++n)
      for (int k = 0; k <= n; ++k)
        push1(out, lbl("o", {n, k}), 2, n + 1, 2, D,
              {m(1, k, n - k, k + 1), m(0, k + 1, n - k, 2 * (n - k) + 1), m(0, k, n - k + 1, -2 * (k + 1))});
  } else if (family == "HP3") {
    for (int k = 0; 3 * k + 3 <= Di; ++k) push1(out, "(x^2 z)^" + std::to_string(k), 3, 3 * k, 3, D, {m(2 * k, 0, k)});
  } else if (family == "Hphi1") {
    for (int c = 1; c + 1 <= Di; ++c)
      for (int a = c - 1; a >= 0; --a) {
        CPoly f = m(0, a, c - 1 - a);
        push1(out, "y^" + std::to_string(a) + " z^" + std::to_string(c - 1 - a) + " (2z dx + x dz)", 1, c, 1, D,
              {f * m(0, 0, 1, 2), CPoly(), f * m(1, 0, 0)});
      }
  } else if (family == "Hphi2") {
    for (int c = 0; c + 2 <= Di; ++c) {
      for (int a = c - 1; a >= 0; --a) {
        CPoly f = m(0, a, c - 1 - a);
        push1(out, "y^" + std::to_string(a) + " z^" + std::to_string(c - 1 - a) + " (x dz + 2z dx)^dy", 2, c, 2, D,
              {f * m(1, 0, 0, -1), CPoly(), f * m(0, 0, 1, 2)});
      }
      if (c >= 1) push1(out, "x y^" + std::to_string(c - 1) + " dz^dx", 2, c, 2, D, {CPoly(), m(1, c - 1, 0), CPoly()});
      for (int a = c; a >= 0; --a)
        push1(out, "y^" + std::to_string(a) + " z^" + std::to_string(c - a) + " dz^dx", 2, c, 2, D,
              {CPoly(), m(0, a, c - a), CPoly()});
    }
  } else if (family == "Hphi3") {
    for (int c = 0; c + 3 <= Di; ++c) {
      if (c >= 1) push1(out, "x y^" + std::to_string(c - 1), 3, c, 3, D, {m(1, c - 1, 0)});
      for (int a = c; a >= 0; --a)
        push1(out, "y^" + std::to_string(a) + " z^" + std::to_string(c - a), 3, c, 3, D, {m(0, a, c - a)});
    }
  } else {
    throw Error("unknown family '" + family + "'");
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.degree < b.degree; });
  return out;
}

// ------------------------------------------------------------ verification

namespace {

// {grad G : G in T_{e+1}} + {H grad phi : H in T_{e+1-m}}
EchelonBuilder curl_quotient_denominator(const PoissonPotential& pp, int e) {
  EchelonBuilder eb(3 * monomial_count(e));
  for (const auto& g : monomials(e + 1)) eb.add(chain_coords(ch3(grad(CPoly::monomial(g))), e));
  for (const auto& h : monomials(e + 1 - pp.degree()))
    eb.add(chain_coords(ch3(scaled(pp.gradient(), CPoly::monomial(h))), e));
  return eb;
}

RatMatrix delta1_matrix(const PoissonPotential& pp, int e) {
  return operator_matrix(1, e, 0, e + pp.weight(), [&](const Chain& ch) { return delta(pp, 1, ch); });
}

bool is_jordan(const PoissonPotential& pp) { return pp.phi() == CPoly::xyz(2, 0, 1, Rat(-1)); }

}  // namespace

std::size_t curl_quotient_dim(const PoissonPotential& pp, int e) {
  if (e < 0) return 0;
  std::size_t z = 3 * monomial_count(e) - rank(delta1_matrix(pp, e));
  return z - curl_quotient_denominator(pp, e).rank();
}

FamilyReport verify_family(const PoissonPotential& pp, const std::string& family, std::size_t D, bool extended) {
  if (!is_jordan(pp)) throw Error("listed families belong to phi = -x^2 z");
  FamilyReport rep;
  rep.family = family;
  rep.extended = extended;
  auto elems = family_elements(family, D, extended);
  const bool hp = family.rfind("HP", 0) == 0, hphi = family.rfind("Hphi", 0) == 0;
  const std::size_t p = family == "CurlQ" ? 1 : std::size_t(family.back() - '0');

  std::vector<ComplexSlice> bry;
  std::vector<WedgeSlice> wedge;
  if (hp) bry = brylinski_slices(pp, D);
  if (hphi) wedge = wedge_slices(pp, D);
  const int m = pp.degree();

  std::size_t d0 = hp || hphi ? p : 0;
  for (std::size_t d = d0; d <= D; ++d) {
    FamilyDegree fd;
    fd.degree = d;
    std::vector<SparseVec> coords;
    std::vector<const FamilyElement*> here;
    for (const auto& el : elems)
      if (el.degree == d) here.push_back(&el);
    fd.listed = here.size();
    const int c = family == "CurlQ" ? int(d) : int(d) - (hp ? pp.weight() * int(p) : int(p));
    for (const auto* el : here) coords.push_back(chain_coords(el->chain, c));

    if (hp) {
      const ComplexSlice& s = bry.at(d);
      for (std::size_t i = 0; i < here.size(); ++i)
        if (p > 0 && !(s.diff[p] * RatMatrix::from_columns(s.dims[p], {coords[i]})).is_zero()) {
          fd.cycles = false;
          rep.failures.push_back(here[i]->label + " is not a cycle");
        }
      fd.computed = s.homology_dim(p);
      fd.independent = s.rank_mod_boundaries(p, coords);
    } else if (hphi) {
      const std::size_t q = 3 - p;
      const int s_idx = c - (m - 1) * int(p);
      const WedgeSlice* ws = nullptr;
      for (const auto& w : wedge)
        if (w.s == s_idx) ws = &w;
      if (!ws) continue;
      for (std::size_t i = 0; i < here.size(); ++i)
        if (q > 0 && !(ws->cx.diff[q] * RatMatrix::from_columns(ws->cx.dims[q], {coords[i]})).is_zero()) {
          fd.cycles = false;
          rep.failures.push_back(here[i]->label + " is not closed under wedge with d phi");
        }
      fd.computed = ws->cx.homology_dim(q);
      fd.independent = ws->cx.rank_mod_boundaries(q, coords);
    } else {
      RatMatrix d1 = delta1_matrix(pp, c);
      for (std::size_t i = 0; i < here.size(); ++i)
        if (!(d1 * RatMatrix::from_columns(3 * monomial_count(c), {coords[i]})).is_zero()) {
          fd.cycles = false;
          rep.failures.push_back(here[i]->label + " fails grad phi . curl F = 0");
        }
      EchelonBuilder eb = curl_quotient_denominator(pp, c);
      std::size_t r = 0;
      for (const auto& v : coords)
        if (eb.add(v)) ++r;
      fd.independent = r;
      fd.computed = curl_quotient_dim(pp, c);
    }
    if (fd.independent != fd.listed)
      rep.failures.push_back("degree " + std::to_string(d) + ": " + std::to_string(fd.listed) +
                             " listed elements have rank " + std::to_string(fd.independent) + " in homology");
    if (fd.listed != fd.computed)
      rep.failures.push_back("degree " + std::to_string(d) + ": listed " + std::to_string(fd.listed) +
                             ", computed dimension " + std::to_string(fd.computed));
    rep.degrees.push_back(fd);
  }
  return rep;
}

CheckResult casimir_kernel_check(const PoissonPotential& pp, std::size_t D) {
  CheckResult r{"Casimir kernel", true, ""};
  for (int e = 0; e <= int(D); ++e) {
    RatMatrix M = operator_matrix(3, e, 2, e + pp.weight(), [&](const Chain& ch) { return delta(pp, 3, ch); });
    Subspace K = kernel_basis(M);
    bool ok;
    if (e % pp.degree() == 0) {
      SparseVec v = chain_coords({pp.phi().pow(unsigned(e / pp.degree()))}, e);
      ok = K.dim() == 1 && K.contains(v);
    } else {
      ok = K.dim() == 0;
    }
    if (!ok) {
      r.pass = false;
      r.detail += "degree " + std::to_string(e) + ": kernel dim " + std::to_string(K.dim()) + "; ";
    }
  }
  if (r.pass) r.detail = "kernel is the phi-power line in every degree <= " + std::to_string(D);
  return r;
}

CheckResult poisson_complexes_check(const PoissonPotential& pp, std::size_t D) {
  CheckResult r{"poisson complexes d o d = 0", true, ""};
  for (const auto& s : brylinski_slices(pp, D))
    if (!s.squares_to_zero()) {
      r.pass = false;
      r.detail += "delta o delta != 0 at degree " + std::to_string(s.degree) + "; ";
    }
  for (const auto& ws : wedge_slices(pp, D))
    if (!ws.cx.squares_to_zero()) {
      r.pass = false;
      r.detail += "(^dphi)^2 != 0 at s = " + std::to_string(ws.s) + "; ";
    }
  if (r.pass) r.detail = "both complexes square to zero up to degree " + std::to_string(D);
  return r;
}

}  // namespace potentia
