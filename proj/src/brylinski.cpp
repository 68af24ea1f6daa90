#include "potentia/brylinski.hpp"

#include <algorithm>
#include <sstream>

namespace potentia {

namespace {

std::string exp_str(const Exp& e) {
  std::ostringstream os;
  os << "(" << e[0] << "," << e[1] << "," << e[2] << ")";
  return os.str();
}

std::string chain_str(const Chain& ch) {
  if (ch.size() == 1) return render(ch[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < ch.size(); ++i) s += (i ? ", " : "") + render(ch[i]);
  return s + ")";
}

bool chain_zero(const Chain& ch) {
  return std::all_of(ch.begin(), ch.end(), [](const CPoly& c) { return c.is_zero(); });
}

}  // namespace

// ---------------------------------------------------------------- bridge

JordanBridge::JordanBridge(std::size_t D) : pp_(jordan_poisson()), kc_(build_B(jordan_matrix()), D) {
  const auto& alg = kc_.algebra();
  exps_.resize(D + 1);
  for (std::size_t k = 0; k <= D; ++k)
    for (const auto& w : alg.basis(k)) {
      if (!std::is_sorted(w.begin(), w.end())) throw Error("basis word of B is not x^i y^j z^k");
      Exp e{0, 0, 0};
      for (int g : w) ++e[std::size_t(g)];
      exps_[k].push_back(e);
    }
}

int JordanBridge::slot_weight(std::size_t p, std::size_t slot) {
  switch (p) {
    case 0: return 0;
    case 1: return slot == 1 ? 1 : 0;
    case 2: return slot == 1 ? 0 : 1;
    case 3: return 1;
  }
  throw Error("chain index above 3");
}

std::size_t JordanBridge::coordinate(std::size_t p, std::size_t d, const Exp& e, std::size_t slot) const {
  auto k = kc_.coeff_degree(p, d);
  if (!k || std::size_t(e[0] + e[1] + e[2]) != *k || slot >= kc_.slots(p))
    throw Error("monomial " + exp_str(e) + " does not fit C_" + std::to_string(p) + " in degree " + std::to_string(d));
  Word w;
  for (int g = 0; g < 3; ++g) w.insert(w.end(), std::size_t(e[std::size_t(g)]), g);
  auto b = kc_.algebra().index_of(w);
  if (!b) throw Error("x^i y^j z^k is not a basis word");
  return slot * kc_.algebra().dim(*k) + *b;
}

Chain JordanBridge::to_poisson(std::size_t p, std::size_t d, const SparseVec& v) const {
  Chain ch(kc_.slots(p));
  auto k = kc_.coeff_degree(p, d);
  if (!k) return ch;
  const std::size_t dk = kc_.algebra().dim(*k);
  for (const auto& [idx, c] : v) ch[idx / dk].add_term(exps_[*k][idx % dk], c);
  return ch;
}

SparseVec JordanBridge::from_poisson(std::size_t p, std::size_t d, const Chain& ch) const {
  if (ch.size() != kc_.slots(p)) throw Error("chain has the wrong number of components");
  SparseVec v;
  for (std::size_t s = 0; s < ch.size(); ++s)
    for (const auto& [e, c] : ch[s].terms()) v.emplace_back(coordinate(p, d, e, s), c);
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

int JordanBridge::filtration(std::size_t p, std::size_t d, const SparseVec& v) const {
  return filtration(p, to_poisson(p, d, v));
}

int JordanBridge::filtration(std::size_t p, const Chain& ch) {
  int f = -1;
  for (std::size_t s = 0; s < ch.size(); ++s)
    for (const auto& [e, c] : ch[s].terms()) f = std::max(f, e[1] + slot_weight(p, s));
  return f;
}

Chain JordanBridge::graded_part(std::size_t p, std::size_t d, const SparseVec& v, int level) const {
  Chain all = to_poisson(p, d, v), top(all.size());
  for (std::size_t s = 0; s < all.size(); ++s)
    for (const auto& [e, c] : all[s].terms())
      if (e[1] + slot_weight(p, s) == level) top[s].add_term(e, c);
  return top;
}

SparseVec JordanBridge::differential(std::size_t p, std::size_t d, const SparseVec& v) const {
  if (p == 0) return {};
  return kc_.slice(d).differential(p).apply(v);
}

// ---------------------------------------------------------- gr identities

std::vector<CheckResult> gr_compare(const JordanBridge& br, std::size_t D) {
  if (br.max_degree() < D + 3) throw Error("bridge degree must be at least D + 3");
  static const char* names[3][3] = {{"(x) x", "(x) y", "(x) z"}, {"(x) r1", "(x) r2", "(x) r3"}, {"(x) c(w)", "", ""}};
  std::vector<CheckResult> out;
  CheckResult drop{"d~ lowers the y-filtration by one", true, ""};
  std::size_t generic = 0, total = 0;
  for (std::size_t p = 1; p <= 3; ++p)
    for (std::size_t slot = 0; slot < (p == 3 ? 1u : 3u); ++slot) {
      CheckResult r{"gr d" + std::to_string(p) + " on x^i y^j z^k " + names[p - 1][slot], true, ""};
      std::size_t count = 0, bad = 0;
      for (int t = 0; t <= int(D); ++t)
        for (int i = t; i >= 0; --i)
          for (int j = t - i; j >= 0; --j) {
            Exp e{i, j, t - i - j};
            const std::size_t d = std::size_t(t) + p;
            SparseVec v{{br.coordinate(p, d, e, slot), Rat(1)}};
            SparseVec img = br.differential(p, d, v);
            const int F = e[1] + JordanBridge::slot_weight(p, slot);
            const int Fo = br.filtration(p - 1, d, img);
            Chain lhs = br.graded_part(p - 1, d, img, F - 1);
            Chain rhs = delta(br.poisson(), p, br.to_poisson(p, d, v));
            ++count;
            ++total;
            if (!(lhs == rhs)) {
              if (++bad <= 3)
                r.detail += "(i,j,k)=" + exp_str(e) + ": gr " + chain_str(lhs) + " vs delta " + chain_str(rhs) + "; ";
              r.pass = false;
            }
            const bool exact = !img.empty() && Fo == F - 1;
            if (Fo > F - 1 || exact != !chain_zero(rhs)) {
              if (drop.pass) drop.detail = "first at p=" + std::to_string(p) + " " + exp_str(e) + "; ";
              drop.pass = false;
            }
            if (exact) ++generic;
          }
      if (r.pass)
        r.detail = std::to_string(count) + " monomials with i+j+k <= " + std::to_string(D);
      else
        r.detail = std::to_string(bad) + " of " + std::to_string(count) + " differ: " + r.detail;
      out.push_back(std::move(r));
    }
  drop.detail += std::to_string(total) + " basis chains, drop exactly one on the " + std::to_string(generic) +
                 " with nonzero delta, more only where delta vanishes";
  out.push_back(std::move(drop));
  return out;
}

// ------------------------------------------------------------------ lifts

const std::vector<std::string> lift_families = {"A", "B", "U", "V", "W", "C", "D", "E", "O", "top"};

namespace {

struct Term {
  Rat c;
  int i, j, k;
  std::size_t slot;
};

// a! / b!
Rat fact_ratio(int a, int b) {
  Rat r(1);
  for (int t = b + 1; t <= a; ++t) r *= t;
  return r;
}

long a_nkl(long n, long k, long l) { return -2 * n - 6 + 6 * k - 3 * l + 2 * n * (k - l) - 3 * k * (k - l); }

// X_{a,b,c} = x^a y^b z^c (x) y - 2c x^a y^b z^c (x) x
void push_X(std::vector<Term>& t, const Rat& s, int a, int b, int c) {
  t.push_back({s, a, b, c, 1});
  t.push_back({s * Rat(-2 * c), a, b, c, 0});
}

std::vector<Term> u_terms(int n, int k) {
  std::vector<Term> t;
  t.push_back({Rat(2 * n + 3), 0, k, n + 2 - k, 0});
  t.push_back({Rat(-3 * k), 1, k - 1, n + 2 - k, 1});
  t.push_back({Rat(-2 * n + 3 * (k - 1)), 1, k, n + 1 - k, 2});
  const int c = n + 2 - k;
  if (3 * k - 2 * (n + 2) < 0) {
    for (int l = 0; l <= k - 2; ++l)
      push_X(t, -fact_ratio(k, l) * make_rat(a_nkl(n, k, l), 2 * (n + 2 - k) - (k - l)), k - l, l, c);
  } else {
    const int L = 3 * k - 4 - 2 * n;
    const long aL = a_nkl(n, k, L);
    for (int l = 0; l <= L - 1; ++l) push_X(t, fact_ratio(k, l) * make_rat(aL - a_nkl(n, k, l), l - L), k - l, l, c);
    for (int l = L + 1; l <= k - 2; ++l) push_X(t, -fact_ratio(k, l) * make_rat(a_nkl(n, k, l), l - L), k - l, l, c);
    t.push_back({-fact_ratio(k, L + 1) * Rat(aL), 2 * n + 3 - 2 * k, 3 * k - 3 - 2 * n, n + 2 - k, 0});
  }
  return t;
}

std::vector<Term> v_terms(int m, int s) {
  std::vector<Term> t;
  if (s >= 1) t.push_back({Rat(s), 0, s - 1, m - s, 1});
  if (m - s >= 1) t.push_back({Rat(m - s), 0, s, m - 1 - s, 2});
  for (int l = 0; l <= s - 2; ++l)
    t.push_back({make_rat(m - s, 2 * (m - s) - 1) * fact_ratio(s, l), s - l - 1, l, m - s, 1});
  return t;
}

std::vector<Term> w_terms(int p) {
  std::vector<Term> t;
  for (int k = 0; k <= p; ++k) t.push_back({fact_ratio(p, k), p - k, k, 0, 0});
  for (int k = 0; k <= p - 1; ++k) t.push_back({fact_ratio(p, k), p - k, k, 0, 1});
  return t;
}

std::vector<Term> o_terms(int n, int k) {
  std::vector<Term> t;
  t.push_back({Rat(k + 1), 1, k, n - k, 0});
  t.push_back({Rat(2 * (n - k) + 1), 0, k + 1, n - k, 1});
  t.push_back({Rat(-2 * (k + 1)), 0, k, n - k + 1, 2});
  for (int j = 0; j <= k - 1; ++j) t.push_back({-fact_ratio(k + 1, j), k - j, j, n + 1 - k, 2});
  return t;
}

std::string label_of(const std::string& name, const std::vector<int>& idx) {
  std::string s = name + "_";
  if (idx.size() > 1) s += "{";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
  if (idx.size() > 1) s += "}";
  return s;
}

void need(bool ok, const std::string& what) {
  if (!ok) throw Error("lift parameters out of range: " + what);
}

}  // namespace

LiftRecord build_lift(const JordanBridge& br, const std::string& family, const std::vector<int>& params,
                      bool extended) {
  LiftRecord rec;
  rec.family = family;
  rec.params = params;
  std::vector<Term> terms;
  std::string pfam, plabel;
  auto arity = [&](std::size_t n) { need(params.size() == n, family + " takes " + std::to_string(n) + " parameters"); };
  if (family == "A") {
    arity(1);
    int k = params[0];
    need(k >= 0, "A_k needs k >= 0");
    terms = {{Rat(1), 2 * k + 1, 0, k + 1, 0}, {Rat(-1), 2 * k + 2, 0, k, 2}};
    rec.p = 1, rec.degree = std::size_t(3 * k + 3), pfam = "HP1", plabel = label_of("A", params);
  } else if (family == "B") {
    arity(1);
    int r = params[0];
    need(r >= (extended ? -1 : 0), "B_r needs r >= 0");
    terms = {{Rat(1), 0, 0, r + 2, 0}, {Rat(-1), 1, 0, r + 1, 2}};
    rec.p = 1, rec.degree = std::size_t(r + 3), pfam = "HP1", plabel = label_of("B", params);
  } else if (family == "U") {
    arity(2);
    int n = params[0], k = params[1];
    need(n >= 0 && k >= 1 && k <= n + 1, "U_{n,k} needs 1 <= k <= n+1");
    terms = u_terms(n, k);
    rec.p = 1, rec.degree = std::size_t(n + 3), pfam = "HP1", plabel = label_of("u", params);
  } else if (family == "V") {
    arity(2);
    int m = params[0], s = params[1];
    need(m >= 1 && s >= 0 && s <= m, "V_{m,s} needs m >= 1, 0 <= s <= m");
    terms = v_terms(m, s);
    rec.p = 1, rec.degree = std::size_t(m), pfam = "HP1", plabel = label_of("v", params);
  } else if (family == "W") {
    arity(1);
    need(params[0] >= 0, "W_p needs p >= 0");
    terms = w_terms(params[0]);
    rec.p = 1, rec.degree = std::size_t(params[0] + 1), pfam = "HP1", plabel = label_of("w", params);
  } else if (family == "C") {
    arity(1);
    int r = params[0];
    need(r >= 0, "C_r needs r >= 0");
    terms = {{Rat(1), 2 * r + 1, 0, r, 0}, {Rat(1), 2 * r, 1, r, 1}, {Rat(1), 2 * r, 0, r + 1, 2}};
    rec.p = 2, rec.degree = std::size_t(3 * r + 3), pfam = "HP2", plabel = label_of("C", params);
  } else if (family == "D") {
    arity(1);
    int s = params[0];
    need(s >= 0, "D_s needs s >= 0");
    terms = {{Rat(1), 2 * s + 1, 0, s, 1}};
    rec.p = 2, rec.degree = std::size_t(3 * s + 3), pfam = "HP2", plabel = label_of("D", params);
  } else if (family == "E") {
    arity(1);
    int t = params[0];
    need(t >= (extended ? -1 : 0), "E_t needs t >= 0");
    terms = {{Rat(1), 0, 0, t + 1, 1}};
    rec.p = 2, rec.degree = std::size_t(t + 3), pfam = "HP2", plabel = label_of("E", params);
  } else if (family == "O") {
    arity(2);
    int n = params[0], k = params[1];
    need(n >= 0 && k >= 0 && k <= n, "O_{n,k} needs 0 <= k <= n");
    terms = o_terms(n, k);
    rec.p = 2, rec.degree = std::size_t(n + 3), pfam = "HP2", plabel = label_of("o", params);
  } else if (family == "top") {
    arity(1);
    int k = params[0];
    need(k >= 0, "top needs k >= 0");
    terms = {{Rat(1), 2 * k, 0, k, 0}};
    rec.p = 3, rec.degree = std::size_t(3 * k + 3), pfam = "HP3", plabel = "(x^2 z)^" + std::to_string(k);
  } else {
    throw Error("unknown lift family '" + family + "'");
  }
  if (rec.degree > br.max_degree()) throw Error("lift " + plabel + " lies above the bridge degree");
  rec.label = plabel;

  Chain ch(br.koszul().slots(rec.p));
  for (const auto& t : terms) {
    if (t.c == 0) continue;
    ch[t.slot] = ch[t.slot] + CPoly::xyz(t.i, t.j, t.k, t.c);
  }
  rec.chain = br.from_poisson(rec.p, rec.degree, ch);

  for (const auto& fe : family_elements(pfam, rec.degree, true))
    if (fe.label == plabel) rec.target = fe.chain;
  if (rec.target.empty()) throw Error("no listed cycle " + plabel);
  return rec;
}

bool verify_lift(const JordanBridge& br, const LiftRecord& rec) {
  if (!br.differential(rec.p, rec.degree, rec.chain).empty()) return false;
  const int L = JordanBridge::filtration(rec.p, rec.target);
  return br.filtration(rec.p, rec.degree, rec.chain) == L && br.graded_part(rec.p, rec.degree, rec.chain, L) == rec.target;
}

std::optional<SparseVec> lift_by_solver(const JordanBridge& br, std::size_t p, const Chain& target) {
  if (p > 3 || target.size() != br.koszul().slots(p)) throw Error("target is not a Poisson chain of this index");
  int c = -1;
  for (const auto& comp : target) {
    if (comp.is_zero()) continue;
    if (!comp.is_homogeneous() || (c >= 0 && comp.degree() != c))
      throw Error("lift target must be homogeneous");
    c = comp.degree();
  }
  if (c < 0) return SparseVec{};
  if (!chain_zero(delta(br.poisson(), p, target))) throw Error("lift target is not a cycle");
  const std::size_t d = std::size_t(c) + p;
  if (d > br.max_degree()) throw Error("lift target lies above the bridge degree");
  SparseVec t0 = br.from_poisson(p, d, target);
  if (p == 0) return t0;
  const int L = JordanBridge::filtration(p, target);

  // unknowns: basis chains of filtration below L
  const RatMatrix dm = br.koszul().slice(d).differential(p);
  const RatMatrix dt = dm.transposed();
  std::vector<std::size_t> cols;
  std::vector<SparseVec> colv;
  for (std::size_t idx = 0; idx < br.chain_dim(p, d); ++idx)
    if (br.filtration(p, d, SparseVec{{idx, Rat(1)}}) < L) {
      cols.push_back(idx);
      colv.push_back(dt.row(idx));
    }
  SparseVec rhs = sv::scaled(dm.apply(t0), Rat(-1));
  if (cols.empty()) {
    if (rhs.empty()) return t0;
    return std::nullopt;
  }
  auto y = solve(RatMatrix::from_columns(dm.rows(), colv), rhs);
  if (!y) return std::nullopt;
  SparseVec low;
  for (const auto& [i, v] : *y) low.emplace_back(cols[i], v);
  return sv::sum(t0, low);
}

std::vector<LiftOutcome> lift_suite(const JordanBridge& br, std::size_t D, bool extended) {
  const int Di = int(std::min(D, br.max_degree()));
  std::vector<std::pair<std::string, std::vector<int>>> jobs;
  for (int k = 0; 3 * k + 3 <= Di; ++k) jobs.push_back({"A", {k}});
  for (int r = extended ? -1 : 0; r + 3 <= Di; ++r) jobs.push_back({"B", {r}});
  for (int n = 0; n + 3 <= Di; ++n)
    for (int k = 1; k <= n + 1; ++k) jobs.push_back({"U", {n, k}});
  for (int m = 1; m <= Di; ++m)
    for (int s = 0; s <= m; ++s) jobs.push_back({"V", {m, s}});
  for (int p = 0; p + 1 <= Di; ++p) jobs.push_back({"W", {p}});
  for (int r = 0; 3 * r + 3 <= Di; ++r) jobs.push_back({"C", {r}});
  for (int s = 0; 3 * s + 3 <= Di; ++s) jobs.push_back({"D", {s}});
  for (int t = extended ? -1 : 0; t + 3 <= Di; ++t) jobs.push_back({"E", {t}});
  for (int n = 0; n + 3 <= Di; ++n)
    for (int k = 0; k <= n; ++k) jobs.push_back({"O", {n, k}});
  for (int k = 0; 3 * k + 3 <= Di; ++k) jobs.push_back({"top", {k}});

  std::vector<LiftOutcome> out;
  for (const auto& [fam, ps] : jobs) {
    LiftOutcome o;
    o.record = build_lift(br, fam, ps, extended);
    o.extension = (fam == "B" || fam == "E") && ps[0] < 0;
    o.formula_ok = verify_lift(br, o.record);
    o.solver = lift_by_solver(br, o.record.p, o.record.target);
    if (o.formula_ok && o.solver) {
      SparseVec diff = sv::difference(o.record.chain, *o.solver);
      o.agrees_with_solver = br.differential(o.record.p, o.record.degree, diff).empty() &&
                             br.filtration(o.record.p, o.record.degree, diff) <
                                 JordanBridge::filtration(o.record.p, o.record.target);
    }
    out.push_back(std::move(o));
  }
  return out;
}

CheckResult summarize_lifts(const std::vector<LiftOutcome>& out) {
  CheckResult r{"lifts of the listed Poisson cycles", true, ""};
  std::size_t ok = 0, ext = 0;
  std::string flagged, unresolved, disagree;
  for (const auto& o : out) {
    if (o.extension) ++ext;
    if (o.formula_ok) {
      ++ok;
      if (!o.agrees_with_solver) disagree += o.record.label + " ";
    } else if (o.solver) {
      flagged += o.record.label + " ";
    } else {
      unresolved += o.record.label + " ";
    }
  }
  r.pass = unresolved.empty() && disagree.empty();
  r.detail = std::to_string(ok) + " of " + std::to_string(out.size()) + " formulas verified";
  if (ext) r.detail += " (" + std::to_string(ext) + " outside the listed ranges)";
  if (!flagged.empty()) r.detail += "; formula failed, solver witness used: " + flagged;
  if (!unresolved.empty()) r.detail += "; no lift found: " + unresolved;
  if (!disagree.empty()) r.detail += "; formula and solver witness disagree on top part: " + disagree;
  return r;
}

// ------------------------------------------------------------ comparisons

namespace {

HomologyTable empty_table(std::size_t D) {
  HomologyTable t;
  for (std::size_t p = 0; p <= 3; ++p)
    for (std::size_t d = 0; d <= D; ++d) t.dims[{p, d}] = 0;
  return t;
}

HomologyTable truncate(const HomologyTable& t, std::size_t D) {
  HomologyTable out = empty_table(D);
  for (const auto& [k, v] : t.dims)
    if (k.second <= D && k.first <= 3) out.dims[k] = v;
  return out;
}

CheckResult compare_tables(std::string name, const HomologyTable& a, const char* an, const HomologyTable& b,
                           const char* bn, std::size_t D) {
  CheckResult r{std::move(name), true, ""};
  std::size_t bad = 0;
  for (std::size_t p = 0; p <= 3; ++p)
    for (std::size_t d = 0; d <= D; ++d)
      if (a.at(p, d) != b.at(p, d)) {
        r.pass = false;
        if (++bad <= 6)
          r.detail += "p=" + std::to_string(p) + " d=" + std::to_string(d) + ": " + an + " " +
                      std::to_string(a.at(p, d)) + ", " + bn + " " + std::to_string(b.at(p, d)) + "; ";
      }
  if (r.pass)
    r.detail = "equal for p <= 3, d <= " + std::to_string(D);
  else
    r.detail = std::to_string(bad) + " mismatches: " + r.detail;
  return r;
}

CheckResult length_check(const std::vector<ComplexSlice>& slices) {
  CheckResult r{"HH_p = 0 for p >= 4", true, "Koszul complex has length 3"};
  for (const auto& s : slices)
    if (s.top() > 3) {
      r.pass = false;
      r.detail = "slice " + std::to_string(s.degree) + " has chains above index 3";
    }
  return r;
}

}  // namespace

HomologyTable listed_basis_counts(std::size_t D, bool extended) {
  HomologyTable t = empty_table(D);
  for (const char* f : {"HP0", "HP1", "HP2", "HP3"})
    for (const auto& e : family_elements(f, D, extended)) ++t.dims[{e.p, e.degree}];
  return t;
}

HomologyTable quantum_basis_counts(std::size_t D) {
  HomologyTable t = empty_table(D);
  auto add = [&](std::size_t p, std::size_t d) {
    if (d <= D) ++t.dims[{p, d}];
  };
  for (std::size_t m = 0; 3 * m <= D; ++m) {
    add(0, 3 * m);  // Z
    for (int g = 0; g < 3; ++g) {
      add(1, 3 * m + 3);  // (product of the other two) Z (x) g
      add(2, 3 * m + 3);  // g Z (x) (wedge of the other two)
    }
    add(3, 3 * m + 3);  // Z (x) (x^y^z)
  }
  for (std::size_t a = 1; a <= D; ++a)
    for (int g = 0; g < 3; ++g) {
      add(0, a);  // g Q[g]
      add(1, a);  // g^{a-1} (x) g
    }
  return t;
}

ComparisonReport degeneration_check(const JordanBridge& br, std::size_t D) {
  if (br.max_degree() < D) throw Error("bridge degree below D");
  ComparisonReport rep;
  rep.hh = truncate(br.koszul().homology(), D);
  rep.hp = hp_table(br.poisson(), D);
  rep.checks.push_back(compare_tables("HH(B) = HP(T)", rep.hh, "HH", rep.hp, "HP", D));
  rep.checks.push_back(compare_tables("HH(B) = listed basis counts", rep.hh, "HH", listed_basis_counts(D, false),
                                      "listed", D));
  rep.checks.push_back(compare_tables("HH(B) = listed counts with B_{-1}, E_{-1}", rep.hh, "HH",
                                      listed_basis_counts(D, true), "listed", D));
  rep.checks.push_back(length_check(br.koszul().slices()));
  return rep;
}

ComparisonReport quantum_compare(const Rat& q, std::size_t D) {
  if (q == 0 || q == 1 || q == -1) throw Error("quantum parameter must avoid 0, 1, -1");
  KoszulComplex kc(build_B(quantum_matrix(q)), D);
  ComparisonReport rep;
  rep.hh = truncate(kc.homology(), D);
  rep.hp = hp_table(quantum_poisson(q), D);
  auto counts = quantum_basis_counts(D);
  rep.checks.push_back(compare_tables("quantum HH(B) = basis counts", rep.hh, "HH", counts, "listed", D));
  rep.checks.push_back(compare_tables("quantum HP(T) = basis counts", rep.hp, "HP", counts, "listed", D));
  rep.checks.push_back(compare_tables("quantum HH(B) = HP(T)", rep.hh, "HH", rep.hp, "HP", D));
  rep.checks.push_back(length_check(kc.slices()));
  return rep;
}

}  // namespace potentia
