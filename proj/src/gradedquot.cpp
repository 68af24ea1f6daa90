#include "potentia/gradedquot.hpp"

#include <algorithm>

namespace potentia {

void QuadraticPresentation::validate() const {
  if (!gens) throw Error("presentation without generators");
  for (const auto& r : relations) {
    if (r.gens() != gens && !(*r.gens() == *gens)) throw Error("relation over a different generator set");
    if (r.is_zero()) continue;
    if (!r.is_homogeneous() || r.degree() != 2) throw Error("relation is not homogeneous quadratic: " + render(r));
  }
}

std::size_t word_rank(const Word& w, std::size_t ngens) {
  std::size_t r = 0;
  for (int g : w) r = r * ngens + static_cast<std::size_t>(g);
  return r;
}

Word word_unrank(std::size_t idx, std::size_t len, std::size_t ngens) {
  Word w(len);
  for (std::size_t i = len; i-- > 0;) {
    w[i] = static_cast<int>(idx % ngens);
    idx /= ngens;
  }
  return w;
}

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

void sort_vec(SparseVec& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}

}  // namespace

Subspace relation_span(const QuadraticPresentation& pres, std::size_t d) {
  pres.validate();
  const std::size_t m = pres.gens->size();
  const std::size_t N = ipow(m, d);
  EchelonBuilder eb(N);
  if (d < 2) return eb.finish();
  for (std::size_t left = 0; left + 2 <= d; ++left) {
    const std::size_t right = d - 2 - left;
    const std::size_t nl = ipow(m, left), nr = ipow(m, right);
    for (const auto& r : pres.relations)
      for (std::size_t u = 0; u < nl; ++u)
        for (std::size_t v = 0; v < nr; ++v) {
          SparseVec row;
          for (const auto& [w, c] : r.terms()) {
            std::size_t idx = (u * m * m + word_rank(w, m)) * nr + v;
            row.emplace_back(N - 1 - idx, c);
          }
          sort_vec(row);
          eb.add(row);
        }
  }
  return eb.finish();
}

SparseVec ambient_coords(const NcPoly& p, std::size_t d) {
  const std::size_t m = p.gens()->size();
  const std::size_t N = ipow(m, d);
  SparseVec v;
  for (const auto& [w, c] : p.terms()) {
    if (w.size() != d) throw Error("polynomial not homogeneous of the requested degree");
    v.emplace_back(N - 1 - word_rank(w, m), c);
  }
  sort_vec(v);
  return v;
}

std::size_t graded_dim(const QuadraticPresentation& pres, std::size_t d) {
  return ipow(pres.gens->size(), d) - relation_span(pres, d).dim();
}

// ----------------------------------------------------------- GradedAlgebra

GradedAlgebra::GradedAlgebra(QuadraticPresentation pres, std::size_t max_degree) : pres_(std::move(pres)) {
  pres_.validate();
  QuotientSlice s0;
  s0.basis = {Word{}};
  s0.prefix = {0};
  s0.ambient_dim = 1;
  s0.relations = EchelonBuilder(1).finish();
  slices_.push_back(std::move(s0));
  index_.push_back({{0, 0}});
  extend_to(max_degree);
}

void GradedAlgebra::extend_to(std::size_t d) {
  while (max_degree() < d) build_next();
}

const QuotientSlice& GradedAlgebra::slice(std::size_t d) const {
  if (d > max_degree()) throw Error("degree " + std::to_string(d) + " beyond built range");
  return slices_[d];
}

void GradedAlgebra::build_next() {
  const std::size_t d = slices_.size();
  const std::size_t m = ngens();
  const QuotientSlice& prev = slices_[d - 1];
  const std::size_t N = prev.dim() * m;

  EchelonBuilder eb(N);
  if (d >= 2) {
    const std::size_t pp = d - 2;
    for (std::size_t a = 0; a < slices_[pp].dim(); ++a)
      for (const auto& r : pres_.relations) {
        SparseVec row;
        for (const auto& [w, c] : r.terms()) {
          const SparseVec& ag = rmul_[pp][static_cast<std::size_t>(w[0])][a];
          for (const auto& [b, cb] : ag) row.emplace_back(N - 1 - (b * m + static_cast<std::size_t>(w[1])), c * cb);
        }
        sort_vec(row);
        // merge duplicate indices
        SparseVec merged;
        for (auto& e : row) {
          if (!merged.empty() && merged.back().first == e.first)
            merged.back().second += e.second;
          else
            merged.push_back(std::move(e));
        }
        std::erase_if(merged, [](const auto& e) { return e.second == 0; });
        eb.add(merged);
      }
  }

  QuotientSlice s;
  s.degree = d;
  s.ambient_dim = N;
  s.relations = eb.finish();
  std::vector<long> coset_of(N, -1);  // ambient index -> coset index
  {
    std::vector<bool> pivot(N, false);
    for (std::size_t c : s.relations.pivot_cols) pivot[c] = true;
    for (std::size_t idx = 0; idx < N; ++idx) {
      if (pivot[N - 1 - idx]) continue;
      coset_of[idx] = static_cast<long>(s.basis.size());
      std::size_t b = idx / m;
      Word w = prev.basis[b];
      w.push_back(static_cast<int>(idx % m));
      s.basis.push_back(std::move(w));
      s.prefix.push_back(b);
    }
  }

  std::unordered_map<std::size_t, std::size_t> index;
  for (std::size_t i = 0; i < s.basis.size(); ++i) index.emplace(word_rank(s.basis[i], m), i);

  // right multiplication B_{d-1} -> B_d
  std::vector<std::vector<SparseVec>> rm(m, std::vector<SparseVec>(prev.dim()));
  for (std::size_t b = 0; b < prev.dim(); ++b)
    for (std::size_t g = 0; g < m; ++g) {
      std::size_t idx = b * m + g;
      SparseVec red = reduce_mod(s.relations, {{N - 1 - idx, Rat(1)}});
      SparseVec out;
      out.reserve(red.size());
      for (auto& [c, v] : red) out.emplace_back(static_cast<std::size_t>(coset_of[N - 1 - c]), std::move(v));
      sort_vec(out);
      rm[g][b] = std::move(out);
    }
  rmul_.push_back(std::move(rm));
  slices_.push_back(std::move(s));
  index_.push_back(std::move(index));

  // left multiplication B_{d-1} -> B_d via g*(b' h) = (g*b') h
  const QuotientSlice& below = slices_[d - 1];
  std::vector<std::vector<SparseVec>> lm(m, std::vector<SparseVec>(below.dim()));
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t b = 0; b < below.dim(); ++b) {
      if (d == 1) {
        lm[g][b] = rmul_[0][g][0];
        continue;
      }
      std::size_t h = static_cast<std::size_t>(below.basis[b].back());
      lm[g][b] = sv::combine(rmul_[d - 1][h], lmul_[d - 2][g][below.prefix[b]]);
    }
  lmul_.push_back(std::move(lm));
}

std::optional<std::size_t> GradedAlgebra::index_of(const Word& w) const {
  if (w.size() > max_degree()) return std::nullopt;
  const auto& idx = index_[w.size()];
  auto it = idx.find(word_rank(w, ngens()));
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

SparseVec GradedAlgebra::right_mul(std::size_t d, const SparseVec& a, std::size_t g) const {
  if (d >= max_degree()) throw Error("product leaves the built degree range");
  return sv::combine(rmul_[d].at(g), a);
}

SparseVec GradedAlgebra::left_mul(std::size_t d, std::size_t g, const SparseVec& a) const {
  if (d >= max_degree()) throw Error("product leaves the built degree range");
  return sv::combine(lmul_[d].at(g), a);
}

RatMatrix GradedAlgebra::right_matrix(std::size_t d, std::size_t g) const {
  if (d >= max_degree()) throw Error("product leaves the built degree range");
  return RatMatrix::from_columns(dim(d + 1), rmul_[d].at(g));
}

RatMatrix GradedAlgebra::left_matrix(std::size_t d, std::size_t g) const {
  if (d >= max_degree()) throw Error("product leaves the built degree range");
  return RatMatrix::from_columns(dim(d + 1), lmul_[d].at(g));
}

SparseVec GradedAlgebra::multiply(std::size_t i, const SparseVec& a, std::size_t j, const SparseVec& b) const {
  SparseVec out;
  for (const auto& [k, c] : b) {
    SparseVec t = a;
    std::size_t deg = i;
    for (int g : basis(j)[k]) t = right_mul(deg++, t, static_cast<std::size_t>(g));
    sv::axpy(out, c, t);
  }
  return out;
}

SparseVec GradedAlgebra::expand(const Word& w) const {
  SparseVec t{{0, Rat(1)}};
  std::size_t deg = 0;
  for (int g : w) t = right_mul(deg++, t, static_cast<std::size_t>(g));
  return t;
}

SparseVec GradedAlgebra::expand(const NcPoly& p) const {
  if (!p.is_homogeneous()) throw Error("expand needs a homogeneous polynomial");
  SparseVec out;
  for (const auto& [w, c] : p.terms()) sv::axpy(out, c, expand(w));
  return out;
}

NcPoly GradedAlgebra::to_poly(std::size_t d, const SparseVec& v) const {
  NcPoly p(gens());
  for (const auto& [i, c] : v) p.add_term(basis(d).at(i), c);
  return p;
}

std::vector<std::size_t> GradedAlgebra::hilbert_coeffs() const {
  std::vector<std::size_t> h;
  for (const auto& s : slices_) h.push_back(s.dim());
  return h;
}

std::vector<std::size_t> hilbert_coeffs(const QuadraticPresentation& pres, std::size_t D) {
  return GradedAlgebra(pres, D).hilbert_coeffs();
}

// ----------------------------------------------------------- RewriteSystem

RewriteSystem::RewriteSystem(GenSetPtr gens, std::vector<RewriteRule> rules)
    : gens_(std::move(gens)), rules_(std::move(rules)), m_(gens_->size()), table_(m_ * m_, -1) {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const auto& r = rules_[i];
    if (r.lead.size() != 2) throw Error("rewrite lead must have length 2");
    for (int g : r.lead)
      if (g < 0 || static_cast<std::size_t>(g) >= m_) throw Error("rewrite lead outside generator set");
    long& slot = table_[static_cast<std::size_t>(r.lead[0]) * m_ + static_cast<std::size_t>(r.lead[1])];
    if (slot >= 0) throw Error("duplicate rewrite lead " + render_word(*gens_, r.lead));
    for (const auto& [w, c] : r.rhs.terms())
      if (w.size() != 2 || !(w < r.lead)) throw Error("rewrite rhs not below its lead: " + render(r.rhs));
    slot = static_cast<long>(i);
  }
}

RewriteSystem RewriteSystem::from_presentation(const QuadraticPresentation& pres) {
  Subspace s = relation_span(pres, 2);
  const std::size_t m = pres.gens->size();
  const std::size_t N = m * m;
  std::vector<RewriteRule> rules;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    RewriteRule r{word_unrank(N - 1 - s.pivot_cols[i], 2, m), NcPoly(pres.gens)};
    for (const auto& [c, v] : s.basis[i])
      if (c != s.pivot_cols[i]) r.rhs.add_term(word_unrank(N - 1 - c, 2, m), -v);
    rules.push_back(std::move(r));
  }
  return RewriteSystem(pres.gens, std::move(rules));
}

bool RewriteSystem::is_normal(const Word& w) const {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (rule_at(w[i], w[i + 1]) >= 0) return false;
  return true;
}

NcPoly RewriteSystem::normal_form(const NcPoly& p) const {
  if (p.gens() != gens_ && !(*p.gens() == *gens_)) throw Error("polynomial over a different generator set");
  // Every rewrite produces strictly smaller words, so processing the largest
  // pending word first sees each word once with its final coefficient.
  NcPoly::Terms pending = p.terms();
  NcPoly out(gens_);
  while (!pending.empty()) {
    auto it = std::prev(pending.end());
    Word w = it->first;
    Rat c = it->second;
    pending.erase(it);
    if (c == 0) continue;
    std::size_t pos = w.size();
    long rule = -1;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      rule = rule_at(w[i], w[i + 1]);
      if (rule >= 0) {
        pos = i;
        break;
      }
    }
    if (rule < 0) {
      out.add_term(w, c);
      continue;
    }
    for (const auto& [t, ct] : rules_[static_cast<std::size_t>(rule)].rhs.terms()) {
      Word nw(w.begin(), w.begin() + static_cast<long>(pos));
      nw.insert(nw.end(), t.begin(), t.end());
      nw.insert(nw.end(), w.begin() + static_cast<long>(pos) + 2, w.end());
      auto [jt, fresh] = pending.try_emplace(nw, c * ct);
      if (!fresh) jt->second += c * ct;
    }
  }
  return out;
}

std::vector<Overlap> RewriteSystem::confluence_check() const {
  std::vector<Overlap> bad;
  for (const auto& r1 : rules_)
    for (const auto& r2 : rules_) {
      if (r1.lead[1] != r2.lead[0]) continue;
      Word abc{r1.lead[0], r1.lead[1], r2.lead[1]};
      NcPoly a = NcPoly::gen(gens_, static_cast<std::size_t>(abc[0]));
      NcPoly c = NcPoly::gen(gens_, static_cast<std::size_t>(abc[2]));
      NcPoly left = normal_form(r1.rhs * c);
      NcPoly right = normal_form(a * r2.rhs);
      if (left != right) bad.push_back({abc, left, right});
    }
  return bad;
}

}  // namespace potentia
