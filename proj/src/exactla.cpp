#include "potentia/exactla.hpp"

#include <algorithm>
#include <cctype>

namespace potentia {

Rat make_rat(long num, long den) {
  if (den == 0) throw Error("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

Rat parse_rat(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw Error("empty rational literal");
  auto valid_int = [](std::string_view t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw Error("malformed rational literal '" + std::string(text) + "'");
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

namespace sv {

void axpy(SparseVec& y, const Rat& a, const SparseVec& x) {
  if (a == 0 || x.empty()) return;
  SparseVec out;
  out.reserve(y.size() + x.size());
  auto iy = y.begin();
  auto ix = x.begin();
  while (iy != y.end() || ix != x.end()) {
    if (ix == x.end() || (iy != y.end() && iy->first < ix->first)) {
      out.push_back(std::move(*iy));
      ++iy;
    } else if (iy == y.end() || ix->first < iy->first) {
      out.emplace_back(ix->first, a * ix->second);
      ++ix;
    } else {
      Rat v = iy->second + a * ix->second;
      if (v != 0) out.emplace_back(iy->first, std::move(v));
      ++iy;
      ++ix;
    }
  }
  y = std::move(out);
}

SparseVec scaled(const SparseVec& x, const Rat& a) {
  SparseVec out;
  if (a == 0) return out;
  out.reserve(x.size());
  for (const auto& [i, v] : x) out.emplace_back(i, v * a);
  return out;
}

SparseVec sum(const SparseVec& x, const SparseVec& y) {
  SparseVec out = x;
  axpy(out, Rat(1), y);
  return out;
}

SparseVec difference(const SparseVec& x, const SparseVec& y) {
  SparseVec out = x;
  axpy(out, Rat(-1), y);
  return out;
}

Rat at(const SparseVec& x, std::size_t i) {
  auto it = std::lower_bound(x.begin(), x.end(), i,
                             [](const auto& e, std::size_t k) { return e.first < k; });
  if (it != x.end() && it->first == i) return it->second;
  return Rat(0);
}

SparseVec from_dense(const std::vector<Rat>& dense) {
  SparseVec out;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) out.emplace_back(i, dense[i]);
  return out;
}

std::vector<Rat> to_dense(const SparseVec& x, std::size_t n) {
  std::vector<Rat> out(n);
  for (const auto& [i, v] : x) out.at(i) = v;
  return out;
}

SparseVec shifted(const SparseVec& x, std::size_t offset) {
  SparseVec out;
  out.reserve(x.size());
  for (const auto& [i, v] : x) out.emplace_back(i + offset, v);
  return out;
}

SparseVec combine(const std::vector<SparseVec>& cols, const SparseVec& v) {
  SparseVec out;
  for (const auto& [j, c] : v) axpy(out, c, cols.at(j));
  return out;
}

}  // namespace sv

// ---------------------------------------------------------------- RatMatrix

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows) {}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(i, Rat(1));
  return m;
}

RatMatrix RatMatrix::from_dense(const std::vector<std::vector<Rat>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows.front().size();
  RatMatrix m(rows.size(), c);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != c) throw Error("ragged matrix rows");
    m.data_[r] = sv::from_dense(rows[r]);
  }
  return m;
}

RatMatrix RatMatrix::from_columns(std::size_t rows, const std::vector<SparseVec>& cols_data) {
  RatMatrix m(rows, cols_data.size());
  for (std::size_t c = 0; c < cols_data.size(); ++c)
    for (const auto& [r, v] : cols_data[c]) {
      m.check(r, c);
      m.data_[r].emplace_back(c, v);
    }
  return m;
}

void RatMatrix::check(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw Error("matrix index out of range");
}

Rat RatMatrix::get(std::size_t r, std::size_t c) const {
  check(r, c);
  return sv::at(data_[r], c);
}

void RatMatrix::set(std::size_t r, std::size_t c, const Rat& v) {
  check(r, c);
  auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, std::size_t k) { return e.first < k; });
  if (it != row.end() && it->first == c) {
    if (v == 0)
      row.erase(it);
    else
      it->second = v;
  } else if (v != 0) {
    row.insert(it, {c, v});
  }
}

void RatMatrix::add_to(std::size_t r, std::size_t c, const Rat& v) {
  if (v == 0) return;
  set(r, c, get(r, c) + v);
}

void RatMatrix::set_row(std::size_t r, SparseVec v) {
  if (r >= rows_) throw Error("matrix row out of range");
  for (const auto& e : v)
    if (e.first >= cols_ || e.second == 0) throw Error("bad sparse row");
  data_[r] = std::move(v);
}

std::size_t RatMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

bool RatMatrix::is_zero() const { return nonzeros() == 0; }

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) t.data_[c].emplace_back(r, v);
  return t;
}

std::vector<std::vector<Rat>> RatMatrix::dense() const {
  std::vector<std::vector<Rat>> out(rows_, std::vector<Rat>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) out[r][c] = v;
  return out;
}

SparseVec RatMatrix::apply(const SparseVec& v) const {
  SparseVec out;
  for (std::size_t r = 0; r < rows_; ++r) {
    Rat acc = 0;
    const auto& row = data_[r];
    auto a = row.begin();
    auto b = v.begin();
    while (a != row.end() && b != v.end()) {
      if (a->first < b->first)
        ++a;
      else if (b->first < a->first)
        ++b;
      else {
        acc += a->second * b->second;
        ++a;
        ++b;
      }
    }
    if (acc != 0) out.emplace_back(r, std::move(acc));
  }
  return out;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error("matrix product dimension mismatch");
  RatMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    SparseVec acc;
    for (const auto& [k, v] : data_[r]) sv::axpy(acc, v, rhs.data_[k]);
    out.data_[r] = std::move(acc);
  }
  return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error("matrix sum dimension mismatch");
  RatMatrix out = *this;
  for (std::size_t r = 0; r < rows_; ++r) sv::axpy(out.data_[r], Rat(1), rhs.data_[r]);
  return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& rhs) const { return *this + rhs.scaled(Rat(-1)); }

RatMatrix RatMatrix::scaled(const Rat& a) const {
  RatMatrix out(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) out.data_[r] = sv::scaled(data_[r], a);
  return out;
}

void RatMatrix::add_block(std::size_t r0, std::size_t c0, const RatMatrix& block) {
  if (r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_) throw Error("block out of range");
  for (std::size_t r = 0; r < block.rows_; ++r)
    sv::axpy(data_[r0 + r], Rat(1), sv::shifted(block.data_[r], c0));
}

RatMatrix RatMatrix::block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error("block out of range");
  RatMatrix out(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (const auto& [c, v] : data_[r0 + r])
      if (c >= c0 && c < c0 + nc) out.data_[r].emplace_back(c - c0, v);
  return out;
}

// ----------------------------------------------------------------- Subspace

bool Subspace::contains(const SparseVec& v) const { return reduce_mod(*this, v).empty(); }

std::vector<std::size_t> Subspace::free_cols() const {
  std::vector<std::size_t> out;
  std::size_t p = 0;
  for (std::size_t c = 0; c < ambient_dim; ++c) {
    if (p < pivot_cols.size() && pivot_cols[p] == c)
      ++p;
    else
      out.push_back(c);
  }
  return out;
}

// ----------------------------------------------------------- EchelonBuilder

EchelonBuilder::EchelonBuilder(std::size_t ambient_dim)
    : ambient_(ambient_dim), pivot_row_(ambient_dim, -1) {}

SparseVec EchelonBuilder::reduce(const SparseVec& v) const {
  // Rows are fully reduced, so subtracting along one pivot never creates an
  // entry in another pivot column: one pass over v's pivot entries suffices.
  SparseVec out = v;
  for (const auto& [c, coeff] : v) {
    if (c >= ambient_) throw Error("vector index exceeds ambient dimension");
    long r = pivot_row_[c];
    if (r >= 0) sv::axpy(out, -coeff, rows_[static_cast<std::size_t>(r)]);
  }
  return out;
}

bool EchelonBuilder::add(const SparseVec& v) {
  SparseVec red = reduce(v);
  if (red.empty()) return false;
  std::size_t pivot = red.front().first;
  Rat inv = 1 / red.front().second;
  red = sv::scaled(red, inv);
  for (auto& row : rows_) {
    Rat c = sv::at(row, pivot);
    if (c != 0) sv::axpy(row, -c, red);
  }
  pivot_row_[pivot] = static_cast<long>(rows_.size());
  rows_.push_back(std::move(red));
  return true;
}

Subspace EchelonBuilder::finish() const {
  Subspace s;
  s.ambient_dim = ambient_;
  for (std::size_t c = 0; c < ambient_; ++c) {
    long r = pivot_row_[c];
    if (r >= 0) {
      s.pivot_cols.push_back(c);
      s.basis.push_back(rows_[static_cast<std::size_t>(r)]);
    }
  }
  return s;
}

// --------------------------------------------------------------- operations

Echelon echelon(const RatMatrix& m) {
  EchelonBuilder b(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) b.add(m.row(r));
  Echelon e{b.finish(), 0};
  e.rank = e.span.dim();
  return e;
}

std::size_t rank(const RatMatrix& m) {
  // Rank of the smaller side keeps the builder small.
  if (m.cols() > m.rows()) {
    EchelonBuilder b(m.rows());
    RatMatrix t = m.transposed();
    for (std::size_t r = 0; r < t.rows(); ++r) b.add(t.row(r));
    return b.rank();
  }
  EchelonBuilder b(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) b.add(m.row(r));
  return b.rank();
}

Subspace kernel_basis(const RatMatrix& m) {
  Subspace rref = echelon(m).span;
  EchelonBuilder out(m.cols());
  for (std::size_t f : rref.free_cols()) {
    SparseVec v;
    for (std::size_t i = 0; i < rref.dim(); ++i) {
      Rat c = sv::at(rref.basis[i], f);
      if (c != 0) v.emplace_back(rref.pivot_cols[i], -c);
    }
    v.emplace_back(f, Rat(1));
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    out.add(v);
  }
  return out.finish();
}

std::size_t quotient_dim(std::size_t ambient, const Subspace& span) {
  if (span.ambient_dim != ambient) throw Error("quotient_dim: ambient dimension mismatch");
  return ambient - span.dim();
}

SparseVec reduce_mod(const Subspace& span, const SparseVec& v) {
  SparseVec out = v;
  std::size_t i = 0;
  for (const auto& [c, coeff] : v) {
    if (c >= span.ambient_dim) throw Error("vector index exceeds ambient dimension");
    while (i < span.pivot_cols.size() && span.pivot_cols[i] < c) ++i;
    if (i < span.pivot_cols.size() && span.pivot_cols[i] == c) sv::axpy(out, -coeff, span.basis[i]);
  }
  return out;
}

std::vector<Rat> coset_coordinates(const Subspace& span, const std::vector<Rat>& v) {
  if (v.size() != span.ambient_dim) throw Error("coset_coordinates: length mismatch");
  SparseVec red = reduce_mod(span, sv::from_dense(v));
  std::vector<std::size_t> free = span.free_cols();
  std::vector<Rat> out(free.size());
  std::size_t k = 0;
  for (const auto& [c, coeff] : red) {
    while (free[k] < c) ++k;
    out[k] = coeff;
  }
  return out;
}

std::optional<SparseVec> solve(const RatMatrix& a, const SparseVec& b) {
  const std::size_t n = a.cols();
  EchelonBuilder eb(n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    SparseVec row = a.row(r);
    Rat rhs = sv::at(b, r);
    if (rhs != 0) row.emplace_back(n, rhs);
    eb.add(row);
  }
  Subspace s = eb.finish();
  if (!s.pivot_cols.empty() && s.pivot_cols.back() == n) return std::nullopt;
  SparseVec x;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Rat v = sv::at(s.basis[i], n);
    if (v != 0) x.emplace_back(s.pivot_cols[i], v);
  }
  return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw Error("inverse of non-square matrix");
  EchelonBuilder eb(2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    SparseVec row = a.row(r);
    row.emplace_back(n + r, Rat(1));
    eb.add(row);
  }
  Subspace s = eb.finish();
  if (s.dim() != n || (n > 0 && s.pivot_cols.back() != n - 1)) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    SparseVec right;
    for (const auto& [c, v] : s.basis[i])
      if (c >= n) right.emplace_back(c - n, v);
    inv.set_row(i, std::move(right));
  }
  return inv;
}

}  // namespace potentia
