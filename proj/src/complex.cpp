#include "potentia/complex.hpp"

namespace potentia {

RatMatrix ComplexSlice::differential(std::size_t p) const {
  if (p == 0) return RatMatrix(0, dims.empty() ? 0 : dims[0]);
  if (p > top()) return RatMatrix(dims[top()], 0);
  return diff[p];
}

bool ComplexSlice::squares_to_zero() const {
  for (std::size_t p = 2; p <= top(); ++p)
    if (!(diff[p - 1] * diff[p]).is_zero()) return false;
  return true;
}

std::size_t ComplexSlice::homology_dim(std::size_t p) const {
  if (p > top()) return 0;
  std::size_t out = p == 0 ? 0 : rank(diff[p]);
  std::size_t in = p == top() ? 0 : rank(diff[p + 1]);
  return dims[p] - out - in;
}

Subspace ComplexSlice::cycles(std::size_t p) const {
  if (p == 0) return echelon(RatMatrix::identity(dims[0])).span;
  return kernel_basis(diff[p]);
}

Subspace ComplexSlice::boundaries(std::size_t p) const {
  if (p == top()) return EchelonBuilder(dims[p]).finish();
  return echelon(diff[p + 1].transposed()).span;
}

std::vector<SparseVec> ComplexSlice::homology_witnesses(std::size_t p) const {
  Subspace b = boundaries(p);
  EchelonBuilder eb(dims[p]);
  for (const auto& v : b.basis) eb.add(v);
  std::vector<SparseVec> out;
  for (const auto& z : cycles(p).basis)
    if (eb.add(z)) out.push_back(z);
  return out;
}

std::size_t ComplexSlice::rank_mod_boundaries(std::size_t p, const std::vector<SparseVec>& cyc) const {
  Subspace b = boundaries(p);
  EchelonBuilder eb(dims[p]);
  for (const auto& v : b.basis) eb.add(v);
  std::size_t r = 0;
  for (const auto& z : cyc)
    if (eb.add(z)) ++r;
  return r;
}

std::size_t HomologyTable::at(std::size_t p, std::size_t d) const {
  auto it = dims.find({p, d});
  return it == dims.end() ? 0 : it->second;
}

std::vector<std::vector<std::size_t>> HomologyTable::rows() const {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& [pd, v] : dims) out.push_back({pd.first, pd.second, v});
  return out;
}

HomologyTable homology_table(const std::vector<ComplexSlice>& slices, bool with_witnesses) {
  HomologyTable t;
  for (const auto& s : slices)
    for (std::size_t p = 0; p <= s.top(); ++p) {
      t.dims[{p, s.degree}] = s.homology_dim(p);
      if (with_witnesses) t.witnesses[{p, s.degree}] = s.homology_witnesses(p);
    }
  return t;
}

}  // namespace potentia
