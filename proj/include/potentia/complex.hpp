#pragma once

// Degree slices of finite chain complexes C_top -> ... -> C_0 over Q and
// their homology.

#include <map>
#include <utility>
#include <vector>

#include "potentia/exactla.hpp"

namespace potentia {

struct ComplexSlice {
  std::size_t degree = 0;
  std::vector<std::size_t> dims;  // dims[p] = dim C_p
  std::vector<RatMatrix> diff;    // diff[p] : C_p -> C_{p-1}; diff[0] is 0 x dims[0]

  std::size_t top() const { return dims.size() - 1; }
  /// d_p, or an empty map of the right shape when p is 0 or above the top.
  RatMatrix differential(std::size_t p) const;
  /// d_{p-1} o d_p = 0 for every p.
  bool squares_to_zero() const;
  std::size_t homology_dim(std::size_t p) const;
  Subspace cycles(std::size_t p) const;
  Subspace boundaries(std::size_t p) const;
  /// Cycles completing a basis of the boundaries to one of the cycles.
  std::vector<SparseVec> homology_witnesses(std::size_t p) const;
  /// Rank of the given p-cycles modulo boundaries.
  std::size_t rank_mod_boundaries(std::size_t p, const std::vector<SparseVec>& cycles) const;
};

/// (p, d) -> dim with optional representatives.
struct HomologyTable {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> dims;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<SparseVec>> witnesses;

  std::size_t at(std::size_t p, std::size_t d) const;
  /// Rows [p, d, dim] sorted by p then d.
  std::vector<std::vector<std::size_t>> rows() const;
};

HomologyTable homology_table(const std::vector<ComplexSlice>& slices, bool with_witnesses = false);

}  // namespace potentia
