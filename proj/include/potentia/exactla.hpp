#pragma once

// Exact rational linear algebra: sparse vectors and matrices over Q,
// reduced row-echelon forms, kernels and quotient coordinates.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace potentia {

using Rat = mpq_class;

/// Thrown on malformed input or a violated precondition.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// num/den in lowest terms (mpq_class's two-argument constructor does not reduce).
Rat make_rat(long num, long den = 1);

/// Canonical "p/q" (or "p") rendering.
std::string to_string(const Rat& r);

/// Parses "p", "-p", "p/q" (whitespace tolerated). Throws Error.
Rat parse_rat(std::string_view text);

/// Sparse vector: (index, value) pairs, strictly increasing indices, no zeros.
using SparseVec = std::vector<std::pair<std::size_t, Rat>>;

namespace sv {

/// y += a * x
void axpy(SparseVec& y, const Rat& a, const SparseVec& x);
SparseVec scaled(const SparseVec& x, const Rat& a);
SparseVec sum(const SparseVec& x, const SparseVec& y);
SparseVec difference(const SparseVec& x, const SparseVec& y);
/// Coefficient at index i (zero if absent).
Rat at(const SparseVec& x, std::size_t i);
SparseVec from_dense(const std::vector<Rat>& dense);
std::vector<Rat> to_dense(const SparseVec& x, std::size_t n);
/// Shifts every index by offset.
SparseVec shifted(const SparseVec& x, std::size_t offset);
/// sum_j v_j * cols[j]
SparseVec combine(const std::vector<SparseVec>& cols, const SparseVec& v);

}  // namespace sv

/// Row-major sparse rational matrix. Absent entries are zero.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_dense(const std::vector<std::vector<Rat>>& rows);
  /// Builds a rows x cols matrix whose j-th column is cols_data[j].
  static RatMatrix from_columns(std::size_t rows, const std::vector<SparseVec>& cols_data);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rat& v);
  void add_to(std::size_t r, std::size_t c, const Rat& v);
  const SparseVec& row(std::size_t r) const { return data_.at(r); }
  /// Replaces row r; indices must be < cols().
  void set_row(std::size_t r, SparseVec v);

  std::size_t nonzeros() const;
  bool is_zero() const;
  RatMatrix transposed() const;
  std::vector<std::vector<Rat>> dense() const;

  /// Matrix-vector product; v is indexed by column.
  SparseVec apply(const SparseVec& v) const;
  RatMatrix operator*(const RatMatrix& rhs) const;
  RatMatrix operator+(const RatMatrix& rhs) const;
  RatMatrix operator-(const RatMatrix& rhs) const;
  RatMatrix scaled(const Rat& a) const;
  bool operator==(const RatMatrix& rhs) const = default;

  /// Places `block` with its top-left corner at (r0, c0), adding to existing entries.
  void add_block(std::size_t r0, std::size_t c0, const RatMatrix& block);
  /// The nr x nc submatrix starting at (r0, c0).
  RatMatrix block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const;

private:
  void check(std::size_t r, std::size_t c) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVec> data_;
};

/// A linear subspace of Q^ambient_dim held by its reduced row-echelon basis.
/// Pivots are strictly increasing; each pivot entry is 1 and is the only
/// nonzero of its column among the basis rows.
struct Subspace {
  std::size_t ambient_dim = 0;
  std::vector<SparseVec> basis;
  std::vector<std::size_t> pivot_cols;

  std::size_t dim() const { return basis.size(); }
  bool contains(const SparseVec& v) const;
  /// Columns that are not pivots, increasing.
  std::vector<std::size_t> free_cols() const;
};

/// Incremental RREF. Rows are kept fully reduced after every insertion,
/// so the result is the unique RREF of the span regardless of insertion order.
class EchelonBuilder {
public:
  explicit EchelonBuilder(std::size_t ambient_dim);

  /// Adds v to the span; returns true if it was independent.
  bool add(const SparseVec& v);
  /// v minus its projection along the pivot columns (zero iff v is in the span).
  SparseVec reduce(const SparseVec& v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  Subspace finish() const;

private:
  std::size_t ambient_;
  std::vector<SparseVec> rows_;
  std::vector<long> pivot_row_;  // column -> row index or -1
};

struct Echelon {
  Subspace span;
  std::size_t rank = 0;
};

/// Row space of m in reduced row-echelon form.
Echelon echelon(const RatMatrix& m);
/// {v : m v = 0}, as an RREF subspace of Q^cols.
Subspace kernel_basis(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);
/// ambient - dim(span). Throws Error on mismatched ambient dimension.
std::size_t quotient_dim(std::size_t ambient, const Subspace& span);
/// Representative of v + span supported on non-pivot columns (full length indices).
SparseVec reduce_mod(const Subspace& span, const SparseVec& v);
/// Coordinates of v + span with respect to the non-pivot unit vectors,
/// listed in increasing column order (length ambient - dim).
std::vector<Rat> coset_coordinates(const Subspace& span, const std::vector<Rat>& v);
/// Some x with a x = b, or nullopt if the system is inconsistent.
std::optional<SparseVec> solve(const RatMatrix& a, const SparseVec& b);
/// Inverse of a square matrix, nullopt if singular.
std::optional<RatMatrix> inverse(const RatMatrix& a);

}  // namespace potentia
