#pragma once

// Graded quadratic algebras k<V>/(R): degree-wise coset bases by linear
// algebra, and a quadratic rewriting engine for presentations that admit
// a confluent system.

#include <optional>
#include <unordered_map>
#include <vector>

#include "potentia/exactla.hpp"
#include "potentia/ncalg.hpp"

namespace potentia {

struct QuadraticPresentation {
  GenSetPtr gens;
  std::vector<NcPoly> relations;

  /// Throws unless every relation is homogeneous of degree 2 over gens.
  void validate() const;
};

/// Position of w among all words of its length in lexicographic order.
std::size_t word_rank(const Word& w, std::size_t ngens);
Word word_unrank(std::size_t idx, std::size_t len, std::size_t ngens);

/// Span of {u r v : deg u + deg v = d - 2} inside V^{(x)d}. Column c of the
/// returned subspace holds the word of lexicographic rank m^d - 1 - c, so
/// pivots are leading words and free columns are the standard words.
Subspace relation_span(const QuadraticPresentation& pres, std::size_t d);
/// Coordinates of a degree-d polynomial in the column convention of relation_span.
SparseVec ambient_coords(const NcPoly& p, std::size_t d);
/// m^d - dim relation_span(pres, d), computed directly in V^{(x)d}.
std::size_t graded_dim(const QuadraticPresentation& pres, std::size_t d);

/// Degree-d piece of the quotient. Its ambient space is B_{d-1} (x) V, with
/// element (b, g) at index b * m + g; the relation subspace uses reversed
/// column order as in relation_span.
struct QuotientSlice {
  std::size_t degree = 0;
  std::vector<Word> basis;  // standard words, increasing
  std::vector<std::size_t> prefix;  // index in B_{d-1} of each word minus its last letter
  std::size_t ambient_dim = 0;
  Subspace relations;
  std::size_t dim() const { return basis.size(); }
};

/// All slices B_0..B_D with multiplication by generators on both sides.
class GradedAlgebra {
public:
  GradedAlgebra(QuadraticPresentation pres, std::size_t max_degree);

  const QuadraticPresentation& presentation() const { return pres_; }
  const GenSetPtr& gens() const { return pres_.gens; }
  std::size_t ngens() const { return pres_.gens->size(); }
  std::size_t max_degree() const { return slices_.size() - 1; }
  /// Builds further slices if needed.
  void extend_to(std::size_t d);

  std::size_t dim(std::size_t d) const { return slice(d).dim(); }
  const QuotientSlice& slice(std::size_t d) const;
  const std::vector<Word>& basis(std::size_t d) const { return slice(d).basis; }
  std::optional<std::size_t> index_of(const Word& w) const;

  /// a in B_d, returns a*g in B_{d+1}
  SparseVec right_mul(std::size_t d, const SparseVec& a, std::size_t g) const;
  /// a in B_d, returns g*a in B_{d+1}
  SparseVec left_mul(std::size_t d, std::size_t g, const SparseVec& a) const;
  /// Matrix of a -> a*g (resp. g*a) from B_d to B_{d+1}.
  RatMatrix right_matrix(std::size_t d, std::size_t g) const;
  RatMatrix left_matrix(std::size_t d, std::size_t g) const;
  /// Product of a in B_i and b in B_j.
  SparseVec multiply(std::size_t i, const SparseVec& a, std::size_t j, const SparseVec& b) const;

  /// Coset coordinates of a word or of a homogeneous polynomial.
  SparseVec expand(const Word& w) const;
  SparseVec expand(const NcPoly& p) const;
  /// The combination of basis words with these coordinates.
  NcPoly to_poly(std::size_t d, const SparseVec& v) const;

  std::vector<std::size_t> hilbert_coeffs() const;

private:
  void build_next();

  QuadraticPresentation pres_;
  std::vector<QuotientSlice> slices_;
  // rmul_[d][g][b] = b * g, lmul_[d][g][b] = g * b, both in B_{d+1}
  std::vector<std::vector<std::vector<SparseVec>>> rmul_, lmul_;
  std::vector<std::unordered_map<std::size_t, std::size_t>> index_;  // word rank -> basis index
};

/// dim B_d for d = 0..D.
std::vector<std::size_t> hilbert_coeffs(const QuadraticPresentation& pres, std::size_t D);

struct RewriteRule {
  Word lead;
  NcPoly rhs;
};

struct Overlap {
  Word word;
  NcPoly via_left;   // rewrite the first two letters first
  NcPoly via_right;  // rewrite the last two letters first
};

/// Rules lead -> rhs on degree-2 words, deglex order with generators
/// increasing by index.
class RewriteSystem {
public:
  /// Checks leads distinct, of length 2, and rhs strictly smaller.
  RewriteSystem(GenSetPtr gens, std::vector<RewriteRule> rules);
  /// Rules read off the reduced echelon form of the degree-2 relation span.
  static RewriteSystem from_presentation(const QuadraticPresentation& pres);

  const GenSetPtr& gens() const { return gens_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  bool is_normal(const Word& w) const;
  NcPoly normal_form(const NcPoly& p) const;
  /// Overlaps abc (ab and bc both leads) whose two reductions disagree.
  std::vector<Overlap> confluence_check() const;

private:
  long rule_at(int a, int b) const { return table_[static_cast<std::size_t>(a) * m_ + static_cast<std::size_t>(b)]; }

  GenSetPtr gens_;
  std::vector<RewriteRule> rules_;
  std::size_t m_;
  std::vector<long> table_;
};

}  // namespace potentia
