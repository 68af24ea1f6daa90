#pragma once

// The algebras A(M) and B(M) attached to the potential w = f z, their
// classification for n = 2, basis changes, and Hochschild homology of B(M)
// through its Koszul complex.

#include <optional>
#include <string>
#include <vector>

#include "potentia/complex.hpp"
#include "potentia/gradedquot.hpp"

namespace potentia {

struct QuadMatrix {
  std::vector<std::vector<Rat>> m;

  QuadMatrix() = default;
  /// Throws Error unless rows form a nonempty square matrix.
  explicit QuadMatrix(std::vector<std::vector<Rat>> rows);
  static QuadMatrix from_strings(const std::vector<std::vector<std::string>>& rows);

  std::size_t n() const { return m.size(); }
  const Rat& operator()(std::size_t i, std::size_t j) const { return m[i][j]; }
  RatMatrix matrix() const;
  bool is_zero() const;
  bool invertible() const;
  QuadMatrix transposed() const;
  bool operator==(const QuadMatrix&) const = default;
};

QuadMatrix classical_matrix();
/// f = x^2 + xy - yx.
QuadMatrix jordan_matrix();
/// f = yx - q^{-1} xy.
QuadMatrix quantum_matrix(const Rat& q);
/// [[a, b], [1, 0]], f = a x^2 + b xy + yx.
QuadMatrix family_matrix(const Rat& a, const Rat& b);
/// "classical", "jordan" or "quantum:q".
QuadMatrix preset_matrix(const std::string& name);
/// N = nu tP M P
QuadMatrix congruent(const QuadMatrix& M, const RatMatrix& P, const Rat& nu = Rat(1));

/// f = sum f_ij x_i x_j over the given generators (the first n of them).
NcPoly quadratic_form(const QuadMatrix& M, GenSetPtr gens);

struct PotentialAlgebra {
  QuadMatrix M;
  GenSetPtr gens;
  NcPoly f, w, cw;  // cw = c(w)
  /// r_1..r_n = d_{x_i} w, r_{n+1} = f
  QuadraticPresentation pres;
  std::size_t relation_dim = 0;
  bool free_algebra = false;  // M = 0
  std::optional<RewriteSystem> rewriting;  // present when confluent
};

PotentialAlgebra build_B(const QuadMatrix& M);
/// rank of the n x 2n block matrix (M | tM), plus one
std::size_t relation_dim_formula(const QuadMatrix& M);
/// A(M) = k<x_1..x_n>/(f)
QuadraticPresentation build_A(const QuadMatrix& M);

/// S = -(tM)^{-1} M, so that z x_j = sum_k S_jk x_k z in B(M). Throws on singular M.
RatMatrix sigma(const QuadMatrix& M);
/// lambda with f(Sx) = lambda f(x), or nullopt if S does not rescale f.
std::optional<Rat> sigma_scale(const QuadMatrix& M);
/// z x_i - x_i z lies in the degree-2 relation span for every i.
bool z_centrality(const QuadMatrix& M);

enum class Type2 { Classical, Jordan, Quantum, Degenerate };

struct Type2Tag {
  Type2 kind = Type2::Degenerate;
  /// Quantum invariant q + 1/q (= minus the trace of the cosquare).
  Rat s;
  /// A rational q with |q| >= 1, when one exists.
  std::optional<Rat> q;

  std::string name() const;
  /// Equal kinds, and equal invariants for the quantum kind.
  bool operator==(const Type2Tag& o) const;
};

Type2Tag classify2(const QuadMatrix& M);
/// B(M) and B(N) are isomorphic over an algebraically closed field.
bool isomorphic_B(const QuadMatrix& M, const QuadMatrix& N);

/// Degree-2 relation span of Lambda . B(M), new generators = Lambda (old).
/// Uses the chain rule: the primed cyclic derivatives of w' span the same
/// space as the unprimed ones.
Subspace apply_basis_change(const QuadMatrix& M, const RatMatrix& Lambda);
/// Same span, obtained by substituting x' = Lambda x into the relations of B(M).
Subspace basis_change_by_substitution(const QuadMatrix& M, const RatMatrix& Lambda);
/// Degree-2 relation span of B(M).
Subspace relation_span_B(const QuadMatrix& M);

/// Phi = (a x^2 + (b+1) xy) z
NcPoly family_central_element(const Rat& a, const Rat& b, GenSetPtr gens);
/// Phi commutes with x, y, z in normal form, and with every basis word
/// of degree <= D - 3 in coset coordinates.
bool center_test(const Rat& a, const Rat& b, std::size_t D);

/// The Koszul complex B (x) kc(w) -> B (x) R -> B (x) V -> B computing
/// Hochschild homology of B(M). Chains in C_p at internal degree d are
/// stored slot-major: index = slot * dim B_{d-p} + basis index, with n+1
/// slots for p = 1, 2 and one slot for p = 0, 3.
class KoszulComplex {
public:
  KoszulComplex(const PotentialAlgebra& pa, std::size_t D);

  const PotentialAlgebra& potential() const { return pa_; }
  const GradedAlgebra& algebra() const { return alg_; }
  std::size_t max_degree() const { return D_; }
  std::size_t slots(std::size_t p) const;
  /// Coefficient degree d - p, or nullopt below zero.
  std::optional<std::size_t> coeff_degree(std::size_t p, std::size_t d) const;
  std::size_t chain_dim(std::size_t p, std::size_t d) const;
  const ComplexSlice& slice(std::size_t d) const { return slices_.at(d); }
  const std::vector<ComplexSlice>& slices() const { return slices_; }

  /// c(w) = sum_j (sum_i lambda_ij x_i) r_j = sum_j r_j (sum_i mu_ij x_i)
  const RatMatrix& left_split() const { return lambda_; }
  const RatMatrix& right_split() const { return mu_; }

  bool squares_to_zero() const;
  HomologyTable homology(bool with_witnesses = false) const;

  /// The block of d_2 from slot i of C_2 to slot j of C_1, built from the
  /// tensor d r_i / d x_j (or its flip), on B_k.
  RatMatrix d2_block(std::size_t k, std::size_t i, std::size_t j, bool flipped) const;

private:
  ComplexSlice build_slice(std::size_t d) const;
  RatMatrix commutator_block(std::size_t k, std::size_t g, const Rat& right, const Rat& left) const;

  PotentialAlgebra pa_;
  std::size_t D_;
  GradedAlgebra alg_;
  RatMatrix lambda_, mu_;
  std::vector<ComplexSlice> slices_;
};

/// Hessian symmetry of w, c(w) split as sum x_i r_i = sum r_i x_i, and on
/// every slice d <= D: blocks of d_3 equal those of d_1 two degrees lower,
/// and d_2 blocks match the flipped second derivatives.
bool self_duality_check(const QuadMatrix& M, std::size_t D);

/// Map a -> sum c v a u over the terms u (x) v of T, from B_k.
RatMatrix tensor_action(const GradedAlgebra& alg, std::size_t k, const NcTensor& T);

}  // namespace potentia
