#pragma once

// Pass/fail checks over the algebra B(M), shared by the command-line
// frontend and the acceptance run. Random samples use a fixed seed so
// reports are reproducible.

#include <cstdint>
#include <random>

#include "potentia/potentialcy.hpp"
#include "potentia/report.hpp"

namespace potentia {

/// Entries p/q with |p| <= 4, q <= 3; retried until invertible when asked.
RatMatrix random_matrix(std::mt19937& rng, std::size_t n, bool invertible);
/// Same RREF basis, hence the same span.
bool same_span(const Subspace& a, const Subspace& b);

/// Both sides of the Euler relation of the potential of M equal c(w).
CheckResult euler_for(const QuadMatrix& M);
/// Symmetry of the second cyclic derivatives of w.
CheckResult hessian_for(const QuadMatrix& M);
/// Every overlap of the quadratic rewriting system resolves.
CheckResult confluence_for(const QuadMatrix& M);
/// Self-duality of the Koszul complex of B(M) up to D.
CheckResult duality_for(const QuadMatrix& M, std::size_t D);
/// d o d = 0 on every Koszul slice up to D.
CheckResult koszul_complex_for(const QuadMatrix& M, std::size_t D);
/// Relation span of Lambda . B(M), Lambda = diag(P, nu), equals that of
/// B(nu tP M P), for `samples` random (P, nu), both by the chain rule and by
/// substitution.
CheckResult basis_change_for(const QuadMatrix& M, std::size_t samples, std::uint32_t seed);
/// Exchanging x_1 and z sends B([[0,a],[b,0]]) to B([[0,b],[a,0]]).
CheckResult swap_check(std::size_t samples, std::uint32_t seed);
/// (a x^2 + (b+1) xy) z is central for (a, b) = (-1, -1) and `samples` random pairs, b != 0.
CheckResult center_check(std::size_t samples, std::size_t D, std::uint32_t seed);

}  // namespace potentia
