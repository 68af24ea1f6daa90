#pragma once

// The Jordan algebra B as a filtered deformation of T = Q[x,y,z] with
// phi = -x^2 z: y-degree filtration on its Koszul complex, comparison of
// the associated graded differentials with the Brylinski ones, explicit
// and solver-built lifts of Poisson cycles, and dimension comparisons.

#include <optional>
#include <string>
#include <vector>

#include "potentia/poisson.hpp"
#include "potentia/potentialcy.hpp"
#include "potentia/report.hpp"

namespace potentia {

/// Koszul complex of the Jordan B next to T. Basis words of B are
/// x^i y^j z^k, read as monomials of T; slot e of a p-chain goes to the
/// same slot of a Poisson p-chain (x, y, z -> dx, dy, dz and
/// r_1, r_2, r_3 -> dy^dz, dz^dx, dx^dy).
class JordanBridge {
public:
  /// Koszul slices up to internal degree D.
  explicit JordanBridge(std::size_t D);

  const KoszulComplex& koszul() const { return kc_; }
  const PoissonPotential& poisson() const { return pp_; }
  std::size_t max_degree() const { return kc_.max_degree(); }

  /// y-weight of slot e of C_p: y in V, r_1, r_3 and c(w) have weight 1.
  static int slot_weight(std::size_t p, std::size_t slot);
  std::size_t chain_dim(std::size_t p, std::size_t d) const { return kc_.chain_dim(p, d); }

  /// Koszul chain of C_p at internal degree d as a T-chain (components of degree d - p).
  Chain to_poisson(std::size_t p, std::size_t d, const SparseVec& v) const;
  /// Inverse of to_poisson; throws on components of the wrong degree.
  SparseVec from_poisson(std::size_t p, std::size_t d, const Chain& ch) const;
  /// Coordinate of c x^i y^j z^k in slot e.
  std::size_t coordinate(std::size_t p, std::size_t d, const Exp& e, std::size_t slot) const;

  /// max over the support of j + slot weight; -1 for the zero chain.
  int filtration(std::size_t p, std::size_t d, const SparseVec& v) const;
  /// Terms of total filtration exactly `level`, as a T-chain.
  Chain graded_part(std::size_t p, std::size_t d, const SparseVec& v, int level) const;
  /// Top filtration part of a T-chain under the same weights.
  static int filtration(std::size_t p, const Chain& ch);

  /// d~_p applied to a chain of C_p at internal degree d.
  SparseVec differential(std::size_t p, std::size_t d, const SparseVec& v) const;

private:
  PoissonPotential pp_;
  KoszulComplex kc_;
  std::vector<std::vector<Exp>> exps_;  // exps_[k][b] = exponents of basis word b of B_k
};

/// Seven checks, one per (p, slot), plus the filtration drop: for every
/// x^i y^j z^k with i+j+k <= D, gr of d~(x^i y^j z^k (x) e) equals delta of
/// x^i y^j z^k e, and d~ lowers the filtration by at least one, exactly one
/// when delta is nonzero. Needs a bridge of degree >= D + 3.
std::vector<CheckResult> gr_compare(const JordanBridge& br, std::size_t D);

struct LiftRecord {
  std::string family;  // A, B, U, V, W, C, D, E, O, top
  std::vector<int> params;
  std::string label;
  std::size_t p = 0;
  std::size_t degree = 0;  // internal
  SparseVec chain;         // Koszul coordinates at (p, degree)
  Chain target;            // the Poisson cycle
};

extern const std::vector<std::string> lift_families;

/// The explicit chain for a listed Poisson cycle. Parameters: A k, B r, U (n,k),
/// V (m,s), W p, C r, D s, E t, O (n,k), top k. With extended, r = -1 for B
/// and t = -1 for E are accepted. Throws when out of range or above the
/// bridge's degree.
LiftRecord build_lift(const JordanBridge& br, const std::string& family, const std::vector<int>& params,
                      bool extended = false);
/// d~(chain) = 0 and the chain's top filtration part is exactly the target.
bool verify_lift(const JordanBridge& br, const LiftRecord& rec);

/// A Koszul cycle whose top filtration part is the given Poisson p-cycle
/// (coefficient degree c, internal degree c + p), or nullopt when no cycle
/// exists with that top part. Throws Error when the target is not a
/// homogeneous delta-cycle.
std::optional<SparseVec> lift_by_solver(const JordanBridge& br, std::size_t p, const Chain& target);

struct LiftOutcome {
  LiftRecord record;
  bool formula_ok = false;
  bool extension = false;  // index outside the listed ranges
  std::optional<SparseVec> solver;  // witness used when the formula fails
  /// formula minus solver witness is a cycle of lower filtration (when both exist)
  bool agrees_with_solver = true;
};

/// Every formula with internal degree <= D, each compared with a solver witness.
std::vector<LiftOutcome> lift_suite(const JordanBridge& br, std::size_t D, bool extended = true);
/// Pass iff every formula verifies or is flagged with a working solver witness.
CheckResult summarize_lifts(const std::vector<LiftOutcome>& out);

struct ComparisonReport {
  HomologyTable hh, hp;
  std::vector<CheckResult> checks;
  bool pass() const { return all_pass(checks); }
};

/// Per-degree counts of the listed bases (HP0..HP3), literal or extended ranges.
HomologyTable listed_basis_counts(std::size_t D, bool extended);
/// Per-degree counts of the quantum-space basis lists (Z = Q[xyz]).
HomologyTable quantum_basis_counts(std::size_t D);

/// HH(B) = HP(T) for p <= 3, d <= D, both against the listed bases (literal and
/// extended ranges), and HH_p = 0 for p >= 4.
ComparisonReport degeneration_check(const JordanBridge& br, std::size_t D);
/// Quantum B(q) and T with phi_q, both against the quantum basis counts.
/// Throws Error for q in {0, 1, -1}.
ComparisonReport quantum_compare(const Rat& q, std::size_t D);

}  // namespace potentia
