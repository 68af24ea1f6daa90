#pragma once

// Commutative side: T = Q[x,y,z] with the Jacobian bracket of a potential
// phi, the Brylinski complex, the complex of forms under wedge with d phi,
// and the explicit homology families for phi = -x^2 z.

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "potentia/complex.hpp"
#include "potentia/potentialcy.hpp"
#include "potentia/report.hpp"

namespace potentia {

using Exp = std::array<int, 3>;

class CPoly {
public:
  using Terms = std::map<Exp, Rat>;

  CPoly() = default;
  static CPoly constant(const Rat& c);
  static CPoly var(std::size_t i);
  static CPoly monomial(const Exp& e, const Rat& c = Rat(1));
  /// x^i y^j z^k
  static CPoly xyz(int i, int j, int k, const Rat& c = Rat(1)) { return monomial({i, j, k}, c); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coeff(const Exp& e) const;
  void add_term(const Exp& e, const Rat& c);
  /// Highest total degree; -1 for zero.
  int degree() const;
  bool is_homogeneous() const;

  CPoly operator+(const CPoly& o) const;
  CPoly operator-(const CPoly& o) const;
  CPoly operator-() const { return scaled(Rat(-1)); }
  CPoly operator*(const CPoly& o) const;
  CPoly scaled(const Rat& c) const;
  CPoly pow(unsigned k) const;
  CPoly diff(std::size_t i) const;
  bool operator==(const CPoly& o) const { return terms_ == o.terms_; }

private:
  Terms terms_;
};

/// Highest x-power first, e.g. "-x^2*z + 3 y".
std::string render(const CPoly& p);
/// Same grammar as noncommutative input, read commutatively in x, y, z.
CPoly parse_cpoly(std::string_view text);
/// Commutative image of a word-polynomial in x, y, z (first three generators).
CPoly symmetrize(const NcPoly& p);

using Vec3 = std::array<CPoly, 3>;

Vec3 grad(const CPoly& F);
Vec3 curl(const Vec3& F);
CPoly div(const Vec3& F);
CPoly dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
Vec3 scaled(const Vec3& a, const CPoly& c);
Vec3 add(const Vec3& a, const Vec3& b);
Vec3 sub(const Vec3& a, const Vec3& b);
bool is_zero(const Vec3& a);
std::string render(const Vec3& a);

/// p-chains of T: one component for p = 0, 3, three for p = 1, 2
/// (dx, dy, dz and dy^dz, dz^dx, dx^dy).
using Chain = std::vector<CPoly>;

class PoissonPotential {
public:
  /// Throws unless phi is homogeneous (zero allowed) and the bracket is Jacobi.
  explicit PoissonPotential(CPoly phi);

  const CPoly& phi() const { return phi_; }
  const Vec3& gradient() const { return grad_; }
  /// Degree of phi (3 for phi = 0).
  int degree() const { return deg_; }
  /// Coefficient-degree shift of delta_p; 1 for cubic phi.
  int weight() const { return deg_ - 2; }

private:
  CPoly phi_;
  Vec3 grad_;
  int deg_;
};

/// phi = -x^2 z
PoissonPotential jordan_poisson();
/// phi = (1 - 1/q) xyz
PoissonPotential quantum_poisson(const Rat& q);
/// phi = S(f) z for a 2x2 matrix
PoissonPotential poisson_potential_of(const QuadMatrix& M);

/// grad phi . (grad F x grad G)
CPoly bracket(const PoissonPotential& pp, const CPoly& F, const CPoly& G);
bool jacobi_check(const PoissonPotential& pp);

CPoly delta1(const PoissonPotential& pp, const Vec3& F);
Vec3 delta2(const PoissonPotential& pp, const Vec3& F);
Vec3 delta3(const PoissonPotential& pp, const CPoly& F);
/// delta_p for p = 1, 2, 3; zero chain for p = 0.
Chain delta(const PoissonPotential& pp, std::size_t p, const Chain& c);
/// form ^ d phi, p = 0, 1, 2 (p = 3 gives the zero 0-component list).
Chain wedge_dphi(const PoissonPotential& pp, std::size_t p, const Chain& c);

/// Monomials of degree c, x-power descending then y-power descending.
const std::vector<Exp>& monomials(int c);
std::size_t monomial_index(const Exp& e);
std::size_t monomial_count(int c);
std::size_t chain_width(std::size_t p);
/// Slot-major coordinates of a chain whose components are homogeneous of degree c.
SparseVec chain_coords(const Chain& ch, int c);
Chain coords_chain(std::size_t p, const SparseVec& v, int c);

/// Chains of Omega^p sit in internal degree c + w p (w = weight()).
/// The slice at d has C_p at coefficient degree d - w p.
std::vector<ComplexSlice> brylinski_slices(const PoissonPotential& pp, std::size_t D);
HomologyTable hp_table(const PoissonPotential& pp, std::size_t D);

/// The wedge complex graded by s = c - (deg phi - 1) p. Slot q of a slice
/// holds Omega^{3-q}, so the differentials go down in q.
struct WedgeSlice {
  int s = 0;
  ComplexSlice cx;
  int coeff_degree(std::size_t p, int deg_phi) const { return s + (deg_phi - 1) * int(p); }
};
std::vector<WedgeSlice> wedge_slices(const PoissonPotential& pp, std::size_t D);
/// H^phi_p reported at internal degree c + p, for c + p <= D.
HomologyTable hphi_table(const PoissonPotential& pp, std::size_t D);

/// One listed basis element; degree is the internal degree (coefficient
/// degree for CurlQ).
struct FamilyElement {
  std::string label;
  std::size_t p = 0;
  std::size_t degree = 0;
  Chain chain;
};

/// HP0..HP3, Hphi1..Hphi3, CurlQ for phi = -x^2 z. With extended, the
/// index ranges also admit r = -1 for z^r(z^2, 0, -xz) and t = -1 for
/// z^{t+1}(0, 1, 0).
std::vector<FamilyElement> family_elements(const std::string& family, std::size_t D, bool extended = false);
extern const std::vector<std::string> family_names;

struct FamilyDegree {
  std::size_t degree = 0;
  std::size_t listed = 0;
  std::size_t computed = 0;
  std::size_t independent = 0;
  bool cycles = true;
};

struct FamilyReport {
  std::string family;
  bool extended = false;
  std::vector<FamilyDegree> degrees;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

/// Each listed element is a cycle, the elements of each degree are
/// independent in homology and their count equals the computed dimension.
FamilyReport verify_family(const PoissonPotential& pp, const std::string& family, std::size_t D, bool extended = false);

/// Dimension of {F : grad phi . curl F = 0} / {grad G + H grad phi} in coefficient degree e.
std::size_t curl_quotient_dim(const PoissonPotential& pp, int e);
/// Kernel of K -> grad K x grad phi on degree e is spanned by phi^{e/3} (zero unless 3 | e).
CheckResult casimir_kernel_check(const PoissonPotential& pp, std::size_t D);

/// d o d = 0 on every slice of both complexes up to D.
CheckResult poisson_complexes_check(const PoissonPotential& pp, std::size_t D);

}  // namespace potentia
