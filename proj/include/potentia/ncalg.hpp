#pragma once

// Free associative algebra over Q and the noncommutative calculus on it.

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "potentia/exactla.hpp"

namespace potentia {

/// Ordered generator names. When a distinguished last generator z is
/// present, has_z is set and it sits at index size()-1.
struct GenSet {
  std::vector<std::string> names;
  bool has_z = false;

  std::size_t size() const { return names.size(); }
  /// Number of generators other than z.
  std::size_t n() const { return has_z ? names.size() - 1 : names.size(); }
  std::size_t z() const;
  /// Index of a name; throws Error if unknown.
  std::size_t index(std::string_view name) const;
  bool operator==(const GenSet&) const = default;

  /// x, y (n = 2), x (n = 1) or x1..xn (n >= 3), followed by z if with_z.
  static GenSet standard(std::size_t n, bool with_z = true);
  static GenSet from_names(std::vector<std::string> names, bool has_z);
};

using GenSetPtr = std::shared_ptr<const GenSet>;
GenSetPtr make_gens(std::size_t n, bool with_z = true);

using Word = std::vector<int>;

/// Degree first, then lexicographic on generator indices.
struct DegLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

class NcPoly {
public:
  using Terms = std::map<Word, Rat, DegLex>;

  NcPoly() = default;
  explicit NcPoly(GenSetPtr gens) : gens_(std::move(gens)) {}

  static NcPoly constant(GenSetPtr gens, const Rat& c);
  static NcPoly gen(GenSetPtr gens, std::size_t i);
  static NcPoly monomial(GenSetPtr gens, Word w, const Rat& c = Rat(1));

  const GenSetPtr& gens() const { return gens_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coeff(const Word& w) const;
  void add_term(const Word& w, const Rat& c);

  bool is_homogeneous() const;
  /// Degree of a homogeneous nonzero polynomial; throws otherwise.
  std::size_t degree() const;

  NcPoly operator+(const NcPoly& o) const;
  NcPoly operator-(const NcPoly& o) const;
  NcPoly operator-() const;
  NcPoly operator*(const NcPoly& o) const;
  NcPoly scaled(const Rat& c) const;
  bool operator==(const NcPoly& o) const;

private:
  void same_gens(const NcPoly& o) const;

  GenSetPtr gens_;
  Terms terms_;
};

NcPoly nc_mul(const NcPoly& p, const NcPoly& q);

/// Sum of u (x) v over word pairs.
struct NcTensor {
  std::map<std::pair<Word, Word>, Rat> terms;

  void add_term(const Word& u, const Word& v, const Rat& c);
  NcTensor flipped() const;
  bool operator==(const NcTensor&) const = default;
};

/// Sum of all cyclic rotations of every monomial; a must be homogeneous.
NcPoly cyclic_sum(const NcPoly& a);
/// For each occurrence u g v of the generator g, adds coefficient * v u.
NcPoly cyclic_derivative(const NcPoly& w, std::size_t g);
/// For each occurrence u g v of g, adds coefficient * u (x) v.
NcTensor partial_derivative(const NcPoly& a, std::size_t g);

/// Splits w = f z with f quadratic in the non-z generators; throws Error otherwise.
NcPoly potential_factor(const NcPoly& w);
/// Both sides of the Euler relation equal c(w).
bool euler_check(const NcPoly& w);
/// tau applied to (d/dx_i o d_{x_j}) w equals (d/dx_j o d_{x_i}) w for all i, j.
bool hessian_symmetry_check(const NcPoly& w);

/// Replaces generator i by images[i] (polynomials over the target generator set).
NcPoly substitute(const NcPoly& p, const std::vector<NcPoly>& images);

/// Leading term first, e.g. "x*y*z - 2 x^2*z".
std::string render(const NcPoly& p);
std::string render_word(const GenSet& gens, const Word& w);
/// Parses sums of products with rational coefficients, powers and parentheses.
NcPoly parse_ncpoly(GenSetPtr gens, std::string_view text);

}  // namespace potentia
