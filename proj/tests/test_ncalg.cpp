#include "doctest.h"

#include <random>

#include "potentia/ncalg.hpp"

using namespace potentia;

namespace {

GenSetPtr G3 = make_gens(2);

NcPoly P(const std::string& s) { return parse_ncpoly(G3, s); }

// f = sum f_ij x_i x_j, w = f z
NcPoly potential_of(const std::vector<std::vector<Rat>>& m) {
  auto gens = make_gens(m.size());
  NcPoly w(gens);
  int z = static_cast<int>(gens->z());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      w.add_term({static_cast<int>(i), static_cast<int>(j), z}, m[i][j]);
  return w;
}

std::vector<std::vector<Rat>> random_square(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (auto& row : m)
    for (auto& v : row) v = make_rat(num(rng), den(rng));
  return m;
}

NcPoly random_poly(std::mt19937& rng, GenSetPtr gens, std::size_t deg, int terms) {
  NcPoly p(gens);
  std::uniform_int_distribution<int> num(-3, 3);
  for (int t = 0; t < terms; ++t) {
    Word w;
    for (std::size_t i = 0; i < deg; ++i) w.push_back(static_cast<int>(rng() % gens->size()));
    p.add_term(w, Rat(num(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("generator sets") {
  CHECK(GenSet::standard(2).names == std::vector<std::string>{"x", "y", "z"});
  CHECK(GenSet::standard(3).names == std::vector<std::string>{"x1", "x2", "x3", "z"});
  CHECK(GenSet::standard(2, false).names == std::vector<std::string>{"x", "y"});
  CHECK_THROWS_AS(GenSet::from_names({"x", "x"}, false), Error);
  CHECK_THROWS_AS(GenSet::standard(2).index("w"), Error);
}

TEST_CASE("product") {
  CHECK(P("x") * P("y") == P("xy"));
  CHECK((P("x+y")) * P("z") == P("xz + yz"));
  CHECK(P("yx - xy - x^2") * P("z") == P("yxz - xyz - x^2 z"));
  CHECK(nc_mul(P("x"), P("y")) != nc_mul(P("y"), P("x")));
  CHECK_THROWS_AS(P("x") * NcPoly::gen(make_gens(3), 0), Error);
}

TEST_CASE("rendering and parsing") {
  CHECK(render(P("xyz - 2 x^2 z")) == "x*y*z - 2 x^2*z");
  CHECK(render(P("-(x^2)*z")) == "-x^2*z");
  CHECK(render(P("1/2 yx + 3")) == "1/2 y*x + 3");
  CHECK(render(NcPoly(G3)) == "0");
  CHECK(P(render(P("x y^2 z - 7/3 z x + 1"))) == P("x y^2 z - 7/3 z x + 1"));
  CHECK_THROWS_AS(P("x +"), Error);
  CHECK_THROWS_AS(P("w"), Error);
}

TEST_CASE("cyclic sum") {
  CHECK(cyclic_sum(P("xyz")) == P("xyz + yzx + zxy"));
  // c(fz) = sum f_ij (x_i x_j z + z x_i x_j + x_j z x_i)
  auto w = potential_of({{Rat(1), Rat(1)}, {Rat(-1), Rat(0)}});
  CHECK(cyclic_sum(w) == P("x x z + z x x + x z x + x y z + z x y + y z x - y x z - z y x - x z y"));
  // symplectic: full antisymmetrizer
  CHECK(cyclic_sum(P("(xy - yx) z")) == P("xyz + yzx + zxy - yxz - xzy - zyx"));
  CHECK_THROWS_AS(cyclic_sum(P("x + yz")), Error);
}

TEST_CASE("cyclic derivative") {
  NcPoly f = P("x^2 + xy - yx");
  NcPoly w = f * P("z");
  CHECK(cyclic_derivative(w, 2) == f);
  CHECK(cyclic_derivative(w, 0) == P("xz + zx + yz - zy"));
  CHECK(cyclic_derivative(P("x^3"), 0) == P("3 x^2"));
  CHECK_THROWS_AS(cyclic_derivative(w, 5), Error);
}

TEST_CASE("partial derivative") {
  NcTensor t1;
  t1.add_term({}, {1}, Rat(1));
  CHECK(partial_derivative(P("xy"), 0) == t1);
  NcTensor t2;
  t2.add_term({}, {0}, Rat(1));
  t2.add_term({0}, {}, Rat(1));
  CHECK(partial_derivative(P("x^2"), 0) == t2);
  CHECK(partial_derivative(P("zy"), 0).terms.empty());
}

TEST_CASE("euler relation") {
  CHECK(euler_check(P("(x^2 + xy - yx) z")));
  CHECK(euler_check(P("(yx - 1/2 xy) z")));
  CHECK_THROWS_AS(euler_check(P("xyz + zzz")), Error);
  std::mt19937 rng(7);
  for (int t = 0; t < 10; ++t) {
    auto m = random_square(rng, 3);
    auto w = potential_of(m);
    CHECK(euler_check(w));
    // oracle: c(w) expanded from the matrix entries
    auto gens = w.gens();
    NcPoly c(gens);
    int z = 3;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        c.add_term({i, j, z}, m[i][j]);
        c.add_term({z, i, j}, m[i][j]);
        c.add_term({j, z, i}, m[i][j]);
      }
    CHECK(cyclic_sum(w) == c);
  }
}

TEST_CASE("hessian symmetry") {
  CHECK(hessian_symmetry_check(P("(x^2 + xy - yx) z")));
  CHECK(hessian_symmetry_check(cyclic_sum(P("xyz"))));
  std::mt19937 rng(11);
  for (int t = 0; t < 10; ++t) {
    auto gens = make_gens(1 + rng() % 3);
    CHECK(hessian_symmetry_check(cyclic_sum(random_poly(rng, gens, 3, 5))));
  }
  for (std::size_t n = 1; n <= 4; ++n) CHECK(hessian_symmetry_check(potential_of(random_square(rng, n))));
}

TEST_CASE("algebraic properties") {
  std::mt19937 rng(3);
  NcPoly one = NcPoly::constant(G3, Rat(1));
  for (int t = 0; t < 20; ++t) {
    NcPoly a = random_poly(rng, G3, 1 + rng() % 3, 4);
    NcPoly b = random_poly(rng, G3, 1 + rng() % 3, 4);
    NcPoly c = random_poly(rng, G3, 1 + rng() % 3, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * one == a);
    CHECK(one * a == a);
    // the cyclic derivative vanishes on commutators
    for (std::size_t g = 0; g < 3; ++g) CHECK(cyclic_derivative(a * b - b * a, g).is_zero());
    // cyclic sums are rotation invariant
    NcPoly rot(G3);
    for (const auto& [w, v] : a.terms()) {
      Word r(w.begin() + 1, w.end());
      r.push_back(w.front());
      rot.add_term(r, v);
    }
    CHECK(cyclic_sum(rot) == cyclic_sum(a));
  }
}
