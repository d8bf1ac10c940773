#include <doctest.h>

#include <random>

#include "f2a/algebra.hpp"
#include "f2a/canon.hpp"

using namespace f2a;

namespace {

Msc msc_of(const Field& F, const std::array<int, 8>& v) { return Msc::from_ints(F, v); }

Msc a13(const Field& F) { return msc_of(F, {0, 0, 0, 0, 1, 0, 0, 0}); }
Msc a3_100(const Field& F) { return msc_of(F, {1, 0, 0, 0, 0, 0, 0, 0}); }

// A3(1/2, a4, 1/2)
Msc a3_half(const Field& F, int a4) {
  const FieldElement h = F.from_int(2).inverse();
  return Msc({h, F.zero(), F.zero(), F.from_int(a4), F.zero(), h, h, F.zero()});
}

Vec2 e1(const Field& F) { return Vec2(F.one(), F.zero()); }
Vec2 e2(const Field& F) { return Vec2(F.zero(), F.one()); }

Vec2 random_vec(const Field& F, std::mt19937_64& rng) {
  return Vec2(F.element(rng() % F.size()), F.element(rng() % F.size()));
}

std::vector<Msc> all_mscs(const Field& F) {
  std::vector<Msc> out;
  const int q = F.size();
  std::array<int, 8> v{};
  while (true) {
    out.push_back(msc_of(F, v));
    int pos = 7;
    while (pos >= 0 && ++v[pos] == q) v[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("multiplication through the structure matrix") {
  const Field& F5 = Field::gf(5);
  CHECK(multiply(a13(F5), e1(F5), e1(F5)) == e2(F5));
  CHECK(multiply(a13(F5), e1(F5), e2(F5)).is_zero());
  CHECK(multiply(a3_100(F5), e1(F5), e1(F5)) == e1(F5));
  CHECK(multiply(a3_100(F5), e2(F5), e2(F5)).is_zero());
  std::mt19937_64 rng(1);
  CHECK(multiply(Msc::zero(F5), random_vec(F5, rng), e1(F5)).is_zero());
}

TEST_CASE("multiply is bilinear") {
  std::mt19937_64 rng(42);
  for (const Field* F : {&Field::gf(3), &Field::gf(4), &Field::gf(7)}) {
    for (int iter = 0; iter < 40; ++iter) {
      std::array<int, 8> v{};
      for (auto& x : v) x = static_cast<int>(rng() % F->size());
      const Msc A = msc_of(*F, v);
      const Vec2 x = random_vec(*F, rng), xp = random_vec(*F, rng), y = random_vec(*F, rng);
      const FieldElement a = F->element(rng() % F->size()), b = F->element(rng() % F->size());
      CHECK(multiply(A, x * a + xp * b, y) == multiply(A, x, y) * a + multiply(A, xp, y) * b);
      CHECK(multiply(A, y, x * a + xp * b) == multiply(A, y, x) * a + multiply(A, y, xp) * b);
    }
  }
}

TEST_CASE("associativity predicate") {
  const Field& F5 = Field::gf(5);
  CHECK(is_associative(a13(F5)));
  CHECK(is_associative(a3_half(F5, 0)));
  CHECK(is_associative(a3_half(F5, 1)));  // 1/2 = 3 over gf5
  CHECK_FALSE(is_associative(msc_of(F5, {0, 1, 0, 0, 0, 0, 0, 0})));
  CHECK(is_associative(Msc::zero(F5)));
}

TEST_CASE("two-sided units") {
  const Field& F5 = Field::gf(5);
  auto u = find_unit(a3_half(F5, 2));
  REQUIRE(u.has_value());
  CHECK(*u == Vec2(F5.from_int(2), F5.zero()));
  CHECK_FALSE(find_unit(a3_100(F5)).has_value());
  CHECK_FALSE(find_unit(a13(F5)).has_value());

  const Field& F2 = Field::gf(2);
  auto u2 = find_unit(msc_of(F2, {1, 1, 1, 0, 1, 0, 0, 1}));  // A4,2(1,1,0)
  REQUIRE(u2.has_value());
  CHECK(*u2 == Vec2(F2.zero(), F2.one()));

  const Field& Q = Field::rationals();
  auto uq = find_unit(a3_half(Q, 7));
  REQUIRE(uq.has_value());
  CHECK(uq->str() == "2,0");
}

TEST_CASE("change of basis") {
  const Field& F5 = Field::gf(5);
  const Msc A = a3_half(F5, 1);
  const BasisChange id(Mat2::identity(F5));
  CHECK(transform(A, id) == A);
  // diag(1,2) rescales the parameter by 2^2
  const BasisChange g(Mat2::parse("1,0;0,2", F5));
  CHECK(transform(A, g) == a3_half(F5, 4));
  // diag(p, p^2) stabilizes the nilpotent algebra
  const BasisChange h(Mat2::parse("2,0;0,4", F5));
  CHECK(transform(a13(F5), h) == a13(F5));
}

TEST_CASE("transform is a right group action") {
  std::mt19937_64 rng(99);
  const Field& F5 = Field::gf(5);
  const auto& GL = gl2(F5);
  for (int iter = 0; iter < 50; ++iter) {
    std::array<int, 8> v{};
    for (auto& x : v) x = static_cast<int>(rng() % 5);
    const Msc A = msc_of(F5, v);
    const BasisChange g = GL[rng() % GL.size()], h = GL[rng() % GL.size()];
    CHECK(transform(A, g * h) == transform(transform(A, g), h));
    CHECK(transform(transform(A, g), g.inverse()) == A);
  }
}

TEST_CASE("associativity is invariant under every basis change over gf2") {
  const Field& F2 = Field::gf(2);
  for (const Msc& A : all_mscs(F2)) {
    const bool assoc = is_associative(A);
    for (const BasisChange& g : gl2(F2)) CHECK(is_associative(transform(A, g)) == assoc);
  }
}

TEST_CASE("the unit moves with the basis") {
  std::mt19937_64 rng(5);
  for (const Field* F : {&Field::gf(3), &Field::gf(5)}) {
    const Msc A = a3_half(*F, 1);
    const auto u = find_unit(A);
    REQUIRE(u.has_value());
    const auto& GL = gl2(*F);
    for (int iter = 0; iter < 25; ++iter) {
      const BasisChange g = GL[rng() % GL.size()];
      const auto v = find_unit(transform(A, g));
      REQUIRE(v.has_value());
      CHECK(*v == g.mat().inverse() * *u);
    }
  }
}

TEST_CASE("isomorphism witness search") {
  const Field& F5 = Field::gf(5);
  const BasisChange g(Mat2::parse("1,2;3,4", F5));
  const Msc B = transform(a13(F5), g);
  auto w = are_isomorphic(a13(F5), B);
  REQUIRE(w.has_value());
  CHECK(transform(a13(F5), *w) == B);

  CHECK_FALSE(are_isomorphic(a3_100(F5), msc_of(F5, {1, 0, 0, 0, 0, 1, 0, 0})).has_value());

  const Field& F2 = Field::gf(2);
  const Msc a112_0 = msc_of(F2, {0, 1, 1, 0, 0, 0, 0, 1});
  const Msc a112_1 = msc_of(F2, {0, 1, 1, 0, 1, 0, 0, 1});
  auto w2 = are_isomorphic(a112_0, a112_1);
  REQUIRE(w2.has_value());
  CHECK(transform(a112_0, *w2) == a112_1);

  CHECK_THROWS_AS(are_isomorphic(a3_half(Field::rationals(), 1), a3_half(Field::rationals(), 4)),
                  DomainError);
}

TEST_CASE("automorphism groups by brute force") {
  const Field& F5 = Field::gf(5);
  const auto aut13 = automorphism_group(a13(F5));
  CHECK(aut13.size() == 20);  // (p,0; s,p^2), 4 x 5 choices
  for (const auto& g : aut13) {
    CHECK(g.mat().b.is_zero());
    CHECK(g.mat().d == g.mat().a * g.mat().a);
  }
  const auto aut_half = automorphism_group(a3_half(F5, 1));
  REQUIRE(aut_half.size() == 2);
  CHECK(aut_half[0].str() == "1,0;0,1");
  CHECK(aut_half[1].str() == "1,0;0,4");

  // x y = y1 x admits the full triangular stabilizer, not just the identity
  const Field& F2 = Field::gf(2);
  const auto aut62 = automorphism_group(msc_of(F2, {1, 0, 0, 0, 0, 0, 1, 0}));
  CHECK(aut62.size() == 2);

  // subgroup axioms
  for (const auto& g : aut13)
    for (const auto& h : aut13) {
      CHECK(transform(a13(F5), g * h) == a13(F5));
      CHECK(transform(a13(F5), g.inverse()) == a13(F5));
    }
}

TEST_CASE("matrix and structure-matrix text round trips") {
  const Field& F4 = Field::gf(4);
  const std::string s = "[1,0],[0,1],[1,1],[0,0];[0,0],[1,0],[0,1],[1,1]";
  CHECK(Msc::parse(s, F4).str() == s);
  const Field& Q = Field::rationals();
  CHECK(Msc::parse("1/2,0,0,-4/6;0,1/2,1/2,0", Q).str() == "1/2,0,0,-2/3;0,1/2,1/2,0");
  CHECK(Mat2::parse("1,0;0,2", Q).str() == "1,0;0,2");
  CHECK_THROWS_AS(Msc::parse("1,2;3,4", Q), ParseError);
  CHECK_THROWS_AS(BasisChange::parse("1,1;1,1", Q), DomainError);
}

TEST_CASE("validated algebra wrapper") {
  const Field& F5 = Field::gf(5);
  AssociativeAlgebra alg(a3_half(F5, 1));
  CHECK(alg.is_unital());
  CHECK(alg.unit()->str() == "2,0");
  AssociativeAlgebra nil(a13(F5));
  CHECK_FALSE(nil.is_unital());
  CHECK_THROWS_AS(AssociativeAlgebra(msc_of(F5, {0, 1, 0, 0, 0, 0, 0, 0})), DomainError);
}

}  // TEST_SUITE
