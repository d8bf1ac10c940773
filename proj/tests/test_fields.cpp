#include <doctest.h>

#include <random>
#include <set>

#include "f2a/field.hpp"

using namespace f2a;

namespace {

std::vector<const Field*> small_fields() {
  return {&Field::gf(2), &Field::gf(3), &Field::gf(4), &Field::gf(5),
          &Field::gf(7), &Field::gf(8), &Field::gf(9), &Field::gf(11), &Field::gf(13)};
}

FieldElement random_element(const Field& F, std::mt19937_64& rng) {
  if (F.is_finite()) return F.element(static_cast<uint32_t>(rng() % F.size()));
  const long long n = static_cast<long long>(rng() % 41) - 20;
  const long long d = 1 + static_cast<long long>(rng() % 19);
  return F.from_rational(Rational(n, d));
}

}  // namespace

TEST_SUITE("fields") {

TEST_CASE("element parsing canonicalizes") {
  CHECK(Field::gf(5).parse("3").str() == "3");
  CHECK(Field::gf(5).parse("7").str() == "2");
  CHECK(Field::gf(5).parse("-1").str() == "4");
  CHECK(Field::gf(4).parse("[1,1]").index() == 3);  // 1 + t
  CHECK(Field::gf(4).parse("[3,2]").index() == Field::gf(4).parse("[1,0]").index());
  CHECK(Field::rationals().parse("-4/6").str() == "-2/3");
  CHECK(Field::rationals().parse("10/5").str() == "2");
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(Field::gf(5).parse("x"), ParseError);
  CHECK_THROWS_AS(Field::gf(5).parse(""), ParseError);
  CHECK_THROWS_AS(Field::gf(4).parse("[1]"), ParseError);
  CHECK_THROWS_AS(Field::gf(4).parse("[1,1,1]"), ParseError);
  CHECK_THROWS_AS(Field::gf(4).parse("1"), ParseError);
  CHECK_THROWS_AS(Field::rationals().parse("1/0"), ParseError);
  CHECK_THROWS_AS(Field::rationals().parse("1/"), ParseError);
}

TEST_CASE("enumeration order is the canonical order") {
  auto names = [](const Field& F) {
    std::vector<std::string> out;
    for (const auto& e : F.elements()) out.push_back(e.str());
    return out;
  };
  CHECK(names(Field::gf(2)) == std::vector<std::string>{"0", "1"});
  CHECK(names(Field::gf(3)) == std::vector<std::string>{"0", "1", "2"});
  // 0, 1, t, 1+t
  CHECK(names(Field::gf(4)) == std::vector<std::string>{"[0,0]", "[1,0]", "[0,1]", "[1,1]"});
  CHECK_THROWS_AS(Field::rationals().elements(), DomainError);
}

TEST_CASE("parse . format is the identity on every element") {
  for (const Field* F : small_fields()) {
    std::set<std::string> seen;
    for (const auto& e : F->elements()) {
      CHECK(F->parse(e.str()) == e);
      seen.insert(e.str());
    }
    CHECK(static_cast<int>(seen.size()) == F->size());
  }
}

TEST_CASE("field axioms hold on random triples") {
  std::mt19937_64 rng(20240811);
  std::vector<const Field*> fields = small_fields();
  fields.push_back(&Field::rationals());
  for (const Field* F : fields) {
    for (int iter = 0; iter < 60; ++iter) {
      const auto a = random_element(*F, rng), b = random_element(*F, rng),
                 c = random_element(*F, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + (-a) == F->zero());
      if (!a.is_zero()) CHECK(a * a.inverse() == F->one());
    }
  }
  CHECK_THROWS_AS(Field::gf(5).zero().inverse(), DomainError);
  CHECK_THROWS_AS(Field::gf(5).one() + Field::gf(7).one(), FieldMismatchError);
}

TEST_CASE("square-class orbits") {
  const Field& F5 = Field::gf(5);
  auto orb = square_class_orbit(F5.from_int(2));
  REQUIRE(orb.size() == 2);
  CHECK(orb[0] == F5.from_int(2));
  CHECK(orb[1] == F5.from_int(3));
  CHECK(square_class_orbit(Field::gf(3).one()) == std::vector<FieldElement>{Field::gf(3).one()});
  CHECK(square_class_orbit(F5.zero()) == std::vector<FieldElement>{F5.zero()});
  CHECK_THROWS_AS(square_class_orbit(Field::rationals().one()), DomainError);
}

TEST_CASE("square-class orbits partition each field") {
  for (const Field* F : small_fields()) {
    std::set<uint32_t> covered;
    std::vector<std::set<uint32_t>> orbits;
    for (const auto& a : F->elements()) {
      std::set<uint32_t> o;
      for (const auto& x : square_class_orbit(a)) o.insert(x.index());
      if (covered.count(a.index())) {
        bool same_as_known = false;
        for (const auto& prev : orbits) same_as_known = same_as_known || prev == o;
        CHECK(same_as_known);
      } else {
        for (uint32_t x : o) CHECK(!covered.count(x));
        covered.insert(o.begin(), o.end());
        orbits.push_back(o);
      }
    }
    CHECK(static_cast<int>(covered.size()) == F->size());
  }
}

TEST_CASE("artin-schreier orbits are equal-size cosets") {
  const Field& F2 = Field::gf(2);
  CHECK(artin_schreier_orbit(F2.one()) == std::vector<FieldElement>{F2.one()});
  CHECK(artin_schreier_orbit(F2.zero()) == std::vector<FieldElement>{F2.zero()});
  const Field& F4 = Field::gf(4);
  auto o = artin_schreier_orbit(F4.zero());
  REQUIRE(o.size() == 2);
  CHECK(o[0] == F4.zero());
  CHECK(o[1] == F4.one());
  for (const Field* F : {&Field::gf(2), &Field::gf(4), &Field::gf(8)}) {
    std::set<uint32_t> covered;
    size_t orbit_size = 0;
    for (const auto& b : F->elements()) {
      auto orb = artin_schreier_orbit(b);
      if (orbit_size == 0) orbit_size = orb.size();
      CHECK(orb.size() == orbit_size);
      for (const auto& x : orb) covered.insert(x.index());
    }
    CHECK(static_cast<int>(covered.size()) == F->size());
  }
  CHECK_THROWS_AS(artin_schreier_orbit(Field::gf(3).one()), DomainError);
}

TEST_CASE("affine-square orbits") {
  const Field& F2 = Field::gf(2);
  CHECK(affine_square_orbit(F2.zero()).size() == 2);  // {0, 1}
  CHECK(affine_square_orbit(F2.one()).size() == 2);
  CHECK(affine_square_orbit(Field::gf(4).one()).size() == 4);  // all of GF(4)
  CHECK_THROWS_AS(affine_square_orbit(Field::gf(5).one()), DomainError);
}

TEST_CASE("square-free normalization over the rationals") {
  const Field& Q = Field::rationals();
  CHECK(normalize_square_free(Q.parse("8/9")).str() == "2");
  CHECK(normalize_square_free(Q.parse("-4")).str() == "-1");
  CHECK(normalize_square_free(Q.zero()).str() == "0");
  CHECK(normalize_square_free(Q.parse("1/2")).str() == "2");
  CHECK(normalize_square_free(Q.parse("180")).str() == "5");

  // normalize(a) / a is always the square of a rational
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 50; ++iter) {
    const long long n = static_cast<long long>(rng() % 2000) - 1000;
    const long long d = 1 + static_cast<long long>(rng() % 999);
    if (n == 0) continue;
    const auto a = Q.from_rational(Rational(n, d));
    const auto s = normalize_square_free(a);
    const Rational ratio = (a / s).rat();
    const BigInt rn = boost::multiprecision::numerator(ratio);
    const BigInt rd = boost::multiprecision::denominator(ratio);
    CHECK(boost::multiprecision::sqrt(rn) * boost::multiprecision::sqrt(rn) == rn);
    CHECK(boost::multiprecision::sqrt(rd) * boost::multiprecision::sqrt(rd) == rd);
  }

  CHECK_THROWS_AS(normalize_square_free(Q.parse("1000000000039")), DomainError);
  CHECK_THROWS_AS(normalize_square_free(Field::gf(5).one()), DomainError);
}

TEST_CASE("field lookup by name") {
  CHECK(Field::by_name("gf9") == &Field::gf(9));
  CHECK(Field::by_name("q") == &Field::rationals());
  CHECK(Field::by_name("gf6") == nullptr);
  CHECK(Field::by_name("gf16") == nullptr);
  CHECK(Field::by_name("zz") == nullptr);
  CHECK(Field::gf(4).characteristic() == 2);
  CHECK(Field::gf(9).characteristic() == 3);
  CHECK(Field::rationals().characteristic() == 0);
}

}  // TEST_SUITE
