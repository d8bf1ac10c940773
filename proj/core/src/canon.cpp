#include "f2a/canon.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace f2a::canon {

CharClass char_class_of(const Field& F) {
  if (F.characteristic() == 2) return CharClass::Char2;
  if (F.characteristic() == 3) return CharClass::Char3;
  return CharClass::Not23;
}

const char* char_class_name(CharClass c) {
  switch (c) {
    case CharClass::Not23: return "not23";
    case CharClass::Char2: return "char2";
    case CharClass::Char3: return "char3";
  }
  return "?";
}

FieldElement normalize_parameter(ParamRule rule, const FieldElement& value) {
  const Field& F = value.field();
  if (!F.is_finite()) {
    if (rule == ParamRule::SquareClass) return normalize_square_free(value);
    throw DomainError("parameter rule needs characteristic 2, not the rationals");
  }
  std::vector<FieldElement> orbit;
  switch (rule) {
    case ParamRule::None: return value;
    case ParamRule::SquareClass: orbit = square_class_orbit(value); break;
    case ParamRule::ArtinSchreier: orbit = artin_schreier_orbit(value); break;
    case ParamRule::AffineSquare: orbit = affine_square_orbit(value); break;
  }
  return *std::min_element(orbit.begin(), orbit.end());
}

// ---------------------------------------------------------------------------
// automorphism descriptors

std::string AutDescriptor::str() const {
  switch (kind) {
    case Kind::G1: return "{(1,0;0,t): t != 0}";
    case Kind::G2: return "{(1,0;s,t): t != 0}";
    case Kind::G3: return "{(1,0;s,1)}";
    case Kind::G4: return "{(p,0;s,p^2): p != 0}";
    case Kind::G5: return "{(p,0;s,2p^2): p != 0}";
    case Kind::G6Shift: return "{(p,0;b1(p-1),1): p != 0}";
    case Kind::G6Sqrt: return "{(p,0;sqrt(b1)(p-1),1): p != 0}";
    case Kind::G7: return "{(1,0;1+2t,t): t != 0}";
    case Kind::G8: return "{(1,0;0,+-1)}";
    case Kind::PS1: return "{(p,0;s,1): p != 0}";
    case Kind::IdemShift: return "{(1,0;s,1): s^2 = s}";
    case Kind::Trivial: return "{identity}";
  }
  return "?";
}

std::vector<BasisChange> AutDescriptor::instantiate(const Field& F,
                                                    const FieldElement& param) const {
  if (!F.is_finite()) throw DomainError("descriptor instantiation needs a finite field");
  const FieldElement zero = F.zero(), one = F.one();
  std::vector<BasisChange> out;
  auto push = [&](FieldElement a, FieldElement b, FieldElement c, FieldElement d) {
    out.emplace_back(Mat2(std::move(a), std::move(b), std::move(c), std::move(d)));
  };
  const auto elems = F.elements();
  auto sqrt_of = [&](const FieldElement& x) {
    for (const auto& r : elems)
      if (r * r == x) return r;
    throw std::logic_error("no square root in " + F.name());
  };
  switch (kind) {
    case Kind::G1:
      for (const auto& t : elems)
        if (!t.is_zero()) push(one, zero, zero, t);
      break;
    case Kind::G2:
      for (const auto& s : elems)
        for (const auto& t : elems)
          if (!t.is_zero()) push(one, zero, s, t);
      break;
    case Kind::G3:
      for (const auto& s : elems) push(one, zero, s, one);
      break;
    case Kind::G4:
      for (const auto& p : elems)
        if (!p.is_zero())
          for (const auto& s : elems) push(p, zero, s, p * p);
      break;
    case Kind::G5:
      for (const auto& p : elems)
        if (!p.is_zero())
          for (const auto& s : elems) push(p, zero, s, F.from_int(2) * p * p);
      break;
    case Kind::G6Shift:
      for (const auto& p : elems)
        if (!p.is_zero()) push(p, zero, param * (p - one), one);
      break;
    case Kind::G6Sqrt: {
      const FieldElement r = sqrt_of(param);
      for (const auto& p : elems)
        if (!p.is_zero()) push(p, zero, r * (p - one), one);
      break;
    }
    case Kind::G7:
      for (const auto& t : elems)
        if (!t.is_zero()) push(one, zero, one + F.from_int(2) * t, t);
      break;
    case Kind::G8:
      push(one, zero, zero, one);
      if (F.characteristic() != 2) push(one, zero, zero, -one);
      break;
    case Kind::PS1:
      for (const auto& p : elems)
        if (!p.is_zero())
          for (const auto& s : elems) push(p, zero, s, one);
      break;
    case Kind::IdemShift:
      for (const auto& s : elems)
        if (s * s == s) push(one, zero, s, one);
      break;
    case Kind::Trivial:
      push(one, zero, zero, one);
      break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(), [](const auto& x, const auto& y) { return x == y; }),
            out.end());
  return out;
}

// ---------------------------------------------------------------------------
// catalog families

std::string CatalogFamily::param_name() const {
  return rule == ParamRule::SquareClass ? "alpha4" : "beta1";
}

Msc CatalogFamily::instantiate(const Field& F, const FieldElement& param) const {
  std::array<FieldElement, 8> e;
  for (int i = 0; i < 8; ++i) {
    switch (entries[i]) {
      case kParamSlot: e[i] = param; break;
      case kHalf: e[i] = F.from_int(2).inverse(); break;
      default: e[i] = F.from_int(entries[i]);
    }
  }
  return Msc(e);
}

Msc CatalogFamily::instantiate(const Field& F) const {
  if (parametric()) throw std::logic_error("parametric family needs a parameter");
  return instantiate(F, F.zero());
}

AutDescriptor CatalogFamily::aut(Reading r, const FieldElement& param) const {
  using K = AutDescriptor::Kind;
  const bool ref = r == Reading::Reference;
  const bool pz = param.is_zero();
  switch (id) {
    case FamilyId::A3_100:
    case FamilyId::A32_100:
    case FamilyId::A33_100: return {K::G1, false};
    case FamilyId::A3_101:
    case FamilyId::A32_101:
    case FamilyId::A33_101:
    case FamilyId::A3_H00: return {K::G2, false};
    case FamilyId::A3_HA4H: return {pz ? K::G1 : K::G8, false};
    case FamilyId::A13:
    case FamilyId::A122: return {K::G4, false};
    case FamilyId::A42:
      if (ref) return {pz ? K::PS1 : K::G3, false};
      return {K::IdemShift, false};
    case FamilyId::A62: return {ref ? K::Trivial : K::G2, false};
    case FamilyId::A112: return {ref ? K::G6Shift : K::G6Sqrt, true};
    case FamilyId::A33_200: return {ref ? K::G7 : K::G2, false};
    case FamilyId::A33_2A42:
      if (pz) return {ref ? K::Trivial : K::G1, false};
      return {ref ? K::G3 : K::G8, false};
    case FamilyId::A133: return {ref ? K::G5 : K::G4, false};
  }
  throw std::logic_error("unknown family");
}

const std::vector<CatalogFamily>& families(CharClass cls) {
  static const std::vector<CatalogFamily> not23 = {
      {FamilyId::A3_100, CharClass::Not23, "A3(1,0,0)", "A_3(1,0,0)",
       {1, 0, 0, 0, 0, 0, 0, 0}, ParamRule::None, std::nullopt},
      {FamilyId::A3_101, CharClass::Not23, "A3(1,0,1)", "A_3(1,0,1)",
       {1, 0, 0, 0, 0, 1, 0, 0}, ParamRule::None, std::nullopt},
      {FamilyId::A3_H00, CharClass::Not23, "A3(1/2,0,0)", "A_3(1/2,0,0)",
       {kHalf, 0, 0, 0, 0, 0, kHalf, 0}, ParamRule::None, std::nullopt},
      {FamilyId::A3_HA4H, CharClass::Not23, "A3(1/2,a4,1/2)", "A_3(1/2, a4, 1/2)",
       {kHalf, 0, 0, kParamSlot, 0, kHalf, kHalf, 0}, ParamRule::SquareClass,
       std::array<int, 2>{2, 0}},
      {FamilyId::A13, CharClass::Not23, "A13", "A_13",
       {0, 0, 0, 0, 1, 0, 0, 0}, ParamRule::None, std::nullopt},
  };
  static const std::vector<CatalogFamily> char2 = {
      {FamilyId::A32_100, CharClass::Char2, "A3,2(1,0,0)", "A_{3,2}(1,0,0)",
       {1, 0, 0, 0, 0, 0, 0, 0}, ParamRule::None, std::nullopt},
      {FamilyId::A32_101, CharClass::Char2, "A3,2(1,0,1)", "A_{3,2}(1,0,1)",
       {1, 0, 0, 0, 0, 1, 0, 0}, ParamRule::None, std::nullopt},
      {FamilyId::A42, CharClass::Char2, "A4,2(1,b1,0)", "A_{4,2}(1, b1, 0)",
       {1, 1, 1, 0, kParamSlot, 0, 0, 1}, ParamRule::ArtinSchreier, std::array<int, 2>{0, 1}},
      {FamilyId::A62, CharClass::Char2, "A6,2(1,0)", "A_{6,2}(1,0)",
       {1, 0, 0, 0, 0, 0, 1, 0}, ParamRule::None, std::nullopt},
      {FamilyId::A112, CharClass::Char2, "A11,2(b1)", "A_{11,2}(b1)",
       {0, 1, 1, 0, kParamSlot, 0, 0, 1}, ParamRule::AffineSquare, std::array<int, 2>{0, 1}},
      {FamilyId::A122, CharClass::Char2, "A12,2", "A_{12,2}",
       {0, 0, 0, 0, 1, 0, 0, 0}, ParamRule::None, std::nullopt},
  };
  static const std::vector<CatalogFamily> char3 = {
      {FamilyId::A33_100, CharClass::Char3, "A3,3(1,0,0)", "A_{3,3}(1,0,0)",
       {1, 0, 0, 0, 0, 0, 0, 0}, ParamRule::None, std::nullopt},
      {FamilyId::A33_101, CharClass::Char3, "A3,3(1,0,1)", "A_{3,3}(1,0,1)",
       {1, 0, 0, 0, 0, 1, 0, 0}, ParamRule::None, std::nullopt},
      {FamilyId::A33_200, CharClass::Char3, "A3,3(2,0,0)", "A_{3,3}(2,0,0)",
       {2, 0, 0, 0, 0, 0, 2, 0}, ParamRule::None, std::nullopt},
      {FamilyId::A33_2A42, CharClass::Char3, "A3,3(2,a4,2)", "A_{3,3}(2, a4, 2)",
       {2, 0, 0, kParamSlot, 0, 2, 2, 0}, ParamRule::SquareClass, std::array<int, 2>{2, 0}},
      {FamilyId::A133, CharClass::Char3, "A13,3", "A_{13,3}",
       {0, 0, 0, 0, 1, 0, 0, 0}, ParamRule::None, std::nullopt},
  };
  switch (cls) {
    case CharClass::Not23: return not23;
    case CharClass::Char2: return char2;
    case CharClass::Char3: return char3;
  }
  throw std::logic_error("unknown char class");
}

namespace {

std::string splice_param(std::string text, const std::string& placeholder,
                         const std::optional<FieldElement>& param) {
  if (!param) return text;
  auto pos = text.find(placeholder);
  if (pos == std::string::npos) return text;
  return text.replace(pos, placeholder.size(), placeholder + "=" + param->str());
}

std::string family_placeholder(const CatalogFamily& fam) {
  return fam.rule == ParamRule::SquareClass ? "a4" : "b1";
}

}  // namespace

std::string CatalogInstance::label() const {
  return splice_param(family->name, family_placeholder(*family), param);
}

std::string CatalogInstance::pretty() const {
  return splice_param(family->pretty, family_placeholder(*family), param);
}

std::vector<CatalogInstance> catalog(const Field& F) {
  static std::mutex m;
  static std::map<const Field*, std::vector<CatalogInstance>> cache;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(&F);
  if (it != cache.end()) return it->second;

  std::vector<CatalogInstance> out;
  for (const CatalogFamily& fam : families(char_class_of(F))) {
    std::vector<std::optional<FieldElement>> params;
    if (!fam.parametric()) {
      params.push_back(std::nullopt);
    } else if (!F.is_finite()) {
      params.push_back(F.zero());  // the only finitely listable orbit over q
    } else {
      std::set<uint32_t> seen;
      for (const auto& v : F.elements()) {
        if (seen.count(v.index())) continue;
        FieldElement rep = normalize_parameter(fam.rule, v);
        std::vector<FieldElement> orbit;
        switch (fam.rule) {
          case ParamRule::SquareClass: orbit = square_class_orbit(v); break;
          case ParamRule::ArtinSchreier: orbit = artin_schreier_orbit(v); break;
          case ParamRule::AffineSquare: orbit = affine_square_orbit(v); break;
          default: break;
        }
        for (const auto& o : orbit) seen.insert(o.index());
        params.push_back(rep);
      }
    }
    for (const auto& p : params) {
      Msc msc = p ? fam.instantiate(F, *p) : fam.instantiate(F);
      if (!is_associative(msc))
        throw std::logic_error("catalog self-check failed: " + fam.name + " over " + F.name());
      out.push_back(CatalogInstance{&fam, p, std::move(msc)});
    }
  }
  return cache.emplace(&F, std::move(out)).first->second;
}

std::string CanonicalLabel::str() const {
  for (const CatalogFamily& fam : families(cls))
    if (fam.name == family) return splice_param(family, family_placeholder(fam), param);
  return family;
}

std::string CanonicalLabel::pretty() const {
  for (const CatalogFamily& fam : families(cls))
    if (fam.name == family) return splice_param(fam.pretty, family_placeholder(fam), param);
  return family;
}

// ---------------------------------------------------------------------------
// algebra classification

namespace {

std::optional<BigInt> sqrt_exact(const BigInt& n) {
  if (n < 0) return std::nullopt;
  BigInt r = boost::multiprecision::sqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

AlgebraClassification classify_over_rationals(const Msc& A) {
  const Field& F = A.field();
  for (const CatalogFamily& fam : families(CharClass::Not23)) {
    std::optional<FieldElement> slot;
    bool match = true;
    for (int i = 0; i < 8 && match; ++i) {
      const FieldElement& e = A.entry(i / 4, i % 4);
      if (fam.entries[i] == kParamSlot)
        slot = e;
      else if (fam.entries[i] == kHalf)
        match = e == F.from_int(2).inverse();
      else
        match = e == F.from_int(fam.entries[i]);
    }
    if (!match) continue;
    if (!fam.parametric())
      return {CanonicalLabel{CharClass::Not23, fam.name, std::nullopt},
              BasisChange(Mat2::identity(F))};
    const FieldElement a4 = *slot;
    const FieldElement norm = normalize_parameter(fam.rule, a4);
    if (norm == a4)
      return {CanonicalLabel{CharClass::Not23, fam.name, norm}, BasisChange(Mat2::identity(F))};
    // a4 = norm * t^2; the witness diag(1, 1/t) rescales the parameter.
    const Rational ratio = (a4 / norm).rat();
    auto num = sqrt_exact(boost::multiprecision::numerator(ratio));
    auto den = sqrt_exact(boost::multiprecision::denominator(ratio));
    if (!num || !den) throw std::logic_error("square-free normalization lost a square");
    const FieldElement t = F.from_rational(Rational(*num, *den));
    BasisChange w(Mat2(F.one(), F.zero(), F.zero(), t.inverse()));
    if (transform(A, w) != fam.instantiate(F, norm))
      throw std::logic_error("parameter-normalization witness check failed");
    return {CanonicalLabel{CharClass::Not23, fam.name, norm}, w};
  }
  throw NoMatchError("unclassified over q: input is not in canonical template shape");
}

}  // namespace

AlgebraClassification classify_algebra(const Msc& A) {
  if (A.is_zero()) throw NoMatchError("the zero multiplication is the excluded trivial algebra");
  if (!is_associative(A)) throw DomainError("classify_algebra needs an associative algebra");
  const Field& F = A.field();
  if (!F.is_finite()) return classify_over_rationals(A);
  for (const CatalogInstance& inst : catalog(F)) {
    if (auto w = are_isomorphic(A, inst.msc))
      return {CanonicalLabel{char_class_of(F), inst.family->name, inst.param}, *w};
  }
  throw NoMatchError("no catalog family matches: classification completeness failure for " +
                    A.str() + " over " + F.name());
}

// ---------------------------------------------------------------------------
// pair-class and Frobenius-class item tables

namespace {

using Params = std::vector<std::pair<std::string, FieldElement>>;
using Match = std::optional<Params>;
using MatchFn = std::function<Match(const BilinearForm&, const FieldElement&)>;

bool nz(const FieldElement& x) { return !x.is_zero(); }

MatchFn m_a1cd() {  // (a,1;c,d), ad-c != 0
  return [](const BilinearForm& S, const FieldElement&) -> Match {
    const auto& [a, b, c, d] = S.s;
    if (!b.is_one() || !nz(a * d - c)) return std::nullopt;
    return Params{{"a", a}, {"c", c}, {"d", d}};
  };
}
MatchFn m_a01d() {  // (a,0;1,d), ad != 0
  return [](const BilinearForm& S, const FieldElement&) -> Match {
    const auto& [a, b, c, d] = S.s;
    if (!b.is_zero() || !c.is_one() || !nz(a * d)) return std::nullopt;
    return Params{{"a", a}, {"d", d}};
  };
}
MatchFn m_diag() {  // (a,0;0,d), ad != 0
  return [](const BilinearForm& S, const FieldElement&) -> Match {
    const auto& [a, b, c, d] = S.s;
    if (!b.is_zero() || !c.is_zero() || !nz(a * d)) return std::nullopt;
    return Params{{"a", a}, {"d", d}};
  };
}
MatchFn m_01c0() {  // (0,1;c,0), c != 0, c+1 != 0
  return [](const BilinearForm& S, const FieldElement&) -> Match {
    const auto& [a, b, c, d] = S.s;
    const Field& F = S.field();
    if (!a.is_zero() || !b.is_one() || !d.is_zero() || !nz(c) || !nz(c + F.one()))
      return std::nullopt;
    return Params{{"c", c}};
  };
}
MatchFn m_a1m10() {  // (a,1;-1,0)
  return [](const BilinearForm& S, const FieldElement&) -> Match {
    const auto& [a, b, c, d] = S.s;
    if (!b.is_one() || c != -b || !d.is_zero()) return std::nullopt;
    return Params{{"a", a}};
  };
}
MatchFn m_a0cd() {  // (a,0;c,d), ad != 0
  return [](const BilinearForm& S, const FieldElement&) -> Match {
    const auto& [a, b, c, d] = S.s;
    if (!b.is_zero() || !nz(a * d)) return std::nullopt;
    return Params{{"a", a}, {"c", c}, {"d", d}};
  };
}
MatchFn m_0bc0(bool need_sum) {  // (0,b;c,0), bc != 0 [, b+c != 0]
  return [need_sum](const BilinearForm& S, const FieldElement&) -> Match {
    const auto& [a, b, c, d] = S.s;
    if (!a.is_zero() || !d.is_zero() || !nz(b * c)) return std::nullopt;
    if (need_sum && (b + c).is_zero()) return std::nullopt;
    return Params{{"b", b}, {"c", c}};
  };
}
MatchFn m_abmb0() {  // (a,b;-b,0), b != 0
  return [](const BilinearForm& S, const FieldElement&) -> Match {
    const auto& [a, b, c, d] = S.s;
    if (!d.is_zero() || c != -b || !nz(b)) return std::nullopt;
    return Params{{"a", a}, {"b", b}};
  };
}
MatchFn m_generic() {  // (a,b;c,d), ad-bc != 0
  return [](const BilinearForm& S, const FieldElement&) -> Match {
    if (S.det().is_zero()) return std::nullopt;
    const auto& [a, b, c, d] = S.s;
    return Params{{"a", a}, {"b", b}, {"c", c}, {"d", d}};
  };
}
MatchFn m_a_b1d_0_d() {  // (a,-b1*d;0,d), ad != 0
  return [](const BilinearForm& S, const FieldElement& b1) -> Match {
    const auto& [a, b, c, d] = S.s;
    if (b != -(b1 * d) || !c.is_zero() || !nz(a * d)) return std::nullopt;
    return Params{{"a", a}, {"d", d}};
  };
}
MatchFn m_a_b1d_b1d_d() {  // (a,-b1*d;-b1*d,d), ad - b1^2 d^2 != 0
  return [](const BilinearForm& S, const FieldElement& b1) -> Match {
    const auto& [a, b, c, d] = S.s;
    const FieldElement w = -(b1 * d);
    if (b != w || c != w || !nz(a * d - (b1 * b1) * (d * d))) return std::nullopt;
    return Params{{"a", a}, {"d", d}};
  };
}
MatchFn m_a1c0() {  // (a,1;c,0), c != 0
  return [](const BilinearForm& S, const FieldElement&) -> Match {
    const auto& [a, b, c, d] = S.s;
    if (!b.is_one() || !d.is_zero() || !nz(c)) return std::nullopt;
    return Params{{"a", a}, {"c", c}};
  };
}
MatchFn m_a1cd_dnz() {  // (a,1;c,d), d != 0, ad-c != 0
  return [](const BilinearForm& S, const FieldElement&) -> Match {
    const auto& [a, b, c, d] = S.s;
    if (!b.is_one() || !nz(d) || !nz(a * d - c)) return std::nullopt;
    return Params{{"a", a}, {"c", c}, {"d", d}};
  };
}
MatchFn m_a_md_0_d() {  // (a,-d;0,d), ad != 0
  return [](const BilinearForm& S, const FieldElement&) -> Match {
    const auto& [a, b, c, d] = S.s;
    if (b != -d || !c.is_zero() || !nz(a * d)) return std::nullopt;
    return Params{{"a", a}, {"d", d}};
  };
}
MatchFn m_a_md_md_d() {  // (a,-d;-d,d), d(a-d) != 0
  return [](const BilinearForm& S, const FieldElement&) -> Match {
    const auto& [a, b, c, d] = S.s;
    if (b != -d || c != -d || !nz(d * (a - d))) return std::nullopt;
    return Params{{"a", a}, {"d", d}};
  };
}

// Frobenius-table matchers.
MatchFn f_a110() {  // (a,1;1,0)
  return [](const BilinearForm& S, const FieldElement&) -> Match {
    const auto& [a, b, c, d] = S.s;
    if (!b.is_one() || !c.is_one() || !d.is_zero()) return std::nullopt;
    return Params{{"a", a}};
  };
}
MatchFn f_abb2a4a() {  // (a,b;b,2*a4*a), 2*a4*a^2 - b^2 != 0
  return [](const BilinearForm& S, const FieldElement& a4) -> Match {
    const auto& [a, b, c, d] = S.s;
    const Field& F = S.field();
    const FieldElement two = F.from_int(2);
    if (c != b || d != two * a4 * a) return std::nullopt;
    if (!nz(two * a4 * a * a - b * b)) return std::nullopt;
    return Params{{"a", a}, {"b", b}};
  };
}
MatchFn f_0bb0() {  // (0,b;b,0), b != 0
  return [](const BilinearForm& S, const FieldElement&) -> Match {
    const auto& [a, b, c, d] = S.s;
    if (!a.is_zero() || !d.is_zero() || c != b || !nz(b)) return std::nullopt;
    return Params{{"b", b}};
  };
}
MatchFn f_fixed_11m10() {  // (1,1;-1,0)
  return [](const BilinearForm& S, const FieldElement&) -> Match {
    const auto& [a, b, c, d] = S.s;
    if (!a.is_one() || !b.is_one() || c != -b || !d.is_zero()) return std::nullopt;
    return Params{};
  };
}
MatchFn f_b1d_diag(bool square_constraint) {  // (b1*d,0;0,d), b1*d != 0 / b1*d^2 != 0
  return [square_constraint](const BilinearForm& S, const FieldElement& b1) -> Match {
    const auto& [a, b, c, d] = S.s;
    if (!b.is_zero() || !c.is_zero() || a != b1 * d) return std::nullopt;
    const FieldElement gate = square_constraint ? b1 * d * d : b1 * d;
    if (!nz(gate)) return std::nullopt;
    return Params{{"d", d}};
  };
}
MatchFn f_b1d_corner() {  // (b1*d,-b1*d;-b1*d,d), b1*d^2*(1-b1) != 0
  return [](const BilinearForm& S, const FieldElement& b1) -> Match {
    const auto& [a, b, c, d] = S.s;
    const Field& F = S.field();
    const FieldElement w = -(b1 * d);
    if (a != b1 * d || b != w || c != w) return std::nullopt;
    if (!nz(b1 * d * d * (F.one() - b1))) return std::nullopt;
    return Params{{"d", d}};
  };
}
MatchFn f_bbm_b0() {  // (b,b;-b,0), b != 0
  return [](const BilinearForm& S, const FieldElement&) -> Match {
    const auto& [a, b, c, d] = S.s;
    if (a != b || c != -b || !d.is_zero() || !nz(b)) return std::nullopt;
    return Params{{"b", b}};
  };
}
MatchFn f_fixed_0110() {  // (0,1;1,0)
  return [](const BilinearForm& S, const FieldElement&) -> Match {
    const auto& [a, b, c, d] = S.s;
    if (!a.is_zero() || !b.is_one() || !c.is_one() || !d.is_zero()) return std::nullopt;
    return Params{};
  };
}
MatchFn f_bbbd() {  // (b,b;b,d), b != 0, b != d
  return [](const BilinearForm& S, const FieldElement&) -> Match {
    const auto& [a, b, c, d] = S.s;
    if (a != b || c != b || !nz(b) || b == d) return std::nullopt;
    return Params{{"b", b}, {"d", d}};
  };
}
MatchFn f_b_plus_b1d() {  // (b+b1*d,b;b,d), (b+b1*d)d - b^2 != 0
  return [](const BilinearForm& S, const FieldElement& b1) -> Match {
    const auto& [a, b, c, d] = S.s;
    if (c != b || a != b + b1 * d) return std::nullopt;
    if (!nz(a * d - b * b)) return std::nullopt;
    return Params{{"b", b}, {"d", d}};
  };
}
MatchFn f_011d() {  // (0,1;1,d)
  return [](const BilinearForm& S, const FieldElement&) -> Match {
    const auto& [a, b, c, d] = S.s;
    if (!a.is_zero() || !b.is_one() || !c.is_one()) return std::nullopt;
    return Params{{"d", d}};
  };
}
MatchFn f_abb0() {  // (a,b;b,0), b != 0
  return [](const BilinearForm& S, const FieldElement&) -> Match {
    const auto& [a, b, c, d] = S.s;
    if (c != b || !d.is_zero() || !nz(b)) return std::nullopt;
    return Params{{"a", a}, {"b", b}};
  };
}
MatchFn f_a002a4a() {  // (a,0;0,2*a4*a), a4*a != 0
  return [](const BilinearForm& S, const FieldElement& a4) -> Match {
    const auto& [a, b, c, d] = S.s;
    const Field& F = S.field();
    if (!b.is_zero() || !c.is_zero() || d != F.from_int(2) * a4 * a) return std::nullopt;
    if (!nz(a4 * a)) return std::nullopt;
    return Params{{"a", a}};
  };
}

FormItem item(std::string id, std::string display, MatchFn fn, bool ref = true, bool val = true,
              bool typo = false) {
  FormItem it;
  it.id = std::move(id);
  it.display = std::move(display);
  it.reference = ref;
  it.validated = val;
  it.typo_corrected = typo;
  it.match = std::move(fn);
  return it;
}

std::vector<FormItem> g1_items(int base) {
  auto n = [&](int i) { return std::to_string(base + i); };
  return {item(n(0), "(a,1;c,d), ad-c != 0", m_a1cd()),
          item(n(1), "(a,0;1,d), ad != 0", m_a01d()),
          item(n(2), "(a,0;0,d) ~ (a,0;0,t^2 d), ad != 0", m_diag())};
}

std::vector<FormItem> g2_items(int base) {
  auto n = [&](int i) { return std::to_string(base + i); };
  return {item(n(0), "(a,0;1,d), ad != 0", m_a01d()),
          item(n(1), "(a,0;0,d) ~ (a,0;0,t^2 d), ad != 0", m_diag()),
          item(n(2), "(0,1;c,0), c != 0, c+1 != 0", m_01c0()),
          item(n(3), "(a,1;-1,0)", m_a1m10())};
}

std::vector<FormItem> g2_items_validated_only() {
  return {item("v1", "(a,0;1,d), ad != 0", m_a01d(), false, true),
          item("v2", "(a,0;0,d) ~ (a,0;0,t^2 d), ad != 0", m_diag(), false, true),
          item("v3", "(0,1;c,0), c != 0, c+1 != 0", m_01c0(), false, true),
          item("v4", "(a,1;-1,0)", m_a1m10(), false, true)};
}

using TableKey = std::pair<FamilyId, bool>;

std::map<TableKey, std::vector<FormItem>> build_pair_tables() {
  std::map<TableKey, std::vector<FormItem>> t;
  auto both = [&](FamilyId id, std::vector<FormItem> items) {
    t[{id, true}] = items;
    t[{id, false}] = std::move(items);
  };

  // --- characteristic != 2,3 ---
  both(FamilyId::A3_100, g1_items(1));
  both(FamilyId::A3_101, g2_items(4));
  both(FamilyId::A3_H00, g2_items(8));
  t[{FamilyId::A3_HA4H, true}] = g1_items(12);
  t[{FamilyId::A3_HA4H, false}] = {
      item("15", "(a,b;c,d) ~ (a,-b;-c,d), ad-bc != 0", m_generic())};
  both(FamilyId::A13,
       {item("16", "(a,0;c,d) ~ (p^2 a,0;p^3 c,p^4 d), ad != 0", m_a0cd()),
        item("17", "(0,b;c,0) ~ (0,p^3 b;p^3 c,0), bc != 0", m_0bc0(false), true, false),
        item("17", "(0,b;c,0) ~ (0,p^3 b;p^3 c,0), bc != 0, b+c != 0", m_0bc0(true), false, true),
        item("18", "(a,b;-b,0) ~ (p^2 a,p^3 b;-p^3 b,0), b != 0", m_abmb0())});

  // --- characteristic 2 ---
  both(FamilyId::A122,
       {item("1", "(a,0;c,d) ~ (p^2 a,0;p^3 c,p^4 d), ad != 0", m_a0cd()),
        item("2", "(0,b;c,0) ~ (0,p^3 b;p^3 c,0), bc != 0", m_0bc0(false), true, false),
        item("2", "(0,b;c,0) ~ (0,p^3 b;p^3 c,0), bc != 0, b+c != 0", m_0bc0(true), false, true),
        item("3", "(a,b;-b,0) ~ (p^2 a,p^3 b;-p^3 b,0), b != 0", m_abmb0())});
  both(FamilyId::A112,
       {item("4", "(a,0;c,d), ad != 0", m_a0cd()),
        item("5", "(a,-b1*d;0,d), ad != 0", m_a_b1d_0_d(), true, false),
        item("6", "(a,-b1*d;-b1*d,d), ad - b1^2 d^2 != 0", m_a_b1d_b1d_d(), true, false),
        item("7", "(a,1;c,0), c != 0", m_a1c0()),
        item("v1", "(a,1;c,d), d != 0, ad-c != 0", m_a1cd_dnz(), false, true)});
  both(FamilyId::A62, [] {
    auto items = g2_items_validated_only();
    items.insert(items.begin(), item("8", "(a,b;c,d), ad-bc != 0", m_generic(), true, false));
    return items;
  }());
  t[{FamilyId::A42, true}] = {
      item("9", "(a,0;1,d), ad != 0", m_a01d(), true, false),
      item("10", "(a,0;0,d) ~ (p^2 a,0;0,d), ad != 0", m_diag(), true, false),
      item("11", "(0,1;c,0), c != 0, c+1 != 0", m_01c0(), true, false),
      item("12", "(a,1;-1,0)", m_a1m10(), true, false),
      item("v1", "(a,b;c,d) ~ idempotent shifts, ad-bc != 0", m_generic(), false, true)};
  t[{FamilyId::A42, false}] = {
      item("13", "(a,0;c,d), ad != 0", m_a0cd(), true, false),
      item("14", "(0,b;c,0), bc != 0, b+c != 0  [entry listed as 'ca', read as 'c']",
           m_0bc0(true), true, false, true),
      item("15", "(a,b;-b,0), b != 0", m_abmb0(), true, false),
      item("v1", "(a,b;c,d) ~ idempotent shifts, ad-bc != 0", m_generic(), false, true)};
  both(FamilyId::A32_100, g1_items(16));
  both(FamilyId::A32_101, g2_items(19));

  // --- characteristic 3 ---
  both(FamilyId::A133,
       {item("1", "(a,0;c,d) ~ (p^2 a,0;p^3 c,p^4 d), ad != 0", m_a0cd()),
        item("2", "(0,b;c,0) ~ (0,p^3 b;p^3 c,0), bc != 0, b+c != 0", m_0bc0(true)),
        item("3", "(a,b;-b,0) ~ (p^2 a,p^3 b;-p^3 b,0), b != 0", m_abmb0())});
  both(FamilyId::A33_101, g2_items(4));
  both(FamilyId::A33_100, g1_items(8));
  both(FamilyId::A33_200, [] {
    std::vector<FormItem> items = {
        item("11", "(a,0;c,d), ad != 0", m_a0cd(), true, false),
        item("12", "(a,-d;0,d), ad != 0", m_a_md_0_d(), true, false),
        item("13", "(a,-d;-d,d), d(a-d) != 0", m_a_md_md_d(), true, false),
        item("14", "(a,1;c,0), c != 0", m_a1c0(), true, false)};
    for (auto& v : g2_items_validated_only()) items.push_back(v);
    return items;
  }());
  t[{FamilyId::A33_2A42, true}] = {
      item("15", "(a,b;c,d), ad-bc != 0", m_generic(), true, false),
      item("v1", "(a,1;c,d), ad-c != 0", m_a1cd(), false, true),
      item("v2", "(a,0;1,d), ad != 0", m_a01d(), false, true),
      item("v3", "(a,0;0,d) ~ (a,0;0,t^2 d), ad != 0", m_diag(), false, true)};
  t[{FamilyId::A33_2A42, false}] = {
      item("16", "(a,0;c,d), ad != 0", m_a0cd(), true, false),
      item("17", "(0,b;c,0), bc != 0, b+c != 0", m_0bc0(true), true, false),
      item("18", "(a,b;-b,0), b != 0", m_abmb0(), true, false),
      item("v1", "(a,b;c,d) ~ (a,-b;-c,d), ad-bc != 0", m_generic(), false, true)};
  return t;
}

std::map<TableKey, std::vector<FormItem>> build_frobenius_tables() {
  std::map<TableKey, std::vector<FormItem>> t;
  auto both = [&](FamilyId id, std::vector<FormItem> items) {
    t[{id, true}] = items;
    t[{id, false}] = std::move(items);
  };

  // --- characteristic != 2,3 ---
  both(FamilyId::A3_100, {item("1", "(a,0;0,d) ~ (a,0;0,t^2 d), ad != 0", m_diag())});
  t[{FamilyId::A3_HA4H, true}] = {item("2", "(a,1;1,0)", f_a110())};
  t[{FamilyId::A3_HA4H, false}] = {
      item("3", "(a,b;b,2*a4*a) ~ (a,-b;-b,2*a4*a), 2*a4*a^2 - b^2 != 0", f_abb2a4a())};
  both(FamilyId::A13, {item("4", "(0,b;b,0) ~ (0,p^3 b;p^3 b,0), b != 0", f_0bb0())});

  // --- characteristic 2 ---
  both(FamilyId::A32_100, {item("1", "(a,0;0,d) ~ (a,0;0,t^2 d), ad != 0", m_diag())});
  t[{FamilyId::A42, true}] = {
      item("2", "(1,1;-1,0)", f_fixed_11m10(), true, false),
      item("v1", "(b,b;b,d) ~ b -> b+d, b != 0, b != d", f_bbbd(), false, true)};
  t[{FamilyId::A42, false}] = {
      item("3", "(b1*d,0;0,d), b1*d != 0", f_b1d_diag(false), true, false),
      item("4", "(b,b;-b,0), b != 0", f_bbm_b0(), true, false),
      item("v1", "(b+b1*d,b;b,d) ~ b -> b+d, (b+b1*d)d - b^2 != 0", f_b_plus_b1d(), false, true)};
  both(FamilyId::A112,
       {item("5", "(b1*d,0;0,d), b1*d^2 != 0", f_b1d_diag(true), true, false),
        item("6", "(b1*d,-b1*d;-b1*d,d), b1*d^2*(1-b1) != 0", f_b1d_corner(), true, false),
        item("7", "(0,1;1,0)", f_fixed_0110(), true, false),
        item("v1", "(0,1;1,d)", f_011d(), false, true)});
  both(FamilyId::A122,
       {item("8", "(0,b;b,0) ~ (0,p^3 b;p^3 b,0), b != 0", f_0bb0(), true, false),
        item("v1", "(a,b;b,0) ~ (p^2 a,p^3 b;p^3 b,0), b != 0", f_abb0(), false, true)});

  // --- characteristic 3 ---
  both(FamilyId::A33_100, {item("1", "(a,0;0,d) ~ (a,0;0,t^2 d), ad != 0", m_diag())});
  t[{FamilyId::A33_2A42, true}] = {
      item("2", "(a,b;b,0), b != 0", f_abb0(), true, false),
      item("v1", "(a,1;1,0)", f_a110(), false, true)};
  t[{FamilyId::A33_2A42, false}] = {
      item("3", "(a,0;0,2*a4*a), a4*a != 0", f_a002a4a(), true, false),
      item("4", "(0,b;b,0), b != 0", f_0bb0(), true, false),
      item("v1", "(a,b;b,2*a4*a) ~ (a,-b;-b,2*a4*a), 2*a4*a^2 - b^2 != 0", f_abb2a4a(), false,
           true)};
  both(FamilyId::A133, {item("5", "(0,b;b,0) ~ (0,p^3 b;p^3 b,0), b != 0", f_0bb0())});
  return t;
}

const std::vector<FormItem> kEmptyItems;

}  // namespace

const std::vector<FormItem>& pair_items(FamilyId id, bool param_is_zero) {
  static const auto tables = build_pair_tables();
  auto it = tables.find({id, param_is_zero});
  return it == tables.end() ? kEmptyItems : it->second;
}

const std::vector<FormItem>& frobenius_items(FamilyId id, bool param_is_zero) {
  static const auto tables = build_frobenius_tables();
  auto it = tables.find({id, param_is_zero});
  return it == tables.end() ? kEmptyItems : it->second;
}

const char* pair_table_name(CharClass cls) {
  switch (cls) {
    case CharClass::Not23: return "pairs-not23";
    case CharClass::Char2: return "pairs-char2";
    case CharClass::Char3: return "pairs-char3";
  }
  return "?";
}

const char* frobenius_table_name(CharClass cls) {
  switch (cls) {
    case CharClass::Not23: return "frobenius-not23";
    case CharClass::Char2: return "frobenius-char2";
    case CharClass::Char3: return "frobenius-char3";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// pair classification

namespace {

struct OrbitMatch {
  const FormItem* item;
  BilinearForm form;
  BasisChange aut_element;
  Params params;
  std::vector<std::string> reference_items;
};

// Earliest validated item met by the orbit of S0 under `aut`; the matched
// form is the minimal orbit member fitting that item.
std::optional<OrbitMatch> match_orbit(const BilinearForm& S0,
                                      const std::vector<BasisChange>& aut,
                                      const std::vector<FormItem>& items,
                                      const FieldElement& algebra_param) {
  std::vector<std::pair<BilinearForm, BasisChange>> orbit;
  orbit.reserve(aut.size());
  for (const BasisChange& h : aut) orbit.emplace_back(forms::congruence(S0, h), h);

  std::vector<std::string> ref_items;
  for (const FormItem& it : items) {
    if (!it.reference) continue;
    for (const auto& [T, h] : orbit)
      if (it.match(T, algebra_param)) {
        ref_items.push_back(it.id);
        break;
      }
  }
  for (const FormItem& it : items) {
    if (!it.validated) continue;
    std::optional<OrbitMatch> best;
    for (const auto& [T, h] : orbit) {
      auto m = it.match(T, algebra_param);
      if (!m) continue;
      if (!best || T < best->form) best = OrbitMatch{&it, T, h, *m, {}};
    }
    if (best) {
      best->reference_items = ref_items;
      return best;
    }
  }
  return std::nullopt;
}

const CatalogInstance* find_instance(const Field& F, const CanonicalLabel& label) {
  static std::mutex m;
  static std::map<const Field*, std::vector<CatalogInstance>> cache;
  std::lock_guard<std::mutex> lock(m);
  auto& insts = cache[&F];
  if (insts.empty()) insts = catalog(F);
  for (const CatalogInstance& inst : insts) {
    if (inst.family->name != label.family) continue;
    if (inst.param.has_value() != label.param.has_value()) continue;
    if (inst.param && *inst.param != *label.param) continue;
    return &inst;
  }
  return nullptr;
}

}  // namespace

PairClassification classify_pair(const Msc& A, const BilinearForm& S) {
  const Field& F = A.field();
  if (!F.is_finite() || F.size() > 7)
    throw DomainError("classify_pair needs a finite field with q <= 7");
  if (!forms::is_nondegenerate(S)) throw DomainError("classify_pair needs a nondegenerate form");
  AlgebraClassification ac = classify_algebra(A);
  const CatalogInstance* inst = find_instance(F, ac.label);
  if (!inst) throw std::logic_error("classified label without catalog instance");

  const BilinearForm S0 = forms::congruence(S, ac.witness);
  const auto aut = automorphism_group(inst->msc);
  const FieldElement ap = inst->param.value_or(F.zero());
  const bool pzero = !inst->param || inst->param->is_zero();
  auto m = match_orbit(S0, aut, pair_items(inst->family->id, pzero), ap);
  if (!m)
    throw NoMatchError("pair (" + A.str() + "; " + S.str() +
                      ") matches no pair-class item: classification gap for " + inst->label());
  PairClassification out{
      PairLabel{ac.label, pair_table_name(char_class_of(F)), m->item->id, m->item->display,
                m->params, m->reference_items},
      ac.witness * m->aut_element, m->form};
  return out;
}

FrobeniusClassification classify_frobenius_pair(const Msc& A, const BilinearForm& S) {
  const Field& F = A.field();
  if (!F.is_finite() || F.size() > 7)
    throw DomainError("classify_frobenius_pair needs a finite field with q <= 7");
  if (!forms::is_nondegenerate(S))
    throw DomainError("classify_frobenius_pair needs a nondegenerate form");
  if (!is_associative(A)) throw DomainError("classify_frobenius_pair needs an associative algebra");
  const auto defect = frob::frobenius_defect(A, S);
  if (!defect.all_zero()) {
    FrobeniusClassification out;
    out.failing_residual = defect.first_nonzero();
    return out;
  }
  AlgebraClassification ac = classify_algebra(A);
  const CatalogInstance* inst = find_instance(F, ac.label);
  if (!inst) throw std::logic_error("classified label without catalog instance");
  const BilinearForm S0 = forms::congruence(S, ac.witness);
  const auto aut = automorphism_group(inst->msc);
  const FieldElement ap = inst->param.value_or(F.zero());
  const bool pzero = !inst->param || inst->param->is_zero();
  auto m = match_orbit(S0, aut, frobenius_items(inst->family->id, pzero), ap);
  if (!m)
    throw NoMatchError("Frobenius pair (" + A.str() + "; " + S.str() +
                      ") matches no Frobenius-class item: classification gap for " +
                      inst->label());
  FrobeniusClassification out;
  out.label = FrobeniusLabel{ac.label, frobenius_table_name(char_class_of(F)), m->item->id,
                             m->item->display, m->params, m->reference_items};
  out.witness = ac.witness * m->aut_element;
  out.matched_form = m->form;
  return out;
}

}  // namespace f2a::canon
