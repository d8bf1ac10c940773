// Acceptance suite: one independently runnable criterion per invocation,
// each printing a single PASS/FAIL line plus supporting detail.
//
//   f2a_acceptance --criterion N     run criterion N (1..8)
//   f2a_acceptance                   run all
//
// Criterion 2 checks the automorphism tables in their as-listed form.
// Exhaustive computation shows several listed stabilizers are wrong for
// the matrices they accompany, so that criterion reports FAIL by design;
// the companion validated-table check alongside it passes.  Details in
// the per-entry diff lines and in README.md.

#include <chrono>
#include <cstring>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "f2a/census.hpp"
#include "f2a/serialize.hpp"

using namespace f2a;
using canon::CatalogInstance;
using canon::Reading;
using forms::BilinearForm;
using forms::GroupDescriptor;
using forms::GroupTag;

namespace {

int g_checks_failed = 0;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++g_checks_failed;
    std::cout << "    FAILED: " << what << "\n";
  }
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<Msc> associative_mscs(const Field& F, bool include_zero) {
  std::vector<Msc> out;
  std::array<int, 8> v{};
  while (true) {
    const Msc A = Msc::from_ints(F, v);
    if (is_associative(A) && (include_zero || !A.is_zero())) out.push_back(A);
    int pos = 7;
    while (pos >= 0 && ++v[pos] == F.size()) v[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

std::vector<BilinearForm> all_forms(const Field& F) {
  std::vector<BilinearForm> out;
  for (int a = 0; a < F.size(); ++a)
    for (int b = 0; b < F.size(); ++b)
      for (int c = 0; c < F.size(); ++c)
        for (int d = 0; d < F.size(); ++d)
          out.emplace_back(F.element(a), F.element(b), F.element(c), F.element(d));
  return out;
}

// --------------------------------------------------------------------------
// 1. algebra classification census over gf2..gf9

bool criterion1() {
  const int expected_classes[] = {7, 7, 7, 7, 7, 7, 7};
  const int fields[] = {2, 3, 4, 5, 7, 8, 9};
  for (int i = 0; i < 7; ++i) {
    const Field& F = Field::gf(fields[i]);
    const auto t0 = std::chrono::steady_clock::now();
    const auto rep = census::verify_algebra_theorem(F);
    const double ms = ms_since(t0);
    bool pass = true;
    for (const auto& c : rep.checks) pass = pass && c.pass;
    expect(pass, F.name() + ": algebra-theorem check failed");
    for (const auto& c : rep.classes)
      expect(c.label != "UNMATCHED", F.name() + ": unmatched orbit " + c.rep.str());
    expect(static_cast<int>(rep.classes.size()) == expected_classes[i],
           F.name() + ": expected " + std::to_string(expected_classes[i]) + " classes, got " +
               std::to_string(rep.classes.size()));
    if (fields[i] <= 5)
      expect(ms < 1000.0, F.name() + ": census took " + std::to_string(ms) + " ms (>= 1 s)");
    if (fields[i] == 9)
      expect(ms < 60000.0, F.name() + ": census took " + std::to_string(ms) + " ms (>= 60 s)");
    std::cout << "    " << F.name() << ": " << rep.classes.size() << " classes, "
              << rep.nonzero_associative << " nonzero associative, " << ms << " ms\n";
  }
  return g_checks_failed == 0;
}

// --------------------------------------------------------------------------
// 2. automorphism groups: as-listed tables (exact set equality) plus the
//    orbit-stabilizer identity; the validated tables run alongside

bool criterion2() {
  int listed_bad = 0, validated_bad = 0;
  for (int q : {2, 3, 5, 7}) {
    const Field& F = Field::gf(q);
    for (const CatalogInstance& inst : canon::catalog(F)) {
      const FieldElement par = inst.param.value_or(F.zero());
      const auto brute = automorphism_group(inst.msc);
      const auto listed = inst.family->aut(Reading::Reference, par).instantiate(F, par);
      const auto validated = inst.family->aut(Reading::Validated, par).instantiate(F, par);
      if (brute != listed) {
        ++listed_bad;
        std::cout << "    " << F.name() << " " << inst.label() << ": |Aut| = " << brute.size()
                  << " by brute force, but the listed descriptor "
                  << inst.family->aut(Reading::Reference, par).str() << " has "
                  << listed.size() << " elements\n";
      }
      if (brute != validated) ++validated_bad;
    }
    const auto rep = census::enumerate_algebras(F);
    const uint64_t gl = static_cast<uint64_t>(gl2(F).size());
    for (const auto& c : rep.classes)
      expect(c.orbit_size * c.aut_order == gl,
             F.name() + ": orbit x stabilizer != |GL| for " + c.label);
  }
  std::cout << "    as-listed descriptor mismatches: " << listed_bad << "\n";
  std::cout << "    validated descriptor mismatches: " << validated_bad
            << (validated_bad == 0 ? " (companion check PASS)" : "") << "\n";
  expect(validated_bad == 0, "validated automorphism tables disagree with brute force");
  expect(listed_bad == 0, "as-listed automorphism tables disagree with brute force");
  return g_checks_failed == 0;
}

// --------------------------------------------------------------------------
// 3. the eight compatibility residuals agree with the defining identity

bool criterion3() {
  for (int q : {2, 3}) {
    const Field& F = Field::gf(q);
    const auto t0 = std::chrono::steady_clock::now();
    const Vec2 basis[2] = {Vec2(F.one(), F.zero()), Vec2(F.zero(), F.one())};
    uint64_t pairs = 0;
    std::array<int, 8> v{};
    while (true) {
      const Msc A = Msc::from_ints(F, v);
      for (const BilinearForm& S : all_forms(F)) {
        ++pairs;
        bool identity = true;
        for (const Vec2& x : basis)
          for (const Vec2& y : basis)
            for (const Vec2& z : basis)
              identity = identity &&
                         S.eval(multiply(A, x, y), z) == S.eval(x, multiply(A, y, z));
        if (frob::frobenius_defect(A, S).all_zero() != identity) {
          expect(false, F.name() + ": residuals disagree with the identity at A=" + A.str() +
                            " S=" + S.str());
          return false;
        }
      }
      int pos = 7;
      while (pos >= 0 && ++v[pos] == F.size()) v[pos--] = 0;
      if (pos < 0) break;
    }
    std::cout << "    " << F.name() << ": " << pairs << " (A,S) pairs checked exactly, "
              << ms_since(t0) << " ms\n";
  }
  return g_checks_failed == 0;
}

// --------------------------------------------------------------------------
// 4. equivalence of the characterizations + annihilator duality

void check_equivalence(const Field& F, const Msc& A) {
  const auto sol = frob::solve_frobenius_forms(A);
  const auto lam = frob::is_frobenius_via_functional(A);
  expect(sol.has_nondegenerate == lam.has_value(),
         F.name() + ": characterizations disagree at " + A.str());
  // The annihilator characterization presumes a unit (without one, the
  // two-sided annihilator l(r({0})) can be nonzero); the duality clauses
  // therefore range over the unital Frobenius algebras.
  if (!sol.has_nondegenerate || !find_unit(A).has_value()) return;
  const auto ideals = frob::one_sided_ideals(A);
  for (const auto& L : ideals.left) {
    const auto r = frob::annihilator(A, L, frob::Side::Right);
    expect(frob::annihilator(A, r, frob::Side::Left) == L,
           F.name() + ": l(r(L)) != L at " + A.str());
    expect(r.dim() + L.dim() == 2, F.name() + ": dim r(L) + dim L != 2 at " + A.str());
  }
  for (const auto& R : ideals.right) {
    const auto l = frob::annihilator(A, R, frob::Side::Left);
    expect(frob::annihilator(A, l, frob::Side::Right) == R,
           F.name() + ": r(l(R)) != R at " + A.str());
  }
}

bool criterion4() {
  const auto t0 = std::chrono::steady_clock::now();
  for (int q : {2, 3}) {
    const Field& F = Field::gf(q);
    const auto assoc = associative_mscs(F, /*include_zero=*/false);
    for (const Msc& A : assoc) check_equivalence(F, A);
    std::cout << "    " << F.name() << ": all " << assoc.size()
              << " nonzero associative algebras checked\n";
  }
  // documented boundary: the zero algebra satisfies the solution-space
  // test vacuously but admits no ideal-free functional
  const Msc Z = Msc::zero(Field::gf(2));
  expect(frob::solve_frobenius_forms(Z).has_nondegenerate, "zero-algebra boundary drifted");
  expect(!frob::is_frobenius_via_functional(Z).has_value(), "zero-algebra boundary drifted");

  const Field& F5 = Field::gf(5);
  for (const CatalogInstance& inst : canon::catalog(F5)) check_equivalence(F5, inst.msc);
  // index-level associativity pre-filter so the random search stays cheap
  auto assoc_fast = [&F5](const std::array<int, 8>& v) {
    auto col = [&](int i, int j, int row) { return static_cast<uint32_t>(v[row * 4 + i * 2 + j]); };
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
          const uint32_t u0 = col(i, j, 0), u1 = col(i, j, 1);
          const uint32_t w0 = col(j, k, 0), w1 = col(j, k, 1);
          for (int row = 0; row < 2; ++row) {
            const uint32_t lhs =
                F5.add(F5.mul(u0, col(0, k, row)), F5.mul(u1, col(1, k, row)));
            const uint32_t rhs =
                F5.add(F5.mul(w0, col(i, 0, row)), F5.mul(w1, col(i, 1, row)));
            if (lhs != rhs) return false;
          }
        }
    return true;
  };
  std::mt19937_64 rng(0x5eed2026ULL);
  int found = 0;
  uint64_t draws = 0;
  while (found < 10000) {
    ++draws;
    std::array<int, 8> v{};
    bool zero = true;
    for (auto& x : v) {
      x = static_cast<int>(rng() % 5);
      zero = zero && x == 0;
    }
    if (zero || !assoc_fast(v)) continue;
    ++found;
    check_equivalence(F5, Msc::from_ints(F5, v));
  }
  const double ms = ms_since(t0);
  std::cout << "    gf5: catalog + 10000 random associative algebras (" << draws << " draws), "
            << ms << " ms total\n";
  expect(ms < 10000.0, "criterion 4 exceeded 10 s");
  return g_checks_failed == 0;
}

// --------------------------------------------------------------------------
// 5. Frobenius classification tables

bool criterion5() {
  const auto t0 = std::chrono::steady_clock::now();
  for (int q : {2, 3, 5}) {
    const Field& F = Field::gf(q);
    const auto check = census::verify_frobenius_theorem(F);
    expect(check.pass, F.name() + ": frobenius-theorem check failed");
    for (const auto& d : check.discrepancies) std::cout << "    " << d << "\n";
    std::cout << "    " << F.name() << ": pass with " << check.corrections.size()
              << " as-listed deviation(s) noted\n";
    for (const auto& n : check.corrections) std::cout << "      note: " << n << "\n";
  }
  // algebras absent from the tables admit no nondegenerate compatible form
  const std::pair<int, std::array<int, 8>> absents[] = {
      {5, {1, 0, 0, 0, 0, 1, 0, 0}},   // A3(1,0,1)
      {5, {3, 0, 0, 0, 0, 0, 3, 0}},   // A3(1/2,0,0), 1/2 = 3
      {2, {1, 0, 0, 0, 0, 1, 0, 0}},   // A3,2(1,0,1)
      {2, {1, 0, 0, 0, 0, 0, 1, 0}},   // A6,2(1,0)
      {3, {1, 0, 0, 0, 0, 1, 0, 0}},   // A3,3(1,0,1)
      {3, {2, 0, 0, 0, 0, 0, 2, 0}},   // A3,3(2,0,0)
  };
  for (const auto& [q, v] : absents) {
    const Msc A = Msc::from_ints(Field::gf(q), v);
    expect(!frob::solve_frobenius_forms(A).has_nondegenerate,
           "gf" + std::to_string(q) + ": " + A.str() + " should admit no nondegenerate solution");
  }
  const double ms = ms_since(t0);
  std::cout << "    total " << ms << " ms\n";
  expect(ms < 30000.0, "criterion 5 exceeded 30 s");
  return g_checks_failed == 0;
}

// --------------------------------------------------------------------------
// 6. canonical-form shape coverage for the acting groups

bool criterion6() {
  for (int q : {2, 3, 5}) {
    const Field& F = Field::gf(q);
    for (GroupTag t : {GroupTag::G1, GroupTag::G2, GroupTag::G3, GroupTag::G4, GroupTag::G5,
                       GroupTag::G6, GroupTag::G7, GroupTag::G8}) {
      if (!forms::group_admissible(t, F.characteristic())) continue;
      std::vector<GroupDescriptor> descs;
      if (t == GroupTag::G6)
        for (const auto& b1 : F.elements()) descs.emplace_back(t, b1);
      else
        descs.emplace_back(t);
      for (const auto& desc : descs) {
        const auto group = forms::group_closure(desc, F);
        const bool trivial = group.size() == 1;
        int supplementary = 0, overlaps = 0, checked = 0;
        for (const BilinearForm& S : all_forms(F)) {
          if (!forms::is_nondegenerate(S)) continue;
          ++checked;
          const auto c = forms::canonicalize_form(S, desc);
          if (c.shape_supplementary) ++supplementary;
          if (!c.also_matches.empty()) ++overlaps;
          const FieldElement dw = c.witness.mat().det();
          expect(c.canonical.det() == S.det() * dw * dw,
                 F.name() + " " + desc.str() + ": det identity fails at " + S.str());
          // constant on the whole orbit
          for (const auto& g : group) {
            const auto c2 = forms::canonicalize_form(forms::congruence(S, g), desc);
            expect(c2.canonical == c.canonical && c2.shape == c.shape,
                   F.name() + " " + desc.str() + ": canonicalization not constant at " + S.str());
          }
        }
        if (trivial) {
          // outside the nontrivial-stabilizer scope of the shape listings
          std::cout << "    " << F.name() << " " << desc.str() << ": trivial instantiation, "
                    << supplementary << " orbit(s) needed the supplementary shape (out of scope)\n";
        } else {
          expect(supplementary == 0, F.name() + " " + desc.str() + ": " +
                                         std::to_string(supplementary) +
                                         " forms needed the supplementary shape");
          expect(overlaps == 0, F.name() + " " + desc.str() + ": " + std::to_string(overlaps) +
                                    " forms matched several shapes");
          std::cout << "    " << F.name() << " " << desc.str() << ": " << checked
                    << " forms -> exactly one listed shape each\n";
        }
      }
    }
  }
  return g_checks_failed == 0;
}

// --------------------------------------------------------------------------
// 7. the solved compatibility systems, reproduced over two fields each

bool criterion7() {
  // A3(1/2,0,1/2) with S = (a,1;c,d): solution is exactly c = 1, d = 0
  for (int q : {5, 7}) {
    const Field& F = Field::gf(q);
    const FieldElement h = F.from_int(2).inverse();
    const Msc A({h, F.zero(), F.zero(), F.zero(), F.zero(), h, h, F.zero()});
    for (const auto& a : F.elements())
      for (const auto& c : F.elements())
        for (const auto& d : F.elements()) {
          const BilinearForm S(a, F.one(), c, d);
          const bool zero = frob::frobenius_defect(A, S).all_zero();
          expect(zero == (c.is_one() && d.is_zero()),
                 F.name() + ": A3(1/2,0,1/2) solved system c=1,d=0 fails at " + S.str());
        }
  }
  // A3(1/2,a4,1/2): solutions are exactly c = b, d = 2 a4 a
  for (int q : {5, 7}) {
    const Field& F = Field::gf(q);
    const FieldElement h = F.from_int(2).inverse();
    for (const auto& a4 : F.elements()) {
      const Msc A({h, F.zero(), F.zero(), a4, F.zero(), h, h, F.zero()});
      for (const BilinearForm& S : all_forms(F)) {
        const bool zero = frob::frobenius_defect(A, S).all_zero();
        expect(zero == (S.s.c == S.s.b && S.s.d == F.from_int(2) * a4 * S.s.a),
               F.name() + ": A3(1/2,a4,1/2) solved system fails at a4=" + a4.str() + " S=" +
                   S.str());
      }
    }
  }
  // A13: solutions are exactly c = b, d = 0; in particular (0,b;c,0) forces c = b
  for (int q : {5, 7}) {
    const Field& F = Field::gf(q);
    const Msc A = Msc::from_ints(F, {0, 0, 0, 0, 1, 0, 0, 0});
    for (const BilinearForm& S : all_forms(F)) {
      const bool zero = frob::frobenius_defect(A, S).all_zero();
      expect(zero == (S.s.c == S.s.b && S.s.d.is_zero()),
             F.name() + ": A13 solved system fails at " + S.str());
    }
  }
  // A4,2(1,0,0) with S = (a,1;-1,0): solution is exactly a = 1
  for (int q : {2, 4}) {
    const Field& F = Field::gf(q);
    const Msc A = Msc::from_ints(F, {1, 1, 1, 0, 0, 0, 0, 1});
    for (const auto& a : F.elements()) {
      const BilinearForm S(a, F.one(), -F.one(), F.zero());
      expect(frob::frobenius_defect(A, S).all_zero() == a.is_one(),
             F.name() + ": A4,2(1,0,0) solved system a=1 fails at a=" + a.str());
    }
  }
  // A4,2(1,b1,0), b1 != 0, with S = (a,0;c,d): solution is c = 0, a = b1 d
  for (int q : {2, 4}) {
    const Field& F = Field::gf(q);
    for (const auto& b1 : F.elements()) {
      if (b1.is_zero()) continue;
      const Msc A({F.one(), F.one(), F.one(), F.zero(), b1, F.zero(), F.zero(), F.one()});
      for (const auto& a : F.elements())
        for (const auto& c : F.elements())
          for (const auto& d : F.elements()) {
            const BilinearForm S(a, F.zero(), c, d);
            const bool zero = frob::frobenius_defect(A, S).all_zero();
            expect(zero == (c.is_zero() && a == b1 * d),
                   F.name() + ": A4,2(1,b1,0) solved system fails at b1=" + b1.str() + " S=" +
                       S.str());
          }
    }
  }
  std::cout << "    all five solved systems reproduced exactly over two fields each\n";
  return g_checks_failed == 0;
}

// --------------------------------------------------------------------------
// 8. units of the catalog algebras

bool criterion8() {
  std::vector<const Field*> fields = Field::all_finite();
  fields.push_back(&Field::rationals());
  for (const Field* F : fields) {
    for (const CatalogInstance& inst : canon::catalog(*F)) {
      const auto u = find_unit(inst.msc);
      const bool two_zero = inst.family->id == canon::FamilyId::A3_HA4H ||
                            inst.family->id == canon::FamilyId::A33_2A42;
      const bool zero_one = inst.family->id == canon::FamilyId::A42 ||
                            inst.family->id == canon::FamilyId::A112;
      if (two_zero) {
        expect(u.has_value() && u->x1 == F->from_int(2) && u->x2.is_zero(),
               F->name() + " " + inst.label() + ": unit should be (2,0)");
      } else if (zero_one) {
        expect(u.has_value() && u->x1.is_zero() && u->x2.is_one(),
               F->name() + " " + inst.label() + ": unit should be (0,1)");
      } else {
        expect(!u.has_value(), F->name() + " " + inst.label() + ": unexpected unit");
      }
    }
  }
  std::cout << "    units verified for every catalog entry over every supported field\n";
  return g_checks_failed == 0;
}

struct Criterion {
  int number;
  const char* summary;
  bool (*fn)();
};

const Criterion kCriteria[] = {
    {1, "algebra classification census (gf2..gf9)", criterion1},
    {2, "automorphism tables, as listed (exact set equality)", criterion2},
    {3, "compatibility residuals = defining identity (gf2, gf3 exhaustive)", criterion3},
    {4, "characterization equivalence + annihilator duality", criterion4},
    {5, "Frobenius classification tables (gf2, gf3, gf5)", criterion5},
    {6, "canonical-form shape coverage (g1..g8)", criterion6},
    {7, "solved compatibility systems reproduced exactly", criterion7},
    {8, "units of the catalog algebras", criterion8},
};

}  // namespace

int main(int argc, char** argv) {
  int which = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) which = std::atoi(argv[++i]);
  }
  int failures = 0;
  for (const Criterion& c : kCriteria) {
    if (which != 0 && c.number != which) continue;
    g_checks_failed = 0;
    std::cout << "criterion " << c.number << ": " << c.summary << "\n";
    const bool ok = c.fn();
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": " << c.summary
              << "\n";
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
