#include "f2a/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <thread>
#include <unordered_set>

#include <json.hpp>

namespace f2a::census {

using canon::CatalogInstance;
using canon::FormItem;
using canon::Reading;
using forms::BilinearForm;

namespace {

// ---------------------------------------------------------------------------
// index-level fast layer for the q^8 scan and orbit partition

struct Fq {
  const Field* F;
  uint32_t q;
  const uint16_t* add;
  const uint16_t* mul;
  uint32_t a(uint32_t x, uint32_t y) const { return add[x * q + y]; }
  uint32_t m(uint32_t x, uint32_t y) const { return mul[x * q + y]; }
};

Fq make_fq(const Field& F) {
  return Fq{&F, static_cast<uint32_t>(F.size()), F.add_table(), F.mul_table()};
}

using M8 = std::array<uint8_t, 8>;  // row-major (a1..a4, b1..b4)
using M4 = std::array<uint8_t, 4>;

uint32_t key_of(const M8& A) {
  uint32_t k = 0;
  for (int i = 0; i < 8; ++i) k = (k << 4) | A[i];
  return k;
}

// r = x * y for coordinate pairs under the multiplication encoded by A.
inline void fq_mult(const Fq& K, const M8& A, uint32_t x0, uint32_t x1, uint32_t y0, uint32_t y1,
                    uint32_t& r0, uint32_t& r1) {
  const uint32_t k0 = K.m(x0, y0), k1 = K.m(x0, y1), k2 = K.m(x1, y0), k3 = K.m(x1, y1);
  r0 = K.a(K.a(K.m(A[0], k0), K.m(A[1], k1)), K.a(K.m(A[2], k2), K.m(A[3], k3)));
  r1 = K.a(K.a(K.m(A[4], k0), K.m(A[5], k1)), K.a(K.m(A[6], k2), K.m(A[7], k3)));
}

bool fq_assoc(const Fq& K, const M8& A) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const int ij = i * 2 + j;
      const uint32_t u0 = A[ij], u1 = A[4 + ij];
      for (int k = 0; k < 2; ++k) {
        const int jk = j * 2 + k;
        uint32_t l0, l1, r0, r1;
        // (e_i e_j) e_k
        const int c0 = k, c1 = 2 + k;
        l0 = K.a(K.m(u0, A[c0]), K.m(u1, A[c1]));
        l1 = K.a(K.m(u0, A[4 + c0]), K.m(u1, A[4 + c1]));
        // e_i (e_j e_k)
        const uint32_t v0 = A[jk], v1 = A[4 + jk];
        const int d0 = i * 2, d1 = i * 2 + 1;
        r0 = K.a(K.m(v0, A[d0]), K.m(v1, A[d1]));
        r1 = K.a(K.m(v0, A[4 + d0]), K.m(v1, A[4 + d1]));
        if (l0 != r0 || l1 != r1) return false;
      }
    }
  return true;
}

M8 fq_transform(const Fq& K, const M8& A, const M4& g, const M4& gi) {
  M8 out{};
  const uint32_t f[2][2] = {{g[0], g[2]}, {g[1], g[3]}};  // column vectors
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      uint32_t v0, v1;
      fq_mult(K, A, f[i][0], f[i][1], f[j][0], f[j][1], v0, v1);
      out[i * 2 + j] = static_cast<uint8_t>(K.a(K.m(gi[0], v0), K.m(gi[1], v1)));
      out[4 + i * 2 + j] = static_cast<uint8_t>(K.a(K.m(gi[2], v0), K.m(gi[3], v1)));
    }
  return out;
}

struct FastGL {
  std::vector<M4> g, gi;
};

FastGL fast_gl(const Field& F) {
  FastGL out;
  for (const BasisChange& bc : gl2(F)) {
    const Mat2& m = bc.mat();
    const Mat2 mi = m.inverse();
    out.g.push_back({static_cast<uint8_t>(m.a.index()), static_cast<uint8_t>(m.b.index()),
                     static_cast<uint8_t>(m.c.index()), static_cast<uint8_t>(m.d.index())});
    out.gi.push_back({static_cast<uint8_t>(mi.a.index()), static_cast<uint8_t>(mi.b.index()),
                      static_cast<uint8_t>(mi.c.index()), static_cast<uint8_t>(mi.d.index())});
  }
  return out;
}

Msc to_msc(const Field& F, const M8& A) {
  std::array<FieldElement, 8> e;
  for (int i = 0; i < 8; ++i) e[i] = F.element(A[i]);
  return Msc(e);
}

M8 from_msc(const Msc& A) {
  M8 out{};
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 4; ++c) out[r * 4 + c] = static_cast<uint8_t>(A.entry(r, c).index());
  return out;
}

// All associative structure matrices, sorted in canonical (row-major
// entry) order.  Candidate space is partitioned across workers by the
// first column; partial results merge deterministically.
std::vector<M8> scan_associative(const Field& F, int jobs) {
  const Fq K = make_fq(F);
  const uint32_t q = K.q, q2 = q * q;
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  std::vector<std::vector<M8>> parts(q2);

  auto work = [&](uint32_t c1) {
    std::vector<M8>& out = parts[c1];
    const uint32_t a1 = c1 / q, b1 = c1 % q;
    M8 A{};
    A[0] = static_cast<uint8_t>(a1);
    A[4] = static_cast<uint8_t>(b1);
    for (uint32_t a2 = 0; a2 < q; ++a2)
      for (uint32_t b2 = 0; b2 < q; ++b2)
        for (uint32_t a3 = 0; a3 < q; ++a3)
          for (uint32_t b3 = 0; b3 < q; ++b3) {
            // (e1 e1) e1 = e1 (e1 e1): b1 (C3 - C2) = 0
            if (K.m(b1, K.a(a3, F.neg_table()[a2])) != 0) continue;
            if (K.m(b1, K.a(b3, F.neg_table()[b2])) != 0) continue;
            // (e1 e2) e1 = e1 (e2 e1)
            const uint32_t lx = K.a(K.m(a2, a1), K.m(b2, a3));
            const uint32_t rx = K.a(K.m(a3, a1), K.m(b3, a2));
            if (lx != rx) continue;
            const uint32_t ly = K.a(K.m(a2, b1), K.m(b2, b3));
            const uint32_t ry = K.a(K.m(a3, b1), K.m(b3, b2));
            if (ly != ry) continue;
            A[1] = static_cast<uint8_t>(a2);
            A[2] = static_cast<uint8_t>(a3);
            A[5] = static_cast<uint8_t>(b2);
            A[6] = static_cast<uint8_t>(b3);
            for (uint32_t a4 = 0; a4 < q; ++a4)
              for (uint32_t b4 = 0; b4 < q; ++b4) {
                A[3] = static_cast<uint8_t>(a4);
                A[7] = static_cast<uint8_t>(b4);
                if (fq_assoc(K, A)) out.push_back(A);
              }
          }
  };

  std::vector<std::thread> pool;
  std::atomic<uint32_t> next{0};
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      while (true) {
        const uint32_t c1 = next.fetch_add(1);
        if (c1 >= q2) return;
        work(c1);
      }
    });
  for (auto& th : pool) th.join();

  std::vector<M8> all;
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  std::sort(all.begin(), all.end(),
            [](const M8& x, const M8& y) { return key_of(x) < key_of(y); });
  return all;
}

}  // namespace

uint64_t default_budget() {
  if (const char* env = std::getenv("F2A_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 43046721ULL;  // 9^8
}

CensusReport enumerate_algebras(const Field& F, int jobs, std::optional<uint64_t> budget) {
  if (!F.is_finite()) throw DomainError("census needs a finite field");
  const auto t0 = std::chrono::steady_clock::now();
  const uint64_t q = F.size();
  uint64_t candidates = 1;
  for (int i = 0; i < 8; ++i) candidates *= q;
  const uint64_t limit = budget.value_or(default_budget());
  if (candidates > limit)
    throw DomainError("enumeration budget exceeded: " + std::to_string(candidates) + " > " +
                      std::to_string(limit) + " candidates (pass --allow-large or F2A_BUDGET)");

  CensusReport rep;
  rep.field = F.name();
  rep.total_candidates = candidates;

  const std::vector<M8> assoc = scan_associative(F, jobs);
  rep.associative = assoc.size();

  const Fq K = make_fq(F);
  const FastGL GL = fast_gl(F);

  // Orbit partition.  Ascending iteration makes each first-unseen element
  // the minimum of its orbit.
  std::unordered_set<uint32_t> seen;
  seen.reserve(assoc.size() * 2);
  for (const M8& A : assoc) {
    if (std::all_of(A.begin(), A.end(), [](uint8_t v) { return v == 0; })) continue;
    ++rep.nonzero_associative;
    if (seen.count(key_of(A))) continue;
    uint64_t stab = 0;
    std::unordered_set<uint32_t> orbit;
    for (size_t i = 0; i < GL.g.size(); ++i) {
      const M8 T = fq_transform(K, A, GL.g[i], GL.gi[i]);
      if (T == A) ++stab;
      orbit.insert(key_of(T));
    }
    for (uint32_t k : orbit) seen.insert(k);
    rep.classes.push_back(ClassInfo{"UNMATCHED", to_msc(F, A), orbit.size(), stab});
  }

  // Label classes by the orbit minimum of each catalog instance.
  std::map<uint32_t, std::string> label_by_rep;
  for (const CatalogInstance& inst : canon::catalog(F)) {
    const M8 A = from_msc(inst.msc);
    uint32_t best = key_of(A);
    for (size_t i = 0; i < GL.g.size(); ++i)
      best = std::min(best, key_of(fq_transform(K, A, GL.g[i], GL.gi[i])));
    label_by_rep[best] = inst.label();
  }
  for (ClassInfo& c : rep.classes) {
    auto it = label_by_rep.find(key_of(from_msc(c.rep)));
    if (it != label_by_rep.end()) c.label = it->second;
  }

  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

CensusReport verify_algebra_theorem(const Field& F, int jobs, std::optional<uint64_t> budget) {
  CensusReport rep = enumerate_algebras(F, jobs, budget);
  TheoremCheck check;
  check.id = "algebra-theorem";

  const uint64_t glsize = static_cast<uint64_t>(gl2(F).size());
  std::map<std::string, int> label_count;
  for (const ClassInfo& c : rep.classes) {
    if (c.label == "UNMATCHED")
      check.fail("orbit of " + c.rep.str() + " matches no catalog family");
    else
      ++label_count[c.label];
    if (c.orbit_size * c.aut_order != glsize)
      check.fail("orbit-stabilizer identity fails for " + c.rep.str());
  }
  for (const auto& [label, n] : label_count)
    if (n > 1) check.fail("catalog family " + label + " meets " + std::to_string(n) + " orbits");
  const auto insts = canon::catalog(F);
  if (insts.size() != rep.classes.size())
    check.fail("class count " + std::to_string(rep.classes.size()) +
               " differs from expanded catalog size " + std::to_string(insts.size()));

  // Cross-check the orbit labels against the witness-search classifier,
  // including witness validity.
  for (const ClassInfo& c : rep.classes) {
    if (c.label == "UNMATCHED") continue;
    const auto ac = canon::classify_algebra(c.rep);
    if (ac.label.str() != c.label)
      check.fail("census label " + c.label + " disagrees with classify_algebra = " +
                 ac.label.str());
    for (const CatalogInstance& inst : insts)
      if (inst.label() == c.label && transform(c.rep, ac.witness) != inst.msc)
        check.fail("classification witness for " + c.label + " does not map onto the representative");
  }

  // Automorphism identities per representative.
  TheoremCheck aut = verify_automorphism_theorem(F);
  for (auto& d : aut.discrepancies) check.fail("aut: " + d);
  for (auto& n : aut.corrections) check.note("aut: " + n);

  rep.checks.push_back(std::move(check));
  return rep;
}

namespace {

std::string set_summary(const std::vector<BasisChange>& v) {
  std::string s = "{";
  const size_t cap = 6;
  for (size_t i = 0; i < v.size() && i < cap; ++i) {
    if (i) s += ", ";
    s += "(" + v[i].str() + ")";
  }
  if (v.size() > cap) s += ", ...";
  return s + "} (order " + std::to_string(v.size()) + ")";
}

}  // namespace

TheoremCheck verify_automorphism_theorem(const Field& F) {
  if (!F.is_finite()) throw DomainError("automorphism verification needs a finite field");
  TheoremCheck check;
  check.id = "automorphism-theorem";
  for (const CatalogInstance& inst : canon::catalog(F)) {
    const FieldElement par = inst.param.value_or(F.zero());
    const auto brute = automorphism_group(inst.msc);
    const auto val = inst.family->aut(Reading::Validated, par).instantiate(F, par);
    const auto ref = inst.family->aut(Reading::Reference, par).instantiate(F, par);
    if (brute != val)
      check.fail(inst.label() + ": brute-forced Aut " + set_summary(brute) +
                 " differs from validated descriptor " +
                 inst.family->aut(Reading::Validated, par).str());
    if (brute != ref)
      check.note(inst.label() + ": listed descriptor " +
                 inst.family->aut(Reading::Reference, par).str() + " gives " + set_summary(ref) +
                 ", brute force gives " + set_summary(brute));
  }
  return check;
}

namespace {

std::vector<BilinearForm> all_forms(const Field& F, bool nondeg_only) {
  std::vector<BilinearForm> out;
  const int q = F.size();
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c)
        for (int d = 0; d < q; ++d) {
          BilinearForm S(F.element(a), F.element(b), F.element(c), F.element(d));
          if (!nondeg_only || forms::is_nondegenerate(S)) out.push_back(std::move(S));
        }
  return out;
}

uint32_t form_key(const BilinearForm& S) {
  return (S.s.a.index() << 12) | (S.s.b.index() << 8) | (S.s.c.index() << 4) | S.s.d.index();
}

// Orbits of `pool` under congruence by `aut`, discovered in ascending key
// order; each orbit is sorted.
std::vector<std::vector<BilinearForm>> form_orbits(const std::vector<BilinearForm>& pool,
                                                   const std::vector<BasisChange>& aut) {
  std::set<uint32_t> seen;
  std::vector<std::vector<BilinearForm>> orbits;
  for (const BilinearForm& S : pool) {
    if (seen.count(form_key(S))) continue;
    std::map<uint32_t, BilinearForm> orbit;
    for (const BasisChange& h : aut) {
      BilinearForm T = forms::congruence(S, h);
      orbit.emplace(form_key(T), T);
    }
    std::vector<BilinearForm> o;
    for (auto& [k, T] : orbit) {
      seen.insert(k);
      o.push_back(T);
    }
    orbits.push_back(std::move(o));
  }
  return orbits;
}

// Item ids of `reading` matched by some member of the orbit.
std::vector<std::string> orbit_matches(const std::vector<BilinearForm>& orbit,
                                       const std::vector<FormItem>& items,
                                       const FieldElement& ap, Reading reading) {
  std::vector<std::string> out;
  for (const FormItem& it : items) {
    if (reading == Reading::Reference ? !it.reference : !it.validated) continue;
    for (const BilinearForm& T : orbit)
      if (it.match(T, ap)) {
        out.push_back(it.id);
        break;
      }
  }
  return out;
}

void check_instance_partition(TheoremCheck& check, const CatalogInstance& inst,
                              const std::vector<BilinearForm>& pool,
                              const std::vector<FormItem>& items) {
  const Field& F = inst.msc.field();
  const FieldElement ap = inst.param.value_or(F.zero());
  const auto aut = automorphism_group(inst.msc);
  int ref_bad = 0;
  std::vector<std::string> ref_examples;
  for (const auto& orbit : form_orbits(pool, aut)) {
    const auto val = orbit_matches(orbit, items, ap, Reading::Validated);
    if (val.size() != 1) {
      std::string ids;
      for (const auto& id : val) ids += (ids.empty() ? "" : ",") + id;
      check.fail(inst.label() + ": orbit of " + orbit.front().str() + " matches " +
                 std::to_string(val.size()) + " validated items [" + ids + "]");
    }
    const auto ref = orbit_matches(orbit, items, ap, Reading::Reference);
    if (ref.size() != 1) {
      ++ref_bad;
      if (ref_examples.size() < 3) {
        std::string ids;
        for (const auto& id : ref) ids += (ids.empty() ? "" : ",") + id;
        ref_examples.push_back(orbit.front().str() + (ref.empty() ? " (no item)" : " [" + ids + "]"));
      }
    }
  }
  if (ref_bad) {
    std::string msg = inst.label() + ": " + std::to_string(ref_bad) +
                      " orbit(s) not uniquely covered by the listed items; e.g. ";
    for (size_t i = 0; i < ref_examples.size(); ++i) msg += (i ? "; " : "") + ref_examples[i];
    check.note(msg);
  }
  for (const FormItem& it : items)
    if (it.typo_corrected)
      check.note(inst.label() + ": item " + it.id + " read with a corrected entry: " + it.display);
}

}  // namespace

TheoremCheck verify_pair_lemma(const Field& F) {
  if (!F.is_finite() || F.size() > 7)
    throw DomainError("pair-lemma verification needs a finite field with q <= 7");
  TheoremCheck check;
  check.id = "pair-lemma";
  const auto pool = all_forms(F, /*nondeg_only=*/true);
  for (const CatalogInstance& inst : canon::catalog(F)) {
    const bool pzero = !inst.param || inst.param->is_zero();
    check_instance_partition(check, inst, pool, canon::pair_items(inst.family->id, pzero));
  }
  return check;
}

TheoremCheck verify_frobenius_theorem(const Field& F) {
  if (!F.is_finite() || F.size() > 7)
    throw DomainError("Frobenius verification needs a finite field with q <= 7");
  TheoremCheck check;
  check.id = "frobenius-theorem";
  const auto nondeg = all_forms(F, /*nondeg_only=*/true);
  for (const CatalogInstance& inst : canon::catalog(F)) {
    const bool pzero = !inst.param || inst.param->is_zero();
    const auto& items = canon::frobenius_items(inst.family->id, pzero);
    const FieldElement ap = inst.param.value_or(F.zero());

    // (i) every item instance is a Frobenius pair
    for (const FormItem& it : items) {
      for (const BilinearForm& S : all_forms(F, /*nondeg_only=*/false)) {
        if (!it.match(S, ap)) continue;
        const bool frob =
            forms::is_nondegenerate(S) && frob::frobenius_defect(inst.msc, S).all_zero();
        if (!frob) {
          if (it.validated)
            check.fail(inst.label() + ": validated item " + it.id + " instance " + S.str() +
                       " is not a Frobenius pair");
          else
            check.note(inst.label() + ": listed item " + it.id + " instance " + S.str() +
                       " is not a Frobenius pair");
        }
      }
    }

    // (ii) Frobenius orbits match exactly one item
    std::vector<BilinearForm> compatible;
    for (const BilinearForm& S : nondeg)
      if (frob::frobenius_defect(inst.msc, S).all_zero()) compatible.push_back(S);
    if (!items.empty()) {
      check_instance_partition(check, inst, compatible, items);
    } else if (!compatible.empty()) {
      check.fail(inst.label() + ": " + std::to_string(compatible.size()) +
                 " compatible nondegenerate forms but no Frobenius items");
    }

    // (iii)+(iv) the two characterizations agree with the census
    const auto sol = frob::solve_frobenius_forms(inst.msc);
    const auto fun = frob::is_frobenius_via_functional(inst.msc);
    const bool any = !compatible.empty();
    if (sol.has_nondegenerate != any)
      check.fail(inst.label() + ": solution-space nondegeneracy " +
                 std::to_string(sol.has_nondegenerate) + " vs census " + std::to_string(any));
    if (fun.has_value() != any)
      check.fail(inst.label() + ": functional characterization " +
                 std::to_string(fun.has_value()) + " vs census " + std::to_string(any));
    if (items.empty() && sol.has_nondegenerate)
      check.fail(inst.label() + ": absent from the Frobenius table but admits a nondegenerate form");
  }
  return check;
}

TheoremCheck verify_form_shapes(const Field& F, forms::GroupTag tag) {
  if (!F.is_finite() || F.size() > 9)
    throw DomainError("form-shape verification needs a finite field with q <= 9");
  if (!forms::group_admissible(tag, F.characteristic()))
    throw DomainError(std::string(forms::group_name(tag)) + " is not defined in characteristic " +
                      std::to_string(F.characteristic()));
  TheoremCheck check;
  check.id = std::string("forms-") + forms::group_name(tag);

  std::vector<forms::GroupDescriptor> descs;
  if (tag == forms::GroupTag::G6) {
    for (const auto& b1 : F.elements()) descs.emplace_back(tag, b1);
  } else {
    descs.emplace_back(tag);
  }
  const auto pool = all_forms(F, /*nondeg_only=*/true);
  for (const auto& desc : descs) {
    const auto printed = forms::group_elements(desc, F);
    const auto closure = forms::group_closure(desc, F);
    if (closure.size() != printed.size())
      check.note(desc.str() + ": listed set of order " + std::to_string(printed.size()) +
                 " is not closed; using its generated group of order " +
                 std::to_string(closure.size()));
    if (closure.size() == 1)
      check.note(desc.str() + ": trivial instantiation (outside the nontrivial-stabilizer scope)");

    int supplementary_orbits = 0, overlap_orbits = 0;
    for (const auto& orbit : form_orbits(pool, closure)) {
      // Coverage and earliest-match assignment via canonicalize_form on
      // the representative; constancy on the orbit is checked member-wise
      // on small fields.
      std::optional<forms::CanonicalForm> canon_opt;
      try {
        canon_opt = forms::canonicalize_form(orbit.front(), desc);
      } catch (const DomainError& e) {
        check.fail(e.what());
        continue;
      }
      const forms::CanonicalForm& canon_rep = *canon_opt;
      if (canon_rep.shape_supplementary) ++supplementary_orbits;
      if (!canon_rep.also_matches.empty()) ++overlap_orbits;
      const FieldElement dd =
          canon_rep.canonical.det() -
          orbit.front().det() * canon_rep.witness.mat().det() * canon_rep.witness.mat().det();
      if (!dd.is_zero())
        check.fail(desc.str() + ": det identity fails for " + orbit.front().str());
      if (F.size() <= 5) {
        for (const BilinearForm& T : orbit) {
          const auto c2 = forms::canonicalize_form(T, desc);
          if (c2.canonical != canon_rep.canonical || c2.shape != canon_rep.shape)
            check.fail(desc.str() + ": canonicalization not constant on the orbit of " +
                       orbit.front().str());
        }
      }
    }
    if (supplementary_orbits)
      check.note(desc.str() + ": " + std::to_string(supplementary_orbits) +
                 " orbit(s) outside the listed shapes, covered by the validated supplementary shape");
    if (overlap_orbits)
      check.note(desc.str() + ": " + std::to_string(overlap_orbits) +
                 " orbit(s) match several listed shapes; earliest assigned");
  }
  return check;
}

// ---------------------------------------------------------------------------
// JSON report round trip

std::string to_json(const CensusReport& r) {
  nlohmann::json j;
  j["schema"] = r.schema;
  j["field"] = r.field;
  j["counts"] = {{"total", r.total_candidates},
                 {"associative", r.associative},
                 {"nonzero_associative", r.nonzero_associative}};
  j["elapsed_ms"] = r.elapsed_ms;
  auto classes = nlohmann::json::array();
  for (const ClassInfo& c : r.classes)
    classes.push_back({{"label", c.label},
                       {"rep", c.rep.str()},
                       {"orbit_size", c.orbit_size},
                       {"aut_order", c.aut_order}});
  j["classes"] = classes;
  auto checks = nlohmann::json::array();
  for (const TheoremCheck& c : r.checks)
    checks.push_back({{"id", c.id},
                      {"status", c.pass ? "pass" : "fail"},
                      {"discrepancies", c.discrepancies},
                      {"corrections", c.corrections}});
  j["checks"] = checks;
  return j.dump(2);
}

void save_report(const CensusReport& r, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot open " + path + " for writing");
  out << to_json(r) << "\n";
}

CensusReport load_report(const std::string& path, const Field* expected_field) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("malformed report " + path + ": " + e.what());
  }
  CensusReport r;
  try {
    r.schema = j.at("schema").get<int>();
    if (r.schema != 1)
      throw DomainError("unsupported report schema " + std::to_string(r.schema));
    r.field = j.at("field").get<std::string>();
    const Field* F = Field::by_name(r.field);
    if (!F || !F->is_finite()) throw DomainError("unknown field in report: " + r.field);
    if (expected_field && F != expected_field)
      throw DomainError("report is for " + r.field + ", expected " + expected_field->name());
    r.total_candidates = j.at("counts").at("total").get<uint64_t>();
    r.associative = j.at("counts").at("associative").get<uint64_t>();
    r.nonzero_associative = j.at("counts").at("nonzero_associative").get<uint64_t>();
    r.elapsed_ms = j.value("elapsed_ms", 0.0);
    uint64_t orbit_sum = 0;
    for (const auto& c : j.at("classes")) {
      ClassInfo ci;
      ci.label = c.at("label").get<std::string>();
      ci.rep = Msc::parse(c.at("rep").get<std::string>(), *F);
      ci.orbit_size = c.at("orbit_size").get<uint64_t>();
      ci.aut_order = c.at("aut_order").get<uint64_t>();
      orbit_sum += ci.orbit_size;
      r.classes.push_back(std::move(ci));
    }
    if (orbit_sum != r.nonzero_associative)
      throw DomainError("report validation: orbit sizes sum to " + std::to_string(orbit_sum) +
                        ", expected " + std::to_string(r.nonzero_associative));
    for (const auto& c : j.at("checks")) {
      TheoremCheck tc;
      tc.id = c.at("id").get<std::string>();
      tc.pass = c.at("status").get<std::string>() == "pass";
      for (const auto& d : c.at("discrepancies")) tc.discrepancies.push_back(d.get<std::string>());
      for (const auto& d : c.value("corrections", nlohmann::json::array()))
        tc.corrections.push_back(d.get<std::string>());
      r.checks.push_back(std::move(tc));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("report schema error in " + path + ": " + e.what());
  }
  return r;
}

}  // namespace f2a::census
