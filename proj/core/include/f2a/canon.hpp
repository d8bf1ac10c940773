#pragma once

// The classification tables as data: canonical algebra families per
// characteristic, their automorphism descriptors, the pair-class item
// lists, and the Frobenius item lists, together with classifiers mapping
// arbitrary input to canonical labels with explicit witnesses.
//
// Every table ships in two readings.  Reading::Reference is the classical
// listing transcribed as-is.  Reading::Validated applies the corrections
// that exhaustive small-field computation forces (enlarged automorphism
// stabilizers, missing constraints, orbit families absent from the
// reference listing).  Checks gate on Validated and report every
// deviation of Reference.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "f2a/forms.hpp"
#include "f2a/frobenius.hpp"

namespace f2a::canon {

using forms::BilinearForm;

enum class CharClass { Not23, Char2, Char3 };
CharClass char_class_of(const Field& F);
const char* char_class_name(CharClass c);  // "not23" | "char2" | "char3"

enum class Reading { Reference, Validated };

enum class ParamRule { None, SquareClass, ArtinSchreier, AffineSquare };

// Orbit-minimum representative of `value` under the family's parameter
// equivalence (square class / Artin-Schreier / affine square); over the
// rationals only the square-class rule is defined (square-free part).
FieldElement normalize_parameter(ParamRule rule, const FieldElement& value);

// A parametric automorphism-group descriptor.
struct AutDescriptor {
  enum class Kind {
    G1,        // {(1,0; 0,t) : t != 0}
    G2,        // {(1,0; s,t) : t != 0}
    G3,        // {(1,0; s,1) : s in F}
    G4,        // {(p,0; s,p^2) : p != 0}
    G5,        // {(p,0; s,2p^2) : p != 0}   (char 3; listed set, lacks identity)
    G6Shift,   // {(p,0; b1(p-1),1) : p != 0}  (char 2)
    G6Sqrt,    // {(p,0; sqrt(b1)(p-1),1) : p != 0}  (char 2)
    G7,        // {(1,0; 1+2t,t) : t != 0}   (char 3)
    G8,        // {(1,0; 0,+-1)}
    PS1,       // {(p,0; s,1) : p != 0, s in F}
    IdemShift, // {(1,0; s,1) : s^2 = s}, the prime-subfield shifts
    Trivial,
  };
  Kind kind;
  bool uses_param = false;

  std::string str() const;
  // Fully instantiated set over F; param is the family parameter (only
  // used by the G6 variants).  Sorted in canonical matrix order.
  std::vector<BasisChange> instantiate(const Field& F, const FieldElement& param) const;
};

enum class FamilyId {
  A3_100, A3_101, A3_H00, A3_HA4H, A13,
  A32_100, A32_101, A42, A62, A112, A122,
  A33_100, A33_101, A33_200, A33_2A42, A133,
};

struct CatalogFamily {
  FamilyId id;
  CharClass cls;
  std::string name;    // compact, e.g. "A3(1/2,a4,1/2)"
  std::string pretty;  // reader-facing, e.g. "A_3(1/2, a4, 1/2)"
  // Structure-matrix template, row-major; kParamSlot marks the parameter.
  std::array<int, 8> entries;
  ParamRule rule;
  std::optional<std::array<int, 2>> unit;  // unit coordinates, when unital
  std::string param_name() const;          // "alpha4" | "beta1"
  bool parametric() const { return rule != ParamRule::None; }

  Msc instantiate(const Field& F, const FieldElement& param) const;
  Msc instantiate(const Field& F) const;  // non-parametric only
  AutDescriptor aut(Reading r, const FieldElement& param) const;
};

constexpr int kParamSlot = -1;
constexpr int kHalf = -2;  // field inverse of 2

const std::vector<CatalogFamily>& families(CharClass cls);

struct CatalogInstance {
  const CatalogFamily* family;
  std::optional<FieldElement> param;  // normalized orbit representative
  Msc msc;

  std::string label() const;   // "A3(1/2,a4=2,1/2)"
  std::string pretty() const;  // "A_3(1/2, a4=2, 1/2)"
};

// Families expanded over F: one instance per parameter-orbit representative.
// Over the rationals, parametric families appear only at parameter 0 (the
// sole finitely-listable square class); all instances are load-checked
// for associativity.
std::vector<CatalogInstance> catalog(const Field& F);

struct CanonicalLabel {
  CharClass cls;
  std::string family;
  std::optional<FieldElement> param;
  std::string str() const;     // compact, e.g. "A3(1/2,a4=2,1/2)"
  std::string pretty() const;  // reader-facing, e.g. "A_3(1/2, a4=2, 1/2)"
};

struct AlgebraClassification {
  CanonicalLabel label;
  BasisChange witness;  // transform(input, witness) == canonical representative
};

// Unique catalog label GL(2,F)-isomorphic to A, with witness.  Errors on
// the zero algebra, non-associative input, and (over the rationals) on
// anything not already in template shape.
AlgebraClassification classify_algebra(const Msc& A);

// One item of a pair-class or Frobenius-class table: a matcher returning
// the residual parameters when a concrete form fits the item's pattern
// and constraints.
struct FormItem {
  std::string id;       // listing index, or "v<n>" for validated-only items
  std::string display;
  bool reference = true;   // present in the Reference reading
  bool validated = true;   // present in the Validated reading
  bool typo_corrected = false;
  std::function<std::optional<std::vector<std::pair<std::string, FieldElement>>>(
      const BilinearForm&, const FieldElement& algebra_param)>
      match;
};

// Item tables keyed by family and (for parametric families) by whether
// the algebra parameter is zero.
const std::vector<FormItem>& pair_items(FamilyId id, bool param_is_zero);
const std::vector<FormItem>& frobenius_items(FamilyId id, bool param_is_zero);
const char* pair_table_name(CharClass cls);       // "pairs-not23", ...
const char* frobenius_table_name(CharClass cls);  // "frobenius-not23", ...

struct PairLabel {
  CanonicalLabel algebra;
  std::string table;    // pair table name
  std::string item;     // matched item id (Validated reading)
  std::string display;  // item display string
  std::vector<std::pair<std::string, FieldElement>> params;
  std::vector<std::string> reference_items;  // Reference-reading matches
};

struct PairClassification {
  PairLabel label;
  BasisChange witness;       // maps (A,S) to (representative, matched form)
  BilinearForm matched_form; // congruence(S, witness)
};

// Classify the algebra, push S through the witness, canonicalize under the
// representative's (brute-forced) automorphism group, and match the item
// table.  Finite fields, q <= 7.
PairClassification classify_pair(const Msc& A, const BilinearForm& S);

struct FrobeniusLabel {
  CanonicalLabel algebra;
  std::string table;
  std::string item;
  std::string display;
  std::vector<std::pair<std::string, FieldElement>> params;
  std::vector<std::string> reference_items;
};

struct FrobeniusClassification {
  // Either a label (Frobenius) or the 1-based index of the first nonzero
  // compatibility residual (not Frobenius).
  std::optional<FrobeniusLabel> label;
  int failing_residual = 0;
  std::optional<BasisChange> witness;
  std::optional<BilinearForm> matched_form;
  bool is_frobenius() const { return label.has_value(); }
};

FrobeniusClassification classify_frobenius_pair(const Msc& A, const BilinearForm& S);

}  // namespace f2a::canon
