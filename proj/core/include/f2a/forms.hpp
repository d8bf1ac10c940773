#pragma once

// Bilinear forms S, the congruence action S -> g^T S g, and
// canonicalization of nondegenerate forms under the acting groups G1..G8.

#include <optional>
#include <string>
#include <vector>

#include "f2a/algebra.hpp"

namespace f2a::forms {

struct BilinearForm {
  Mat2 s;

  BilinearForm() = default;
  explicit BilinearForm(Mat2 m) : s(std::move(m)) {}
  BilinearForm(FieldElement a, FieldElement b, FieldElement c, FieldElement d)
      : s(std::move(a), std::move(b), std::move(c), std::move(d)) {}

  const Field& field() const { return s.field(); }
  FieldElement det() const { return s.det(); }
  // sigma(x, y) = x^T S y
  FieldElement eval(const Vec2& x, const Vec2& y) const;
  bool operator==(const BilinearForm& o) const { return s == o.s; }
  bool operator!=(const BilinearForm& o) const { return !(*this == o); }
  bool operator<(const BilinearForm& o) const { return s < o.s; }
  std::string str() const { return s.str(); }
  static BilinearForm parse(std::string_view text, const Field& F) {
    return BilinearForm(Mat2::parse(text, F));
  }
};

bool is_nondegenerate(const BilinearForm& S);
BilinearForm congruence(const BilinearForm& S, const BasisChange& g);

enum class GroupTag { G1, G2, G3, G4, G5, G6, G7, G8 };

const char* group_name(GroupTag t);
std::optional<GroupTag> group_by_name(std::string_view name);  // "g1".."g8"

// One of the eight acting groups.  G6 carries the beta1 parameter.
struct GroupDescriptor {
  GroupTag tag;
  std::optional<FieldElement> beta1;

  explicit GroupDescriptor(GroupTag t) : tag(t) {}
  GroupDescriptor(GroupTag t, FieldElement b1) : tag(t), beta1(std::move(b1)) {}
  std::string str() const;
};

// True iff the descriptor can act over fields of this characteristic
// (G5, G7 need char 3; G6 needs char 2; G4 needs char != 3; G8 char != 2).
bool group_admissible(GroupTag t, int characteristic);

// The parametric set exactly as listed, fully instantiated, sorted in
// canonical matrix order.  Note: the listed G5 set is not closed under
// composition (it misses the identity); see group_closure.
std::vector<BasisChange> group_elements(const GroupDescriptor& desc, const Field& F);

// Multiplicative closure of group_elements; equal to it except for G5.
std::vector<BasisChange> group_closure(const GroupDescriptor& desc, const Field& F);

// One canonical-shape family of a group's orbit classification.
struct ShapeInfo {
  std::string label;    // e.g. "(0,1;c,0)"
  std::string display;  // label plus constraints
  bool supplementary;   // true for shapes added by the validated revision
};

const std::vector<ShapeInfo>& shapes_for(GroupTag t);

// Does this concrete form match shape `index` of group `t` (pattern plus
// residual constraints)?  beta1 is the G6 parameter, ignored elsewhere.
bool shape_matches(GroupTag t, size_t index, const BilinearForm& S,
                   const std::optional<FieldElement>& beta1);

struct CanonicalForm {
  // Minimal orbit member realizing the assigned shape (so the canonical
  // form is an instance of its own label); total, constant on orbits.
  BilinearForm canonical;
  BasisChange witness;             // first group element reaching it
  std::string shape;               // earliest shape label matched by the orbit
  bool shape_supplementary = false;
  std::vector<std::string> also_matches;  // later shapes the orbit also meets
  bool used_closure = false;       // listed set was completed to a group (G5)
};

// Scans the whole orbit of a nondegenerate S.  Errors on degenerate S,
// over the rationals, and when no shape (including the supplementary
// ones) matches the orbit.
CanonicalForm canonicalize_form(const BilinearForm& S, const GroupDescriptor& desc);

}  // namespace f2a::forms
