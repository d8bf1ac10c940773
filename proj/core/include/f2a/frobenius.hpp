#pragma once

// The four Frobenius characterizations for 2-dimensional algebras: the
// eight-equation compatibility system for sigma(xy,z) = sigma(x,yz), its
// exact solution space, the ideal-free-kernel functional test, and
// annihilator duality.

#include <optional>
#include <vector>

#include "f2a/forms.hpp"

namespace f2a::frob {

using forms::BilinearForm;

// Residuals of the eight compatibility equations, in their fixed
// top-to-bottom order; all zero iff sigma(xy,z) = sigma(x,yz) identically.
struct FrobeniusDefect {
  std::array<FieldElement, 8> residuals;
  bool all_zero() const;
  // 1-based index of the first nonzero residual; 0 when all zero.
  int first_nonzero() const;
};

FrobeniusDefect frobenius_defect(const Msc& A, const BilinearForm& S);

// defect all-zero AND det(S) != 0.  Requires associative A.
bool is_frobenius_pair(const Msc& A, const BilinearForm& S);

struct SolutionSpace {
  std::vector<BilinearForm> basis;  // reduced-echelon kernel basis in (a,b,c,d)
  bool has_nondegenerate;
};

// Exact kernel of the compatibility system as a space of forms.
// Nondegenerate existence: exhaustive kernel scan over finite fields,
// {0,1,2}-grid evaluation of det over the rationals.
SolutionSpace solve_frobenius_forms(const Msc& A);

// Subspace of F^2 in reduced echelon form (dim 0, 1 or 2).
struct Subspace {
  std::vector<Vec2> basis;
  int dim() const { return static_cast<int>(basis.size()); }
  bool operator==(const Subspace& o) const;
  std::string str() const;
};

Subspace full_space(const Field& F);
Subspace zero_space(const Field& F);
Subspace span_of(const std::vector<Vec2>& vecs, const Field& F);

// All invariant subspaces among {0}, the q+1 lines, F^2.  Finite fields.
struct OneSidedIdeals {
  std::vector<Subspace> left, right;
};
OneSidedIdeals one_sided_ideals(const Msc& A);

struct LinearFunctional {
  FieldElement l1, l2;  // lambda(x) = l1 x1 + l2 x2
  std::string str() const { return l1.str() + "," + l2.str(); }
};

// First nonzero functional (canonical kernel-line scan order) whose kernel
// is neither a left nor a right ideal, or nullopt.  Finite fields.
std::optional<LinearFunctional> is_frobenius_via_functional(const Msc& A);

enum class Side { Left, Right };

// side == Right: r(U) = {x : u x = 0 for all u in U};
// side == Left:  l(U) = {x : x u = 0 for all u in U}.
Subspace annihilator(const Msc& A, const Subspace& U, Side side);

}  // namespace f2a::frob
