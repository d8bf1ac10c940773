#pragma once

// Two-dimensional algebras presented by their 2x4 matrix of structure
// constants.  Column order is the Kronecker order (e1e1, e1e2, e2e1, e2e2),
// so x*y = A (x (x) y).  Change of basis acts on the right:
// transform(A, g) = g^{-1} A (g (x) g), coordinates transform as g^{-1} x.

#include <array>
#include <optional>
#include <vector>

#include "f2a/field.hpp"

namespace f2a {

struct Vec2 {
  FieldElement x1, x2;

  Vec2() = default;
  Vec2(FieldElement a, FieldElement b);

  const Field& field() const { return x1.field(); }
  bool is_zero() const { return x1.is_zero() && x2.is_zero(); }
  bool operator==(const Vec2& o) const { return x1 == o.x1 && x2 == o.x2; }
  bool operator!=(const Vec2& o) const { return !(*this == o); }
  Vec2 operator+(const Vec2& o) const { return Vec2(x1 + o.x1, x2 + o.x2); }
  Vec2 operator*(const FieldElement& c) const { return Vec2(x1 * c, x2 * c); }
  std::string str() const { return x1.str() + "," + x2.str(); }
};

struct Mat2 {
  // (a b; c d)
  FieldElement a, b, c, d;

  Mat2() = default;
  Mat2(FieldElement a_, FieldElement b_, FieldElement c_, FieldElement d_);
  static Mat2 identity(const Field& F);

  const Field& field() const { return a.field(); }
  FieldElement det() const { return a * d - b * c; }
  Mat2 transposed() const { return Mat2(a, c, b, d); }
  Mat2 inverse() const;  // throws DomainError when singular
  Mat2 operator*(const Mat2& o) const;
  Vec2 operator*(const Vec2& v) const { return Vec2(a * v.x1 + b * v.x2, c * v.x1 + d * v.x2); }
  bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
  bool operator!=(const Mat2& o) const { return !(*this == o); }
  bool operator<(const Mat2& o) const;  // canonical entry order

  std::string str() const;  // "a,b;c,d"
  static Mat2 parse(std::string_view text, const Field& F);
};

// Invertible basis change; construction validates det != 0.
class BasisChange {
 public:
  explicit BasisChange(Mat2 g);
  const Mat2& mat() const { return g_; }
  const Field& field() const { return g_.field(); }
  BasisChange inverse() const { return BasisChange(g_.inverse()); }
  BasisChange operator*(const BasisChange& o) const { return BasisChange(g_ * o.g_); }
  bool operator==(const BasisChange& o) const { return g_ == o.g_; }
  bool operator<(const BasisChange& o) const { return g_ < o.g_; }
  std::string str() const { return g_.str(); }
  static BasisChange parse(std::string_view text, const Field& F);

 private:
  Mat2 g_;
};

// 2x4 matrix of structure constants, rows (alpha1..alpha4), (beta1..beta4).
class StructureMatrix {
 public:
  StructureMatrix() = default;
  StructureMatrix(std::array<FieldElement, 8> entries);
  static StructureMatrix zero(const Field& F);
  // Entries in row-major order from small integers.
  static StructureMatrix from_ints(const Field& F, const std::array<int, 8>& e);

  const Field& field() const { return e_[0].field(); }
  const FieldElement& alpha(int i) const { return e_[i - 1]; }      // i in 1..4
  const FieldElement& beta(int i) const { return e_[3 + i]; }       // i in 1..4
  const FieldElement& entry(int row, int col) const { return e_[row * 4 + col]; }
  // Column of the product e_{i+1} e_{j+1}, i,j in {0,1}.
  Vec2 column(int i, int j) const;
  bool is_zero() const;

  bool operator==(const StructureMatrix& o) const { return e_ == o.e_; }
  bool operator!=(const StructureMatrix& o) const { return !(*this == o); }
  bool operator<(const StructureMatrix& o) const;  // canonical entry order

  std::string str() const;  // "a1,a2,a3,a4;b1,b2,b3,b4"
  static StructureMatrix parse(std::string_view text, const Field& F);

 private:
  std::array<FieldElement, 8> e_;
};

using Msc = StructureMatrix;

Vec2 multiply(const Msc& A, const Vec2& x, const Vec2& y);
bool is_associative(const Msc& A);
// Unique two-sided unit, or nullopt.  A solution set with more than one
// element would contradict two-sided unit uniqueness and raises.
std::optional<Vec2> find_unit(const Msc& A);
Msc transform(const Msc& A, const BasisChange& g);

// All of GL(2, F) in canonical scan order (entry-lexicographic).  Cached.
const std::vector<BasisChange>& gl2(const Field& F);

// First witness g with transform(A, g) == B in canonical scan order.
// Finite fields only.
std::optional<BasisChange> are_isomorphic(const Msc& A, const Msc& B);
// Stabilizer of A in GL(2, F), canonical scan order.  Finite fields only.
std::vector<BasisChange> automorphism_group(const Msc& A);

// Validated associative algebra with cached unit information.
class AssociativeAlgebra {
 public:
  explicit AssociativeAlgebra(Msc msc);  // throws DomainError if not associative
  const Msc& msc() const { return msc_; }
  bool is_unital() const { return unit_.has_value(); }
  const std::optional<Vec2>& unit() const { return unit_; }

 private:
  Msc msc_;
  std::optional<Vec2> unit_;
};

namespace detail {
// Splits on `sep` at top bracket level only, so extension-field
// coefficient lists survive.
std::vector<std::string_view> split_top_level(std::string_view s, char sep);

// Reduced row echelon kernel basis of an m x n matrix (rows of length n).
std::vector<std::vector<FieldElement>> kernel_basis(
    std::vector<std::vector<FieldElement>> rows, int n, const Field& F);

// Solution set of A x = b: 0 = none, 1 = unique (stored in x), 2 = many.
struct LinearSolution {
  int kind = 0;
  std::vector<FieldElement> x;
};
LinearSolution solve_linear(std::vector<std::vector<FieldElement>> rows,
                            std::vector<FieldElement> rhs, int n, const Field& F);
}  // namespace detail

}  // namespace f2a
