#include "f2a/frobenius.hpp"

#include <algorithm>

namespace f2a::frob {

bool FrobeniusDefect::all_zero() const {
  return std::all_of(residuals.begin(), residuals.end(),
                     [](const FieldElement& r) { return r.is_zero(); });
}

int FrobeniusDefect::first_nonzero() const {
  for (int i = 0; i < 8; ++i)
    if (!residuals[i].is_zero()) return i + 1;
  return 0;
}

FrobeniusDefect frobenius_defect(const Msc& A, const BilinearForm& S) {
  if (&A.field() != &S.field())
    throw FieldMismatchError("frobenius_defect: operands from different fields");
  const FieldElement &a1 = A.alpha(1), &a2 = A.alpha(2), &a3 = A.alpha(3), &a4 = A.alpha(4);
  const FieldElement &b1 = A.beta(1), &b2 = A.beta(2), &b3 = A.beta(3), &b4 = A.beta(4);
  const FieldElement &a = S.s.a, &b = S.s.b, &c = S.s.c, &d = S.s.d;
  FrobeniusDefect out;
  out.residuals = {
      b1 * c - b1 * b,
      a2 * a + b2 * c - a3 * a - b3 * b,
      a3 * a + b3 * c - a1 * c - b1 * d,
      a4 * a + b4 * c - a3 * c - b3 * d,
      a1 * b + b1 * d - a2 * a - b2 * b,
      a2 * b + b2 * d - a4 * a - b4 * b,
      a3 * b + b3 * d - a2 * c - b2 * d,
      a4 * b + b4 * d - a4 * c - b4 * d,
  };
  return out;
}

bool is_frobenius_pair(const Msc& A, const BilinearForm& S) {
  if (!is_associative(A)) throw DomainError("is_frobenius_pair needs an associative algebra");
  return frobenius_defect(A, S).all_zero() && forms::is_nondegenerate(S);
}

namespace {

// Coefficient rows of the compatibility system as a homogeneous linear
// system in (a, b, c, d).
std::vector<std::vector<FieldElement>> defect_rows(const Msc& A) {
  const Field& F = A.field();
  const FieldElement z = F.zero();
  const FieldElement &a1 = A.alpha(1), &a2 = A.alpha(2), &a3 = A.alpha(3), &a4 = A.alpha(4);
  const FieldElement &b1 = A.beta(1), &b2 = A.beta(2), &b3 = A.beta(3), &b4 = A.beta(4);
  return {
      {z, -b1, b1, z},
      {a2 - a3, -b3, b2, z},
      {a3, z, b3 - a1, -b1},
      {a4, z, b4 - a3, -b3},
      {-a2, a1 - b2, z, b1},
      {-a4, a2 - b4, z, b2},
      {z, a3, -a2, b3 - b2},
      {z, a4, -a4, z},
  };
}

}  // namespace

SolutionSpace solve_frobenius_forms(const Msc& A) {
  if (!is_associative(A)) throw DomainError("solve_frobenius_forms needs an associative algebra");
  const Field& F = A.field();
  auto kern = detail::kernel_basis(defect_rows(A), 4, F);
  SolutionSpace out;
  for (auto& v : kern) out.basis.emplace_back(v[0], v[1], v[2], v[3]);
  out.has_nondegenerate = false;
  const int dim = static_cast<int>(out.basis.size());
  if (dim == 0) return out;

  auto det_of = [&](const std::vector<FieldElement>& coeff) {
    FieldElement a = F.zero(), b = F.zero(), c = F.zero(), d = F.zero();
    for (int i = 0; i < dim; ++i) {
      a = a + coeff[i] * out.basis[i].s.a;
      b = b + coeff[i] * out.basis[i].s.b;
      c = c + coeff[i] * out.basis[i].s.c;
      d = d + coeff[i] * out.basis[i].s.d;
    }
    return a * d - b * c;
  };

  // det restricted to the kernel has degree <= 2 in each coefficient, so
  // over q it vanishes identically iff it vanishes on {0,1,2}^dim; over a
  // finite field we simply scan the whole kernel.
  std::vector<FieldElement> grid;
  if (F.is_finite())
    for (const auto& e : F.elements()) grid.push_back(e);
  else
    for (int v : {0, 1, 2}) grid.push_back(F.from_int(v));

  std::vector<FieldElement> coeff(dim, F.zero());
  const size_t npoints = grid.size();
  std::vector<size_t> odo(dim, 0);
  while (true) {
    for (int i = 0; i < dim; ++i) coeff[i] = grid[odo[i]];
    if (!det_of(coeff).is_zero()) {
      out.has_nondegenerate = true;
      return out;
    }
    int pos = 0;
    while (pos < dim && ++odo[pos] == npoints) odo[pos++] = 0;
    if (pos == dim) break;
  }
  return out;
}

bool Subspace::operator==(const Subspace& o) const {
  if (basis.size() != o.basis.size()) return false;
  for (size_t i = 0; i < basis.size(); ++i)
    if (basis[i] != o.basis[i]) return false;
  return true;
}

std::string Subspace::str() const {
  if (basis.empty()) return "{0}";
  std::string s = "span(";
  for (size_t i = 0; i < basis.size(); ++i) {
    if (i) s += " | ";
    s += basis[i].str();
  }
  return s + ")";
}

Subspace full_space(const Field& F) {
  return Subspace{{Vec2(F.one(), F.zero()), Vec2(F.zero(), F.one())}};
}

Subspace zero_space(const Field&) { return Subspace{}; }

Subspace span_of(const std::vector<Vec2>& vecs, const Field& F) {
  std::vector<std::vector<FieldElement>> rows;
  for (const Vec2& v : vecs) rows.push_back({v.x1, v.x2});
  // Row-reduce to echelon basis.
  int r = 0;
  const int m = static_cast<int>(rows.size());
  for (int c = 0; c < 2 && r < m; ++c) {
    int sel = r;
    while (sel < m && rows[sel][c].is_zero()) ++sel;
    if (sel == m) continue;
    std::swap(rows[r], rows[sel]);
    const FieldElement piv = rows[r][c].inverse();
    rows[r][0] = rows[r][0] * piv;
    rows[r][1] = rows[r][1] * piv;
    for (int i = 0; i < m; ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const FieldElement f = rows[i][c];
      rows[i][0] = rows[i][0] - f * rows[r][0];
      rows[i][1] = rows[i][1] - f * rows[r][1];
    }
    ++r;
  }
  Subspace out;
  for (int i = 0; i < r; ++i) out.basis.emplace_back(rows[i][0], rows[i][1]);
  (void)F;
  return out;
}

namespace {

// The q+1 lines in canonical scan order: direction vectors with first
// nonzero coordinate 1, entry-lexicographic, i.e. (0,1) then (1,m).
std::vector<Vec2> canonical_lines(const Field& F) {
  std::vector<Vec2> out;
  out.emplace_back(F.zero(), F.one());
  for (const auto& m : F.elements()) out.emplace_back(F.one(), m);
  return out;
}

bool stays_in_line(const Msc& A, const Vec2& v, bool left) {
  const Field& F = A.field();
  const Vec2 e1(F.one(), F.zero()), e2(F.zero(), F.one());
  for (const Vec2& x : {e1, e2}) {
    const Vec2 w = left ? multiply(A, x, v) : multiply(A, v, x);
    if (!(w.x1 * v.x2 - w.x2 * v.x1).is_zero()) return false;
  }
  return true;
}

}  // namespace

OneSidedIdeals one_sided_ideals(const Msc& A) {
  const Field& F = A.field();
  if (!F.is_finite()) throw DomainError("one_sided_ideals needs a finite field");
  if (!is_associative(A)) throw DomainError("one_sided_ideals needs an associative algebra");
  OneSidedIdeals out;
  out.left.push_back(zero_space(F));
  out.right.push_back(zero_space(F));
  for (const Vec2& v : canonical_lines(F)) {
    if (stays_in_line(A, v, true)) out.left.push_back(span_of({v}, F));
    if (stays_in_line(A, v, false)) out.right.push_back(span_of({v}, F));
  }
  out.left.push_back(full_space(F));
  out.right.push_back(full_space(F));
  return out;
}

std::optional<LinearFunctional> is_frobenius_via_functional(const Msc& A) {
  const Field& F = A.field();
  if (!F.is_finite()) throw DomainError("is_frobenius_via_functional needs a finite field");
  if (!is_associative(A))
    throw DomainError("is_frobenius_via_functional needs an associative algebra");
  for (const Vec2& v : canonical_lines(F)) {
    if (stays_in_line(A, v, true) || stays_in_line(A, v, false)) continue;
    // canonical normal vector of the kernel line, first nonzero coefficient 1
    FieldElement l1 = v.x2, l2 = -v.x1;
    if (!l1.is_zero()) {
      l2 = l2 / l1;
      l1 = F.one();
    } else {
      l1 = F.zero();
      l2 = F.one();
    }
    return LinearFunctional{l1, l2};
  }
  return std::nullopt;
}

Subspace annihilator(const Msc& A, const Subspace& U, Side side) {
  const Field& F = A.field();
  if (!is_associative(A)) throw DomainError("annihilator needs an associative algebra");
  if (U.dim() == 0) return full_space(F);
  const Vec2 e1(F.one(), F.zero()), e2(F.zero(), F.one());
  std::vector<std::vector<FieldElement>> rows;
  for (const Vec2& u : U.basis) {
    // x -> u x (Right) or x u (Left) is linear in x; its kernel stacks up.
    const Vec2 c1 = side == Side::Right ? multiply(A, u, e1) : multiply(A, e1, u);
    const Vec2 c2 = side == Side::Right ? multiply(A, u, e2) : multiply(A, e2, u);
    rows.push_back({c1.x1, c2.x1});
    rows.push_back({c1.x2, c2.x2});
  }
  auto kern = detail::kernel_basis(std::move(rows), 2, F);
  std::vector<Vec2> vecs;
  for (auto& v : kern) vecs.emplace_back(v[0], v[1]);
  return span_of(vecs, F);
}

}  // namespace f2a::frob
