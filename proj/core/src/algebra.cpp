#include "f2a/algebra.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace f2a {

Vec2::Vec2(FieldElement a, FieldElement b) : x1(std::move(a)), x2(std::move(b)) {
  if (&x1.field() != &x2.field()) throw FieldMismatchError("Vec2 entries from different fields");
}

Mat2::Mat2(FieldElement a_, FieldElement b_, FieldElement c_, FieldElement d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  if (&a.field() != &b.field() || &a.field() != &c.field() || &a.field() != &d.field())
    throw FieldMismatchError("Mat2 entries from different fields");
}

Mat2 Mat2::identity(const Field& F) { return Mat2(F.one(), F.zero(), F.zero(), F.one()); }

Mat2 Mat2::inverse() const {
  FieldElement dt = det();
  if (dt.is_zero()) throw DomainError("singular matrix has no inverse");
  FieldElement di = dt.inverse();
  return Mat2(d * di, -b * di, -c * di, a * di);
}

Mat2 Mat2::operator*(const Mat2& o) const {
  return Mat2(a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d);
}

bool Mat2::operator<(const Mat2& o) const {
  if (a != o.a) return a < o.a;
  if (b != o.b) return b < o.b;
  if (c != o.c) return c < o.c;
  return d < o.d;
}

std::string Mat2::str() const {
  return a.str() + "," + b.str() + ";" + c.str() + "," + d.str();
}

namespace detail {

std::vector<std::string_view> split_top_level(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '[') ++depth;
    if (s[i] == ']') --depth;
    if (s[i] == sep && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

}  // namespace detail

Mat2 Mat2::parse(std::string_view text, const Field& F) {
  auto rows = detail::split_top_level(text, ';');
  if (rows.size() != 2) throw ParseError("matrix needs two ';'-separated rows: '" + std::string(text) + "'");
  auto r0 = detail::split_top_level(rows[0], ',');
  auto r1 = detail::split_top_level(rows[1], ',');
  if (r0.size() != 2 || r1.size() != 2)
    throw ParseError("matrix rows need two entries: '" + std::string(text) + "'");
  return Mat2(F.parse(r0[0]), F.parse(r0[1]), F.parse(r1[0]), F.parse(r1[1]));
}

BasisChange::BasisChange(Mat2 g) : g_(std::move(g)) {
  if (g_.det().is_zero()) throw DomainError("basis change must be invertible");
}

BasisChange BasisChange::parse(std::string_view text, const Field& F) {
  return BasisChange(Mat2::parse(text, F));
}

StructureMatrix::StructureMatrix(std::array<FieldElement, 8> entries) : e_(std::move(entries)) {
  for (int i = 1; i < 8; ++i)
    if (&e_[i].field() != &e_[0].field())
      throw FieldMismatchError("structure matrix entries from different fields");
}

StructureMatrix StructureMatrix::zero(const Field& F) {
  std::array<FieldElement, 8> e;
  e.fill(F.zero());
  return StructureMatrix(e);
}

StructureMatrix StructureMatrix::from_ints(const Field& F, const std::array<int, 8>& v) {
  std::array<FieldElement, 8> e;
  for (int i = 0; i < 8; ++i) e[i] = F.from_int(v[i]);
  return StructureMatrix(e);
}

Vec2 StructureMatrix::column(int i, int j) const {
  const int col = i * 2 + j;
  return Vec2(e_[col], e_[4 + col]);
}

bool StructureMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const FieldElement& x) { return x.is_zero(); });
}

bool StructureMatrix::operator<(const StructureMatrix& o) const {
  for (int i = 0; i < 8; ++i) {
    if (e_[i] != o.e_[i]) return e_[i] < o.e_[i];
  }
  return false;
}

std::string StructureMatrix::str() const {
  std::string s;
  for (int i = 0; i < 4; ++i) {
    if (i) s += ",";
    s += e_[i].str();
  }
  s += ";";
  for (int i = 4; i < 8; ++i) {
    if (i > 4) s += ",";
    s += e_[i].str();
  }
  return s;
}

StructureMatrix StructureMatrix::parse(std::string_view text, const Field& F) {
  auto rows = detail::split_top_level(text, ';');
  if (rows.size() != 2)
    throw ParseError("structure matrix needs two ';'-separated rows: '" + std::string(text) + "'");
  std::array<FieldElement, 8> e;
  for (int r = 0; r < 2; ++r) {
    auto parts = detail::split_top_level(rows[r], ',');
    if (parts.size() != 4)
      throw ParseError("structure matrix rows need four entries: '" + std::string(text) + "'");
    for (int i = 0; i < 4; ++i) e[r * 4 + i] = F.parse(parts[i]);
  }
  return StructureMatrix(e);
}

Vec2 multiply(const Msc& A, const Vec2& x, const Vec2& y) {
  if (&A.field() != &x.field() || &A.field() != &y.field())
    throw FieldMismatchError("multiply: operands from different fields");
  const FieldElement k1 = x.x1 * y.x1, k2 = x.x1 * y.x2, k3 = x.x2 * y.x1, k4 = x.x2 * y.x2;
  return Vec2(A.alpha(1) * k1 + A.alpha(2) * k2 + A.alpha(3) * k3 + A.alpha(4) * k4,
              A.beta(1) * k1 + A.beta(2) * k2 + A.beta(3) * k3 + A.beta(4) * k4);
}

bool is_associative(const Msc& A) {
  const Field& F = A.field();
  const Vec2 e1(F.one(), F.zero()), e2(F.zero(), F.one());
  const Vec2 basis[2] = {e1, e2};
  for (const Vec2& x : basis)
    for (const Vec2& y : basis)
      for (const Vec2& z : basis)
        if (multiply(A, multiply(A, x, y), z) != multiply(A, x, multiply(A, y, z))) return false;
  return true;
}

std::optional<Vec2> find_unit(const Msc& A) {
  const Field& F = A.field();
  // u e_j = e_j and e_j u = e_j, j = 1,2: eight linear equations in (u1, u2).
  std::vector<std::vector<FieldElement>> rows;
  std::vector<FieldElement> rhs;
  auto push = [&](const FieldElement& c1, const FieldElement& c2, const FieldElement& r) {
    rows.push_back({c1, c2});
    rhs.push_back(r);
  };
  for (int j = 0; j < 2; ++j) {
    // u * e_j: u1 * (e1 e_j) + u2 * (e2 e_j)
    const Vec2 l1 = A.column(0, j), l2 = A.column(1, j);
    push(l1.x1, l2.x1, j == 0 ? F.one() : F.zero());
    push(l1.x2, l2.x2, j == 0 ? F.zero() : F.one());
    // e_j * u: u1 * (e_j e1) + u2 * (e_j e2)
    const Vec2 r1 = A.column(j, 0), r2 = A.column(j, 1);
    push(r1.x1, r2.x1, j == 0 ? F.one() : F.zero());
    push(r1.x2, r2.x2, j == 0 ? F.zero() : F.one());
  }
  auto sol = detail::solve_linear(std::move(rows), std::move(rhs), 2, F);
  if (sol.kind == 0) return std::nullopt;
  if (sol.kind == 2)
    throw std::logic_error("two-sided unit system unexpectedly underdetermined");
  return Vec2(sol.x[0], sol.x[1]);
}

Msc transform(const Msc& A, const BasisChange& g) {
  const Mat2& m = g.mat();
  const Mat2 mi = m.inverse();
  const Vec2 f1(m.a, m.c), f2(m.b, m.d);
  std::array<FieldElement, 8> e;
  const Vec2 basis[2] = {f1, f2};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const Vec2 w = mi * multiply(A, basis[i], basis[j]);
      e[i * 2 + j] = w.x1;
      e[4 + i * 2 + j] = w.x2;
    }
  return Msc(e);
}

const std::vector<BasisChange>& gl2(const Field& F) {
  if (!F.is_finite()) throw DomainError("GL(2, q) enumeration is for finite fields");
  static std::mutex m;
  static std::map<const Field*, std::vector<BasisChange>> cache;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(&F);
  if (it != cache.end()) return it->second;
  std::vector<BasisChange> out;
  const int q = F.size();
  out.reserve(static_cast<size_t>((q * q - 1)) * (q * q - q));
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c)
        for (int d = 0; d < q; ++d) {
          if (F.sub(F.mul(a, d), F.mul(b, c)) == 0) continue;
          out.emplace_back(Mat2(F.element(a), F.element(b), F.element(c), F.element(d)));
        }
  return cache.emplace(&F, std::move(out)).first->second;
}

std::optional<BasisChange> are_isomorphic(const Msc& A, const Msc& B) {
  const Field& F = A.field();
  if (!F.is_finite())
    throw DomainError("are_isomorphic needs a finite field; classify both sides over q instead");
  for (const BasisChange& g : gl2(F))
    if (transform(A, g) == B) return g;
  return std::nullopt;
}

std::vector<BasisChange> automorphism_group(const Msc& A) {
  const Field& F = A.field();
  if (!F.is_finite()) throw DomainError("automorphism_group needs a finite field");
  std::vector<BasisChange> out;
  for (const BasisChange& g : gl2(F))
    if (transform(A, g) == A) out.push_back(g);
  return out;
}

AssociativeAlgebra::AssociativeAlgebra(Msc msc) : msc_(std::move(msc)) {
  if (!is_associative(msc_)) throw DomainError("structure matrix is not associative");
  unit_ = find_unit(msc_);
}

namespace detail {

std::vector<std::vector<FieldElement>> kernel_basis(std::vector<std::vector<FieldElement>> rows,
                                                    int n, const Field& F) {
  const size_t m = rows.size();
  std::vector<int> pivot_col;
  size_t r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    size_t sel = r;
    while (sel < m && rows[sel][c].is_zero()) ++sel;
    if (sel == m) continue;
    std::swap(rows[r], rows[sel]);
    const FieldElement piv = rows[r][c].inverse();
    for (int j = c; j < n; ++j) rows[r][j] = rows[r][j] * piv;
    for (size_t i = 0; i < m; ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const FieldElement f = rows[i][c];
      for (int j = c; j < n; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<FieldElement>> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElement> v(n, F.zero());
    v[free] = F.one();
    for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

LinearSolution solve_linear(std::vector<std::vector<FieldElement>> rows,
                            std::vector<FieldElement> rhs, int n, const Field& F) {
  const size_t m = rows.size();
  std::vector<int> pivot_col;
  size_t r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    size_t sel = r;
    while (sel < m && rows[sel][c].is_zero()) ++sel;
    if (sel == m) continue;
    std::swap(rows[r], rows[sel]);
    std::swap(rhs[r], rhs[sel]);
    const FieldElement piv = rows[r][c].inverse();
    for (int j = c; j < n; ++j) rows[r][j] = rows[r][j] * piv;
    rhs[r] = rhs[r] * piv;
    for (size_t i = 0; i < m; ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const FieldElement f = rows[i][c];
      for (int j = c; j < n; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
      rhs[i] = rhs[i] - f * rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  LinearSolution sol;
  for (size_t i = r; i < m; ++i)
    if (!rhs[i].is_zero()) return sol;  // inconsistent
  if (static_cast<int>(pivot_col.size()) < n) {
    sol.kind = 2;
    return sol;
  }
  sol.kind = 1;
  sol.x.assign(n, F.zero());
  for (size_t i = 0; i < pivot_col.size(); ++i) sol.x[pivot_col[i]] = rhs[i];
  return sol;
}

}  // namespace detail

}  // namespace f2a
