#include "f2a/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace f2a {
namespace {

constexpr int kMaxPrime = 13;

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Pinned irreducible moduli, little-endian coefficients of the part below
// the leading term: GF(4): t^2+t+1, GF(8): t^3+t+1, GF(9): t^2+1.
const std::map<int, std::pair<int, std::vector<int>>>& extension_table() {
  static const std::map<int, std::pair<int, std::vector<int>>> t = {
      {4, {2, {1, 1}}},
      {8, {2, {1, 1, 0}}},
      {9, {3, {1, 0}}},
  };
  return t;
}

std::vector<int> index_to_vec(int idx, int p, int k) {
  std::vector<int> v(k);
  for (int i = 0; i < k; ++i) {
    v[i] = idx % p;
    idx /= p;
  }
  return v;
}

int vec_to_index(const std::vector<int>& v, int p) {
  int r = 0;
  for (auto it = v.rbegin(); it != v.rend(); ++it) r = r * p + *it;
  return r;
}

}  // namespace

Field* Field::make_prime(int p) {
  if (!is_prime(p) || p > kMaxPrime)
    throw DomainError("unsupported prime field order " + std::to_string(p));
  auto* f = new Field();
  f->kind_ = Kind::Prime;
  f->p_ = p;
  f->k_ = 1;
  f->q_ = p;
  f->char_ = p;
  f->name_ = "gf" + std::to_string(p);
  f->add_.resize(p * p);
  f->mul_.resize(p * p);
  f->neg_.resize(p);
  f->inv_.assign(p, 0);
  for (int a = 0; a < p; ++a) {
    f->neg_[a] = static_cast<uint16_t>((p - a) % p);
    for (int b = 0; b < p; ++b) {
      f->add_[a * p + b] = static_cast<uint16_t>((a + b) % p);
      f->mul_[a * p + b] = static_cast<uint16_t>((a * b) % p);
    }
  }
  for (int a = 1; a < p; ++a)
    for (int b = 1; b < p; ++b)
      if (a * b % p == 1) f->inv_[a] = static_cast<uint16_t>(b);
  return f;
}

Field* Field::make_extension(int q) {
  auto it = extension_table().find(q);
  if (it == extension_table().end())
    throw DomainError("unsupported extension field order " + std::to_string(q));
  const int p = it->second.first;
  const auto& mod = it->second.second;
  const int k = static_cast<int>(mod.size());
  auto* f = new Field();
  f->kind_ = Kind::Extension;
  f->p_ = p;
  f->k_ = k;
  f->q_ = q;
  f->char_ = p;
  f->name_ = "gf" + std::to_string(q);
  f->add_.resize(q * q);
  f->mul_.resize(q * q);
  f->neg_.resize(q);
  f->inv_.assign(q, 0);
  auto polymul = [&](const std::vector<int>& u, const std::vector<int>& v) {
    std::vector<int> out(2 * k - 1, 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) out[i + j] = (out[i + j] + u[i] * v[j]) % p;
    for (int d = 2 * k - 2; d >= k; --d) {
      int c = out[d];
      if (c == 0) continue;
      out[d] = 0;
      for (int i = 0; i < k; ++i)
        out[d - k + i] = ((out[d - k + i] - c * mod[i]) % p + p) % p;
    }
    out.resize(k);
    return out;
  };
  for (int a = 0; a < q; ++a) {
    auto va = index_to_vec(a, p, k);
    std::vector<int> vn(k);
    for (int i = 0; i < k; ++i) vn[i] = (p - va[i]) % p;
    f->neg_[a] = static_cast<uint16_t>(vec_to_index(vn, p));
    for (int b = 0; b < q; ++b) {
      auto vb = index_to_vec(b, p, k);
      std::vector<int> vs(k);
      for (int i = 0; i < k; ++i) vs[i] = (va[i] + vb[i]) % p;
      f->add_[a * q + b] = static_cast<uint16_t>(vec_to_index(vs, p));
      f->mul_[a * q + b] = static_cast<uint16_t>(vec_to_index(polymul(va, vb), p));
    }
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (f->mul_[a * q + b] == 1) f->inv_[a] = static_cast<uint16_t>(b);
  return f;
}

Field* Field::make_rationals() {
  auto* f = new Field();
  f->kind_ = Kind::Rationals;
  f->name_ = "q";
  return f;
}

const Field& Field::prime(int p) {
  static std::mutex m;
  static std::map<int, std::unique_ptr<Field>> cache;
  std::lock_guard<std::mutex> lock(m);
  auto& slot = cache[p];
  if (!slot) slot.reset(make_prime(p));
  return *slot;
}

const Field& Field::extension(int q) {
  static std::mutex m;
  static std::map<int, std::unique_ptr<Field>> cache;
  std::lock_guard<std::mutex> lock(m);
  auto& slot = cache[q];
  if (!slot) slot.reset(make_extension(q));
  return *slot;
}

const Field& Field::rationals() {
  static const Field* f = make_rationals();
  return *f;
}

const Field& Field::gf(int q) {
  if (extension_table().count(q)) return extension(q);
  return prime(q);
}

const Field* Field::by_name(std::string_view name) {
  if (name == "q" || name == "Q") return &rationals();
  if (name.substr(0, 2) == "gf") {
    int q = 0;
    for (char c : name.substr(2)) {
      if (c < '0' || c > '9') return nullptr;
      q = q * 10 + (c - '0');
    }
    try {
      return &gf(q);
    } catch (const DomainError&) {
      return nullptr;
    }
  }
  return nullptr;
}

std::vector<const Field*> Field::all_finite() {
  std::vector<const Field*> out;
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13}) out.push_back(&gf(q));
  return out;
}

uint32_t Field::inv(uint32_t a) const {
  if (a == 0) throw DomainError("division by zero in " + name_);
  return inv_[a];
}

FieldElement Field::zero() const {
  FieldElement e;
  e.field_ = this;
  return e;
}

FieldElement Field::one() const {
  FieldElement e;
  e.field_ = this;
  if (is_finite())
    e.idx_ = 1;
  else
    e.rat_ = 1;
  return e;
}

FieldElement Field::from_int(long long n) const {
  FieldElement e;
  e.field_ = this;
  if (is_finite()) {
    long long r = n % q_;
    if (r < 0) r += q_;
    if (kind_ == Kind::Prime) {
      e.idx_ = static_cast<uint32_t>(r);
    } else {
      // integers embed through the prime subfield
      e.idx_ = static_cast<uint32_t>(((n % p_) + p_) % p_);
    }
  } else {
    e.rat_ = n;
  }
  return e;
}

FieldElement Field::from_rational(const Rational& r) const {
  if (is_finite()) throw DomainError("from_rational on finite field " + name_);
  FieldElement e;
  e.field_ = this;
  e.rat_ = r;
  return e;
}

FieldElement Field::element(uint32_t index) const {
  if (!is_finite()) throw DomainError("element(index) on the rationals");
  if (index >= static_cast<uint32_t>(q_)) throw DomainError("element index out of range");
  FieldElement e;
  e.field_ = this;
  e.idx_ = index;
  return e;
}

std::vector<FieldElement> Field::elements() const {
  if (!is_finite()) throw DomainError("cannot enumerate the rationals");
  std::vector<FieldElement> out;
  out.reserve(q_);
  for (int i = 0; i < q_; ++i) out.push_back(element(i));
  return out;
}

namespace {

BigInt parse_integer(std::string_view s, std::string_view ctx) {
  if (s.empty()) throw ParseError("empty integer in '" + std::string(ctx) + "'");
  size_t i = 0;
  bool negate = false;
  if (s[0] == '+' || s[0] == '-') {
    negate = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw ParseError("missing digits in '" + std::string(ctx) + "'");
  BigInt v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw ParseError("bad character in integer '" + std::string(ctx) + "'");
    v = v * 10 + (s[i] - '0');
  }
  return negate ? BigInt(-v) : v;
}

uint32_t mod_index(const BigInt& v, int p) {
  BigInt r = v % p;
  if (r < 0) r += p;
  return static_cast<uint32_t>(r);
}

}  // namespace

FieldElement Field::parse(std::string_view text) const {
  // Trim surrounding spaces.
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty element literal");

  if (kind_ == Kind::Prime) {
    return element(mod_index(parse_integer(text, text), p_));
  }
  if (kind_ == Kind::Extension) {
    if (text.front() != '[' || text.back() != ']')
      throw ParseError("extension element must be a bracketed coefficient list: '" +
                       std::string(text) + "'");
    std::string_view body = text.substr(1, text.size() - 2);
    std::vector<int> coeffs;
    size_t start = 0;
    while (true) {
      size_t comma = body.find(',', start);
      std::string_view part =
          comma == std::string_view::npos ? body.substr(start) : body.substr(start, comma - start);
      coeffs.push_back(static_cast<int>(mod_index(parse_integer(part, text), p_)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (static_cast<int>(coeffs.size()) != k_)
      throw ParseError("expected " + std::to_string(k_) + " coefficients in '" +
                       std::string(text) + "'");
    return element(static_cast<uint32_t>(vec_to_index(coeffs, p_)));
  }
  // Rationals: "n" or "n/d".
  size_t slash = text.find('/');
  BigInt num, den = 1;
  if (slash == std::string_view::npos) {
    num = parse_integer(text, text);
  } else {
    num = parse_integer(text.substr(0, slash), text);
    den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  return from_rational(Rational(num, den));
}

bool FieldElement::is_zero() const {
  return field_->is_finite() ? idx_ == 0 : rat_ == 0;
}

bool FieldElement::is_one() const {
  return field_->is_finite() ? idx_ == 1 : rat_ == 1;
}

uint32_t FieldElement::index() const {
  if (!field_->is_finite()) throw DomainError("index() on a rational element");
  return idx_;
}

const Rational& FieldElement::rat() const {
  if (field_->is_finite()) throw DomainError("rat() on a finite-field element");
  return rat_;
}

namespace {
void require_same(const FieldElement& a, const FieldElement& b) {
  if (&a.field() != &b.field())
    throw FieldMismatchError("elements of " + a.field().name() + " and " + b.field().name() +
                             " mixed in one operation");
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same(*this, o);
  FieldElement r;
  r.field_ = field_;
  if (field_->is_finite())
    r.idx_ = field_->add(idx_, o.idx_);
  else
    r.rat_ = rat_ + o.rat_;
  return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same(*this, o);
  FieldElement r;
  r.field_ = field_;
  if (field_->is_finite())
    r.idx_ = field_->sub(idx_, o.idx_);
  else
    r.rat_ = rat_ - o.rat_;
  return r;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same(*this, o);
  FieldElement r;
  r.field_ = field_;
  if (field_->is_finite())
    r.idx_ = field_->mul(idx_, o.idx_);
  else
    r.rat_ = rat_ * o.rat_;
  return r;
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  return *this * o.inverse();
}

FieldElement FieldElement::operator-() const {
  FieldElement r;
  r.field_ = field_;
  if (field_->is_finite())
    r.idx_ = field_->neg(idx_);
  else
    r.rat_ = -rat_;
  return r;
}

FieldElement FieldElement::inverse() const {
  FieldElement r;
  r.field_ = field_;
  if (field_->is_finite()) {
    r.idx_ = field_->inv(idx_);
  } else {
    if (rat_ == 0) throw DomainError("division by zero in q");
    r.rat_ = 1 / rat_;
  }
  return r;
}

bool FieldElement::operator==(const FieldElement& o) const {
  require_same(*this, o);
  return field_->is_finite() ? idx_ == o.idx_ : rat_ == o.rat_;
}

bool FieldElement::operator<(const FieldElement& o) const {
  require_same(*this, o);
  return field_->is_finite() ? idx_ < o.idx_ : rat_ < o.rat_;
}

std::string FieldElement::str() const {
  if (!field_->is_finite()) {
    const BigInt num = boost::multiprecision::numerator(rat_);
    const BigInt den = boost::multiprecision::denominator(rat_);
    std::string s = num.str();
    if (den != 1) s += "/" + den.str();
    return s;
  }
  if (field_->kind() == Field::Kind::Prime) return std::to_string(idx_);
  std::string s = "[";
  int v = static_cast<int>(idx_);
  const int p = field_->characteristic();
  for (int i = 0; i < field_->degree(); ++i) {
    if (i) s += ",";
    s += std::to_string(v % p);
    v /= p;
  }
  return s + "]";
}

std::vector<FieldElement> square_class_orbit(const FieldElement& a) {
  const Field& F = a.field();
  if (!F.is_finite()) throw DomainError("square_class_orbit over the rationals");
  if (a.is_zero()) return {F.zero()};
  std::vector<FieldElement> out;
  for (int r = 1; r < F.size(); ++r)
    out.push_back(F.element(F.mul(F.mul(r, r), a.index())));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<FieldElement> artin_schreier_orbit(const FieldElement& b) {
  const Field& F = b.field();
  if (!F.is_finite() || F.characteristic() != 2)
    throw DomainError("artin_schreier_orbit requires characteristic 2");
  std::vector<FieldElement> out;
  for (int r = 0; r < F.size(); ++r)
    out.push_back(F.element(F.add(b.index(), F.add(r, F.mul(r, r)))));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<FieldElement> affine_square_orbit(const FieldElement& b) {
  const Field& F = b.field();
  if (!F.is_finite() || F.characteristic() != 2)
    throw DomainError("affine_square_orbit requires characteristic 2");
  std::vector<FieldElement> out;
  for (int q = 1; q < F.size(); ++q)
    for (int r = 0; r < F.size(); ++r)
      out.push_back(F.element(F.add(F.mul(F.mul(q, q), b.index()), F.mul(r, r))));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Primes up to 10^6 cover full factorization of any integer <= 10^12:
// after stripping them, a cofactor below the bound is 1, a prime, or the
// square of a prime (two distinct factors > 10^6 would exceed 10^12).
const std::vector<uint32_t>& small_primes() {
  static const std::vector<uint32_t> primes = [] {
    const uint32_t limit = 1000000;
    std::vector<bool> sieve(limit + 1, true);
    std::vector<uint32_t> out;
    for (uint32_t i = 2; i <= limit; ++i) {
      if (!sieve[i]) continue;
      out.push_back(i);
      for (uint64_t j = uint64_t(i) * i; j <= limit; j += i) sieve[j] = false;
    }
    return out;
  }();
  return primes;
}

BigInt square_free_part(BigInt n) {
  BigInt sqfree = 1;
  for (uint32_t pr : small_primes()) {
    if (n == 1) break;
    if (BigInt(pr) * pr > n) break;
    int e = 0;
    while (n % pr == 0) {
      n /= pr;
      ++e;
    }
    if (e % 2) sqfree *= pr;
  }
  if (n > 1) {
    const BigInt root = boost::multiprecision::sqrt(n);
    if (root * root == n) {
      // cofactor is the square of a (> 10^6) prime
    } else {
      sqfree *= n;  // cofactor is prime
    }
  }
  return sqfree;
}

}  // namespace

FieldElement normalize_square_free(const FieldElement& a, const BigInt& bound) {
  const Field& F = a.field();
  if (F.is_finite()) throw DomainError("normalize_square_free is for the rationals");
  if (a.is_zero()) return F.zero();
  BigInt num = boost::multiprecision::numerator(a.rat());
  const BigInt den = boost::multiprecision::denominator(a.rat());
  const bool negative = num < 0;
  if (negative) num = -num;
  if (num > bound || den > bound)
    throw DomainError("square-free normalization: factorization bound exceeded");
  // n/d = (n*d) / d^2, so the square class is represented by n*d.
  BigInt s = square_free_part(num * den);
  if (negative) s = -s;
  return F.from_rational(Rational(s));
}

}  // namespace f2a
