#pragma once

// Exact arithmetic for the prime fields GF(p) with p <= 13, the small
// extensions GF(4), GF(8), GF(9) with pinned moduli, and the rationals.
//
// Finite fields are table-driven: an element is an index into the field's
// canonical enumeration (residue order for prime fields, polynomial value
// order for extensions).  That index order is the tie-breaking order used
// by every "canonical representative" in the library.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace f2a {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operation applied outside its domain (wrong field kind, wrong
// characteristic, division by zero, exceeded enumeration budget, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatchError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Input matches no catalog family, item or canonical shape.
class NoMatchError : public DomainError {
 public:
  using DomainError::DomainError;
};

class FieldElement;

class Field {
 public:
  enum class Kind { Prime, Extension, Rationals };

  // Interned instances; pointers returned by these are stable for the
  // lifetime of the process and comparable by identity.
  static const Field& prime(int p);
  static const Field& extension(int q);  // 4, 8 or 9
  static const Field& gf(int q);         // any supported finite order
  static const Field& rationals();
  // CLI name: gf2, gf3, gf4, gf5, gf7, gf8, gf9, gf11, gf13, q.
  static const Field* by_name(std::string_view name);
  static std::vector<const Field*> all_finite();

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ != Kind::Rationals; }
  int characteristic() const { return char_; }
  // Number of elements; 0 for the rationals.
  int size() const { return q_; }
  int degree() const { return k_; }
  const std::string& name() const { return name_; }

  // Index arithmetic (finite fields only).
  uint32_t add(uint32_t a, uint32_t b) const { return add_[a * q_ + b]; }
  uint32_t mul(uint32_t a, uint32_t b) const { return mul_[a * q_ + b]; }
  uint32_t neg(uint32_t a) const { return neg_[a]; }
  uint32_t sub(uint32_t a, uint32_t b) const { return add_[a * q_ + neg_[b]]; }
  uint32_t inv(uint32_t a) const;
  // Raw tables for hot loops; row stride is size().
  const uint16_t* add_table() const { return add_.data(); }
  const uint16_t* mul_table() const { return mul_.data(); }
  const uint16_t* neg_table() const { return neg_.data(); }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(long long n) const;
  FieldElement from_rational(const Rational& r) const;  // rationals only
  FieldElement element(uint32_t index) const;           // finite only
  FieldElement parse(std::string_view text) const;

  // All size() elements in canonical order.  Errors on the rationals.
  std::vector<FieldElement> elements() const;

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  Field() = default;
  static Field* make_prime(int p);
  static Field* make_extension(int q);
  static Field* make_rationals();

  Kind kind_ = Kind::Rationals;
  int p_ = 0, k_ = 1, q_ = 0, char_ = 0;
  std::string name_;
  std::vector<uint16_t> add_, mul_, neg_;
  std::vector<uint16_t> inv_;  // inv_[0] unused
};

class FieldElement {
 public:
  FieldElement() = default;

  const Field& field() const { return *field_; }
  bool same_field(const FieldElement& o) const { return field_ == o.field_; }

  bool is_zero() const;
  bool is_one() const;
  uint32_t index() const;          // finite only
  const Rational& rat() const;     // rationals only

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;  // throws on zero divisor
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement square() const { return *this * *this; }

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
  // Canonical total order inside one field (index order / numeric order).
  bool operator<(const FieldElement& o) const;

  std::string str() const;

 private:
  friend class Field;
  const Field* field_ = nullptr;
  uint32_t idx_ = 0;
  Rational rat_;
};

// {r^2 * a : r != 0}, plus {0} if a = 0.  Finite fields only.
std::vector<FieldElement> square_class_orbit(const FieldElement& a);
// {b + r + r^2 : r in F}.  Characteristic 2 only.
std::vector<FieldElement> artin_schreier_orbit(const FieldElement& b);
// {q^2 b + r^2 : q != 0, r in F}.  Characteristic 2 only.
std::vector<FieldElement> affine_square_orbit(const FieldElement& b);

// Square-free integer s (returned as a rational) with a = s * t^2 for some
// rational t; sign preserved, 0 -> 0.  Throws DomainError if numerator or
// denominator exceeds `bound` (factorization cutoff).
FieldElement normalize_square_free(const FieldElement& a,
                                   const BigInt& bound = BigInt(1000000000000LL));

}  // namespace f2a
