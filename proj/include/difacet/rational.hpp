#ifndef DIFACET_RATIONAL_HPP
#define DIFACET_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace difacet {

/// Exact rational number. Always kept canonical: gcd(|num|, den) = 1,
/// den > 0, zero is 0/1.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long n) : value_(n) {}  // NOLINT: implicit by design
  Rational(long n, long d) : value_(n, d) { canonicalize(); }
  explicit Rational(mpq_class v) : value_(std::move(v)) { canonicalize(); }

  static Rational from_string(const std::string& s);

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational operator+(const Rational& o) const { return Rational(mpq_class(value_ + o.value_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(value_ - o.value_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(value_ * o.value_)); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(value_ / o.value_));
  }
  Rational abs() const { return Rational(mpq_class(::abs(value_))); }

  bool operator==(const Rational& o) const { return value_ == o.value_; }
  bool operator!=(const Rational& o) const { return value_ != o.value_; }
  bool operator<(const Rational& o) const { return value_ < o.value_; }
  bool operator<=(const Rational& o) const { return value_ <= o.value_; }
  bool operator>(const Rational& o) const { return value_ > o.value_; }
  bool operator>=(const Rational& o) const { return value_ >= o.value_; }

  /// Renders as "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  const mpq_class& raw() const { return value_; }

 private:
  void canonicalize() { value_.canonicalize(); }
  mpq_class value_;
};

enum class FieldKind { Rationals, Prime };

/// Coefficient field selector: the rationals, or Z/p for a prime p.
struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  unsigned long p = 0;

  static FieldSpec rationals() { return FieldSpec{FieldKind::Rationals, 0}; }
  static FieldSpec prime(unsigned long p);

  bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }
  std::string to_string() const;
};

bool is_prime(unsigned long p);

/// Field arithmetic. In prime mode, elements are integer Rationals in [0, p).
Rational field_normalize(const Rational& a, const FieldSpec& f);
Rational field_add(const Rational& a, const Rational& b, const FieldSpec& f);
Rational field_sub(const Rational& a, const Rational& b, const FieldSpec& f);
Rational field_mul(const Rational& a, const Rational& b, const FieldSpec& f);
Rational field_div(const Rational& a, const Rational& b, const FieldSpec& f);
Rational field_neg(const Rational& a, const FieldSpec& f);

}  // namespace difacet

#endif
