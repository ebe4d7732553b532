#include "difacet/rational.hpp"

namespace difacet {

Rational Rational::from_string(const std::string& s) {
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  v.canonicalize();
  if (v.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
  return Rational(v);
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_str();
}

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(unsigned long p) {
  if (!is_prime(p)) throw std::invalid_argument("FieldSpec: " + std::to_string(p) + " is not prime");
  return FieldSpec{FieldKind::Prime, p};
}

std::string FieldSpec::to_string() const {
  return kind == FieldKind::Rationals ? "Q" : "Z/" + std::to_string(p);
}

namespace {

Rational mod_reduce(const mpz_class& z, unsigned long p) {
  mpz_class r = z % static_cast<long>(p);
  if (r < 0) r += static_cast<long>(p);
  return Rational(mpq_class(r));
}

}  // namespace

Rational field_normalize(const Rational& a, const FieldSpec& f) {
  if (f.kind == FieldKind::Rationals) return a;
  mpz_class den = a.denominator();
  mpz_class dmod = den % static_cast<long>(f.p);
  if (dmod < 0) dmod += static_cast<long>(f.p);
  if (dmod == 0) throw std::domain_error("field_normalize: denominator not invertible mod p");
  mpz_class inv;
  mpz_class pz(static_cast<long>(f.p));
  if (mpz_invert(inv.get_mpz_t(), dmod.get_mpz_t(), pz.get_mpz_t()) == 0)
    throw std::domain_error("field_normalize: denominator not invertible mod p");
  return mod_reduce(a.numerator() * inv, f.p);
}

Rational field_add(const Rational& a, const Rational& b, const FieldSpec& f) {
  return field_normalize(a + b, f);
}

Rational field_sub(const Rational& a, const Rational& b, const FieldSpec& f) {
  return field_normalize(a - b, f);
}

Rational field_mul(const Rational& a, const Rational& b, const FieldSpec& f) {
  return field_normalize(a * b, f);
}

Rational field_div(const Rational& a, const Rational& b, const FieldSpec& f) {
  if (f.kind == FieldKind::Rationals) return a / b;
  Rational bn = field_normalize(b, f);
  if (bn.is_zero()) throw std::domain_error("field_div: division by zero");
  mpz_class inv;
  mpz_class pz(static_cast<long>(f.p));
  mpz_class bz = bn.numerator();
  mpz_invert(inv.get_mpz_t(), bz.get_mpz_t(), pz.get_mpz_t());
  return field_normalize(a * Rational(mpq_class(inv)), f);
}

Rational field_neg(const Rational& a, const FieldSpec& f) {
  return field_normalize(-a, f);
}

}  // namespace difacet
