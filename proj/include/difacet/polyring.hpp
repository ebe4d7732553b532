#ifndef DIFACET_POLYRING_HPP
#define DIFACET_POLYRING_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "difacet/rational.hpp"

namespace difacet {

/// One indeterminate x[row,col] of the generic matrix X. 1-based indices.
struct Variable {
  int row = 0;
  int col = 0;

  bool operator==(const Variable& o) const = default;
  // Position order: x[1,1] precedes x[1,2] precedes ... precedes x[m,n].
  // The variable at the earlier position is the GREATER one in the
  // monomial order.
  auto operator<=>(const Variable& o) const = default;
  std::string to_string() const;
};

/// Ambient ring data: an m x n matrix of indeterminates over a field.
struct MatrixContext {
  int rows = 0;
  int cols = 0;
  FieldSpec field = FieldSpec::rationals();

  MatrixContext() = default;
  MatrixContext(int m, int n, FieldSpec f = FieldSpec::rationals());

  bool contains(const Variable& v) const {
    return v.row >= 1 && v.row <= rows && v.col >= 1 && v.col <= cols;
  }
  bool operator==(const MatrixContext& o) const {
    return rows == o.rows && cols == o.cols && field == o.field;
  }
  bool operator!=(const MatrixContext& o) const { return !(*this == o); }
  std::string to_string() const;
};

/// Product of variable powers. Factors are kept strictly increasing in
/// position order (so the most significant variable comes first) with
/// positive exponents; the empty product is 1.
class Monomial {
 public:
  using Factor = std::pair<Variable, int>;

  Monomial() = default;
  static Monomial one() { return Monomial(); }
  static Monomial variable(Variable v, int exp = 1);
  /// Canonicalizes an arbitrary factor list (sorts, merges, drops zeros).
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  int degree() const;
  int exponent_of(const Variable& v) const;

  bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
};

enum class Ordering { Less, Equal, Greater };

/// The paper's lexicographic order: exponent vectors compared in the
/// variable order x[1,1] > x[1,2] > ... > x[1,n] > x[2,1] > ... > x[m,n].
Ordering compare_monomials(const Monomial& a, const Monomial& b, const MatrixContext& ctx);

bool monomial_less(const Monomial& a, const Monomial& b, const MatrixContext& ctx);

Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_div(const Monomial& b, const Monomial& a);  // b / a, requires a | b
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

struct Term {
  Rational coeff;
  Monomial mono;
  bool operator==(const Term& o) const { return coeff == o.coeff && mono == o.mono; }
};

/// Sparse multivariate polynomial in canonical form: terms strictly
/// decreasing in the monomial order, no zero coefficients. The context is
/// part of the value; mixing contexts throws.
class Polynomial {
 public:
  explicit Polynomial(MatrixContext ctx) : ctx_(std::move(ctx)) {}

  static Polynomial zero(const MatrixContext& ctx) { return Polynomial(ctx); }
  static Polynomial constant(const MatrixContext& ctx, const Rational& c);
  static Polynomial variable(const MatrixContext& ctx, Variable v);
  static Polynomial term(const MatrixContext& ctx, const Rational& c, const Monomial& m);
  /// Canonicalizes an arbitrary term list (sorts, merges, drops zeros,
  /// validates variables against ctx).
  static Polynomial from_terms(const MatrixContext& ctx, std::vector<Term> terms);

  const MatrixContext& ctx() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  int total_degree() const;

  /// Maximal term under the lex order. Throws on the zero polynomial.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Rational& leading_coeff() const { return leading_term().coeff; }

  bool operator==(const Polynomial& o) const { return ctx_ == o.ctx_ && terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  friend Polynomial add(const Polynomial&, const Polynomial&);
  friend Polynomial mul(const Polynomial&, const Polynomial&);
  MatrixContext ctx_;
  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial sub(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial negate(const Polynomial& p);
Polynomial mul_term(const Polynomial& p, const Rational& c, const Monomial& m);
Polynomial scale(const Polynomial& p, const Rational& c);

/// Convenience accessors mirroring the operation names used elsewhere.
inline std::pair<Rational, Monomial> leading_term(const Polynomial& p) {
  const Term& t = p.leading_term();
  return {t.coeff, t.mono};
}

/// Text round trip. Renders like "x[1,1]*x[2,2] - x[1,2]*x[2,1]" or
/// "3/2*x[1,3]^2 + 5"; the parser accepts the same grammar (and a Unicode
/// minus sign).
std::string render_polynomial(const Polynomial& p);
Polynomial parse_polynomial(const MatrixContext& ctx, const std::string& text);

}  // namespace difacet

#endif
