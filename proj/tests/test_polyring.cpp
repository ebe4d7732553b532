#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "difacet/polyring.hpp"

using namespace difacet;

namespace {

MatrixContext ctx2x3() { return MatrixContext(2, 3, FieldSpec::rationals()); }

Polynomial var(const MatrixContext& ctx, int r, int c) {
  return Polynomial::variable(ctx, Variable{r, c});
}

// det(i, j) in a 2-row context.
Polynomial det2(const MatrixContext& ctx, int i, int j) {
  return sub(mul(var(ctx, 1, i), var(ctx, 2, j)), mul(var(ctx, 1, j), var(ctx, 2, i)));
}

Polynomial random_poly(std::mt19937_64& rng, const MatrixContext& ctx, int max_terms = 4) {
  std::uniform_int_distribution<int> dterms(0, max_terms);
  std::uniform_int_distribution<int> dr(1, ctx.rows), dc(1, ctx.cols), dexp(1, 2), dfac(0, 3);
  std::uniform_int_distribution<long> dnum(-5, 5);
  std::uniform_int_distribution<long> dden(1, 4);
  std::vector<Term> ts;
  int k = dterms(rng);
  for (int t = 0; t < k; ++t) {
    std::vector<Monomial::Factor> fs;
    int fc = dfac(rng);
    for (int f = 0; f < fc; ++f) fs.push_back({Variable{dr(rng), dc(rng)}, dexp(rng)});
    ts.push_back({Rational(dnum(rng), dden(rng)), Monomial::from_factors(std::move(fs))});
  }
  return Polynomial::from_terms(ctx, std::move(ts));
}

}  // namespace

TEST_CASE("monomial order is the matrix lex order") {
  MatrixContext ctx = ctx2x3();
  Monomial x11 = Monomial::variable({1, 1});
  Monomial x12 = Monomial::variable({1, 2});
  CHECK(compare_monomials(x11, x12, ctx) == Ordering::Greater);
  CHECK(compare_monomials(x12, x12, ctx) == Ordering::Equal);
  // x12*x21 vs x11*x23: the second owns the greatest variable x11.
  Monomial a = Monomial::from_factors({{{1, 2}, 1}, {{2, 1}, 1}});
  Monomial b = Monomial::from_factors({{{1, 1}, 1}, {{2, 3}, 1}});
  CHECK(compare_monomials(a, b, ctx) == Ordering::Less);
  // Row-major significance: every row-1 variable beats every row-2 one.
  CHECK(compare_monomials(Monomial::variable({1, 3}), Monomial::variable({2, 1}), ctx) ==
        Ordering::Greater);
  CHECK_THROWS(compare_monomials(Monomial::variable({3, 1}), x11, ctx));
}

TEST_CASE("order is total and multiplicative on random monomials") {
  MatrixContext ctx(3, 4);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dr(1, 3), dc(1, 4), dexp(1, 3), dfac(0, 4);
  auto rand_mono = [&]() {
    std::vector<Monomial::Factor> fs;
    int k = dfac(rng);
    for (int f = 0; f < k; ++f) fs.push_back({Variable{dr(rng), dc(rng)}, dexp(rng)});
    return Monomial::from_factors(std::move(fs));
  };
  for (int trial = 0; trial < 300; ++trial) {
    Monomial a = rand_mono(), b = rand_mono(), c = rand_mono();
    Ordering ab = compare_monomials(a, b, ctx);
    Ordering ba = compare_monomials(b, a, ctx);
    CHECK((ab == Ordering::Equal) == (a == b));
    if (ab == Ordering::Greater) CHECK(ba == Ordering::Less);
    // transitivity
    if (ab != Ordering::Less && compare_monomials(b, c, ctx) != Ordering::Less)
      CHECK(compare_monomials(a, c, ctx) != Ordering::Less);
    // multiplicative
    if (ab == Ordering::Greater)
      CHECK(compare_monomials(mono_mul(a, c), mono_mul(b, c), ctx) == Ordering::Greater);
  }
}

TEST_CASE("add") {
  MatrixContext ctx = ctx2x3();
  Polynomial p = det2(ctx, 1, 2);
  CHECK(add(p, Polynomial::zero(ctx)) == p);
  CHECK(add(p, negate(p)).is_zero());
  // (x11 x22 - x12 x21) + x12 x21 = x11 x22
  Polynomial q = mul(var(ctx, 1, 2), var(ctx, 2, 1));
  CHECK(add(p, q) == mul(var(ctx, 1, 1), var(ctx, 2, 2)));
  CHECK_THROWS(add(p, Polynomial::zero(MatrixContext(2, 4))));
}

TEST_CASE("mul") {
  MatrixContext ctx = ctx2x3();
  Polynomial p = det2(ctx, 1, 2);
  CHECK(mul(p, Polynomial::constant(ctx, Rational(1))) == p);
  Polynomial x = var(ctx, 1, 1);
  CHECK(mul(x, x) == Polynomial::term(ctx, Rational(1), Monomial::variable({1, 1}, 2)));
  // (x11 - x12)(x11 + x12) = x11^2 - x12^2
  Polynomial d = sub(var(ctx, 1, 1), var(ctx, 1, 2));
  Polynomial s = add(var(ctx, 1, 1), var(ctx, 1, 2));
  Polynomial expect = sub(Polynomial::term(ctx, Rational(1), Monomial::variable({1, 1}, 2)),
                          Polynomial::term(ctx, Rational(1), Monomial::variable({1, 2}, 2)));
  CHECK(mul(d, s) == expect);
}

TEST_CASE("leading term") {
  MatrixContext ctx = ctx2x3();
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) {
      auto [c, m] = leading_term(det2(ctx, i, j));
      CHECK(c == Rational(1));
      CHECK(m == Monomial::from_factors({{{1, i}, 1}, {{2, j}, 1}}));
    }
  CHECK(leading_term(Polynomial::constant(ctx, Rational(5))) ==
        std::pair<Rational, Monomial>{Rational(5), Monomial::one()});
  // x13 * det(1,2) has leading term x11 x13 x22
  Polynomial p = mul(var(ctx, 1, 3), det2(ctx, 1, 2));
  CHECK(leading_term(p).second == Monomial::from_factors({{{1, 1}, 1}, {{1, 3}, 1}, {{2, 2}, 1}}));
  CHECK(leading_term(p).first == Rational(1));
  CHECK_THROWS_AS(Polynomial::zero(ctx).leading_term(), std::domain_error);
}

TEST_CASE("ring axioms on random triples") {
  MatrixContext ctx(2, 3);
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 120; ++trial) {
    Polynomial p = random_poly(rng, ctx), q = random_poly(rng, ctx), r = random_poly(rng, ctx);
    CHECK(add(p, q) == add(q, p));
    CHECK(add(add(p, q), r) == add(p, add(q, r)));
    CHECK(mul(p, q) == mul(q, p));
    CHECK(mul(mul(p, q), r) == mul(p, mul(q, r)));
    CHECK(mul(p, add(q, r)) == add(mul(p, q), mul(p, r)));
  }
}

TEST_CASE("leading term of a product multiplies leading terms") {
  MatrixContext ctx(2, 3);
  std::mt19937_64 rng(5);
  int done = 0;
  while (done < 100) {
    Polynomial p = random_poly(rng, ctx), q = random_poly(rng, ctx);
    if (p.is_zero() || q.is_zero()) continue;
    ++done;
    auto [cp, mp] = leading_term(p);
    auto [cq, mq] = leading_term(q);
    auto [cpq, mpq] = leading_term(mul(p, q));
    CHECK(cpq == cp * cq);
    CHECK(mpq == mono_mul(mp, mq));
  }
}

TEST_CASE("canonical form is idempotent") {
  MatrixContext ctx(2, 3);
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial p = random_poly(rng, ctx);
    CHECK(Polynomial::from_terms(ctx, p.terms()) == p);
  }
}

TEST_CASE("render and parse") {
  MatrixContext ctx = ctx2x3();
  Polynomial p = det2(ctx, 1, 2);
  CHECK(render_polynomial(p) == "x[1,1]*x[2,2] - x[1,2]*x[2,1]");
  CHECK(parse_polynomial(ctx, "x[1,1]*x[2,2] - x[1,2]*x[2,1]") == p);
  CHECK(parse_polynomial(ctx, "x[1,1]*x[2,2] \xE2\x88\x92 x[1,2]*x[2,1]") == p);  // unicode minus
  CHECK(render_polynomial(Polynomial::zero(ctx)) == "0");
  CHECK(parse_polynomial(ctx, "0").is_zero());
  Polynomial q = Polynomial::from_terms(
      ctx, {{Rational(-3, 2), Monomial::variable({1, 2}, 3)}, {Rational(7), Monomial::one()}});
  CHECK(parse_polynomial(ctx, render_polynomial(q)) == q);
  CHECK(render_polynomial(q) == "-3/2*x[1,2]^3 + 7");
  CHECK_THROWS(parse_polynomial(ctx, "x[9,9]"));
  CHECK_THROWS(parse_polynomial(ctx, "x[1,1] +"));
}

TEST_CASE("prime field coefficients") {
  MatrixContext ctx(2, 2, FieldSpec::prime(5));
  Polynomial p = Polynomial::from_terms(ctx, {{Rational(7), Monomial::variable({1, 1})}});
  CHECK(leading_term(p).first == Rational(2));
  Polynomial q = Polynomial::from_terms(ctx, {{Rational(3), Monomial::variable({1, 1})}});
  CHECK(add(p, q).is_zero());
}
