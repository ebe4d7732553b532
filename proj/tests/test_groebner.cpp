#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "difacet/groebner.hpp"
#include "difacet/symmatrix.hpp"

using namespace difacet;

namespace {

Polynomial det2(const MatrixContext& ctx, int i, int j) {
  return minor(MinorSpec::top_rows({i, j}), ctx);
}

Basis all_minors(const MatrixContext& ctx) {
  Basis b(ctx);
  std::vector<int> cols(static_cast<std::size_t>(ctx.rows));
  for (int i = 0; i < ctx.rows; ++i) cols[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    b.polys.push_back(minor(MinorSpec::top_rows(cols), ctx));
    int t = ctx.rows - 1;
    while (t >= 0 && cols[static_cast<std::size_t>(t)] == ctx.cols - (ctx.rows - 1 - t)) --t;
    if (t < 0) break;
    ++cols[static_cast<std::size_t>(t)];
    for (std::size_t s = static_cast<std::size_t>(t) + 1; s < cols.size(); ++s)
      cols[s] = cols[s - 1] + 1;
  }
  return b;
}

Polynomial random_poly(std::mt19937_64& rng, const MatrixContext& ctx) {
  std::uniform_int_distribution<int> dterms(1, 4), dr(1, ctx.rows), dc(1, ctx.cols), dexp(1, 2),
      dfac(0, 3);
  std::uniform_int_distribution<long> dnum(-4, 4);
  std::vector<Term> ts;
  int k = dterms(rng);
  for (int t = 0; t < k; ++t) {
    std::vector<Monomial::Factor> fs;
    int fc = dfac(rng);
    for (int f = 0; f < fc; ++f) fs.push_back({Variable{dr(rng), dc(rng)}, dexp(rng)});
    ts.push_back({Rational(dnum(rng)), Monomial::from_factors(std::move(fs))});
  }
  return Polynomial::from_terms(ctx, std::move(ts));
}

}  // namespace

TEST_CASE("normal form basics") {
  MatrixContext ctx(2, 3);
  Polynomial d12 = det2(ctx, 1, 2);
  Basis single(ctx, {d12});
  CHECK(normal_form(d12, single).is_zero());
  Basis empty(ctx);
  CHECK(normal_form(d12, empty) == d12);
  CHECK_THROWS(normal_form(Polynomial::zero(MatrixContext(3, 3)), single));
}

TEST_CASE("the division trace of the {det13, det23} example") {
  MatrixContext ctx(2, 3);
  Polynomial d13 = det2(ctx, 1, 3), d23 = det2(ctx, 2, 3);
  Basis b(ctx, {d13, d23});
  Polynomial f = mul(Polynomial::variable(ctx, {1, 3}), det2(ctx, 1, 2));
  // Leading monomial x11 x13 x22 is divisible by neither x11 x23 nor x12 x23.
  Polynomial nf = normal_form(f, b);
  CHECK(!nf.is_zero());
  CHECK(nf == f);
}

TEST_CASE("s-polynomial") {
  MatrixContext ctx(2, 3);
  Polynomial d13 = det2(ctx, 1, 3), d23 = det2(ctx, 2, 3);
  CHECK(s_polynomial(d13, d13, ctx).is_zero());
  Polynomial s = s_polynomial(d13, d23, ctx);
  Polynomial expect = mul(Polynomial::variable(ctx, {1, 3}), det2(ctx, 1, 2));
  CHECK((s == expect || s == negate(expect)));
  CHECK_THROWS(s_polynomial(Polynomial::zero(ctx), d13, ctx));
}

TEST_CASE("coprime leading monomials reduce to zero") {
  MatrixContext ctx(2, 4);
  std::mt19937_64 rng(11);
  int done = 0;
  while (done < 40) {
    Polynomial f = random_poly(rng, ctx), g = random_poly(rng, ctx);
    if (f.is_zero() || g.is_zero()) continue;
    if (!mono_coprime(f.leading_monomial(), g.leading_monomial())) continue;
    ++done;
    Basis b(ctx, {f, g});
    CHECK(normal_form(s_polynomial(f, g, ctx), b).is_zero());
  }
}

TEST_CASE("is_groebner on pinned small cases") {
  MatrixContext ctx(2, 3);
  // all three 2-minors of the 2x3 generic matrix
  Basis full = all_minors(ctx);
  GBReport rep = is_groebner(full);
  CHECK(rep.is_gb);
  CHECK(rep.reduced);

  Basis bad(ctx, {det2(ctx, 1, 3), det2(ctx, 2, 3)});
  GBReport rep2 = is_groebner(bad);
  CHECK(!rep2.is_gb);
  REQUIRE(rep2.failing_pair.has_value());
  CHECK(rep2.failing_pair->i == 0);
  CHECK(rep2.failing_pair->j == 1);
  CHECK(!rep2.failing_pair->remainder.is_zero());

  Basis single(ctx, {det2(ctx, 1, 2)});
  CHECK(is_groebner(single).is_gb);
  CHECK_THROWS(is_groebner(Basis(ctx)));
}

TEST_CASE("is_groebner verdict is independent of listing order") {
  MatrixContext ctx(2, 4);
  Basis b(ctx, {det2(ctx, 1, 3), det2(ctx, 2, 3), det2(ctx, 1, 4)});
  GBReport fwd = is_groebner(b);
  Basis rev(ctx, {det2(ctx, 1, 4), det2(ctx, 2, 3), det2(ctx, 1, 3)});
  CHECK(fwd.is_gb == is_groebner(rev).is_gb);
}

TEST_CASE("buchberger completes the {det13, det23} example") {
  MatrixContext ctx(2, 3);
  Basis b(ctx, {det2(ctx, 1, 3), det2(ctx, 2, 3)});
  Basis done = buchberger(b);
  CHECK(is_groebner(done).is_gb);
  CHECK(done.size() == 3);
  // The added element has leading monomial x11 x13 x22.
  Monomial lm = done.polys.back().leading_monomial();
  CHECK(lm == Monomial::from_factors({{{1, 1}, 1}, {{1, 3}, 1}, {{2, 2}, 1}}));
  // Completion of a GB adds no leading monomials.
  Basis full = all_minors(MatrixContext(3, 4));
  CHECK(buchberger(full).size() == full.size());
}

TEST_CASE("buchberger cap raises with partial state") {
  MatrixContext ctx(2, 3);
  Basis b(ctx, {det2(ctx, 1, 3), det2(ctx, 2, 3)});
  try {
    buchberger(b, 0);
    FAIL("expected CompletionCapExceeded");
  } catch (const CompletionCapExceeded& e) {
    CHECK(e.partial_basis.size() == 2);
  }
}

TEST_CASE("reduce_basis") {
  MatrixContext ctx(2, 3);
  Basis full = all_minors(ctx);
  Basis red = reduce_basis(full);
  CHECK(red.size() == full.size());
  CHECK(is_reduced(red));
  // idempotent
  Basis red2 = reduce_basis(red);
  CHECK(red2.polys == red.polys);
  // duplicate element gets dropped
  Basis dup = full;
  dup.polys.push_back(full.polys.front());
  CHECK(reduce_basis(dup).size() == full.size());
  // completion of the non-GB pair inter-reduces to 3 monic elements
  Basis done = buchberger(Basis(ctx, {det2(ctx, 1, 3), det2(ctx, 2, 3)}));
  Basis r3 = reduce_basis(done);
  CHECK(r3.size() == 3);
  for (const Polynomial& p : r3.polys) CHECK(p.leading_coeff().is_one());
  // non-GB input is a precondition error
  CHECK_THROWS(reduce_basis(Basis(ctx, {det2(ctx, 1, 3), det2(ctx, 2, 3)})));
}

TEST_CASE("membership via completion on random combinations") {
  MatrixContext ctx(2, 3);
  std::mt19937_64 rng(23);
  Basis gens(ctx, {det2(ctx, 1, 3), det2(ctx, 2, 3)});
  Basis gb = buchberger(gens);
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial combo = Polynomial::zero(ctx);
    for (const Polynomial& g : gens.polys) combo = add(combo, mul(random_poly(rng, ctx), g));
    CHECK(normal_form(combo, gb).is_zero());
  }
  // and something outside the ideal
  CHECK(!normal_form(Polynomial::variable(ctx, {1, 1}), gb).is_zero());
}

TEST_CASE("determinantal benchmark across small shapes") {
  for (auto [m, n] : {std::pair<int, int>{2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}) {
    Basis b = all_minors(MatrixContext(m, n));
    GBReport rep = is_groebner(b);
    CHECK(rep.is_gb);
    CHECK(rep.reduced);
  }
}

TEST_CASE("prime field GB agrees on the benchmark") {
  Basis b = all_minors(MatrixContext(3, 4, FieldSpec::prime(13)));
  GBReport rep = is_groebner(b);
  CHECK(rep.is_gb);
  CHECK(rep.reduced);
}
