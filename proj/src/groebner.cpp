#include "difacet/groebner.hpp"

#include <algorithm>
#include <deque>

namespace difacet {

Basis::Basis(MatrixContext c, std::vector<Polynomial> ps) : ctx(std::move(c)), polys(std::move(ps)) {
  for (const Polynomial& p : polys) {
    if (p.ctx() != ctx) throw std::invalid_argument("Basis: context mismatch among elements");
    if (p.is_zero()) throw std::invalid_argument("Basis: zero polynomial not allowed");
  }
}

Polynomial normal_form(const Polynomial& f, const Basis& B) {
  if (f.ctx() != B.ctx) throw std::invalid_argument("normal_form: context mismatch");
  const MatrixContext& ctx = B.ctx;
  Polynomial h = f;
  std::vector<Term> remainder;
  while (!h.is_zero()) {
    const Term& lt = h.leading_term();
    bool reduced_step = false;
    for (const Polynomial& b : B.polys) {
      if (mono_divides(b.leading_monomial(), lt.mono)) {
        Rational c = field_div(lt.coeff, b.leading_coeff(), ctx.field);
        Monomial q = mono_div(lt.mono, b.leading_monomial());
        h = sub(h, mul_term(b, c, q));
        reduced_step = true;
        break;
      }
    }
    if (!reduced_step) {
      remainder.push_back(lt);
      h = sub(h, Polynomial::term(ctx, lt.coeff, lt.mono));
    }
  }
  return Polynomial::from_terms(ctx, std::move(remainder));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MatrixContext& ctx) {
  if (f.ctx() != ctx || g.ctx() != ctx) throw std::invalid_argument("s_polynomial: context mismatch");
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("s_polynomial: zero input");
  Monomial l = mono_lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial left = mul_term(f, field_div(Rational(1), f.leading_coeff(), ctx.field),
                             mono_div(l, f.leading_monomial()));
  Polynomial right = mul_term(g, field_div(Rational(1), g.leading_coeff(), ctx.field),
                              mono_div(l, g.leading_monomial()));
  return sub(left, right);
}

bool is_reduced(const Basis& B) {
  for (const Polynomial& p : B.polys)
    if (!p.leading_coeff().is_one()) return false;
  for (std::size_t i = 0; i < B.polys.size(); ++i)
    for (const Term& t : B.polys[i].terms())
      for (std::size_t j = 0; j < B.polys.size(); ++j) {
        if (i == j) continue;
        if (mono_divides(B.polys[j].leading_monomial(), t.mono)) return false;
      }
  return true;
}

GBReport is_groebner(const Basis& B) {
  if (B.polys.empty()) throw std::invalid_argument("is_groebner: empty basis");
  GBReport rep;
  rep.is_gb = true;
  for (std::size_t i = 0; i < B.polys.size() && rep.is_gb; ++i) {
    for (std::size_t j = i + 1; j < B.polys.size(); ++j) {
      if (mono_coprime(B.polys[i].leading_monomial(), B.polys[j].leading_monomial())) {
        ++rep.pairs_skipped_coprime;
        continue;
      }
      ++rep.pairs_checked;
      Polynomial s = s_polynomial(B.polys[i], B.polys[j], B.ctx);
      Polynomial r = normal_form(s, B);
      if (!r.is_zero()) {
        rep.is_gb = false;
        rep.failing_pair = FailingPair{i, j, std::move(r)};
        break;
      }
    }
  }
  rep.reduced = rep.is_gb && is_reduced(B);
  return rep;
}

Basis buchberger(const Basis& B, std::size_t cap) {
  if (B.polys.empty()) throw std::invalid_argument("buchberger: empty basis");
  Basis G = B;
  std::deque<std::pair<std::size_t, std::size_t>> queue;
  for (std::size_t i = 0; i < G.polys.size(); ++i)
    for (std::size_t j = i + 1; j < G.polys.size(); ++j) queue.push_back({i, j});
  std::size_t generated = 0;
  while (!queue.empty()) {
    auto [i, j] = queue.front();
    queue.pop_front();
    if (mono_coprime(G.polys[i].leading_monomial(), G.polys[j].leading_monomial())) continue;
    Polynomial r = normal_form(s_polynomial(G.polys[i], G.polys[j], G.ctx), G);
    if (r.is_zero()) continue;
    if (++generated > cap)
      throw CompletionCapExceeded(
          "buchberger: completion exceeded cap of " + std::to_string(cap) + " generated elements",
          G);
    G.polys.push_back(std::move(r));
    std::size_t k = G.polys.size() - 1;
    for (std::size_t a = 0; a < k; ++a) queue.push_back({a, k});
  }
  return G;
}

Basis reduce_basis(const Basis& B) {
  GBReport rep = is_groebner(B);
  if (!rep.is_gb) throw std::invalid_argument("reduce_basis: input is not a Groebner basis");
  const MatrixContext& ctx = B.ctx;
  // Make monic.
  std::vector<Polynomial> polys;
  for (const Polynomial& p : B.polys)
    polys.push_back(scale(p, field_div(Rational(1), p.leading_coeff(), ctx.field)));
  // Drop elements whose leading monomial is divisible by another's (and
  // exact duplicates: their leading monomials divide each other).
  std::vector<bool> keep(polys.size(), true);
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (!keep[i]) continue;
    for (std::size_t j = 0; j < polys.size(); ++j) {
      if (i == j || !keep[j]) continue;
      const Monomial& mi = polys[i].leading_monomial();
      const Monomial& mj = polys[j].leading_monomial();
      if (mono_divides(mj, mi) && !(mi == mj && j > i)) {
        keep[i] = false;
        break;
      }
    }
  }
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < polys.size(); ++i)
    if (keep[i]) minimal.push_back(polys[i]);
  // Fully inter-reduce each element against the others.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      Basis others(ctx);
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.polys.push_back(minimal[j]);
      Polynomial reduced = others.polys.empty() ? minimal[i] : normal_form(minimal[i], others);
      if (reduced != minimal[i]) {
        minimal[i] = std::move(reduced);
        changed = true;
      }
    }
  }
  std::sort(minimal.begin(), minimal.end(), [&ctx](const Polynomial& a, const Polynomial& b) {
    return compare_monomials(a.leading_monomial(), b.leading_monomial(), ctx) == Ordering::Greater;
  });
  return Basis(ctx, std::move(minimal));
}

}  // namespace difacet
