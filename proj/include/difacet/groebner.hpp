#ifndef DIFACET_GROEBNER_HPP
#define DIFACET_GROEBNER_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "difacet/polyring.hpp"

namespace difacet {

/// Ordered generating set together with its ring context.
struct Basis {
  MatrixContext ctx;
  std::vector<Polynomial> polys;

  explicit Basis(MatrixContext c) : ctx(std::move(c)) {}
  Basis(MatrixContext c, std::vector<Polynomial> ps);

  std::size_t size() const { return polys.size(); }
};

struct FailingPair {
  std::size_t i = 0;
  std::size_t j = 0;
  Polynomial remainder;
};

struct GBReport {
  bool is_gb = false;
  bool reduced = false;
  std::optional<FailingPair> failing_pair;
  std::size_t pairs_checked = 0;
  std::size_t pairs_skipped_coprime = 0;
};

/// Thrown when Buchberger completion exceeds its element cap; carries the
/// partial state reached so far.
class CompletionCapExceeded : public std::runtime_error {
 public:
  CompletionCapExceeded(std::string msg, Basis partial)
      : std::runtime_error(std::move(msg)), partial_basis(std::move(partial)) {}
  Basis partial_basis;
};

/// Remainder of multivariate division of f by B: no monomial of the result
/// is divisible by any leading monomial of B, and f minus the result lies
/// in the ideal generated by B. Ties go to the earliest basis element and
/// the maximal reducible monomial is always reduced first.
Polynomial normal_form(const Polynomial& f, const Basis& B);

/// S(f,g) = (lcm/LT(f)) f - (lcm/LT(g)) g.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MatrixContext& ctx);

/// Monic elements, no monomial of any element divisible by the leading
/// monomial of another.
bool is_reduced(const Basis& B);

/// Buchberger's criterion: every S-pair reduces to zero. Pairs with
/// coprime leading monomials are skipped. On failure reports the first
/// failing pair in (i, j) lexicographic order with its nonzero remainder.
GBReport is_groebner(const Basis& B);

/// Buchberger completion. Throws CompletionCapExceeded when more than
/// `cap` new elements are generated.
Basis buchberger(const Basis& B, std::size_t cap = 10000);

/// Unique reduced Groebner basis for the ideal of B. Precondition: B is a
/// Groebner basis.
Basis reduce_basis(const Basis& B);

}  // namespace difacet

#endif
