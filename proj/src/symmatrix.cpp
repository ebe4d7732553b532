#include "difacet/symmatrix.hpp"

#include <algorithm>
#include <numeric>

namespace difacet {

ColumnSpec ColumnSpec::combination(const Polynomial& f, const Polynomial& g, int i, int j) {
  if (i == j) throw std::invalid_argument("ColumnSpec: combination requires i != j");
  return ColumnSpec{Kind::Combination, 0, &f, &g, i, j};
}

MinorSpec MinorSpec::top_rows(std::vector<int> cols) {
  MinorSpec s;
  s.rows.resize(cols.size());
  std::iota(s.rows.begin(), s.rows.end(), 1);
  s.cols = std::move(cols);
  return s;
}

namespace {

void validate_spec(const MinorSpec& spec, const MatrixContext& ctx) {
  if (spec.rows.size() != spec.cols.size())
    throw std::invalid_argument("minor: row and column counts differ");
  for (std::size_t k = 0; k < spec.rows.size(); ++k) {
    if (spec.rows[k] < 1 || spec.rows[k] > ctx.rows)
      throw std::invalid_argument("minor: row index out of bounds");
    if (spec.cols[k] < 1 || spec.cols[k] > ctx.cols)
      throw std::invalid_argument("minor: column index out of bounds");
    if (k > 0 && spec.rows[k] <= spec.rows[k - 1])
      throw std::invalid_argument("minor: rows must be strictly increasing");
    if (k > 0 && spec.cols[k] <= spec.cols[k - 1])
      throw std::invalid_argument("minor: columns must be strictly increasing");
  }
}

// Determinant of an explicit polynomial matrix, row-major.
Polynomial det_poly_matrix(const std::vector<std::vector<Polynomial>>& m, const MatrixContext& ctx) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(ctx, Rational(1));  // empty determinant
  if (n == 1) return m[0][0];
  if (n <= 4) {
    // Leibniz expansion.
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Polynomial acc = Polynomial::zero(ctx);
    do {
      int inversions = 0;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
          if (perm[a] > perm[b]) ++inversions;
      Polynomial prod = Polynomial::constant(ctx, Rational(inversions % 2 == 0 ? 1 : -1));
      for (std::size_t r = 0; r < n; ++r) prod = mul(prod, m[r][perm[r]]);
      acc = add(acc, prod);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
  }
  // Laplace expansion along the first row.
  Polynomial acc = Polynomial::zero(ctx);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Polynomial>> sub;
    sub.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      row.reserve(n - 1);
      for (std::size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      sub.push_back(std::move(row));
    }
    Polynomial cofactor = det_poly_matrix(sub, ctx);
    Polynomial signed_entry = (c % 2 == 0) ? m[0][c] : negate(m[0][c]);
    acc = add(acc, mul(signed_entry, cofactor));
  }
  return acc;
}

Polynomial entry(const ColumnSpec& cs, int row, const MatrixContext& ctx) {
  if (cs.kind == ColumnSpec::Kind::Plain) {
    if (cs.col < 1 || cs.col > ctx.cols)
      throw std::invalid_argument("det_generalized: column index out of bounds");
    return Polynomial::variable(ctx, Variable{row, cs.col});
  }
  if (cs.i < 1 || cs.i > ctx.cols || cs.j < 1 || cs.j > ctx.cols)
    throw std::invalid_argument("det_generalized: combination column index out of bounds");
  Polynomial xi = Polynomial::variable(ctx, Variable{row, cs.i});
  Polynomial xj = Polynomial::variable(ctx, Variable{row, cs.j});
  return sub(mul(*cs.f, xi), mul(*cs.g, xj));
}

}  // namespace

Polynomial minor(const MinorSpec& spec, const MatrixContext& ctx) {
  validate_spec(spec, ctx);
  const std::size_t n = spec.rows.size();
  std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n, Polynomial::zero(ctx)));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m[r][c] = Polynomial::variable(ctx, Variable{spec.rows[r], spec.cols[c]});
  return det_poly_matrix(m, ctx);
}

Polynomial det_generalized(const std::vector<ColumnSpec>& columns, const std::vector<int>& rows,
                           const MatrixContext& ctx) {
  if (columns.size() != rows.size())
    throw std::invalid_argument("det_generalized: column and row counts differ");
  for (int r : rows)
    if (r < 1 || r > ctx.rows) throw std::invalid_argument("det_generalized: row out of bounds");
  const std::size_t n = columns.size();
  std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n, Polynomial::zero(ctx)));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m[r][c] = entry(columns[c], rows[r], ctx);
  return det_poly_matrix(m, ctx);
}

bool check_det_identity(int t, const std::vector<int>& i_cols, int j1, const MatrixContext& ctx) {
  if (t < 1 || static_cast<int>(i_cols.size()) != t)
    throw std::invalid_argument("check_det_identity: need exactly t columns i_1 < ... < i_t");
  if (ctx.rows < t + 1)
    throw std::invalid_argument("check_det_identity: context needs at least t+1 rows");
  for (int c : i_cols) {
    if (c == j1) throw std::invalid_argument("check_det_identity: j1 must differ from every i_k");
    if (c < 1 || c > ctx.cols) throw std::invalid_argument("check_det_identity: column out of bounds");
  }
  if (j1 < 1 || j1 > ctx.cols) throw std::invalid_argument("check_det_identity: j1 out of bounds");

  std::vector<int> rows_tail(t);  // rows 2..t+1
  std::iota(rows_tail.begin(), rows_tail.end(), 2);
  std::vector<int> rows_full(t + 1);  // rows 1..t+1
  std::iota(rows_full.begin(), rows_full.end(), 1);

  // Left side: first column is x[1,j1]*i1 - x[1,i1]*j1, then i2..it,
  // over rows 2..t+1.
  Polynomial f = Polynomial::variable(ctx, Variable{1, j1});
  Polynomial g = Polynomial::variable(ctx, Variable{1, i_cols[0]});
  std::vector<ColumnSpec> lhs_cols;
  lhs_cols.push_back(ColumnSpec::combination(f, g, i_cols[0], j1));
  for (int k = 1; k < t; ++k) lhs_cols.push_back(ColumnSpec::plain(i_cols[k]));
  Polynomial lhs = det_generalized(lhs_cols, rows_tail, ctx);

  // Right side: det(j1, i1, ..., it) over all rows, plus the alternating
  // sum of x[1,ir] * det(j1, i1, ..., ^ir, ..., it) over rows 2..t+1.
  std::vector<ColumnSpec> full_cols;
  full_cols.push_back(ColumnSpec::plain(j1));
  for (int c : i_cols) full_cols.push_back(ColumnSpec::plain(c));
  Polynomial rhs = det_generalized(full_cols, rows_full, ctx);

  for (int r = 2; r <= t; ++r) {
    std::vector<ColumnSpec> cols;
    cols.push_back(ColumnSpec::plain(j1));
    for (int k = 0; k < t; ++k)
      if (k != r - 1) cols.push_back(ColumnSpec::plain(i_cols[k]));
    Polynomial d = det_generalized(cols, rows_tail, ctx);
    Polynomial x = Polynomial::variable(ctx, Variable{1, i_cols[r - 1]});
    Polynomial piece = mul(x, d);
    rhs = (r % 2 == 1) ? add(rhs, piece) : sub(rhs, piece);
  }
  return lhs == rhs;
}

}  // namespace difacet
