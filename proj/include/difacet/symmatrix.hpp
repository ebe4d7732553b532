#ifndef DIFACET_SYMMATRIX_HPP
#define DIFACET_SYMMATRIX_HPP

#include <vector>

#include "difacet/polyring.hpp"

namespace difacet {

/// A column of a symbolic determinant: either column j of the generic
/// matrix X, or the combination column f*i - g*j whose row-r entry is
/// f*x[r,i] - g*x[r,j].
struct ColumnSpec {
  enum class Kind { Plain, Combination };
  Kind kind = Kind::Plain;
  int col = 0;                         // Plain
  const Polynomial* f = nullptr;       // Combination (no ownership)
  const Polynomial* g = nullptr;
  int i = 0, j = 0;

  static ColumnSpec plain(int j) { return ColumnSpec{Kind::Plain, j, nullptr, nullptr, 0, 0}; }
  static ColumnSpec combination(const Polynomial& f, const Polynomial& g, int i, int j);
};

/// Square submatrix selector: strictly increasing rows and columns of
/// equal count.
struct MinorSpec {
  std::vector<int> rows;
  std::vector<int> cols;

  /// Rows 1..cols.size() of the generic matrix.
  static MinorSpec top_rows(std::vector<int> cols);
};

/// Exact determinant of the selected submatrix of X. Leibniz expansion for
/// size <= 4, first-row Laplace above.
Polynomial minor(const MinorSpec& spec, const MatrixContext& ctx);

/// Determinant of a matrix whose columns may be combination columns; the
/// columns are taken in the given order (no sorting, signs matter).
Polynomial det_generalized(const std::vector<ColumnSpec>& columns, const std::vector<int>& rows,
                           const MatrixContext& ctx);

/// Verifies the determinant identity
///   det(x[1,j1]*i1 - x[1,i1]*j1, i2, ..., it)_{2..t+1}
///     = det(j1, i1, ..., it)
///       + sum_{2<=r<=t} (-1)^(r+1) x[1,ir] det(j1, i1, ..., ^ir, ..., it)_{2..t+1}
/// as an exact polynomial identity.
bool check_det_identity(int t, const std::vector<int>& i_cols, int j1, const MatrixContext& ctx);

}  // namespace difacet

#endif
