#pragma once

// Small exact linear algebra over Q: dense helpers for geometry at desk
// scale, and a sparse incremental row-echelon form for the graded ring.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "newtonspec/numerics.hpp"

namespace newtonspec::linalg {

using Vector = std::vector<Rat>;
using Matrix = std::vector<Vector>;  // row-major

std::size_t rank(Matrix rows);

Rat determinant(Matrix m);

/// Solves A x = b for A with full column rank. Returns nullopt when the system
/// is inconsistent or A is column-rank deficient.
std::optional<Vector> solve_unique(const Matrix& a, const Vector& b);

/// Row-echelon form over sparse rows, pivoting on the smallest column index.
///
/// The set of pivot columns does not depend on insertion order: it is the
/// greedy left-to-right column basis of the row space. Callers control which
/// columns end up as pivots by choosing the column numbering.
class SparseEchelon {
 public:
  using Row = std::map<std::size_t, Rat>;

  explicit SparseEchelon(std::size_t ncols = 0) : ncols_(ncols) {}

  /// Reduces row against the current pivots and keeps it if nonzero.
  /// Returns true when the rank grew.
  bool insert(Row row);

  /// Residual of row after eliminating every pivot column. Unique for a given
  /// row space and pivot set, and supported on non-pivot columns only.
  Row reduce(Row row) const;

  std::size_t rank() const noexcept { return pivots_.size(); }
  std::size_t ncols() const noexcept { return ncols_; }
  bool is_pivot(std::size_t col) const { return pivots_.count(col) != 0; }
  std::vector<std::size_t> pivot_columns() const;
  std::vector<std::size_t> free_columns() const;

 private:
  std::size_t ncols_;
  std::map<std::size_t, Row> pivots_;  // pivot column -> row with leading 1 there
};

}  // namespace newtonspec::linalg
