#include "newtonspec/linalg.hpp"

#include <utility>

namespace newtonspec::linalg {

namespace {

// In-place Gaussian elimination; returns the pivot column of each echelon row.
std::vector<std::size_t> eliminate(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t ncols = m.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    for (std::size_t r = row + 1; r < m.size(); ++r) {
      if (m[r][col] == 0) continue;
      Rat factor = m[r][col] / m[row][col];
      for (std::size_t c = col; c < ncols; ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(Matrix rows) { return eliminate(rows).size(); }

Rat determinant(Matrix m) {
  const std::size_t n = m.size();
  Rat det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && m[sel][col] == 0) ++sel;
    if (sel == n) return Rat(0);
    if (sel != col) {
      std::swap(m[sel], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rat factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

std::optional<Vector> solve_unique(const Matrix& a, const Vector& b) {
  if (a.empty()) return std::nullopt;
  const std::size_t nrows = a.size();
  const std::size_t nvars = a.front().size();
  Matrix aug(nrows, Vector(nvars + 1));
  for (std::size_t r = 0; r < nrows; ++r) {
    for (std::size_t c = 0; c < nvars; ++c) aug[r][c] = a[r][c];
    aug[r][nvars] = b[r];
  }
  auto pivots = eliminate(aug);
  if (!pivots.empty() && pivots.back() == nvars) return std::nullopt;  // inconsistent
  if (pivots.size() != nvars) return std::nullopt;
  Vector x(nvars);
  for (std::size_t i = nvars; i-- > 0;) {
    Rat acc = aug[i][nvars];
    for (std::size_t c = i + 1; c < nvars; ++c) acc -= aug[i][c] * x[c];
    x[i] = acc / aug[i][i];
  }
  return x;
}

SparseEchelon::Row SparseEchelon::reduce(Row row) const {
  // Pivot rows only touch columns at or right of their pivot, so one
  // ascending sweep clears every pivot column.
  auto it = row.begin();
  while (it != row.end()) {
    auto piv = pivots_.find(it->first);
    if (piv == pivots_.end()) {
      ++it;
      continue;
    }
    const std::size_t col = it->first;
    Rat factor = it->second;
    for (const auto& [c, v] : piv->second) {
      auto entry = row.try_emplace(c, 0).first;
      entry->second -= factor * v;
      if (entry->second == 0) row.erase(entry);
    }
    it = row.upper_bound(col);
  }
  return row;
}

bool SparseEchelon::insert(Row row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  const std::size_t lead = row.begin()->first;
  Rat inv = 1 / row.begin()->second;
  for (auto& [c, v] : row) v *= inv;
  pivots_.emplace(lead, std::move(row));
  return true;
}

std::vector<std::size_t> SparseEchelon::pivot_columns() const {
  std::vector<std::size_t> out;
  for (const auto& [c, r] : pivots_) out.push_back(c);
  return out;
}

std::vector<std::size_t> SparseEchelon::free_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < ncols_; ++c)
    if (!pivots_.count(c)) out.push_back(c);
  return out;
}

}  // namespace newtonspec::linalg
