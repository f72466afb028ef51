#include "chenlie/linalg.hpp"

#include <utility>

#include "chenlie/error.hpp"

namespace chenlie {

bool RowReducer::add(SparseRow row) {
  auto it = row.begin();
  while (it != row.end()) {
    const std::size_t col = it->first;
    auto piv = pivots_.find(col);
    if (piv == pivots_.end()) {
      ++it;
      continue;
    }
    const Rational f = it->second;
    for (const auto& [c, v] : piv->second) {
      auto [e, inserted] = row.emplace(c, 0);
      e->second -= f * v;
      if (e->second == 0) row.erase(e);
    }
    it = row.upper_bound(col);
  }
  if (row.empty()) return false;
  const Rational lead = row.begin()->second;
  for (auto& [c, v] : row) v /= lead;
  const std::size_t col = row.begin()->first;
  pivots_.emplace(col, std::move(row));
  return true;
}

std::size_t rank(const std::vector<NcPoly>& family) {
  std::map<Word, std::size_t> column;
  RowReducer reducer;
  for (const auto& p : family) {
    SparseRow row;
    for (const auto& [w, c] : p.terms()) {
      auto [it, inserted] = column.emplace(w, column.size());
      row.emplace(it->second, c.rational());
    }
    reducer.add(std::move(row));
  }
  return reducer.rank();
}

Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

Matrix inverse(Matrix m) {
  const std::size_t n = m.size();
  Matrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw DomainError("singular matrix");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    const Rational p = m[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      m[col][c] /= p;
      inv[col][c] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        m[r][c] -= f * m[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

}  // namespace chenlie
