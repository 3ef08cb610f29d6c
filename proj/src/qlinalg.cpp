#include "qlinalg.hpp"

#include <utility>

namespace krl::detail {

std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t p = row;
    while (p < m.rows && m(p, col) == 0) ++p;
    if (p == m.rows) continue;
    if (p != row) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(p, j), m(row, j));
    }
    mpq_class inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols; ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row || m(i, col) == 0) continue;
      mpq_class f = m(i, col);
      for (std::size_t j = col; j < m.cols; ++j) {
        if (m(row, j) != 0) m(i, j) -= f * m(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<QVec> nullspace(const QMatrix& m) {
  QMatrix r = m;
  auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<QVec> out;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    QVec v(m.cols, 0);
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, f);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<QVec> solve_any(const QMatrix& m, const QVec& rhs) {
  QMatrix aug(m.rows, m.cols + 1);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) aug(i, j) = m(i, j);
    aug(i, m.cols) = rhs[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
  QVec x(m.cols, 0);
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, m.cols);
  return x;
}

std::optional<QVec> solve_min_norm(const QMatrix& m, const QVec& rhs) {
  auto x0 = solve_any(m, rhs);
  if (!x0) return std::nullopt;
  auto ns = nullspace(m);
  if (ns.empty()) return x0;
  // Remove the component of x0 in the nullspace: solve (N^T N) y = N^T x0.
  const std::size_t k = ns.size();
  QMatrix g(k, k);
  QVec b(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      mpq_class s = 0;
      for (std::size_t c = 0; c < m.cols; ++c) {
        if (ns[i][c] != 0 && ns[j][c] != 0) s += ns[i][c] * ns[j][c];
      }
      g(i, j) = s;
      g(j, i) = s;
    }
    for (std::size_t c = 0; c < m.cols; ++c) {
      if (ns[i][c] != 0 && (*x0)[c] != 0) b[i] += ns[i][c] * (*x0)[c];
    }
  }
  auto y = solve_any(g, b);
  QVec x = *x0;
  for (std::size_t i = 0; i < k; ++i) {
    if ((*y)[i] == 0) continue;
    for (std::size_t c = 0; c < m.cols; ++c) {
      if (ns[i][c] != 0) x[c] -= (*y)[i] * ns[i][c];
    }
  }
  return x;
}

}  // namespace krl::detail
