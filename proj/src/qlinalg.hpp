#pragma once

// Exact dense linear algebra over the rationals.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace krl::detail {

using QVec = std::vector<mpq_class>;

struct QMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<mpq_class> data;

  QMatrix() = default;
  QMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  mpq_class& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const mpq_class& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(QMatrix& m);

// Basis of {c : M c = 0}.
std::vector<QVec> nullspace(const QMatrix& m);

// Some solution of M c = rhs with free variables set to zero, or nullopt if inconsistent.
std::optional<QVec> solve_any(const QMatrix& m, const QVec& rhs);

// The solution of M c = rhs of minimal Euclidean norm, or nullopt if inconsistent.
std::optional<QVec> solve_min_norm(const QMatrix& m, const QVec& rhs);

}  // namespace krl::detail
