#include "hopfkit/linalg.hpp"

#include <utility>

namespace hopfkit::linalg {

Rref rref(Matrix m) {
  Rref out;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    const Scalar inv = m[r][c].inverse();
    for (std::size_t k = c; k < cols; ++k) {
      if (!m[r][k].is_zero()) m[r][k] *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Scalar factor = m[i][c];
      for (std::size_t k = c; k < cols; ++k) {
        if (!m[r][k].is_zero()) m[i][k] -= factor * m[r][k];
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::optional<std::vector<Scalar>> solve(Matrix a, const std::vector<Scalar>& b, FieldSpec field) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
  auto red = rref(std::move(a));
  std::vector<Scalar> x(cols, Scalar(field, 0));
  for (std::size_t i = 0; i < red.rank(); ++i) {
    if (red.pivots[i] == cols) return std::nullopt;
    x[red.pivots[i]] = red.reduced[i][cols];
  }
  return x;
}

std::size_t rank(const LinMap& f) { return rref(f.to_dense()).rank(); }

std::optional<LinMap> inverse(const LinMap& f) {
  const std::size_t n = f.rows();
  if (n != f.cols()) return std::nullopt;
  auto m = f.to_dense();
  for (std::size_t i = 0; i < n; ++i) {
    m[i].resize(2 * n, Scalar(f.field(), 0));
    m[i][n + i] = Scalar(f.field(), 1);
  }
  auto red = rref(std::move(m));
  if (red.rank() < n || red.pivots[n - 1] >= n) return std::nullopt;
  Matrix inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i].assign(red.reduced[i].begin() + n, red.reduced[i].end());
  return LinMap::from_rows(f.field(), f.cod(), f.dom(), inv);
}

}  // namespace hopfkit::linalg
