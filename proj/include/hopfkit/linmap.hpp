#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hopfkit/kernels.hpp"
#include "hopfkit/scalar.hpp"

namespace hopfkit {

/// Ordered list of tensor factor dimensions. The empty list is the unit K.
class TensorShape {
 public:
  TensorShape() = default;
  TensorShape(std::initializer_list<std::size_t> factors);
  explicit TensorShape(std::vector<std::size_t> factors);

  /// [n, n, ..., n] with k factors.
  static TensorShape power(std::size_t n, std::size_t k);

  const std::vector<std::size_t>& factors() const noexcept { return factors_; }
  std::size_t rank() const noexcept { return factors_.size(); }
  std::size_t total() const noexcept;

  TensorShape operator+(const TensorShape& rhs) const;  // concatenation
  friend bool operator==(const TensorShape&, const TensorShape&) = default;

  std::string to_string() const;

 private:
  std::vector<std::size_t> factors_;
};

/// First point where two maps disagree.
struct Witness {
  bool shape_mismatch = false;
  std::size_t row = 0;
  std::size_t col = 0;
  std::optional<Scalar> lhs;
  std::optional<Scalar> rhs;
  std::string detail;

  std::string to_string() const;
};

/// Linear map between tensor powers of based spaces. Entry (r, c) is the
/// coefficient of basis vector r of the codomain in the image of basis vector c
/// of the domain. A basis vector e_{i1}⊗...⊗e_{ik} of shape [n1..nk] has index
/// ((i1*n2 + i2)*n3 + ...) (leftmost factor most significant).
class LinMap {
 public:
  using Entry = kernels::Entry;

  /// Zero map.
  LinMap(FieldSpec field, TensorShape dom, TensorShape cod);

  /// Dense row-major construction; rows.size() must equal cod.total().
  static LinMap from_rows(FieldSpec field, TensorShape dom, TensorShape cod,
                          const std::vector<std::vector<Scalar>>& rows);
  static LinMap from_ints(FieldSpec field, TensorShape dom, TensorShape cod,
                          const std::vector<std::vector<std::int64_t>>& rows);
  /// Columns given as (row, value) lists; zeros are dropped, rows are sorted.
  static LinMap from_columns(FieldSpec field, TensorShape dom, TensorShape cod,
                             std::vector<std::vector<Entry>> columns);
  static LinMap from_csc(FieldSpec field, TensorShape dom, TensorShape cod, kernels::CscMatrix m);

  FieldSpec field() const noexcept { return field_; }
  const TensorShape& dom() const noexcept { return dom_; }
  const TensorShape& cod() const noexcept { return cod_; }
  std::size_t rows() const noexcept { return matrix_.rows; }
  std::size_t cols() const noexcept { return matrix_.cols; }
  std::size_t nnz() const noexcept { return matrix_.entries.size(); }

  Scalar at(std::size_t row, std::size_t col) const;
  std::span<const Entry> column(std::size_t col) const;
  const kernels::CscMatrix& csc() const noexcept { return matrix_; }

  std::vector<std::vector<Scalar>> to_dense() const;

  /// Same matrix, relabelled shapes (totals must agree).
  LinMap reshaped(TensorShape dom, TensorShape cod) const;
  LinMap transposed() const;

  LinMap operator+(const LinMap& rhs) const;
  LinMap operator-(const LinMap& rhs) const;
  LinMap operator*(const Scalar& s) const;

 private:
  LinMap(FieldSpec field, TensorShape dom, TensorShape cod, kernels::CscMatrix m);

  FieldSpec field_;
  TensorShape dom_;
  TensorShape cod_;
  kernels::CscMatrix matrix_;
};

LinMap identity(FieldSpec field, const TensorShape& shape);

/// g∘f. Throws Error(shape_mismatch) unless f.cod() == g.dom() factor-wise.
LinMap compose(const LinMap& g, const LinMap& f);

/// compose(a, b, c) = a∘b∘c.
template <typename... Rest>
LinMap compose(const LinMap& g, const LinMap& f, const Rest&... rest) {
  return compose(g, compose(f, rest...));
}

LinMap tensor(const LinMap& f, const LinMap& g);

template <typename... Rest>
LinMap tensor(const LinMap& f, const LinMap& g, const Rest&... rest) {
  return tensor(tensor(f, g), rest...);
}

/// e_i⊗e_j ↦ e_j⊗e_i, shape [m, n] → [n, m].
LinMap flip(FieldSpec field, std::size_t m, std::size_t n);

/// Permutation of tensor factors: output factor k is input factor perm[k].
LinMap permute_factors(FieldSpec field, const TensorShape& dom, const std::vector<std::size_t>& perm);

struct Equality {
  bool equal = true;
  std::optional<Witness> witness;

  explicit operator bool() const noexcept { return equal; }
};

/// Factor-wise shape comparison plus exact entry comparison; the witness is the
/// first mismatch in row-major order.
Equality equal(const LinMap& lhs, const LinMap& rhs);

std::string to_string(const LinMap& f);

}  // namespace hopfkit
