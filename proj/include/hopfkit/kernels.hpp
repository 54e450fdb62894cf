#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hopfkit/scalar.hpp"

// Exact sparse kernels behind LinMap. Matrices are column-compressed; rows
// inside a column are strictly increasing and no stored value is zero.
namespace hopfkit::kernels {

struct Entry {
  std::uint32_t row;
  Scalar value;

  friend bool operator==(const Entry&, const Entry&) = default;
};

struct CscMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::size_t> col_ptr{0};
  std::vector<Entry> entries;

  friend bool operator==(const CscMatrix&, const CscMatrix&) = default;
};

/// Reference implementations, single-threaded.
namespace serial {
CscMatrix multiply(const CscMatrix& a, const CscMatrix& b, FieldSpec field);
CscMatrix kronecker(const CscMatrix& a, const CscMatrix& b);
}  // namespace serial

/// OpenMP implementations; identical output to the serial ones.
namespace parallel {
CscMatrix multiply(const CscMatrix& a, const CscMatrix& b, FieldSpec field);
CscMatrix kronecker(const CscMatrix& a, const CscMatrix& b);
}  // namespace parallel

// Dispatchers used by LinMap: small problems stay serial.
CscMatrix multiply(const CscMatrix& a, const CscMatrix& b, FieldSpec field);
CscMatrix kronecker(const CscMatrix& a, const CscMatrix& b);

int max_threads();

}  // namespace hopfkit::kernels
