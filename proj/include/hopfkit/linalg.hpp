#pragma once

#include <optional>
#include <vector>

#include "hopfkit/linmap.hpp"

// Dense exact Gaussian elimination.
namespace hopfkit::linalg {

using Matrix = std::vector<std::vector<Scalar>>;

struct Rref {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row

  std::size_t rank() const noexcept { return pivots.size(); }
};

Rref rref(Matrix m);

/// Some solution of a·x = b (free variables set to zero), or nullopt when inconsistent.
std::optional<std::vector<Scalar>> solve(Matrix a, const std::vector<Scalar>& b, FieldSpec field);

std::size_t rank(const LinMap& f);
std::optional<LinMap> inverse(const LinMap& f);

}  // namespace hopfkit::linalg
