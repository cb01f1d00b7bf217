#pragma once

#include <optional>
#include <vector>

#include "sgr/scalar.hpp"

namespace sgr::linalg {

using Vec = std::vector<Scalar>;
using Dense = std::vector<Vec>;  // row-major, rows may not be ragged

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Dense& m, std::size_t ncols);

std::size_t rank(Dense m, std::size_t ncols);

// Basis of {x : m x = 0}.
std::vector<Vec> kernel(const Dense& m, std::size_t ncols);

// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<Vec> solve(const Dense& m, const Vec& b, std::size_t ncols);

}  // namespace sgr::linalg
