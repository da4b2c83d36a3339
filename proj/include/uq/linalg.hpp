#pragma once

#include <optional>
#include <vector>

#include "uq/ratfun.hpp"

namespace uq {

using Vec = std::vector<RationalFunction>;
using Matrix = std::vector<Vec>;  // row major

// Basis of {x : M x = 0}, computed by exact elimination with a
// deterministic pivot rule (first nonzero entry in column order). Each
// basis vector has a 1 in its free-variable slot.
std::vector<Vec> null_space(Matrix m, std::size_t ncols);

// Solution of M x = b, free variables set to zero; nullopt when
// inconsistent.
std::optional<Vec> solve(Matrix m, Vec b);

}  // namespace uq
