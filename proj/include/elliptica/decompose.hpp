#pragma once

#include "elliptica/ratpoly.hpp"
#include "elliptica/space.hpp"

#include <optional>
#include <vector>

namespace elliptica {

/// Writes p as a product of Poincare polynomials of CP^m factors
/// (1 + t^2 + ... + t^(2m)) and, when allowed, even spheres (1 + t^(2n)).
///
/// Candidates are tried largest degree first, CP before S at equal degree, with
/// backtracking; the returned factors are in that order. Absent when no such
/// product exists or p is not a non-negative integral polynomial with constant
/// term 1. The constant 1 decomposes as the empty product.
std::optional<std::vector<Leaf>> decompose_projective(const RatPoly& p, bool allow_even_spheres);

}  // namespace elliptica
