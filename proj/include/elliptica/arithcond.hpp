#pragma once

#include "elliptica/exponents.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace elliptica {

enum class ConditionMode { AC, SAC };

std::string to_string(ConditionMode mode);

struct Witness {
    int b_index = 0;
    /// Coefficients aligned with the subset's index order.
    std::vector<int> gamma;
};

struct SubsetRecord {
    std::vector<int> subset;  // indices into a(), ascending
    std::vector<int> covered_b_indices;
    std::vector<Witness> witnesses;
};

/// Outcome of the (strong) arithmetic condition over every non-empty index
/// subset of the a-exponents. Subsets are visited by size, then
/// lexicographically, and failing_subset is the first one that fails.
struct SacReport {
    ConditionMode mode = ConditionMode::SAC;
    bool holds = false;
    std::vector<SubsetRecord> per_subset;
    std::optional<std::vector<int>> failing_subset;
};

/// Some gamma >= 0 with sum(gamma * gens) = target and sum(gamma) >= min_terms.
/// Dynamic programming over 0..target keeps the largest attainable coefficient
/// sum for each value, so a representation with enough terms is found whenever
/// one exists.
std::optional<std::vector<int>> representable(int target, std::span<const int> gens, int min_terms);

SacReport check_condition(const ExponentData& d, ConditionMode mode);

/// With both lists sorted descending, b_i >= 2 a_i for i = 1..r. False if q < r.
bool double_exponent_check(const ExponentData& d);

}  // namespace elliptica
