#include "elliptica/arithcond.hpp"

#include "elliptica/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace elliptica {

std::string to_string(ConditionMode mode) { return mode == ConditionMode::SAC ? "SAC" : "AC"; }

std::optional<std::vector<int>> representable(int target, std::span<const int> gens, int min_terms) {
    if (gens.empty()) throw DomainError("representable: empty generator list");
    if (target < 1) return std::nullopt;
    for (int g : gens)
        if (g < 1) throw DomainError("representable: generators must be positive");

    // most[v]: largest coefficient sum reaching v exactly (-1: unreachable)
    std::vector<int> most(static_cast<std::size_t>(target) + 1, -1);
    std::vector<int> choice(static_cast<std::size_t>(target) + 1, -1);
    most[0] = 0;
    for (int v = 1; v <= target; ++v) {
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const int g = gens[i];
            if (g > v || most[v - g] < 0) continue;
            if (most[v - g] + 1 > most[v]) {
                most[v] = most[v - g] + 1;
                choice[v] = static_cast<int>(i);
            }
        }
    }
    if (most[target] < std::max(min_terms, 1)) return std::nullopt;

    std::vector<int> gamma(gens.size(), 0);
    for (int v = target; v > 0; v -= gens[choice[v]]) ++gamma[choice[v]];
    return gamma;
}

namespace {

void next_combinations(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        out.push_back(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

SacReport check_condition(const ExponentData& d, ConditionMode mode) {
    const int r = d.r();
    const int q = d.q();
    if (r > 24) throw DomainError("too many a-exponents for subset enumeration");
    const int min_terms = mode == ConditionMode::SAC ? 2 : 1;

    std::vector<std::vector<int>> subsets;
    for (int s = 1; s <= r; ++s) next_combinations(r, s, subsets);

    SacReport rep;
    rep.mode = mode;
    rep.holds = true;
    std::vector<std::vector<char>> covered_by_mask(std::size_t{1} << r);

    for (const auto& subset : subsets) {
        SubsetRecord rec;
        rec.subset = subset;
        std::vector<int> gens;
        gens.reserve(subset.size());
        for (int i : subset) gens.push_back(d.a()[i]);

        unsigned mask = 0;
        for (int i : subset) mask |= 1u << i;
        auto& covered = covered_by_mask[mask];
        covered.assign(static_cast<std::size_t>(q), 0);

        for (int j = 0; j < q; ++j) {
            if (auto gamma = representable(d.b()[j], gens, min_terms)) {
                rec.covered_b_indices.push_back(j);
                rec.witnesses.push_back({j, std::move(*gamma)});
                covered[j] = 1;
            }
        }
        if (rec.covered_b_indices.size() < subset.size() && rep.holds) {
            rep.holds = false;
            rep.failing_subset = subset;
        }
        rep.per_subset.push_back(std::move(rec));
    }

    // Enlarging the subset can only add representations.
    for (unsigned mask = 1; mask < covered_by_mask.size(); ++mask) {
        for (int i = 0; i < r; ++i) {
            if (mask & (1u << i)) continue;
            const auto& small = covered_by_mask[mask];
            const auto& big = covered_by_mask[mask | (1u << i)];
            for (int j = 0; j < q; ++j)
                if (small[j] && !big[j]) throw std::logic_error("arithmetic condition coverage is not monotone");
        }
    }
    return rep;
}

bool double_exponent_check(const ExponentData& d) {
    if (d.q() < d.r()) return false;
    auto b = d.b_descending().begin();
    for (int a : d.a_descending()) {
        if (*b < 2 * a) return false;
        ++b;
    }
    return true;
}

}  // namespace elliptica
