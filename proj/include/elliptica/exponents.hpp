#pragma once

#include "elliptica/ratpoly.hpp"
#include "elliptica/space.hpp"

#include <optional>
#include <ranges>
#include <string>
#include <vector>

namespace elliptica {

/// b-exponents (odd homotopy in degrees 2b - 1) and a-exponents (even homotopy
/// in degrees 2a), both stored sorted ascending.
class ExponentData {
public:
    ExponentData() = default;
    /// Sorts both lists; throws DomainError if some b < 2 or a < 1.
    ExponentData(std::vector<int> b, std::vector<int> a);

    const std::vector<int>& b() const noexcept { return b_; }
    const std::vector<int>& a() const noexcept { return a_; }
    int q() const noexcept { return static_cast<int>(b_.size()); }
    int r() const noexcept { return static_cast<int>(a_.size()); }
    bool is_point() const noexcept { return b_.empty() && a_.empty(); }
    bool is_pure() const noexcept { return b_.size() == a_.size(); }

    auto b_descending() const { return b_ | std::views::reverse; }
    auto a_descending() const { return a_ | std::views::reverse; }

    /// sum(2b - 1) - sum(2a - 1)
    long formal_dim() const;

    friend auto operator<=>(const ExponentData&, const ExponentData&) = default;

private:
    std::vector<int> b_;
    std::vector<int> a_;
};

/// Parses "b=2,3;a=1,1" (either part may be empty or missing).
ExponentData parse_data(const std::string& text);
std::string render(const ExponentData& d);

struct InvariantReport {
    int q = 0;
    int r = 0;
    int dim_pi = 0;
    long formal_dim = 0;
    int chi_pi = 0;
    Integer chi;
    std::optional<Integer> dim_H;
};

ExponentData exponent_data(const SpaceExpr& e);

/// sum t^(2a) + sum t^(2b - 1)
RatPoly homotopy_poincare(const ExponentData& d);
/// Product of the leaf polynomials 1 + t^n and 1 + t^2 + ... + t^(2m).
RatPoly homology_poincare_model(const SpaceExpr& e);
/// prod(1 - t^(2b)) / prod(1 - t^(2a)); throws PurityError unless q = r.
RatPoly homology_poincare_pure(const ExponentData& d);

/// Throws NonIntegerChi when q = r and prod(b) is not divisible by prod(a).
InvariantReport invariants(const ExponentData& d);
/// As above, with dim_H and chi taken from the model polynomial.
InvariantReport invariants(const SpaceExpr& e);

}  // namespace elliptica
