#pragma once

#include "elliptica/exponents.hpp"
#include "elliptica/ratpoly.hpp"
#include "elliptica/space.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace elliptica {

/// Exactly known P_X and P^pi_X.
struct PoincarePair {
    RatPoly homology;
    RatPoly homotopy;
};

/// Throws NoExactHomology unless q = r.
PoincarePair poincare_pair(const ExponentData& d);
PoincarePair poincare_pair(const SpaceExpr& e);

/// Outcome of deciding P^n - n P^pi > 0 on [eps, inf), with a summary of how.
///
/// method is one of "endpoint" (f(eps) <= 0), "leading" (negative leading
/// coefficient), "sturm" (root count of the expanded polynomial), "cells"
/// (monotone bracketing on [eps, tail] plus a tail bound) or "witness" (a
/// bracketing cell exposed f <= 0 at some point).
struct PowerCheck {
    unsigned n = 0;
    bool holds = false;
    std::string method;
    Rational value_at_eps;
    std::optional<std::size_t> chain_length;
    std::optional<std::size_t> root_count;
    std::optional<std::size_t> cells;
    std::optional<Rational> tail_from;
    std::optional<Rational> witness;
};

/// Expanded polynomials up to this degree go straight to a Sturm chain.
inline constexpr std::size_t kSturmDegreeLimit = 160;

PowerCheck check_power_inequality(const PoincarePair& pp, unsigned n, const Rational& eps);

bool power_inequality_holds(const PoincarePair& pp, unsigned n, const Rational& eps);
bool power_inequality_holds(const ExponentData& d, unsigned n, const Rational& eps);

struct ThresholdResult {
    Rational eps;
    unsigned long threshold = 1;
    unsigned long tail_constant = 1;
    std::vector<PowerCheck> per_n;  // n = 1, 2, ...
    bool degenerate = false;        // point space
    /// Threshold >= 4 at eps = 1.
    bool counterexample_alarm = false;
};

/// Checks n = 1..N* (in parallel), then n > N* until the inequality holds.
/// For n >= N* = max(1, ceil(1 / (P(eps) - 1))) one success implies all
/// later ones, which is asserted on the next n. Throws DomainError for eps <= 0.
ThresholdResult stabilization_threshold(const PoincarePair& pp, const Rational& eps, unsigned threads = 1);
ThresholdResult stabilization_threshold(const ExponentData& d, const Rational& eps, unsigned threads = 1);
ThresholdResult stabilization_threshold(const SpaceExpr& e, const Rational& eps, unsigned threads = 1);

/// max(1, ceil(1 / (c - 1))); throws DomainError unless c > 1.
unsigned long tail_constant(const Rational& c);

/// c^n for rational c.
Rational rational_pow(const Rational& c, unsigned long n);

}  // namespace elliptica
