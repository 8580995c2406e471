#pragma once

#include "elliptica/ratpoly.hpp"

#include <optional>
#include <vector>

namespace elliptica {

/// Signed remainder chain of a polynomial together with the root count it
/// certifies on an interval. An absent upper end means +infinity.
struct SturmCertificate {
    std::vector<RatPoly> chain;
    Rational lo;
    std::optional<Rational> hi;
    int variations_lo = 0;
    int variations_hi = 0;
    std::size_t root_count = 0;
};

/// chain[0] = p, chain[1] = p', chain[k+1] = -(chain[k-1] mod chain[k]).
std::vector<RatPoly> sturm_chain(const RatPoly& p);

/// Sign variations of the chain at x (zeros skipped).
int sign_variations(const std::vector<RatPoly>& chain, const Rational& x);
/// Sign variations at +infinity, read off the leading coefficients.
int sign_variations_at_infinity(const std::vector<RatPoly>& chain);

/// Number of distinct real roots of p in (lo, hi]; lo must not be a root.
SturmCertificate count_roots(const RatPoly& p, const Rational& lo,
                             const std::optional<Rational>& hi = std::nullopt);

struct RayDecision {
    bool positive = false;
    Rational value_at_eps;
    bool leading_positive = false;
    /// Present only when the endpoint and leading-coefficient tests pass.
    std::optional<SturmCertificate> certificate;
};

/// Decides p(t) > 0 for every real t >= eps. A root at eps is a failure.
/// Throws ZeroPolynomial for p = 0 and DomainError for eps <= 0.
RayDecision decide_positive_on_ray(const RatPoly& p, const Rational& eps);

bool positive_on_ray(const RatPoly& p, const Rational& eps);

}  // namespace elliptica
