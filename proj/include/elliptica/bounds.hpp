#pragma once

#include "elliptica/arithcond.hpp"
#include "elliptica/exponents.hpp"
#include "elliptica/ratpoly.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace elliptica {

/// One recorded comparison "lhs relation rhs" (relation is "<=", ">=" or "=").
struct Check {
    std::string name;
    std::string lhs;
    std::string relation;
    std::string rhs;
    bool holds = false;
};

struct BoundsReport {
    RatPoly q_poly;
    Integer q_at_1;
    Rational fh_bound;         // 2^(q-r) prod(b) / prod(a)
    Rational pow2_nx;          // 2^n_X
    Rational pow2_nx_minus_r;  // 2^(n_X - r)
    std::optional<Rational> b1_bound;    // (2 b_max)^q / (2 a_min)^r, absent when r = 0
    std::optional<Rational> amgm_bound;  // (2 n_X / q)^q, absent when q = 0
    std::vector<Integer> pavlov_perdegree;
    Rational pavlov_total;  // 2^(n_X - 1) + 1
    Integer giant;          // (2 n_X)^n_X
    /// False when the data fails S.A.C.; the numbers are still computed.
    bool sac_holds = false;
    std::vector<Check> ordering_checks;

    bool all_orderings_hold() const;
    /// Every upper bound on dim H_* named as in the JSON output, q_at_1 excluded.
    std::vector<std::pair<std::string, Rational>> upper_bounds() const;
    Rational min_upper_bound() const;
};

/// prod(1 - t^(2b)) / ((1 - t)^(q - r) prod(1 - t^(2a))).
RatPoly q_bound_poly(const ExponentData& d);

/// Throws DomainError for negative formal dimension; NonPolynomialQuotient
/// propagates from q_bound_poly.
BoundsReport bounds_report(const ExponentData& d);

enum class VerdictKind { Verified, PureFail, BoundsConsistent, NotApplicable };

std::string to_string(VerdictKind kind);

/// Hilali comparison dim pi <= dim H. Only q = r data gets a definite answer;
/// for q > r the verdict carries the available bounds and never claims a proof.
struct HilaliVerdict {
    VerdictKind kind = VerdictKind::NotApplicable;
    int dim_pi = 0;
    std::optional<Integer> dim_H;                            // Verified / PureFail
    std::vector<std::pair<std::string, Rational>> upper_bounds;  // BoundsConsistent
    Rational min_upper_bound;
    Integer dim_H_lower_bound;
    bool dim_pi_within_upper_bound = false;
    std::string reason;  // NotApplicable
};

HilaliVerdict hilali_verdict(const ExponentData& d);

/// The necessary inequalities on n_X that S.A.C. data satisfies.
std::vector<Check> inequality_suite(const ExponentData& d);

Integer binomial(unsigned long n, unsigned long k);

}  // namespace elliptica
