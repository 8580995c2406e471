#include "elliptica/bounds.hpp"
#include "elliptica/errors.hpp"

#include <doctest.h>

#include <algorithm>

using namespace elliptica;

TEST_CASE("q_bound_poly fixtures") {
    CHECK(q_bound_poly(ExponentData({2}, {})) == RatPoly{1, 1, 1, 1});
    CHECK(q_bound_poly(ExponentData({3}, {1})) == RatPoly{1, 0, 1, 0, 1});
    CHECK(q_bound_poly(ExponentData({2, 2}, {})) == RatPoly{1, 2, 3, 4, 3, 2, 1});
}

TEST_CASE("bounds of projective spaces and even spheres") {
    for (int n = 1; n <= 6; ++n) {
        const auto rep = bounds_report(ExponentData({n + 1}, {1}));
        REQUIRE(rep.b1_bound);
        CHECK(*rep.b1_bound == n + 1);
        CHECK(rep.q_at_1 == n + 1);
        CHECK(rep.all_orderings_hold());
    }
    for (int n = 1; n <= 6; ++n) {
        const auto rep = bounds_report(ExponentData({2 * n}, {n}));
        REQUIRE(rep.b1_bound);
        CHECK(*rep.b1_bound == 2);
    }
    const auto cp2 = bounds_report(ExponentData({3}, {1}));
    REQUIRE(cp2.amgm_bound);
    CHECK(*cp2.amgm_bound == 8);
    CHECK(cp2.pavlov_total == 9);
    CHECK(cp2.pow2_nx == 16);
    CHECK(cp2.pow2_nx_minus_r == 8);
    CHECK(cp2.giant == 4096);
    CHECK(cp2.fh_bound == 3);
    CHECK(cp2.pavlov_perdegree == std::vector<Integer>{1, 2, 3, 2, 1});
    CHECK(cp2.sac_holds);
}

TEST_CASE("absent bounds") {
    const auto s3 = bounds_report(ExponentData({2}, {}));
    CHECK_FALSE(s3.b1_bound);
    REQUIRE(s3.amgm_bound);
    CHECK(*s3.amgm_bound == 6);
    CHECK(s3.fh_bound == 4);
    const auto pt = bounds_report(ExponentData({}, {}));
    CHECK_FALSE(pt.amgm_bound);
    CHECK(pt.pavlov_total == Rational(3, 2));
    CHECK_THROWS_AS(bounds_report(ExponentData({2}, {2, 2})), DomainError);
}

TEST_CASE("hilali verdicts") {
    auto v = hilali_verdict(ExponentData({3}, {1}));
    CHECK(v.kind == VerdictKind::Verified);
    CHECK(v.dim_pi == 2);
    CHECK(*v.dim_H == 3);
    v = hilali_verdict(ExponentData({4}, {2}));
    CHECK(v.kind == VerdictKind::Verified);
    CHECK(*v.dim_H == 2);
    v = hilali_verdict(ExponentData({2}, {}));
    CHECK(v.kind == VerdictKind::BoundsConsistent);
    CHECK(v.dim_pi == 1);
    CHECK(v.dim_H_lower_bound == 2);
    CHECK(v.dim_pi_within_upper_bound);
    CHECK(v.min_upper_bound == 4);
    v = hilali_verdict(ExponentData({3, 4, 6}, {2, 3, 4}));
    CHECK(v.kind == VerdictKind::NotApplicable);
    CHECK_FALSE(v.reason.empty());
}

TEST_CASE("inequality suite") {
    auto find = [](const std::vector<Check>& cs, const std::string& name) {
        auto it = std::find_if(cs.begin(), cs.end(), [&](const Check& c) { return c.name == name; });
        REQUIRE(it != cs.end());
        return *it;
    };
    const auto s4 = inequality_suite(ExponentData({4}, {2}));
    CHECK(s4.size() == 9);
    CHECK(find(s4, "n_X >= sum 2a").lhs == "4");
    CHECK(find(s4, "n_X >= sum 2a").rhs == "4");
    const auto cp2 = inequality_suite(ExponentData({3}, {1}));
    CHECK(find(cp2, "2 n_X - q >= sum (2b - 1)").lhs == "7");
    CHECK(find(cp2, "2 n_X - q >= sum (2b - 1)").rhs == "5");
    const auto b22 = inequality_suite(ExponentData({2, 2}, {}));
    CHECK(find(b22, "n_X >= 3q - r").lhs == "6");
    CHECK(find(b22, "n_X >= 3q - r").rhs == "6");
    for (const auto& c : b22) CHECK(c.holds);
}

TEST_CASE("binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(3, 5) == 0);
}
