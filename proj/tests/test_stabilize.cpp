#include "elliptica/census.hpp"
#include "elliptica/errors.hpp"
#include "elliptica/stabilize.hpp"
#include "elliptica/sturm.hpp"

#include <doctest.h>

using namespace elliptica;

TEST_CASE("power inequality fixtures") {
    const ExponentData s2({2}, {1});
    CHECK_FALSE(power_inequality_holds(s2, 2, Rational(1)));
    CHECK(power_inequality_holds(s2, 3, Rational(1)));
    CHECK_FALSE(power_inequality_holds(ExponentData({3}, {1}), 1, Rational(1)));
    CHECK_THROWS_AS(power_inequality_holds(ExponentData({2}, {}), 1, Rational(1)), NoExactHomology);
    CHECK_THROWS_AS(power_inequality_holds(s2, 1, Rational(0)), DomainError);
}

TEST_CASE("check summaries") {
    const auto pp = poincare_pair(ExponentData({2}, {1}));
    auto c = check_power_inequality(pp, 2, Rational(1));
    CHECK(c.method == "endpoint");
    CHECK(c.value_at_eps == 0);
    c = check_power_inequality(pp, 3, Rational(1));
    CHECK(c.method == "sturm");
    CHECK(c.holds);
    REQUIRE(c.root_count);
    CHECK(*c.root_count == 0);
    // CP2, n = 1: degree 5 homotopy against degree 4 homology.
    c = check_power_inequality(poincare_pair(ExponentData({3}, {1})), 1, Rational(1));
    CHECK(c.method == "leading");
}

TEST_CASE("thresholds at eps = 1") {
    CHECK(stabilization_threshold(parse_space("S3"), Rational(1)).threshold == 1);
    CHECK(stabilization_threshold(ExponentData({4}, {2}), Rational(1)).threshold == 3);
    CHECK(stabilization_threshold(ExponentData({4}, {1}), Rational(1)).threshold == 2);
    CHECK(stabilization_threshold(ExponentData({2}, {1}), Rational(1)).threshold == 3);
    const auto r = stabilization_threshold(parse_space("S2"), Rational(1));
    CHECK(r.tail_constant == 1);
    CHECK_FALSE(r.counterexample_alarm);
    REQUIRE(r.per_n.size() >= 3);
    CHECK_FALSE(r.per_n[1].holds);
    CHECK(r.per_n[2].holds);
}

TEST_CASE("point space is degenerate") {
    const auto r = stabilization_threshold(ExponentData({}, {}), Rational(1));
    CHECK(r.degenerate);
    CHECK(r.threshold == 1);
    CHECK(r.tail_constant == 1);
}

TEST_CASE("tail constant") {
    CHECK(tail_constant(Rational(2)) == 1);
    CHECK(tail_constant(Rational(5, 4)) == 4);
    CHECK(tail_constant(Rational(4, 3)) == 3);
    CHECK_THROWS_AS(tail_constant(Rational(1)), DomainError);
}

TEST_CASE("cell bracketing agrees with sturm on large degrees") {
    // S8 at eps = 1/2 has N* = 256; compare the two deciders where both apply.
    const auto pp = poincare_pair(ExponentData({8}, {4}));
    for (unsigned n : {21U, 25U}) {
        const auto fast = check_power_inequality(pp, n, Rational(1, 2));
        const RatPoly f = pp.homology.pow(n) - Rational(n) * pp.homotopy;
        CHECK(fast.holds == positive_on_ray(f, Rational(1, 2)));
    }
    const auto r = stabilization_threshold(pp, Rational(1, 2), 2);
    CHECK(r.tail_constant == 256);
    CHECK(r.threshold == 3);
}

TEST_CASE("per_n is false then true on census data") {
    for (const auto& d : enumerate_sac_data(8)) {
        if (!d.is_pure()) continue;
        for (const Rational eps : {Rational(1, 2), Rational(1), Rational(2)}) {
            CAPTURE(render(d));
            CAPTURE(eps.get_str());
            const auto r = stabilization_threshold(d, eps, 2);
            for (const auto& c : r.per_n) CHECK(c.holds == (c.n >= r.threshold));
            if (eps == 1) {
                CHECK(r.threshold <= 3);
                if (d.formal_dim() >= 3) CHECK(r.threshold <= static_cast<unsigned long>(d.formal_dim()));
            }
        }
    }
}

TEST_CASE("threads do not change the result") {
    const auto pp = poincare_pair(parse_space("CP1 x S4"));
    const auto a = stabilization_threshold(pp, Rational(1, 2), 1);
    const auto b = stabilization_threshold(pp, Rational(1, 2), 3);
    CHECK(a.threshold == b.threshold);
    REQUIRE(a.per_n.size() == b.per_n.size());
    for (std::size_t i = 0; i < a.per_n.size(); ++i) CHECK(a.per_n[i].holds == b.per_n[i].holds);
}
