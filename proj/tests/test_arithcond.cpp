#include "elliptica/arithcond.hpp"
#include "elliptica/errors.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <numeric>

using namespace elliptica;

TEST_CASE("representable") {
    const int g4[] = {4}, g23[] = {2, 3}, g24[] = {2, 4};
    auto r = representable(8, g4, 2);
    REQUIRE(r);
    CHECK(*r == std::vector<int>{2});
    CHECK_FALSE(representable(4, g4, 2));
    r = representable(6, g23, 2);
    REQUIRE(r);
    CHECK(2 * (*r)[0] + 3 * (*r)[1] == 6);
    CHECK((*r)[0] + (*r)[1] >= 2);
    // A single 4 has one term; 2 + 2 has two.
    r = representable(4, g24, 2);
    REQUIRE(r);
    CHECK(2 * (*r)[0] + 4 * (*r)[1] == 4);
    CHECK((*r)[0] + (*r)[1] >= 2);
    CHECK(representable(4, g4, 1));
    CHECK_THROWS_AS(representable(4, {}, 1), DomainError);
}

TEST_CASE("arithmetic condition fixtures") {
    const ExponentData d1({3, 4, 6}, {2, 3, 4});
    CHECK(check_condition(d1, ConditionMode::AC).holds);
    const auto sac1 = check_condition(d1, ConditionMode::SAC);
    CHECK_FALSE(sac1.holds);
    REQUIRE(sac1.failing_subset);
    CHECK(*sac1.failing_subset == std::vector<int>{2});
    CHECK(check_condition(ExponentData({4, 6, 8}, {2, 3, 4}), ConditionMode::SAC).holds);
    CHECK(check_condition(ExponentData({3, 4, 5, 5, 8}, {2, 3, 4}), ConditionMode::AC).holds);
    CHECK_FALSE(check_condition(ExponentData({3, 4, 5, 5, 8}, {2, 3, 4}), ConditionMode::SAC).holds);
    CHECK(check_condition(ExponentData({3, 4, 5, 6, 8}, {2, 3, 4}), ConditionMode::SAC).holds);
    CHECK_FALSE(check_condition(ExponentData({3, 5, 7}, {2, 4}), ConditionMode::AC).holds);
}

TEST_CASE("witnesses are valid") {
    const ExponentData d({3, 4, 5, 6, 8}, {2, 3, 4});
    const auto rep = check_condition(d, ConditionMode::SAC);
    CHECK(rep.per_subset.size() == 7);
    for (const auto& rec : rep.per_subset) {
        CHECK(rec.covered_b_indices.size() >= rec.subset.size());
        for (const auto& w : rec.witnesses) {
            REQUIRE(w.gamma.size() == rec.subset.size());
            int sum = 0, terms = 0;
            for (std::size_t i = 0; i < w.gamma.size(); ++i) {
                CHECK(w.gamma[i] >= 0);
                sum += w.gamma[i] * d.a()[static_cast<std::size_t>(rec.subset[i])];
                terms += w.gamma[i];
            }
            CHECK(sum == d.b()[static_cast<std::size_t>(w.b_index)]);
            CHECK(terms >= 2);
        }
    }
}

TEST_CASE("subset order is by size then lexicographic") {
    const auto rep = check_condition(ExponentData({4, 6, 8}, {2, 3, 4}), ConditionMode::SAC);
    std::vector<std::vector<int>> order;
    for (const auto& rec : rep.per_subset) order.push_back(rec.subset);
    CHECK(order == std::vector<std::vector<int>>{{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}});
}

TEST_CASE("empty a holds vacuously; q < r fails") {
    CHECK(check_condition(ExponentData({2}, {}), ConditionMode::SAC).holds);
    CHECK_FALSE(check_condition(ExponentData({2}, {1, 1}), ConditionMode::SAC).holds);
}

TEST_CASE("double exponent check") {
    CHECK(double_exponent_check(ExponentData({3, 4, 5, 6, 8}, {2, 3, 4})));
    CHECK_FALSE(double_exponent_check(ExponentData({3}, {2})));
    CHECK_FALSE(double_exponent_check(ExponentData({2}, {1, 1})));
}

TEST_CASE("check_condition agrees with exhaustive gamma search") {
    std::vector<std::vector<int>> bs, as;
    std::vector<int> cur;
    oracle::multisets(2, 7, 3, cur, bs);
    oracle::multisets(1, 4, 3, cur, as);
    int disagreements = 0;
    for (const auto& b : bs)
        for (const auto& a : as) {
            const ExponentData d(b, a);
            for (bool strong : {false, true}) {
                const bool lib = check_condition(d, strong ? ConditionMode::SAC : ConditionMode::AC).holds;
                if (lib != oracle::condition_holds(d, strong)) ++disagreements;
            }
        }
    CHECK(disagreements == 0);
}
