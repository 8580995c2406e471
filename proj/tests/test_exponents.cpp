#include "elliptica/errors.hpp"
#include "elliptica/exponents.hpp"

#include <doctest.h>

using namespace elliptica;

TEST_CASE("exponent data of model leaves") {
    CHECK(exponent_data(parse_space("S4")) == ExponentData({4}, {2}));
    CHECK(exponent_data(parse_space("S5")) == ExponentData({3}, {}));
    CHECK(exponent_data(parse_space("CP3")) == ExponentData({4}, {1}));
    CHECK(exponent_data(parse_space("S3 x CP1")) == ExponentData({2, 2}, {1}));
}

TEST_CASE("exponent data validation and parsing") {
    CHECK_THROWS_AS(ExponentData({1}, {}), DomainError);
    CHECK_THROWS_AS(ExponentData({2}, {0}), DomainError);
    CHECK(parse_data("b=3,2;a=1,1") == ExponentData({2, 3}, {1, 1}));
    CHECK(parse_data("b=2") == ExponentData({2}, {}));
    CHECK(parse_data("b=2;a=") == ExponentData({2}, {}));
    CHECK(render(ExponentData({3, 2}, {1})) == "b=2,3;a=1");
    CHECK_THROWS_AS(parse_data("b=2;c=1"), Error);
    CHECK_THROWS_AS(parse_data("b=x"), Error);
}

TEST_CASE("invariants of CP2") {
    const auto rep = invariants(parse_space("CP2"));
    CHECK(rep.formal_dim == 4);
    CHECK(rep.chi == 3);
    CHECK(rep.dim_pi == 2);
    CHECK(rep.chi_pi == 0);
    REQUIRE(rep.dim_H);
    CHECK(*rep.dim_H == 3);
}

TEST_CASE("invariants of odd spheres") {
    const auto raw = invariants(ExponentData({2}, {}));
    CHECK(raw.formal_dim == 3);
    CHECK(raw.chi == 0);
    CHECK_FALSE(raw.dim_H);
    const auto model = invariants(parse_space("S3"));
    REQUIRE(model.dim_H);
    CHECK(*model.dim_H == 2);
    CHECK(model.chi == 0);
}

TEST_CASE("poincare polynomials") {
    CHECK(homotopy_poincare(ExponentData({3}, {1})) == RatPoly{0, 0, 1, 0, 0, 1});
    CHECK(homology_poincare_pure(ExponentData({3}, {1})) == RatPoly{1, 0, 1, 0, 1});
    CHECK_THROWS_AS(homology_poincare_pure(ExponentData({2}, {})), PurityError);
    CHECK(homology_poincare_model(parse_space("S3 x CP1")) == RatPoly{1, 0, 1, 1, 0, 1});
    CHECK(homology_poincare_pure(ExponentData({2, 2}, {1, 1})) == homology_poincare_model(parse_space("CP1^2")));
}

TEST_CASE("non-integral chi is reported") {
    CHECK_THROWS_AS(invariants(ExponentData({3}, {2})), Error);
}
