// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include "elliptica/arithcond.hpp"
#include "elliptica/bounds.hpp"
#include "elliptica/census.hpp"
#include "elliptica/decompose.hpp"
#include "elliptica/exponents.hpp"
#include "elliptica/mixedhodge.hpp"
#include "elliptica/stabilize.hpp"
#include "elliptica/sturm.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace elliptica;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void fail(const std::string& why) {
        if (pass) detail << why;
        pass = false;
    }
};

// 1. Five fixture pairs, both modes, under one second.
Outcome criterion_sac_fixtures() {
    Outcome o;
    struct Fixture {
        std::vector<int> b, a;
        bool ac, sac;
    };
    const std::vector<Fixture> fixtures{
        {{3, 4, 6}, {2, 3, 4}, true, false},      {{4, 6, 8}, {2, 3, 4}, true, true},
        {{3, 4, 5, 5, 8}, {2, 3, 4}, true, false}, {{3, 4, 5, 6, 8}, {2, 3, 4}, true, true},
        {{3, 5, 7}, {2, 4}, false, false},
    };
    const auto start = std::chrono::steady_clock::now();
    for (const auto& f : fixtures) {
        const ExponentData d(f.b, f.a);
        if (check_condition(d, ConditionMode::AC).holds != f.ac) o.fail("A.C. verdict wrong for " + render(d));
        if (check_condition(d, ConditionMode::SAC).holds != f.sac) o.fail("S.A.C. verdict wrong for " + render(d));
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 1.0) o.fail("took " + std::to_string(secs) + " s");
    if (o.pass) o.detail << "5 pairs x 2 modes match";
    return o;
}

// 2. Stabilization thresholds at eps = 1 under 30 seconds.
Outcome criterion_pp_table() {
    Outcome o;
    std::vector<std::pair<std::string, unsigned long>> table;
    for (int n = 1; n <= 5; ++n) table.emplace_back("S" + std::to_string(2 * n + 1), 1);
    for (int n = 1; n <= 5; ++n) table.emplace_back("S" + std::to_string(2 * n), 3);
    table.emplace_back("CP1", 3);
    for (int n = 2; n <= 6; ++n) table.emplace_back("CP" + std::to_string(n), 2);

    const auto start = std::chrono::steady_clock::now();
    for (const auto& [space, expected] : table) {
        const auto r = stabilization_threshold(parse_space(space), Rational(1));
        if (r.threshold != expected)
            o.fail(space + " gave " + std::to_string(r.threshold) + ", expected " + std::to_string(expected));
        for (const auto& c : r.per_n)
            if (c.method == "cells" || c.method == "witness") o.fail(space + " used bracketing, not Sturm");
        if (r.counterexample_alarm) o.fail(space + " raised the alarm");
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 30.0) o.fail("took " + std::to_string(secs) + " s");
    if (o.pass) o.detail << table.size() << " spaces match";
    return o;
}

// 3. Census through n_X = 12, plus the brute-force comparison through 6.
Outcome criterion_census(const std::vector<CensusEntry>& census) {
    Outcome o;
    std::size_t pure = 0;
    for (const auto& e : census) {
        const std::string tag = render(e.data);
        if (e.verdict.kind == VerdictKind::PureFail) o.fail("PureFail at " + tag);
        for (const auto& c : inequality_suite(e.data))
            if (!c.holds) o.fail("inequality " + c.name + " fails at " + tag);
        if (!e.data.is_pure()) continue;
        ++pure;
        const RatPoly p = homology_poincare_pure(e.data);
        for (std::size_t m = 0; m < p.size(); ++m)
            if (p.coeff(m) > e.bounds.q_poly.coeff(m)) o.fail("Q_X does not dominate P_X at " + tag);
        Integer prod_b = 1, prod_a = 1;
        for (int x : e.data.b()) prod_b *= x;
        for (int x : e.data.a()) prod_a *= x;
        if (prod_b % prod_a != 0 || prod_b / prod_a <= 0) o.fail("prod b / prod a not a positive integer at " + tag);
    }
    for (int n = 1; n <= 6; ++n)
        if (enumerate_sac_data(n) != oracle::census_brute_force(n))
            o.fail("census differs from brute force at n_X <= " + std::to_string(n));
    if (o.pass) o.detail << census.size() << " entries (" << pure << " with q = r); brute force agrees for n_X <= 6";
    return o;
}

// 4. Bound ladder on every census entry.
Outcome criterion_bound_ladder(const std::vector<CensusEntry>& census) {
    Outcome o;
    for (const auto& e : census) {
        const auto& b = e.bounds;
        const std::string tag = render(e.data);
        if (!(b.fh_bound <= b.pow2_nx_minus_r && b.pow2_nx_minus_r <= b.pow2_nx && b.pow2_nx <= Rational(b.giant)))
            o.fail("ladder broken at " + tag);
        if (!e.invariants.dim_H) continue;
        const Rational dim_h(*e.invariants.dim_H);
        if (dim_h > b.pavlov_total) o.fail("dim_H > 2^(n_X-1)+1 at " + tag);
        for (const auto& [name, value] : b.upper_bounds())
            if (dim_h > value) o.fail("dim_H > " + name + " at " + tag);
    }
    if (o.pass) o.detail << census.size() << " entries, exact comparisons";
    return o;
}

// 5. Kahler and toric fixture polynomials.
Outcome criterion_decompose() {
    Outcome o;
    struct Fixture {
        const char* poly;
        const char* space;
        bool spheres;
    };
    const std::vector<Fixture> fixtures{
        {"1+t^2+t^4+t^6+t^8", "CP4", false},
        {"1+t^2+2t^4+t^6+t^8", "S4 x CP2", true},
        {"1+2t^2+2t^4+2t^6+t^8", "CP3 x CP1", false},
        {"1+2t^2+3t^4+2t^6+t^8", "CP2 x CP2", false},
        {"1+3t^2+4t^4+3t^6+t^8", "CP2 x CP1 x CP1", false},
        {"1+4t^2+6t^4+4t^6+t^8", "CP1^4", false},
        {"1+t^2+t^4+t^6", "CP3", false},
        {"1+2t^2+2t^4+t^6", "CP2 x CP1", false},
        {"1+3t^2+3t^4+t^6", "CP1^3", false},
    };
    for (const auto& f : fixtures) {
        auto got = decompose_projective(parse_poly(f.poly), f.spheres);
        auto want = parse_space(f.space).factors();
        if (got) std::sort(got->begin(), got->end());
        std::sort(want.begin(), want.end());
        if (!got || *got != want) o.fail(std::string(f.poly) + " did not give " + f.space);
    }
    const RatPoly cone = parse_poly("1+t^2+2t^4+t^6");
    if (decompose_projective(cone, true)) o.fail("projective cone decomposed");
    if (is_palindromic(cone)) o.fail("projective cone reported palindromic");
    if (o.pass) o.detail << "9 factorizations recovered; cone absent and not palindromic";
    return o;
}

// 6. Mixed Hodge specializations on products of total complex dimension <= 8.
Outcome criterion_mixed_hodge() {
    Outcome o;
    std::size_t count = 0;
    for (int total = 1; total <= 8; ++total)
        for (const auto& dims : oracle::partitions(total)) {
            ++count;
            const SpaceExpr e = oracle::projective_product(dims);
            const MHPoly mh = mh_model(e), pi = mh_pi_model(e);
            if (specialize(mh) != homology_poincare_model(e)) o.fail("MH(t,1,1) != P for " + render(e));
            if (specialize(pi) != homotopy_poincare(exponent_data(e))) o.fail("MH^pi(t,1,1) != P^pi for " + render(e));
            if (!mh.is_hodge_tate() || !pi.is_hodge_tate()) o.fail("p != q term for " + render(e));
        }
    if (o.pass) o.detail << count << " products";
    return o;
}

Rational ratio(long num, long den) {
    Rational x(num, den);
    x.canonicalize();
    return x;
}

RatPoly random_poly(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg), num(-9, 9), den(1, 5);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) {
        x = ratio(num(rng), den(rng));
    }
    return RatPoly(std::move(c));
}

// 7. Property suites.
Outcome criterion_properties() {
    Outcome o;
    std::mt19937 rng(20240601);

    int ring_failures = 0;
    std::uniform_int_distribution<int> pt(-20, 20);
    for (int i = 0; i < 500; ++i) {
        const RatPoly p = random_poly(rng, 6), q = random_poly(rng, 6), r = random_poly(rng, 4);
        const Rational x = ratio(pt(rng), 4);
        if ((p + q)(x) != p(x) + q(x)) ++ring_failures;
        if ((p * q)(x) != p(x) * q(x)) ++ring_failures;
        if ((p - q)(x) != p(x) - q(x)) ++ring_failures;
        if (p + q != q + p || p * q != q * p) ++ring_failures;
        if ((p * q) * r != p * (q * r) || p * (q + r) != p * q + p * r) ++ring_failures;
        if (p.pow(3)(x) != p(x) * p(x) * p(x)) ++ring_failures;
        if (!q.is_zero()) {
            const auto [quo, rem] = divmod(p, q);
            if (quo * q + rem != p || (!rem.is_zero() && rem.degree() >= q.degree())) ++ring_failures;
        }
    }
    if (ring_failures) o.fail(std::to_string(ring_failures) + " ring axiom failures");

    // Half the cases have every real root on the 1/8 grid, which the 1/16
    // sampling grid contains, so the oracle is exact there; the other half
    // are dense random integer polynomials sampled at 1/1024.
    int disagreements = 0;
    std::uniform_int_distribution<int> grid(0, 32), mult(1, 2), nroots(0, 3), cpos(1, 16), coef(-6, 6),
        degree(1, 6), eps_pick(1, 24);
    for (int i = 0; i < 200; ++i) {
        const Rational eps = ratio(eps_pick(rng), 8);
        RatPoly p;
        Rational step;
        if (i % 2 == 0) {
            p = RatPoly{1};
            for (int k = nroots(rng); k > 0; --k) {
                const RatPoly lin({ratio(-grid(rng), 8), Rational(1)});
                p *= lin.pow(static_cast<unsigned>(mult(rng)));
            }
            p *= RatPoly({ratio(cpos(rng), 8), Rational(0), Rational(1)});
            if (i % 4 == 2) p = -p;
            step = Rational(1, 16);
        } else {
            std::vector<Rational> c(static_cast<std::size_t>(degree(rng)) + 1);
            for (auto& x : c) x = coef(rng);
            if (c.back() == 0) c.back() = 1;
            p = RatPoly(std::move(c));
            step = Rational(1, 1024);
        }
        const bool lib = positive_on_ray(p, eps);
        const bool ref = oracle::sampled_positive(p, eps, step, Rational(8));
        if (lib != ref) ++disagreements;
    }
    if (disagreements) o.fail(std::to_string(disagreements) + " positivity disagreements");

    std::vector<std::vector<int>> bs, as;
    std::vector<int> cur;
    oracle::multisets(2, 8, 3, cur, bs);
    oracle::multisets(1, 4, 3, cur, as);
    int cond_disagreements = 0;
    std::size_t cond_cases = 0;
    for (const auto& b : bs)
        for (const auto& a : as) {
            const ExponentData d(b, a);
            for (bool strong : {false, true}) {
                ++cond_cases;
                if (check_condition(d, strong ? ConditionMode::SAC : ConditionMode::AC).holds !=
                    oracle::condition_holds(d, strong))
                    ++cond_disagreements;
            }
        }
    if (cond_disagreements) o.fail(std::to_string(cond_disagreements) + " condition disagreements");

    oracle::SpaceTextGenerator gen(99);
    int parse_failures = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto [text, leaves] = gen.next();
        try {
            const SpaceExpr e = parse_space(text);
            if (e.factors() != leaves || parse_space(render(e)) != e) ++parse_failures;
        } catch (const std::exception&) {
            ++parse_failures;
        }
    }
    if (parse_failures) o.fail(std::to_string(parse_failures) + " parser round-trip failures");

    if (o.pass)
        o.detail << "500 ring trials, 200 positivity cases, " << cond_cases << " condition cases, 1000 parses; 0 failures";
    return o;
}

}  // namespace

int main() {
    bool all = true;
    auto report = [&all](int id, const char* name, const std::function<Outcome()>& fn) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %d %-26s %s  (%.2f s) %s\n", id, name, o.pass ? "PASS" : "FAIL", secs,
                    o.detail.str().c_str());
        std::fflush(stdout);
        all = all && o.pass;
    };

    report(1, "sac-fixtures", criterion_sac_fixtures);
    report(2, "stabilization-table", criterion_pp_table);
    const auto census = enumerate_sac(12, 1);
    report(3, "census-n12", [&] { return criterion_census(census); });
    report(4, "bound-ladder", [&] { return criterion_bound_ladder(census); });
    report(5, "kahler-fixtures", criterion_decompose);
    report(6, "mixed-hodge", criterion_mixed_hodge);
    report(7, "property-suites", criterion_properties);
    return all ? 0 : 1;
}
