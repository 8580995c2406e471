#include "elliptica/bounds.hpp"

#include "elliptica/errors.hpp"

#include <algorithm>
#include <numeric>

namespace elliptica {

namespace {

Rational pow2(long e) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rational(Integer(1), p) : Rational(p);
}

Rational ratio_of(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational rpow(const Rational& base, unsigned long e) {
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Check compare(std::string name, const Rational& lhs, std::string relation, const Rational& rhs) {
    bool ok = relation == "<=" ? lhs <= rhs : relation == ">=" ? lhs >= rhs : lhs == rhs;
    return {std::move(name), lhs.get_str(), std::move(relation), rhs.get_str(), ok};
}

}  // namespace

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

std::string to_string(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::Verified: return "Verified";
        case VerdictKind::PureFail: return "PureFail";
        case VerdictKind::BoundsConsistent: return "BoundsConsistent";
        case VerdictKind::NotApplicable: return "NotApplicable";
    }
    return "?";
}

RatPoly q_bound_poly(const ExponentData& d) {
    if (d.q() < d.r())
        throw NonPolynomialQuotient("q < r: the bound polynomial keeps a (1 - t) denominator");
    return cyclotomic_quotient(d.b(), d.a(), static_cast<unsigned>(d.q() - d.r()));
}

bool BoundsReport::all_orderings_hold() const {
    return std::all_of(ordering_checks.begin(), ordering_checks.end(), [](const Check& c) { return c.holds; });
}

std::vector<std::pair<std::string, Rational>> BoundsReport::upper_bounds() const {
    std::vector<std::pair<std::string, Rational>> out;
    out.emplace_back("fh_bound", fh_bound);
    out.emplace_back("pow2_nx", pow2_nx);
    out.emplace_back("pow2_nx_minus_r", pow2_nx_minus_r);
    if (b1_bound) out.emplace_back("b1_bound", *b1_bound);
    if (amgm_bound) out.emplace_back("amgm_bound", *amgm_bound);
    out.emplace_back("pavlov_total", pavlov_total);
    out.emplace_back("giant", Rational(giant));
    return out;
}

Rational BoundsReport::min_upper_bound() const {
    auto ub = upper_bounds();
    Rational m = ub.front().second;
    for (const auto& [_, v] : ub) m = std::min(m, v);
    return m;
}

BoundsReport bounds_report(const ExponentData& d) {
    const long n = d.formal_dim();
    if (n < 0) throw DomainError("negative formal dimension " + std::to_string(n));
    const int q = d.q();
    const int r = d.r();

    BoundsReport rep;
    rep.sac_holds = check_condition(d, ConditionMode::SAC).holds;
    rep.q_poly = q_bound_poly(d);
    const Rational at_one = rep.q_poly(Rational(1));
    rep.q_at_1 = at_one.get_num();

    Integer prod_b = 1, prod_a = 1;
    for (int x : d.b()) prod_b *= x;
    for (int x : d.a()) prod_a *= x;
    Rational ratio(prod_b, prod_a);
    ratio.canonicalize();
    rep.fh_bound = pow2(q - r) * ratio;
    rep.pow2_nx = pow2(n);
    rep.pow2_nx_minus_r = pow2(n - r);
    if (r > 0) {
        const int b_max = d.b().empty() ? 0 : d.b().back();
        const int a_min = d.a().front();
        rep.b1_bound = rpow(Rational(2 * b_max), static_cast<unsigned long>(q)) /
                       rpow(Rational(2 * a_min), static_cast<unsigned long>(r));
    }
    if (q > 0) rep.amgm_bound = rpow(ratio_of(2 * n, q), static_cast<unsigned long>(q));

    rep.pavlov_perdegree.reserve(static_cast<std::size_t>(n) + 1);
    for (long m = 0; m <= n; ++m) {
        Integer c = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(m));
        if (m != 0 && m != n) c = (c + 1) / 2;
        rep.pavlov_perdegree.push_back(c);
    }
    rep.pavlov_total = pow2(n - 1) + 1;
    mpz_ui_pow_ui(rep.giant.get_mpz_t(), static_cast<unsigned long>(2 * n), static_cast<unsigned long>(n));

    auto& ck = rep.ordering_checks;
    ck.push_back(compare("q_at_1 = fh_bound", Rational(rep.q_at_1), "=", rep.fh_bound));
    ck.push_back(compare("fh_bound <= pow2_nx_minus_r", rep.fh_bound, "<=", rep.pow2_nx_minus_r));
    ck.push_back(compare("pow2_nx_minus_r <= pow2_nx", rep.pow2_nx_minus_r, "<=", rep.pow2_nx));
    ck.push_back(compare("fh_bound <= pow2_nx", rep.fh_bound, "<=", rep.pow2_nx));
    ck.push_back(compare("pow2_nx <= giant", rep.pow2_nx, "<=", Rational(rep.giant)));
    ck.push_back(compare("fh_bound <= giant", rep.fh_bound, "<=", Rational(rep.giant)));
    if (rep.b1_bound) ck.push_back(compare("fh_bound <= b1_bound", rep.fh_bound, "<=", *rep.b1_bound));
    if (rep.amgm_bound) ck.push_back(compare("fh_bound <= amgm_bound", rep.fh_bound, "<=", *rep.amgm_bound));

    const auto coeffs = rep.q_poly.coeffs();
    ck.push_back({"q_poly degree = n_X", std::to_string(rep.q_poly.is_zero() ? -1L : static_cast<long>(rep.q_poly.degree())),
                  "=", std::to_string(n), !rep.q_poly.is_zero() && static_cast<long>(rep.q_poly.degree()) == n});
    ck.push_back(compare("q_poly constant term = 1", rep.q_poly.coeff(0), "=", Rational(1)));
    {
        bool nonneg = rep.q_poly.has_nonnegative_coeffs() && rep.q_poly.is_integral();
        ck.push_back({"c_m >= 0 (integral)", "c_m", ">=", "0", nonneg});
    }
    {
        bool ok = true;
        for (std::size_t m = 0; m < coeffs.size(); ++m)
            if (static_cast<long>(m) > n || coeffs[m] > Rational(binomial(static_cast<unsigned long>(n), m))) ok = false;
        ck.push_back({"c_m <= binomial(n_X, m)", "c_m", "<=", "binomial(n_X, m)", ok});
    }
    if (d.is_pure()) {
        // Q_X equals P_X here, so the per-degree bounds apply to the Betti numbers.
        const RatPoly p = homology_poincare_pure(d);
        bool dominated = true, pavlov = true;
        for (std::size_t m = 0; m < p.size(); ++m) {
            if (p.coeff(m) > rep.q_poly.coeff(m)) dominated = false;
            if (m >= rep.pavlov_perdegree.size() || p.coeff(m) > Rational(rep.pavlov_perdegree[m])) pavlov = false;
        }
        ck.push_back({"dim H_m <= c_m", "dim H_m", "<=", "c_m", dominated});
        ck.push_back({"dim H_m <= pavlov_perdegree", "dim H_m", "<=", "pavlov_perdegree", pavlov});
        const Rational dim_h = p(Rational(1));
        for (const auto& [name, value] : rep.upper_bounds())
            ck.push_back(compare("dim_H <= " + name, dim_h, "<=", value));
    }
    return rep;
}

HilaliVerdict hilali_verdict(const ExponentData& d) {
    HilaliVerdict v;
    v.dim_pi = d.q() + d.r();
    const SacReport sac = check_condition(d, ConditionMode::SAC);
    if (!sac.holds) {
        v.kind = VerdictKind::NotApplicable;
        v.reason = "exponent data fails the strong arithmetic condition";
        return v;
    }
    if (d.is_pure()) {
        const InvariantReport inv = invariants(d);
        v.dim_H = inv.dim_H;
        v.kind = Integer(v.dim_pi) <= *v.dim_H ? VerdictKind::Verified : VerdictKind::PureFail;
        return v;
    }
    const BoundsReport br = bounds_report(d);
    v.kind = VerdictKind::BoundsConsistent;
    v.upper_bounds = br.upper_bounds();
    v.min_upper_bound = br.min_upper_bound();
    // beta_0 = beta_{n_X} = 1 with n_X > 0.
    v.dim_H_lower_bound = 2;
    v.dim_pi_within_upper_bound = Rational(v.dim_pi) <= v.min_upper_bound;
    return v;
}

std::vector<Check> inequality_suite(const ExponentData& d) {
    const long n = d.formal_dim();
    const long q = d.q();
    const long r = d.r();
    long sum_b = 0, sum_odd = 0, sum_2a = 0;
    for (int x : d.b()) {
        sum_b += x;
        sum_odd += 2L * x - 1;
    }
    for (int x : d.a()) sum_2a += 2L * x;
    const long chi_pi = r - q;

    std::vector<Check> out;
    auto add = [&out](std::string name, long lhs, long rhs) {
        out.push_back({std::move(name), std::to_string(lhs), ">=", std::to_string(rhs), lhs >= rhs});
    };
    add("n_X >= q + r", n, q + r);
    add("n_X >= sum b", n, sum_b);
    add("2 n_X - 1 >= sum (2b - 1)", 2 * n - 1, sum_odd);
    add("n_X >= sum 2a", n, sum_2a);
    add("n_X >= 3q - r", n, 3 * q - r);
    add("3q - r >= 2q", 3 * q - r, 2 * q);
    add("2q >= q + r", 2 * q, q + r);
    add("2 n_X - q >= sum (2b - 1)", 2 * n - q, sum_odd);
    add("n_X >= sum 2a - 2 chi_pi", n, sum_2a - 2 * chi_pi);
    return out;
}

}  // namespace elliptica
