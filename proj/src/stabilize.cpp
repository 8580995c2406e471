#include "elliptica/stabilize.hpp"

#include "elliptica/errors.hpp"
#include "elliptica/parallel.hpp"
#include "elliptica/sturm.hpp"

#include <stdexcept>
#include <utility>

namespace elliptica {

namespace {

// Beyond this the per-n search is not attempted.
constexpr unsigned long kMaxTailConstant = 1UL << 14;
constexpr std::size_t kCellBudget = 20000;

PowerCheck by_sturm(const PoincarePair& pp, unsigned n, const Rational& eps, PowerCheck out) {
    const RatPoly f = pp.homology.pow(n) - Rational(n) * pp.homotopy;
    const RayDecision dec = decide_positive_on_ray(f, eps);
    out.holds = dec.positive;
    out.method = "sturm";
    if (dec.certificate) {
        out.chain_length = dec.certificate->chain.size();
        out.root_count = dec.certificate->root_count;
    }
    return out;
}

// P and P^pi have non-negative coefficients, so both are nondecreasing on
// [0, inf) and P(alpha)^n - n P^pi(beta) bounds f from below on [alpha, beta].
std::optional<PowerCheck> by_cells(const PoincarePair& pp, unsigned n, const Rational& eps, PowerCheck out) {
    const RatPoly& p = pp.homology;
    const RatPoly& pi = pp.homotopy;
    const std::size_t nd = static_cast<std::size_t>(n) * p.degree();
    const std::size_t e = pi.degree();
    if (nd <= e) return std::nullopt;

    // For t >= T >= 1: P(t)^n >= lc^n t^(nd) and P^pi(t) <= P^pi(1) t^e.
    const Rational lcn = rational_pow(p.leading(), n);
    const Rational rhs = Rational(n) * pi(Rational(1));
    Rational tail = eps > 1 ? eps : Rational(1);
    while (!(lcn * rational_pow(tail, nd - e) > rhs)) tail *= 2;
    out.tail_from = tail;

    std::vector<std::pair<Rational, Rational>> stack{{eps, tail}};
    std::size_t cells = 0;
    while (!stack.empty()) {
        auto [lo, hi] = std::move(stack.back());
        stack.pop_back();
        if (++cells > kCellBudget) return std::nullopt;
        const Rational p_lo = rational_pow(p(lo), n);
        const Rational n_pi = Rational(n) * pi(hi);
        if (p_lo > n_pi) continue;
        if (!(p_lo > Rational(n) * pi(lo))) {
            out.holds = false;
            out.method = "witness";
            out.witness = lo;
            out.cells = cells;
            return out;
        }
        Rational mid = (lo + hi) / 2;
        stack.emplace_back(mid, std::move(hi));
        stack.emplace_back(std::move(lo), std::move(mid));
    }
    out.holds = true;
    out.method = "cells";
    out.cells = cells;
    return out;
}

}  // namespace

Rational rational_pow(const Rational& c, unsigned long n) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), c.get_num_mpz_t(), n);
    mpz_pow_ui(out.get_den_mpz_t(), c.get_den_mpz_t(), n);
    return out;
}

unsigned long tail_constant(const Rational& c) {
    if (c <= 1) throw DomainError("tail constant needs P(eps) > 1");
    const Rational inv = 1 / (c - 1);
    mpz_class ceil_inv;
    mpz_cdiv_q(ceil_inv.get_mpz_t(), inv.get_num_mpz_t(), inv.get_den_mpz_t());
    if (ceil_inv > kMaxTailConstant)
        throw DomainError("tail constant " + ceil_inv.get_str() + " exceeds " + std::to_string(kMaxTailConstant) +
                          "; choose a larger eps");
    return std::max(1UL, ceil_inv.get_ui());
}

PoincarePair poincare_pair(const ExponentData& d) {
    if (!d.is_pure())
        throw NoExactHomology("P_X is not determined by exponent data with q > r; pass a model space");
    return {homology_poincare_pure(d), homotopy_poincare(d)};
}

PoincarePair poincare_pair(const SpaceExpr& e) {
    return {homology_poincare_model(e), homotopy_poincare(exponent_data(e))};
}

PowerCheck check_power_inequality(const PoincarePair& pp, unsigned n, const Rational& eps) {
    if (sgn(eps) <= 0) throw DomainError("eps must be positive");
    if (n == 0) throw DomainError("n must be positive");
    const RatPoly& p = pp.homology;
    const RatPoly& pi = pp.homotopy;
    if (p.is_zero()) throw ZeroPolynomial();

    PowerCheck out;
    out.n = n;
    out.value_at_eps = rational_pow(p(eps), n) - Rational(n) * pi(eps);
    if (sgn(out.value_at_eps) <= 0) {
        out.method = "endpoint";
        return out;
    }
    const bool monotone = p.has_nonnegative_coeffs() && pi.has_nonnegative_coeffs();
    if (pi.is_zero()) {
        if (monotone) {
            out.holds = true;
            out.method = "endpoint";
            return out;
        }
        return by_sturm(pp, n, eps, std::move(out));
    }

    const std::size_t nd = static_cast<std::size_t>(n) * p.degree();
    const std::size_t e = pi.degree();
    if (nd < e || (nd == e && rational_pow(p.leading(), n) < Rational(n) * pi.leading())) {
        out.method = "leading";
        return out;
    }
    if (nd <= kSturmDegreeLimit || !monotone) return by_sturm(pp, n, eps, std::move(out));
    if (auto cells = by_cells(pp, n, eps, out)) return *std::move(cells);
    return by_sturm(pp, n, eps, std::move(out));
}

bool power_inequality_holds(const PoincarePair& pp, unsigned n, const Rational& eps) {
    return check_power_inequality(pp, n, eps).holds;
}

bool power_inequality_holds(const ExponentData& d, unsigned n, const Rational& eps) {
    return power_inequality_holds(poincare_pair(d), n, eps);
}

ThresholdResult stabilization_threshold(const PoincarePair& pp, const Rational& eps, unsigned threads) {
    if (sgn(eps) <= 0) throw DomainError("eps must be positive");
    ThresholdResult res;
    res.eps = eps;
    if (pp.homotopy.is_zero() && pp.homology == RatPoly::constant(1)) {
        // Point space: 0 = n P^pi < P^n = 1 for every n.
        res.degenerate = true;
        res.per_n.push_back(check_power_inequality(pp, 1, eps));
        return res;
    }

    const unsigned long tail = tail_constant(pp.homology(eps));
    res.tail_constant = tail;
    res.per_n.resize(tail);
    parallel_for(tail, threads, [&](std::size_t i) {
        res.per_n[i] = check_power_inequality(pp, static_cast<unsigned>(i + 1), eps);
    });
    while (!res.per_n.back().holds)
        res.per_n.push_back(check_power_inequality(pp, static_cast<unsigned>(res.per_n.size() + 1), eps));

    unsigned long largest_fail = 0;
    for (const auto& c : res.per_n)
        if (!c.holds) largest_fail = c.n;
    res.threshold = largest_fail + 1;

    // Monotone tail: with n >= N*, (n+1)/n <= P(eps) <= P(t), so success at n
    // forces success at n + 1.
    if (!check_power_inequality(pp, static_cast<unsigned>(res.per_n.size() + 1), eps).holds)
        throw std::logic_error("monotone tail violated after n = " + std::to_string(res.per_n.size()));

    res.counterexample_alarm = eps == 1 && res.threshold >= 4;
    return res;
}

ThresholdResult stabilization_threshold(const ExponentData& d, const Rational& eps, unsigned threads) {
    return stabilization_threshold(poincare_pair(d), eps, threads);
}

ThresholdResult stabilization_threshold(const SpaceExpr& e, const Rational& eps, unsigned threads) {
    return stabilization_threshold(poincare_pair(e), eps, threads);
}

}  // namespace elliptica
