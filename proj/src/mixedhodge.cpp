#include "elliptica/mixedhodge.hpp"

#include "elliptica/errors.hpp"
#include "elliptica/parallel.hpp"
#include "elliptica/stabilize.hpp"

#include <utility>

namespace elliptica {

MHPoly MHPoly::one() {
    MHPoly m;
    m.add_term(0, 0, 0, 1);
    return m;
}

void MHPoly::add_term(int k, int p, int q, const Integer& dim) {
    if (dim == 0) return;
    auto [it, inserted] = terms_.try_emplace(Key{k, p, q}, dim);
    if (!inserted) {
        it->second += dim;
        if (it->second == 0) terms_.erase(it);
    }
}

bool MHPoly::is_hodge_tate() const {
    for (const auto& [key, dim] : terms_)
        if (std::get<1>(key) != std::get<2>(key)) return false;
    return true;
}

MHPoly& MHPoly::operator+=(const MHPoly& rhs) {
    for (const auto& [key, dim] : rhs.terms_) add_term(std::get<0>(key), std::get<1>(key), std::get<2>(key), dim);
    return *this;
}

MHPoly operator*(const MHPoly& lhs, const MHPoly& rhs) {
    MHPoly out;
    for (const auto& [kl, dl] : lhs.terms_)
        for (const auto& [kr, dr] : rhs.terms_)
            out.add_term(std::get<0>(kl) + std::get<0>(kr), std::get<1>(kl) + std::get<1>(kr),
                         std::get<2>(kl) + std::get<2>(kr), dl * dr);
    return out;
}

MHPoly MHPoly::pow(unsigned n) const {
    MHPoly result = one();
    MHPoly base = *this;
    while (n > 0) {
        if (n & 1U) result = result * base;
        n >>= 1U;
        if (n > 0) base = base * base;
    }
    return result;
}

Rational MHPoly::operator()(const Rational& t, const Rational& u, const Rational& v) const {
    Rational sum = 0;
    for (const auto& [key, dim] : terms_) {
        const auto [k, p, q] = key;
        sum += Rational(dim) * rational_pow(t, k) * rational_pow(u, p) * rational_pow(v, q);
    }
    return sum;
}

namespace {

int projective_dim(const Leaf& leaf) {
    if (leaf.kind != LeafKind::Projective)
        throw UnsupportedLeaf("mixed Hodge polynomials are only modelled for products of CP^m, not " + render(leaf));
    return leaf.dim;
}

}  // namespace

MHPoly mh_model(const SpaceExpr& e) {
    MHPoly out = MHPoly::one();
    for (const Leaf& leaf : e.factors()) {
        const int m = projective_dim(leaf);
        MHPoly factor;
        for (int j = 0; j <= m; ++j) factor.add_term(2 * j, j, j, 1);
        out = out * factor;
    }
    return out;
}

MHPoly mh_pi_model(const SpaceExpr& e) {
    MHPoly out;
    for (const Leaf& leaf : e.factors()) {
        const int m = projective_dim(leaf);
        out.add_term(2, 1, 1, 1);
        out.add_term(2 * m + 1, m + 1, m + 1, 1);
    }
    return out;
}

RatPoly specialize(const MHPoly& m) {
    std::vector<Rational> coeffs;
    for (const auto& [key, dim] : m.terms()) {
        const auto k = static_cast<std::size_t>(std::get<0>(key));
        if (coeffs.size() <= k) coeffs.resize(k + 1);
        coeffs[k] += dim;
    }
    return RatPoly(std::move(coeffs));
}

std::string to_string(BoxVerdict v) {
    switch (v) {
        case BoxVerdict::Positive: return "Positive";
        case BoxVerdict::NotPositive: return "NotPositive";
        case BoxVerdict::Unknown: return "Unknown";
    }
    return "Unknown";
}

namespace {

constexpr std::size_t kBoxCellBudget = 200000;

// c * t^k * w^p with p = q folded into w = uv.
struct BiTerm {
    Rational c;
    unsigned long k;
    unsigned long p;
};

std::vector<BiTerm> fold_uv(const MHPoly& m) {
    std::vector<BiTerm> out;
    for (const auto& [key, dim] : m.terms()) {
        const auto [k, p, q] = key;
        if (p != q) throw DomainError("box check requires p = q on every term");
        out.push_back({Rational(dim), static_cast<unsigned long>(k), static_cast<unsigned long>(p)});
    }
    return out;
}

Rational eval(const std::vector<BiTerm>& terms, const Rational& t, const Rational& w) {
    Rational sum = 0;
    for (const auto& term : terms) sum += term.c * rational_pow(t, term.k) * rational_pow(w, term.p);
    return sum;
}

struct Cell {
    Rational t0, t1, w0, w1;
    int depth;
};

struct BoxProblem {
    std::vector<BiTerm> a;  // MH
    std::vector<BiTerm> b;  // MH^pi
    unsigned n;
    Rational eps, rmax;
    int max_depth;

    Rational d(const Rational& t, const Rational& w) const {
        return rational_pow(eval(a, t, w), n) - Rational(n) * eval(b, t, w);
    }

    // u in [eps, rmax] with uv = w and v in [eps, rmax].
    std::array<Rational, 3> lift(const Rational& t, const Rational& w) const {
        Rational u = w / rmax;
        if (u < eps) u = eps;
        return {t, u, w / u};
    }

    BoxResult solve(Cell root) const {
        BoxResult res;
        res.verdict = BoxVerdict::Positive;
        std::vector<Cell> stack{std::move(root)};
        while (!stack.empty()) {
            Cell c = std::move(stack.back());
            stack.pop_back();
            if (++res.cells > kBoxCellBudget) {
                res.verdict = BoxVerdict::Unknown;
                return res;
            }
            if (rational_pow(eval(a, c.t0, c.w0), n) > Rational(n) * eval(b, c.t1, c.w1)) continue;
            for (const auto& [t, w] : {std::pair{c.t0, c.w0}, {c.t1, c.w0}, {c.t0, c.w1}, {c.t1, c.w1}}) {
                if (sgn(d(t, w)) <= 0) {
                    res.verdict = BoxVerdict::NotPositive;
                    res.witness = lift(t, w);
                    return res;
                }
            }
            if (c.depth >= max_depth) {
                res.verdict = BoxVerdict::Unknown;
                continue;
            }
            const Rational tm = (c.t0 + c.t1) / 2, wm = (c.w0 + c.w1) / 2;
            const int dd = c.depth + 1;
            stack.push_back({tm, c.t1, wm, c.w1, dd});
            stack.push_back({c.t0, tm, wm, c.w1, dd});
            stack.push_back({tm, c.t1, c.w0, wm, dd});
            stack.push_back({c.t0, tm, c.w0, wm, dd});
        }
        return res;
    }
};

BoxResult merge(std::vector<BoxResult>& parts) {
    BoxResult out;
    out.verdict = BoxVerdict::Positive;
    for (auto& p : parts) {
        out.cells += p.cells;
        if (p.verdict == BoxVerdict::NotPositive && out.verdict != BoxVerdict::NotPositive) {
            out.verdict = BoxVerdict::NotPositive;
            out.witness = p.witness;
        } else if (p.verdict == BoxVerdict::Unknown && out.verdict == BoxVerdict::Positive) {
            out.verdict = BoxVerdict::Unknown;
        }
    }
    return out;
}

void check_box_args(const Rational& eps, const Rational& rmax, int max_depth) {
    if (sgn(eps) <= 0) throw DomainError("eps must be positive");
    if (rmax < eps) throw DomainError("rmax must be at least eps");
    if (max_depth < 1) throw DomainError("max_depth must be positive");
}

}  // namespace

BoxResult mh_box_inequality(const SpaceExpr& e, unsigned n, const Rational& eps, const Rational& rmax,
                            int max_depth, unsigned threads) {
    check_box_args(eps, rmax, max_depth);
    if (n == 0) throw DomainError("n must be positive");
    const BoxProblem prob{fold_uv(mh_model(e)), fold_uv(mh_pi_model(e)), n, eps, rmax, max_depth};
    const Rational w_lo = eps * eps, w_hi = rmax * rmax;
    if (eps == rmax) return prob.solve({eps, eps, w_lo, w_lo, max_depth});

    // Top level: a 4 x 4 grid at depth 2, one task per cell, merged in grid order.
    constexpr int kSplit = 4;
    std::vector<BoxResult> parts(kSplit * kSplit);
    parallel_for(parts.size(), threads, [&](std::size_t idx) {
        const int i = static_cast<int>(idx) / kSplit, j = static_cast<int>(idx) % kSplit;
        const Rational dt = (rmax - eps) / kSplit, dw = (w_hi - w_lo) / kSplit;
        parts[idx] = prob.solve({eps + dt * i, eps + dt * (i + 1), w_lo + dw * j, w_lo + dw * (j + 1),
                                 std::min(2, max_depth)});
    });
    return merge(parts);
}

BoxThresholdResult mh_box_threshold(const SpaceExpr& e, const Rational& eps, const Rational& rmax, int max_depth,
                                    unsigned threads) {
    check_box_args(eps, rmax, max_depth);
    BoxThresholdResult res;
    res.eps = eps;
    res.rmax = rmax;
    res.max_depth = max_depth;
    res.tail_constant = tail_constant(mh_model(e)(eps, eps, eps));

    // Past N* each extra n is one more chance; give up after this many.
    constexpr unsigned long kExtension = 256;
    for (unsigned long n = 1;; ++n) {
        res.per_n.push_back(mh_box_inequality(e, static_cast<unsigned>(n), eps, rmax, max_depth, threads));
        const BoxVerdict v = res.per_n.back().verdict;
        if (v == BoxVerdict::Unknown) return res;
        if (n >= res.tail_constant && v == BoxVerdict::Positive) break;
        if (n >= res.tail_constant + kExtension) return res;
    }
    unsigned long largest_fail = 0;
    for (std::size_t i = 0; i < res.per_n.size(); ++i)
        if (res.per_n[i].verdict != BoxVerdict::Positive) largest_fail = i + 1;
    res.decided = true;
    res.threshold = largest_fail + 1;
    return res;
}

}  // namespace elliptica
