#pragma once

#include "elliptica/ratpoly.hpp"
#include "elliptica/space.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace elliptica {

/// Sparse trivariate polynomial sum dim * t^k u^p v^q with positive integer
/// dimensions; absent keys are zero.
class MHPoly {
public:
    using Key = std::tuple<int, int, int>;  // (k, p, q)

    MHPoly() = default;

    static MHPoly one();

    /// Adds dim to the (k, p, q) coefficient; zero results are erased.
    void add_term(int k, int p, int q, const Integer& dim);

    const std::map<Key, Integer>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Every term has p = q.
    bool is_hodge_tate() const;

    MHPoly& operator+=(const MHPoly& rhs);
    friend MHPoly operator+(MHPoly lhs, const MHPoly& rhs) { return lhs += rhs; }
    friend MHPoly operator*(const MHPoly& lhs, const MHPoly& rhs);
    MHPoly pow(unsigned n) const;

    Rational operator()(const Rational& t, const Rational& u, const Rational& v) const;

    friend bool operator==(const MHPoly&, const MHPoly&) = default;

private:
    std::map<Key, Integer> terms_;
};

/// prod over CP^m factors of 1 + t^2 uv + ... + t^(2m) (uv)^m.
/// Throws UnsupportedLeaf for sphere factors.
MHPoly mh_model(const SpaceExpr& e);
/// sum over CP^m factors of t^2 uv + t^(2m+1) (uv)^(m+1).
MHPoly mh_pi_model(const SpaceExpr& e);

/// Sets u = v = 1.
RatPoly specialize(const MHPoly& m);

enum class BoxVerdict { Positive, NotPositive, Unknown };

std::string to_string(BoxVerdict v);

struct BoxResult {
    BoxVerdict verdict = BoxVerdict::Unknown;
    /// (t, u, v) with MH^n - n MH^pi <= 0, for NotPositive.
    std::optional<std::array<Rational, 3>> witness;
    std::size_t cells = 0;
};

inline constexpr int kDefaultMaxDepth = 12;

/// Decides MH^n - n MH^pi > 0 on [eps, rmax]^3.
///
/// Model polynomials depend on (u, v) only through w = uv, so the search runs
/// over (t, w) in [eps, rmax] x [eps^2, rmax^2] by quadtree bisection. Both
/// polynomials are coordinatewise nondecreasing, so a cell is certified when
/// MH(lo corner)^n > n MH^pi(hi corner). A corner with D <= 0 is a witness.
/// Cells still open at max_depth give Unknown. Throws DomainError unless
/// 0 < eps <= rmax, n >= 1 and max_depth >= 1.
BoxResult mh_box_inequality(const SpaceExpr& e, unsigned n, const Rational& eps, const Rational& rmax,
                            int max_depth = kDefaultMaxDepth, unsigned threads = 1);

struct BoxThresholdResult {
    Rational eps;
    Rational rmax;
    int max_depth = kDefaultMaxDepth;
    /// False when some needed n came back Unknown.
    bool decided = false;
    std::optional<unsigned long> threshold;
    unsigned long tail_constant = 1;
    std::vector<BoxResult> per_n;  // n = 1, 2, ...
};

/// Smallest n0 with every n >= n0 Positive, using the tail constant of
/// MH(eps, eps, eps) in the same way as stabilization_threshold.
BoxThresholdResult mh_box_threshold(const SpaceExpr& e, const Rational& eps, const Rational& rmax,
                                    int max_depth = kDefaultMaxDepth, unsigned threads = 1);

}  // namespace elliptica
