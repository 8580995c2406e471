#include "elliptica/decompose.hpp"

#include "elliptica/errors.hpp"

namespace elliptica {

namespace {

struct Candidate {
    Leaf leaf;
    RatPoly factor;  // in x = t^2
    std::size_t degree;
};

bool search(const RatPoly& rest, const std::vector<Candidate>& cands, std::size_t start, std::vector<Leaf>& out) {
    if (rest == RatPoly::constant(1)) return true;
    const std::size_t deg = rest.degree();
    for (std::size_t i = start; i < cands.size(); ++i) {
        if (cands[i].degree > deg) continue;
        auto [quo, rem] = divmod(rest, cands[i].factor);
        if (!rem.is_zero() || !quo.is_integral() || !quo.has_nonnegative_coeffs()) continue;
        out.push_back(cands[i].leaf);
        if (search(quo, cands, i, out)) return true;
        out.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<Leaf>> decompose_projective(const RatPoly& p, bool allow_even_spheres) {
    if (p.is_zero() || !p.is_integral() || !p.has_nonnegative_coeffs() || p.coeff(0) != 1) return std::nullopt;

    std::vector<Rational> half;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i % 2 == 1) {
            if (p.coeff(i) != 0) return std::nullopt;
            continue;
        }
        half.push_back(p.coeff(i));
    }
    const RatPoly x_poly(std::move(half));
    if (x_poly == RatPoly::constant(1)) return std::vector<Leaf>{};

    std::vector<Candidate> cands;
    for (std::size_t d = x_poly.degree(); d >= 1; --d) {
        cands.push_back({Leaf::projective(static_cast<int>(d)), RatPoly::geometric(d + 1), d});
        // S^2 and CP^1 share 1 + t^2; the projective factor wins.
        if (allow_even_spheres && d >= 2)
            cands.push_back({Leaf::sphere(2 * static_cast<int>(d)),
                             RatPoly::constant(1) + RatPoly::monomial(1, d), d});
    }

    std::vector<Leaf> out;
    if (!search(x_poly, cands, 0, out)) return std::nullopt;
    return out;
}

}  // namespace elliptica
