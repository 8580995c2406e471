#include "elliptica/sturm.hpp"

#include "elliptica/errors.hpp"

namespace elliptica {

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    std::vector<RatPoly> chain{p};
    RatPoly d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(std::move(d));
    for (;;) {
        const auto& a = chain[chain.size() - 2];
        const auto& b = chain.back();
        RatPoly r = divmod(a, b).remainder;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

namespace {

int count_variations(const std::vector<int>& signs) {
    int v = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

}  // namespace

int sign_variations(const std::vector<RatPoly>& chain, const Rational& x) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& q : chain) signs.push_back(sgn(q(x)));
    return count_variations(signs);
}

int sign_variations_at_infinity(const std::vector<RatPoly>& chain) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& q : chain) signs.push_back(sgn(q.leading()));
    return count_variations(signs);
}

SturmCertificate count_roots(const RatPoly& p, const Rational& lo, const std::optional<Rational>& hi) {
    SturmCertificate cert;
    cert.chain = sturm_chain(p);
    cert.lo = lo;
    cert.hi = hi;
    cert.variations_lo = sign_variations(cert.chain, lo);
    cert.variations_hi = hi ? sign_variations(cert.chain, *hi) : sign_variations_at_infinity(cert.chain);
    cert.root_count = static_cast<std::size_t>(cert.variations_lo - cert.variations_hi);
    return cert;
}

RayDecision decide_positive_on_ray(const RatPoly& p, const Rational& eps) {
    if (p.is_zero()) throw ZeroPolynomial();
    if (sgn(eps) <= 0) throw DomainError("ray start must be positive");
    RayDecision d;
    d.value_at_eps = p(eps);
    d.leading_positive = sgn(p.leading()) > 0;
    if (sgn(d.value_at_eps) <= 0 || !d.leading_positive) return d;
    d.certificate = count_roots(p, eps);
    d.positive = d.certificate->root_count == 0;
    return d;
}

bool positive_on_ray(const RatPoly& p, const Rational& eps) { return decide_positive_on_ray(p, eps).positive; }

}  // namespace elliptica
