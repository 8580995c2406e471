#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace elliptica {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial over Q, lowest degree first.
///
/// The coefficient vector never ends in a zero; the zero polynomial is the
/// empty vector. Every operation is exact.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);
    RatPoly(std::initializer_list<long> coeffs);

    static RatPoly constant(const Rational& c);
    static RatPoly monomial(const Rational& c, std::size_t degree);
    /// 1 + t + ... + t^(length-1)
    static RatPoly geometric(std::size_t length);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Throws ZeroPolynomial for the zero polynomial.
    std::size_t degree() const;
    const Rational& leading() const;
    /// Coefficient of t^i, zero past the degree.
    Rational coeff(std::size_t i) const;
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }
    std::size_t size() const noexcept { return coeffs_.size(); }

    RatPoly& operator+=(const RatPoly& rhs);
    RatPoly& operator-=(const RatPoly& rhs);
    RatPoly& operator*=(const RatPoly& rhs);
    RatPoly& operator*=(const Rational& c);

    friend RatPoly operator+(RatPoly lhs, const RatPoly& rhs) { return lhs += rhs; }
    friend RatPoly operator-(RatPoly lhs, const RatPoly& rhs) { return lhs -= rhs; }
    friend RatPoly operator*(const RatPoly& lhs, const RatPoly& rhs);
    friend RatPoly operator*(RatPoly lhs, const Rational& c) { return lhs *= c; }
    friend RatPoly operator*(const Rational& c, RatPoly rhs) { return rhs *= c; }
    RatPoly operator-() const;

    friend bool operator==(const RatPoly&, const RatPoly&) = default;

    RatPoly pow(unsigned exponent) const;
    RatPoly derivative() const;
    /// p(x^k)
    RatPoly substitute_power(std::size_t k) const;
    /// p(t + shift)
    RatPoly taylor_shift(const Rational& shift) const;

    Rational operator()(const Rational& x) const;

    /// True when every coefficient has denominator 1.
    bool is_integral() const;
    bool has_nonnegative_coeffs() const;

    /// Human form such as "1 + 2*t^2 + t^4".
    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

struct DivMod {
    RatPoly quotient;
    RatPoly remainder;
};

/// Euclidean division; throws ZeroPolynomial when the divisor is zero.
DivMod divmod(const RatPoly& num, const RatPoly& den);

Rational eval_at(const RatPoly& p, const Rational& x);

/// coeff[i] == coeff[deg - i] for all i. The zero polynomial counts as palindromic.
bool is_palindromic(const RatPoly& p);

/// prod(1 - t^(2b)) / ((1 - t)^extra * prod(1 - t^(2a))), computed by cancelling
/// the (1 - t) factors of 1 - t^k = (1 - t)(1 + ... + t^(k-1)) and dividing
/// the remaining products of geometric sums. Throws NonPolynomialQuotient when
/// the quotient is not a polynomial.
RatPoly cyclotomic_quotient(std::span<const int> b, std::span<const int> a,
                            unsigned extra_unit_factors);

/// Parses "1 + 2t^2 - 3/2*t^3", "1,0,2" (coefficient list) or a bare constant.
RatPoly parse_poly(const std::string& text);

Rational parse_rational(const std::string& text);

}  // namespace elliptica
