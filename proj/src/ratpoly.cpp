#include "elliptica/ratpoly.hpp"

#include "elliptica/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace elliptica {

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

RatPoly::RatPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

RatPoly RatPoly::constant(const Rational& c) { return RatPoly(std::vector<Rational>{c}); }

RatPoly RatPoly::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return RatPoly(std::move(v));
}

RatPoly RatPoly::geometric(std::size_t length) {
    return RatPoly(std::vector<Rational>(length, Rational(1)));
}

void RatPoly::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

std::size_t RatPoly::degree() const {
    if (coeffs_.empty()) throw ZeroPolynomial();
    return coeffs_.size() - 1;
}

const Rational& RatPoly::leading() const {
    if (coeffs_.empty()) throw ZeroPolynomial();
    return coeffs_.back();
}

Rational RatPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

RatPoly& RatPoly::operator+=(const RatPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

RatPoly operator*(const RatPoly& lhs, const RatPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (sgn(lhs.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return RatPoly(std::move(out));
}

RatPoly& RatPoly::operator*=(const RatPoly& rhs) { return *this = *this * rhs; }

RatPoly& RatPoly::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

RatPoly RatPoly::operator-() const {
    RatPoly r = *this;
    for (auto& x : r.coeffs_) x = -x;
    return r;
}

RatPoly RatPoly::pow(unsigned exponent) const {
    RatPoly result = constant(1);
    RatPoly base = *this;
    while (exponent) {
        if (exponent & 1u) result *= base;
        exponent >>= 1;
        if (exponent) base = base * base;
    }
    return result;
}

RatPoly RatPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return RatPoly(std::move(d));
}

RatPoly RatPoly::substitute_power(std::size_t k) const {
    if (is_zero() || k == 1) return *this;
    if (k == 0) return constant((*this)(Rational(1)));
    std::vector<Rational> v((coeffs_.size() - 1) * k + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * k] = coeffs_[i];
    return RatPoly(std::move(v));
}

RatPoly RatPoly::taylor_shift(const Rational& shift) const {
    // Horner in the ring Q[s]: p(s + shift) = (...(c_n (s+shift) + c_{n-1})(s+shift) ...)
    std::vector<Rational> v = coeffs_;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j > i; --j) v[j - 1] += shift * v[j];
    return RatPoly(std::move(v));
}

Rational RatPoly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

bool RatPoly::is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c.get_den() == 1; });
}

bool RatPoly::has_nonnegative_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) >= 0; });
}

std::string RatPoly::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (sgn(c) == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << "*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

DivMod divmod(const RatPoly& num, const RatPoly& den) {
    if (den.is_zero()) throw ZeroPolynomial();
    if (num.is_zero() || num.size() < den.size()) return {RatPoly{}, num};
    std::vector<Rational> rem(num.coeffs().begin(), num.coeffs().end());
    const std::size_t dn = den.size();
    std::vector<Rational> quo(rem.size() - dn + 1);
    const Rational& lead = den.leading();
    for (std::size_t k = quo.size(); k-- > 0;) {
        Rational c = rem[k + dn - 1] / lead;
        quo[k] = c;
        if (sgn(c) == 0) continue;
        for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= c * den.coeffs()[j];
    }
    rem.resize(dn - 1);
    return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

Rational eval_at(const RatPoly& p, const Rational& x) { return p(x); }

bool is_palindromic(const RatPoly& p) {
    auto c = p.coeffs();
    for (std::size_t i = 0, j = c.size(); i < j; ++i) {
        --j;
        if (c[i] != c[j]) return false;
    }
    return true;
}

RatPoly cyclotomic_quotient(std::span<const int> b, std::span<const int> a,
                            unsigned extra_unit_factors) {
    const long unit_excess =
        static_cast<long>(b.size()) - static_cast<long>(a.size()) - static_cast<long>(extra_unit_factors);
    if (unit_excess < 0)
        throw NonPolynomialQuotient("denominator keeps (1 - t)^" + std::to_string(-unit_excess) +
                                    " after cancellation");
    for (int x : b)
        if (x < 1) throw DomainError("exponents must be positive");
    for (int x : a)
        if (x < 1) throw DomainError("exponents must be positive");

    RatPoly numerator = RatPoly{1, -1}.pow(static_cast<unsigned>(unit_excess));
    for (int x : b) numerator *= RatPoly::geometric(2 * static_cast<std::size_t>(x));

    RatPoly quotient = std::move(numerator);
    for (int x : a) {
        auto [q, r] = divmod(quotient, RatPoly::geometric(2 * static_cast<std::size_t>(x)));
        if (!r.is_zero())
            throw NonPolynomialQuotient("1 + t + ... + t^" + std::to_string(2 * x - 1) +
                                        " does not divide the numerator");
        quotient = std::move(q);
    }
    return quotient;
}

namespace {

class PolyLexer {
public:
    explicit PolyLexer(const std::string& s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    Integer digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected digits", start);
        return Integer(s_.substr(start, pos_ - start));
    }
    bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
    std::size_t pos() const { return pos_; }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

Rational read_number(PolyLexer& lx) {
    Integer whole = lx.digits();
    Rational value(whole);
    if (lx.accept('.')) {
        if (!lx.at_digit()) return value;
        std::size_t before = lx.pos();
        Integer frac = lx.digits();
        std::size_t ndig = lx.pos() - before;
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, ndig);
        Rational part(frac, scale);
        part.canonicalize();
        value += part;
    } else if (lx.accept('/')) {
        Integer den = lx.digits();
        if (den == 0) throw ParseError("zero denominator", lx.pos());
        value /= Rational(den);
    }
    value.canonicalize();
    return value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    PolyLexer lx(text);
    bool neg = false;
    if (lx.accept('-')) neg = true;
    else lx.accept('+');
    Rational v = read_number(lx);
    if (!lx.done()) throw ParseError("trailing characters in rational", lx.pos());
    return neg ? Rational(-v) : v;
}

RatPoly parse_poly(const std::string& text) {
    if (text.find(',') != std::string::npos) {
        std::vector<Rational> coeffs;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) coeffs.push_back(parse_rational(item));
        return RatPoly(std::move(coeffs));
    }
    PolyLexer lx(text);
    std::vector<Rational> coeffs;
    bool first = true;
    while (!lx.done()) {
        int sign = 1;
        if (lx.accept('-')) sign = -1;
        else if (!lx.accept('+') && !first) throw ParseError("expected '+' or '-'", lx.pos());
        first = false;

        Rational c = 1;
        bool have_coeff = false;
        if (lx.at_digit()) {
            c = read_number(lx);
            have_coeff = true;
            lx.accept('*');
        }
        std::size_t power = 0;
        char v = lx.peek();
        if (v == 't' || v == 'T' || v == 'x' || v == 'X') {
            lx.accept(v);
            power = 1;
            if (lx.accept('^')) {
                Integer e = lx.digits();
                if (!e.fits_uint_p() || e > 100000) throw ParseError("exponent too large", lx.pos());
                power = e.get_ui();
            }
        } else if (!have_coeff) {
            throw ParseError("expected a term", lx.pos());
        }
        if (coeffs.size() <= power) coeffs.resize(power + 1);
        coeffs[power] += sign * c;
    }
    if (first) throw ParseError("empty polynomial", 0);
    return RatPoly(std::move(coeffs));
}

}  // namespace elliptica
