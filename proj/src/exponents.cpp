#include "elliptica/exponents.hpp"

#include "elliptica/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace elliptica {

ExponentData::ExponentData(std::vector<int> b, std::vector<int> a) : b_(std::move(b)), a_(std::move(a)) {
    for (int x : b_)
        if (x < 2) throw DomainError("b-exponents must be at least 2, got " + std::to_string(x));
    for (int x : a_)
        if (x < 1) throw DomainError("a-exponents must be at least 1, got " + std::to_string(x));
    std::sort(b_.begin(), b_.end());
    std::sort(a_.begin(), a_.end());
}

long ExponentData::formal_dim() const {
    long n = 0;
    for (int x : b_) n += 2L * x - 1;
    for (int x : a_) n -= 2L * x - 1;
    return n;
}

namespace {

std::string strip(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

std::vector<int> parse_int_list(const std::string& list, std::size_t offset) {
    std::vector<int> out;
    if (list.empty()) return out;
    std::size_t start = 0;
    while (start <= list.size()) {
        std::size_t comma = list.find(',', start);
        if (comma == std::string::npos) comma = list.size();
        std::string item = list.substr(start, comma - start);
        if (item.empty() || item.size() > 7 ||
            !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw ParseError("expected a positive integer", offset + start);
        out.push_back(std::stoi(item));
        start = comma + 1;
    }
    return out;
}

}  // namespace

ExponentData parse_data(const std::string& text) {
    const std::string s = strip(text);
    std::vector<int> b, a;
    bool seen_b = false, seen_a = false;
    std::size_t start = 0;
    while (start < s.size()) {
        std::size_t semi = s.find(';', start);
        if (semi == std::string::npos) semi = s.size();
        const std::string part = s.substr(start, semi - start);
        if (part.size() < 2 || part[1] != '=') throw ParseError("expected 'b=' or 'a='", start);
        const char key = static_cast<char>(std::tolower(static_cast<unsigned char>(part[0])));
        auto values = parse_int_list(part.substr(2), start + 2);
        if (key == 'b' && !seen_b) {
            b = std::move(values);
            seen_b = true;
        } else if (key == 'a' && !seen_a) {
            a = std::move(values);
            seen_a = true;
        } else {
            throw ParseError("unexpected or repeated key '" + std::string(1, part[0]) + "'", start);
        }
        start = semi + 1;
    }
    if (!seen_b && !seen_a) throw ParseError("empty exponent data", 0);
    return ExponentData(std::move(b), std::move(a));
}

std::string render(const ExponentData& d) {
    std::ostringstream os;
    os << "b=";
    for (std::size_t i = 0; i < d.b().size(); ++i) os << (i ? "," : "") << d.b()[i];
    os << ";a=";
    for (std::size_t i = 0; i < d.a().size(); ++i) os << (i ? "," : "") << d.a()[i];
    return os.str();
}

ExponentData exponent_data(const SpaceExpr& e) {
    std::vector<int> b, a;
    for (const Leaf& leaf : e.factors()) {
        if (leaf.kind == LeafKind::Projective) {
            b.push_back(leaf.dim + 1);
            a.push_back(1);
        } else if (leaf.dim % 2 == 0) {
            b.push_back(leaf.dim);
            a.push_back(leaf.dim / 2);
        } else {
            b.push_back((leaf.dim + 1) / 2);
        }
    }
    return ExponentData(std::move(b), std::move(a));
}

RatPoly homotopy_poincare(const ExponentData& d) {
    RatPoly p;
    for (int x : d.a()) p += RatPoly::monomial(1, 2 * static_cast<std::size_t>(x));
    for (int x : d.b()) p += RatPoly::monomial(1, 2 * static_cast<std::size_t>(x) - 1);
    return p;
}

RatPoly homology_poincare_model(const SpaceExpr& e) {
    RatPoly p = RatPoly::constant(1);
    for (const Leaf& leaf : e.factors()) {
        if (leaf.kind == LeafKind::Sphere)
            p *= RatPoly::constant(1) + RatPoly::monomial(1, static_cast<std::size_t>(leaf.dim));
        else
            p *= RatPoly::geometric(static_cast<std::size_t>(leaf.dim) + 1).substitute_power(2);
    }
    return p;
}

RatPoly homology_poincare_pure(const ExponentData& d) {
    if (!d.is_pure())
        throw PurityError("exact Poincare polynomial needs q = r (got q=" + std::to_string(d.q()) +
                          ", r=" + std::to_string(d.r()) + ")");
    return cyclotomic_quotient(d.b(), d.a(), 0);
}

InvariantReport invariants(const ExponentData& d) {
    InvariantReport rep;
    rep.q = d.q();
    rep.r = d.r();
    rep.dim_pi = rep.q + rep.r;
    rep.formal_dim = d.formal_dim();
    rep.chi_pi = rep.r - rep.q;
    rep.chi = 0;
    if (d.is_pure()) {
        Integer num = 1, den = 1;
        for (int x : d.b()) num *= x;
        for (int x : d.a()) den *= x;
        if (num % den != 0)
            throw NonIntegerChi("prod(b) = " + num.get_str() + " is not divisible by prod(a) = " + den.get_str());
        rep.chi = num / den;
        Rational at_one = homology_poincare_pure(d)(Rational(1));
        if (at_one != Rational(rep.chi))
            throw std::logic_error("P_X(1) disagrees with prod(b)/prod(a)");
        rep.dim_H = rep.chi;
    }
    return rep;
}

InvariantReport invariants(const SpaceExpr& e) {
    InvariantReport rep = invariants(exponent_data(e));
    const RatPoly p = homology_poincare_model(e);
    rep.dim_H = Integer(p(Rational(1)).get_num());
    rep.chi = Integer(p(Rational(-1)).get_num());
    return rep;
}

}  // namespace elliptica
