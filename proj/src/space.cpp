#include "elliptica/space.hpp"

#include "elliptica/errors.hpp"

#include <algorithm>
#include <cctype>

namespace elliptica {

namespace {

constexpr int kMaxLeafDim = 4096;
constexpr std::size_t kMaxFactors = 4096;

}  // namespace

Leaf Leaf::sphere(int n) {
    if (n < 2) throw DomainError("S" + std::to_string(n) + " is not simply connected");
    if (n > kMaxLeafDim) throw DomainError("sphere dimension too large");
    return {LeafKind::Sphere, n};
}

Leaf Leaf::projective(int m) {
    if (m < 1) throw DomainError("CP" + std::to_string(m) + " is a point");
    if (m > kMaxLeafDim) throw DomainError("projective dimension too large");
    return {LeafKind::Projective, m};
}

SpaceExpr::SpaceExpr(std::vector<Leaf> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw DomainError("a space needs at least one factor");
    if (factors_.size() > kMaxFactors) throw DomainError("too many factors");
}

bool SpaceExpr::all_projective() const noexcept {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const Leaf& l) { return l.kind == LeafKind::Projective; });
}

SpaceExpr operator*(const SpaceExpr& x, const SpaceExpr& y) {
    std::vector<Leaf> f = x.factors_;
    f.insert(f.end(), y.factors_.begin(), y.factors_.end());
    return SpaceExpr(std::move(f));
}

SpaceExpr SpaceExpr::power(int k) const {
    if (k < 1) throw DomainError("power exponent must be at least 1");
    if (factors_.size() * static_cast<std::size_t>(k) > kMaxFactors) throw DomainError("too many factors");
    std::vector<Leaf> f;
    f.reserve(factors_.size() * static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) f.insert(f.end(), factors_.begin(), factors_.end());
    return SpaceExpr(std::move(f));
}

namespace {

class SpaceParser {
public:
    explicit SpaceParser(const std::string& text) : s_(text) {}

    SpaceExpr parse() {
        SpaceExpr e = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? static_cast<char>(std::tolower(static_cast<unsigned char>(s_[pos_]))) : '\0';
    }

    int integer() {
        skip_ws();
        const std::size_t start = pos_;
        long value = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            value = value * 10 + (s_[pos_] - '0');
            if (value > 1'000'000) throw ParseError("integer too large", start);
            ++pos_;
        }
        if (start == pos_) throw ParseError("expected an integer", start);
        return static_cast<int>(value);
    }

    SpaceExpr expr() {
        SpaceExpr e = term();
        while (peek() == 'x') {
            ++pos_;
            e = e * term();
        }
        return e;
    }

    SpaceExpr term() {
        SpaceExpr base = atom();
        if (peek() == '^') {
            ++pos_;
            const std::size_t at = pos_;
            int k = integer();
            if (k < 1) throw DomainError("power exponent must be at least 1 (position " + std::to_string(at) + ")");
            base = base.power(k);
        }
        return base;
    }

    SpaceExpr atom() {
        const char c = peek();
        const std::size_t at = pos_;
        if (c == '(') {
            ++pos_;
            SpaceExpr inner = expr();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (c == 's') {
            ++pos_;
            return SpaceExpr({Leaf::sphere(integer())});
        }
        if (c == 'c') {
            ++pos_;
            if (peek() != 'p') throw ParseError("expected 'CP'", at);
            ++pos_;
            return SpaceExpr({Leaf::projective(integer())});
        }
        if (c == '\0') throw ParseError("unexpected end of input", at);
        throw ParseError("expected 'S', 'CP' or '('", at);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

SpaceExpr parse_space(const std::string& text) { return SpaceParser(text).parse(); }

std::string render(const Leaf& leaf) {
    return (leaf.kind == LeafKind::Sphere ? "S" : "CP") + std::to_string(leaf.dim);
}

std::string render(const SpaceExpr& e) {
    std::string out;
    const auto& f = e.factors();
    for (std::size_t i = 0; i < f.size();) {
        std::size_t j = i;
        while (j < f.size() && f[j] == f[i]) ++j;
        if (!out.empty()) out += " x ";
        out += render(f[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

}  // namespace elliptica
