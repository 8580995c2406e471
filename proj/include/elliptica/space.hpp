#pragma once

#include <compare>
#include <string>
#include <vector>

namespace elliptica {

enum class LeafKind { Sphere, Projective };

/// S^n (real dimension n >= 2) or CP^m (complex dimension m >= 1).
struct Leaf {
    LeafKind kind;
    int dim;

    static Leaf sphere(int n);
    static Leaf projective(int m);

    auto operator<=>(const Leaf&) const = default;
};

/// A model space in normal form: the ordered list of its leaf factors.
///
/// Powers are expanded and nested products flattened, so "(CP1)^3" and
/// "CP1 x (CP1 x CP1)" both normalize to three CP1 leaves. A single leaf is a
/// one-element product.
class SpaceExpr {
public:
    explicit SpaceExpr(std::vector<Leaf> factors);

    const std::vector<Leaf>& factors() const noexcept { return factors_; }
    bool is_leaf() const noexcept { return factors_.size() == 1; }
    bool all_projective() const noexcept;

    /// Product space X x Y.
    friend SpaceExpr operator*(const SpaceExpr& x, const SpaceExpr& y);
    SpaceExpr power(int k) const;

    friend bool operator==(const SpaceExpr&, const SpaceExpr&) = default;

private:
    std::vector<Leaf> factors_;
};

/// Grammar (whitespace and case insensitive):
///   expr := term ('x' term)*
///   term := atom ['^' INT]
///   atom := 'S' INT | 'CP' INT | '(' expr ')'
/// Throws ParseError (with position) or DomainError for S0, S1, CP0, ^0.
SpaceExpr parse_space(const std::string& text);

/// Canonical text, runs of equal leaves folded into powers: "S4 x CP2^3".
std::string render(const SpaceExpr& e);
std::string render(const Leaf& leaf);

}  // namespace elliptica
