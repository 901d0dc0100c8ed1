#pragma once

#include <string>
#include <vector>

namespace dcc {

// Element of a finite abelian group given as a direct product of cyclic
// groups: a residue vector, coords[i] in [0, d_i). Comparison is
// lexicographic, which fixes the element enumeration everywhere downstream.
using AbelianElement = std::vector<int>;

class AbelianGroup {
public:
    // factors as given, no normal-form reduction; each must be >= 2
    explicit AbelianGroup(std::vector<int> factors);

    // "C4xC2" (case-insensitive)
    static AbelianGroup parse(const std::string& spec);
    std::string spec() const;

    const std::vector<int>& factors() const { return factors_; }
    int rank() const { return (int)factors_.size(); }
    long long order() const { return order_; }
    long long exponent() const;

    AbelianElement identity() const { return AbelianElement(factors_.size(), 0); }
    bool valid(const AbelianElement& u) const;
    bool is_identity(const AbelianElement& u) const;
    // order exactly 2
    bool is_involution(const AbelianElement& u) const;

    AbelianElement mul(const AbelianElement& u, const AbelianElement& v) const;
    AbelianElement inv(const AbelianElement& u) const;
    AbelianElement square(const AbelianElement& u) const { return mul(u, u); }

    // lexicographic rank of u (coords[0] most significant) and its inverse
    long long index_of(const AbelianElement& u) const;
    AbelianElement element_at(long long idx) const;

    // |{a : a^2 = 1}|, identity included; equals prod gcd(d_i, 2)
    long long involution_closure_count() const;

private:
    std::vector<int> factors_;
    long long order_ = 1;
};

// {a : a^2 in {b, b*y}}; y must have order 2. Sorted by element index.
std::vector<AbelianElement> square_fiber(const AbelianGroup& g, const AbelianElement& b,
                                         const AbelianElement& y);

// {a : a not in U, a^2 != y} for a proper subgroup U (given extensionally)
// and an involution y. Sorted by element index.
std::vector<AbelianElement> outside_square_complement(const AbelianGroup& g,
                                                      const std::vector<AbelianElement>& U,
                                                      const AbelianElement& y);

// subgroup generated by a set of elements, as a sorted element list
std::vector<AbelianElement> subgroup_closure(const AbelianGroup& g,
                                             const std::vector<AbelianElement>& gens);

// every subgroup, desk scale only (order <= 64)
std::vector<std::vector<AbelianElement>> all_subgroups(const AbelianGroup& g);

}  // namespace dcc
