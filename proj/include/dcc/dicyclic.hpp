#pragma once

#include <string>

#include "dcc/abelian.hpp"
#include "dcc/perm.hpp"

namespace dcc {

// Element a*x^eps of Dic(A, y, x): the abelian part plus one bit.
struct DicyclicElement {
    AbelianElement a;
    int eps = 0;
    bool operator==(const DicyclicElement&) const = default;
};

// The group <A, x | x^2 = y, a^x = a^-1> for an abelian A of even order and
// exponent > 2 and an involution y in A. Multiplication is the closed form
//   (a, d)(b, e) = (a * b^((-1)^d) * y^(d*e), d xor e).
// Element enumeration is fixed: all (a, 0) in lexicographic A-order, then
// all (a, 1) in the same order; this numbering is the vertex numbering of
// every Cayley graph built on the group.
class DicyclicGroup {
public:
    DicyclicGroup(AbelianGroup base, AbelianElement y);

    // "dic:C4xC2:y=2,0" or the shorthand "q8e:<l>" for dic:C4xC2^l with
    // y = (2,0,...,0); case-insensitive
    static DicyclicGroup parse(const std::string& spec);
    std::string spec() const;

    const AbelianGroup& base() const { return base_; }
    const AbelianElement& y() const { return y_; }
    long long order() const { return 2 * base_.order(); }  // n

    DicyclicElement identity() const { return {base_.identity(), 0}; }
    DicyclicElement x() const { return {base_.identity(), 1}; }
    bool is_identity(const DicyclicElement& u) const { return u.eps == 0 && base_.is_identity(u.a); }

    DicyclicElement mul(const DicyclicElement& u, const DicyclicElement& v) const;
    DicyclicElement inv(const DicyclicElement& u) const;

    long long index_of(const DicyclicElement& u) const;
    DicyclicElement element_at(long long idx) const;

    // m: elements of order at most 2, identity included
    long long order_le2_count() const { return base_.involution_closure_count(); }

    // true iff the group is isomorphic to Q8 x C2^l, i.e. A has shape
    // C4 x C2^l and y is its unique non-identity square
    bool is_q8_x_c2l() const { return q8e_; }

    // the permutation fixing every (a, 0) and sending (a, 1) to its inverse
    // (a*y, 1); an automorphism of the group and an involution
    Permutation iota() const;

private:
    AbelianGroup base_;
    AbelianElement y_;
    bool q8e_ = false;
};

}  // namespace dcc
