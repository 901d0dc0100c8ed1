#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace dcc {

using BigInt = boost::multiprecision::cpp_int;

// Composition convention, used everywhere in this project:
//   compose(p, q) maps v to q(p(v)), i.e. p acts first.
// A fixed test vector pins this down; do not flip it.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int degree);

    int degree() const { return (int)img_.size(); }
    int operator[](int v) const { return img_[v]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const;
    Permutation inverse() const;

    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

    // whitespace-separated image list
    std::string to_string() const;
    static Permutation from_string(const std::string& s, int degree);

private:
    std::vector<int> img_;
};

Permutation compose(const Permutation& p, const Permutation& q);

// g^-1 * p * g: apply g^-1, then p, then g
Permutation conjugate(const Permutation& p, const Permutation& g);

// Permutation group given by generators. Order and membership come from a
// deterministic Schreier-Sims stabiliser chain, built on first use; after
// that the object is immutable and may be shared across threads.
class PermGroup {
public:
    PermGroup(int degree, std::vector<Permutation> generators);

    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return gens_; }

    BigInt order() const;
    bool contains(const Permutation& g) const;
    std::vector<int> base() const;

    // orbit of a point under the generators, ascending
    std::vector<int> orbit(int point) const;
    bool is_transitive() const { return (int)orbit(0).size() == degree_; }

private:
    struct Level {
        int base_point = -1;
        std::vector<Permutation> gens;
        std::vector<int> orbit;              // discovery order, orbit[0] == base_point
        std::vector<int> pos;                // point -> index into orbit, or -1
        std::vector<Permutation> transversal;  // transversal[pos[p]] maps base_point to p
        void rebuild(int degree);
    };

    void ensure_chain() const;
    // sifts g through levels [from, end); returns residue and drop level
    std::pair<Permutation, int> sift_from(Permutation g, size_t from) const;

    int degree_;
    std::vector<Permutation> gens_;
    mutable bool built_ = false;
    mutable std::vector<Level> levels_;
    mutable BigInt order_ = 1;
};

bool is_subgroup(const PermGroup& sub, const PermGroup& super);
bool groups_equal(const PermGroup& a, const PermGroup& b);

}  // namespace dcc
