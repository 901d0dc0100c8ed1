#include "dcc/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dcc {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
        if (v < 0 || v >= (int)img_.size() || seen[v])
            throw std::invalid_argument("image array is not a permutation");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int degree) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < (int)img_.size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 0; i < (int)img_.size(); ++i) inv[img_[i]] = i;
    return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
    std::string s;
    for (int i = 0; i < (int)img_.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(img_[i]);
    }
    return s;
}

Permutation Permutation::from_string(const std::string& s, int degree) {
    std::istringstream in(s);
    std::vector<int> img;
    int v;
    while (in >> v) img.push_back(v);
    if ((int)img.size() != degree) throw std::invalid_argument("permutation string has wrong degree");
    return Permutation(std::move(img));
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw std::invalid_argument("permutation degree mismatch");
    std::vector<int> r(p.degree());
    for (int v = 0; v < p.degree(); ++v) r[v] = q[p[v]];
    return Permutation(std::move(r));
}

Permutation conjugate(const Permutation& p, const Permutation& g) {
    return compose(compose(g.inverse(), p), g);
}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators) : degree_(degree) {
    if (degree < 1) throw std::invalid_argument("degree must be positive");
    for (auto& g : generators) {
        if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
        if (!g.is_identity()) gens_.push_back(std::move(g));
    }
}

void PermGroup::Level::rebuild(int degree) {
    orbit.clear();
    pos.assign(degree, -1);
    transversal.clear();
    orbit.push_back(base_point);
    pos[base_point] = 0;
    transversal.push_back(Permutation::identity(degree));
    for (size_t i = 0; i < orbit.size(); ++i) {
        for (const auto& s : gens) {
            int q = s[orbit[i]];
            if (pos[q] < 0) {
                pos[q] = (int)orbit.size();
                orbit.push_back(q);
                transversal.push_back(compose(transversal[i], s));
            }
        }
    }
}

std::pair<Permutation, int> PermGroup::sift_from(Permutation g, size_t from) const {
    for (size_t l = from; l < levels_.size(); ++l) {
        const Level& L = levels_[l];
        int p = g[L.base_point];
        if (L.pos[p] < 0) return {std::move(g), (int)l};
        g = compose(g, L.transversal[L.pos[p]].inverse());
    }
    return {std::move(g), (int)levels_.size()};
}

namespace {
int first_moved_point(const Permutation& g) {
    for (int v = 0; v < g.degree(); ++v)
        if (g[v] != v) return v;
    return -1;
}
}  // namespace

void PermGroup::ensure_chain() const {
    if (built_) return;
    levels_.clear();
    order_ = 1;
    if (!gens_.empty()) {
        int b0 = -1;
        for (int v = 0; v < degree_ && b0 < 0; ++v)
            for (const auto& g : gens_)
                if (g[v] != v) {
                    b0 = v;
                    break;
                }
        Level l0;
        l0.base_point = b0;
        l0.gens = gens_;
        levels_.push_back(std::move(l0));

        int i = 0;
        while (i >= 0) {
            levels_[i].rebuild(degree_);
            bool clean = true;
            // index-based access throughout: adding a level may reallocate levels_
            for (size_t oi = 0; clean && oi < levels_[i].orbit.size(); ++oi) {
                for (size_t gi = 0; clean && gi < levels_[i].gens.size(); ++gi) {
                    const Permutation s = levels_[i].gens[gi];
                    int p = levels_[i].orbit[oi];
                    Permutation sg = compose(compose(levels_[i].transversal[oi], s),
                                             levels_[i].transversal[levels_[i].pos[s[p]]].inverse());
                    auto [h, j] = sift_from(std::move(sg), i + 1);
                    if (!h.is_identity()) {
                        if (j == (int)levels_.size()) {
                            Level nl;
                            nl.base_point = first_moved_point(h);
                            levels_.push_back(std::move(nl));
                        }
                        for (int l = i + 1; l <= j; ++l) levels_[l].gens.push_back(h);
                        i = j;
                        clean = false;
                    }
                }
            }
            if (clean) --i;
        }
        for (auto& L : levels_) order_ *= (long long)L.orbit.size();
    }
    built_ = true;
}

BigInt PermGroup::order() const {
    ensure_chain();
    return order_;
}

bool PermGroup::contains(const Permutation& g) const {
    if (g.degree() != degree_) throw std::invalid_argument("degree mismatch");
    ensure_chain();
    auto [residue, level] = sift_from(g, 0);
    (void)level;
    return residue.is_identity();
}

std::vector<int> PermGroup::base() const {
    ensure_chain();
    std::vector<int> b;
    b.reserve(levels_.size());
    for (const auto& L : levels_) b.push_back(L.base_point);
    return b;
}

std::vector<int> PermGroup::orbit(int point) const {
    std::vector<char> seen(degree_, 0);
    std::vector<int> work{point};
    seen[point] = 1;
    for (size_t i = 0; i < work.size(); ++i)
        for (const auto& g : gens_) {
            int q = g[work[i]];
            if (!seen[q]) {
                seen[q] = 1;
                work.push_back(q);
            }
        }
    std::sort(work.begin(), work.end());
    return work;
}

bool is_subgroup(const PermGroup& sub, const PermGroup& super) {
    if (sub.degree() != super.degree()) throw std::invalid_argument("degree mismatch");
    for (const auto& g : sub.generators())
        if (!super.contains(g)) return false;
    return true;
}

bool groups_equal(const PermGroup& a, const PermGroup& b) {
    return is_subgroup(a, b) && a.order() == b.order();
}

}  // namespace dcc
