#include "dcc/autgrp.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace dcc {

bool is_automorphism(const CayleyGraph& g, const Permutation& p) {
    if (p.degree() != g.n) throw std::invalid_argument("degree mismatch");
    // row u must map bijectively onto row p(u); equal popcounts plus
    // containment of the image give exactly that
    for (int u = 0; u < g.n; ++u) {
        const std::uint64_t* src = g.out_row(u);
        const std::uint64_t* dst = g.out_row(p[u]);
        int src_deg = 0, dst_deg = 0;
        for (int w = 0; w < g.words; ++w) {
            src_deg += std::popcount(src[w]);
            dst_deg += std::popcount(dst[w]);
        }
        if (src_deg != dst_deg) return false;
        for (int w = 0; w < g.words; ++w) {
            std::uint64_t bits = src[w];
            while (bits) {
                int v = (w << 6) + std::countr_zero(bits);
                bits &= bits - 1;
                int pv = p[v];
                if (!((dst[pv >> 6] >> (pv & 63)) & 1u)) return false;
            }
        }
    }
    return true;
}

namespace {

// Ordered-partition search state. Colors are class ids 0..k-1; class order
// is part of the invariant (splits sort by old color, then by the
// neighbour-count signature, so it is label-independent).
class AutSearch {
public:
    explicit AutSearch(const CayleyGraph& g) : g_(g), n_(g.n) {}

    std::vector<Permutation> run() {
        std::vector<int> color(n_, 0);
        std::vector<int> prefix;
        search(std::move(color), 1, 0, prefix);
        return gens_;
    }

private:
    void refine(std::vector<int>& color, int& ncolors) const {
        for (;;) {
            const int stride = g_.directed ? 1 + 2 * ncolors : 1 + ncolors;
            std::vector<int> sig((size_t)n_ * stride, 0);
            for (int v = 0; v < n_; ++v) {
                int* s = sig.data() + (size_t)v * stride;
                s[0] = color[v];
                const std::uint64_t* row = g_.out_row(v);
                for (int w = 0; w < g_.words; ++w) {
                    std::uint64_t bits = row[w];
                    while (bits) {
                        int u = (w << 6) + std::countr_zero(bits);
                        bits &= bits - 1;
                        ++s[1 + color[u]];
                    }
                }
                if (g_.directed) {
                    const std::uint64_t* irow = g_.in_row(v);
                    for (int w = 0; w < g_.words; ++w) {
                        std::uint64_t bits = irow[w];
                        while (bits) {
                            int u = (w << 6) + std::countr_zero(bits);
                            bits &= bits - 1;
                            ++s[1 + ncolors + color[u]];
                        }
                    }
                }
            }
            std::vector<int> order(n_);
            std::iota(order.begin(), order.end(), 0);
            auto cmp = [&](int a, int b) {
                const int* sa = sig.data() + (size_t)a * stride;
                const int* sb = sig.data() + (size_t)b * stride;
                return std::lexicographical_compare(sa, sa + stride, sb, sb + stride);
            };
            std::sort(order.begin(), order.end(), cmp);
            int next = 0;
            std::vector<int> fresh(n_);
            for (int i = 0; i < n_; ++i) {
                if (i > 0 && cmp(order[i - 1], order[i])) ++next;
                fresh[order[i]] = next;
            }
            int count = next + 1;
            if (count == ncolors) return;  // no class split further
            color = std::move(fresh);
            ncolors = count;
        }
    }

    std::vector<int> class_sizes(const std::vector<int>& color, int ncolors) const {
        std::vector<int> sz(ncolors, 0);
        for (int v = 0; v < n_; ++v) ++sz[color[v]];
        return sz;
    }

    // first smallest class of size >= 2
    int target_cell(const std::vector<int>& sizes) const {
        int best = -1;
        for (int c = 0; c < (int)sizes.size(); ++c)
            if (sizes[c] >= 2 && (best < 0 || sizes[c] < sizes[best])) best = c;
        return best;
    }

    // orbit pruning: v is redundant if some discovered automorphism fixing
    // the individualized prefix pointwise links it to an explored sibling
    bool orbit_pruned(int v, const std::vector<int>& explored,
                      const std::vector<int>& prefix) const {
        if (explored.empty()) return false;
        std::vector<int> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int a) {
            while (parent[a] != a) a = parent[a] = parent[parent[a]];
            return a;
        };
        for (const auto& gperm : gens_) {
            bool fixes = true;
            for (int p : prefix)
                if (gperm[p] != p) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int u = 0; u < n_; ++u) {
                int a = find(u), b = find(gperm[u]);
                if (a != b) parent[a] = b;
            }
        }
        int rv = find(v);
        for (int e : explored)
            if (find(e) == rv) return true;
        return false;
    }

    void handle_leaf(const std::vector<int>& color) {
        if (!have_first_) {
            first_vertex_at_.assign(n_, 0);
            for (int v = 0; v < n_; ++v) first_vertex_at_[color[v]] = v;
            have_first_ = true;
            return;
        }
        std::vector<int> img(n_);
        std::vector<int> vertex_at(n_);
        for (int v = 0; v < n_; ++v) vertex_at[color[v]] = v;
        for (int c = 0; c < n_; ++c) img[first_vertex_at_[c]] = vertex_at[c];
        Permutation cand(std::move(img));
        if (!cand.is_identity() && is_automorphism(g_, cand)) gens_.push_back(std::move(cand));
    }

    void search(std::vector<int> color, int ncolors, int depth, std::vector<int>& prefix) {
        refine(color, ncolors);
        std::vector<int> sizes = class_sizes(color, ncolors);
        if (!have_first_) {
            path_sizes_.push_back(sizes);  // leftmost path defines the reference invariant
        } else {
            if (depth >= (int)path_sizes_.size() || sizes != path_sizes_[depth]) return;
        }
        if (ncolors == n_) {
            handle_leaf(color);
            return;
        }
        int cell = target_cell(sizes);
        std::vector<int> members;
        for (int v = 0; v < n_; ++v)
            if (color[v] == cell) members.push_back(v);
        std::vector<int> explored;
        for (int v : members) {
            if (orbit_pruned(v, explored, prefix)) continue;
            explored.push_back(v);
            std::vector<int> child = color;
            for (int u : members)
                if (u != v) child[u] = ncolors;
            prefix.push_back(v);
            search(std::move(child), ncolors + 1, depth + 1, prefix);
            prefix.pop_back();
        }
    }

    const CayleyGraph& g_;
    int n_;
    std::vector<Permutation> gens_;
    bool have_first_ = false;
    std::vector<int> first_vertex_at_;
    std::vector<std::vector<int>> path_sizes_;
};

bool preserves_all_arcs(const CayleyGraph& g, const std::vector<int>& p) {
    for (int u = 0; u < g.n; ++u)
        for (int v = 0; v < g.n; ++v)
            if (g.arc(u, v) != g.arc(p[u], p[v])) return false;
    return true;
}

}  // namespace

PermGroup automorphism_group(const CayleyGraph& g, int degree_cap) {
    if (g.n > degree_cap) throw std::domain_error("graph exceeds the automorphism search degree cap");
    if (g.n < 1) throw std::invalid_argument("empty graph");
    AutSearch search(g);
    return PermGroup(g.n, search.run());
}

PermGroup brute_force_aut(const CayleyGraph& g) {
    if (g.n > 10) throw std::domain_error("brute-force automorphism search is limited to n <= 10");
    std::vector<int> p(g.n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Permutation> gens;
    std::optional<PermGroup> grp;
    do {
        if (!preserves_all_arcs(g, p)) continue;
        Permutation perm((std::vector<int>(p)));
        if (perm.is_identity()) continue;
        if (grp && grp->contains(perm)) continue;
        gens.push_back(std::move(perm));
        grp.emplace(g.n, gens);
    } while (std::next_permutation(p.begin(), p.end()));
    return grp ? *grp : PermGroup(g.n, {});
}

std::uint64_t brute_force_aut_count(const CayleyGraph& g) {
    if (g.n > 10) throw std::domain_error("brute-force automorphism search is limited to n <= 10");
    std::vector<int> p(g.n);
    std::iota(p.begin(), p.end(), 0);
    std::uint64_t count = 0;
    do {
        if (preserves_all_arcs(g, p)) ++count;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

}  // namespace dcc
