#include "dcc/abelian.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dcc {

AbelianGroup::AbelianGroup(std::vector<int> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw std::invalid_argument("abelian group needs at least one cyclic factor");
    for (int d : factors_) {
        if (d < 2) throw std::invalid_argument("cyclic factor must be at least 2");
        if (order_ > (1LL << 20) / d) throw std::invalid_argument("group order beyond supported scale");
        order_ *= d;
    }
}

AbelianGroup AbelianGroup::parse(const std::string& spec) {
    std::vector<int> factors;
    size_t i = 0;
    while (i < spec.size()) {
        if (std::tolower(static_cast<unsigned char>(spec[i])) != 'c')
            throw std::invalid_argument("bad group spec '" + spec + "': expected 'C<order>'");
        ++i;
        size_t j = i;
        while (j < spec.size() && std::isdigit(static_cast<unsigned char>(spec[j]))) ++j;
        if (j == i) throw std::invalid_argument("bad group spec '" + spec + "': missing order");
        long long d = std::stoll(spec.substr(i, j - i));
        if (d < 2 || d > (1LL << 20)) throw std::invalid_argument("bad group spec '" + spec + "': factor out of range");
        factors.push_back((int)d);
        i = j;
        if (i < spec.size()) {
            if (std::tolower(static_cast<unsigned char>(spec[i])) != 'x')
                throw std::invalid_argument("bad group spec '" + spec + "': expected 'x' between factors");
            ++i;
            if (i == spec.size()) throw std::invalid_argument("bad group spec '" + spec + "': trailing 'x'");
        }
    }
    return AbelianGroup(std::move(factors));
}

std::string AbelianGroup::spec() const {
    std::string s;
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += 'x';
        s += 'C' + std::to_string(factors_[i]);
    }
    return s;
}

long long AbelianGroup::exponent() const {
    long long e = 1;
    for (int d : factors_) e = std::lcm(e, (long long)d);
    return e;
}

bool AbelianGroup::valid(const AbelianElement& u) const {
    if (u.size() != factors_.size()) return false;
    for (size_t i = 0; i < u.size(); ++i)
        if (u[i] < 0 || u[i] >= factors_[i]) return false;
    return true;
}

bool AbelianGroup::is_identity(const AbelianElement& u) const {
    return std::all_of(u.begin(), u.end(), [](int c) { return c == 0; });
}

bool AbelianGroup::is_involution(const AbelianElement& u) const {
    return !is_identity(u) && is_identity(square(u));
}

AbelianElement AbelianGroup::mul(const AbelianElement& u, const AbelianElement& v) const {
    if (u.size() != factors_.size() || v.size() != factors_.size())
        throw std::invalid_argument("element dimension mismatch");
    AbelianElement r(factors_.size());
    for (size_t i = 0; i < factors_.size(); ++i) r[i] = (u[i] + v[i]) % factors_[i];
    return r;
}

AbelianElement AbelianGroup::inv(const AbelianElement& u) const {
    if (u.size() != factors_.size()) throw std::invalid_argument("element dimension mismatch");
    AbelianElement r(factors_.size());
    for (size_t i = 0; i < factors_.size(); ++i) r[i] = (factors_[i] - u[i]) % factors_[i];
    return r;
}

long long AbelianGroup::index_of(const AbelianElement& u) const {
    long long idx = 0;
    for (size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i] + u[i];
    return idx;
}

AbelianElement AbelianGroup::element_at(long long idx) const {
    AbelianElement u(factors_.size());
    for (size_t i = factors_.size(); i-- > 0;) {
        u[i] = (int)(idx % factors_[i]);
        idx /= factors_[i];
    }
    return u;
}

long long AbelianGroup::involution_closure_count() const {
    long long c = 1;
    for (int d : factors_) c *= std::gcd(d, 2);
    return c;
}

std::vector<AbelianElement> square_fiber(const AbelianGroup& g, const AbelianElement& b,
                                         const AbelianElement& y) {
    if (!g.valid(b) || !g.valid(y)) throw std::invalid_argument("element dimension mismatch");
    if (!g.is_involution(y)) throw std::domain_error("y must have order 2");
    const AbelianElement by = g.mul(b, y);
    std::vector<AbelianElement> out;
    for (long long i = 0; i < g.order(); ++i) {
        AbelianElement a = g.element_at(i);
        AbelianElement sq = g.square(a);
        if (sq == b || sq == by) out.push_back(std::move(a));
    }
    return out;
}

std::vector<AbelianElement> outside_square_complement(const AbelianGroup& g,
                                                      const std::vector<AbelianElement>& U,
                                                      const AbelianElement& y) {
    if (!g.valid(y)) throw std::invalid_argument("element dimension mismatch");
    if (!g.is_involution(y)) throw std::domain_error("y must have order 2");
    if ((long long)U.size() >= g.order()) throw std::domain_error("U must be a proper subgroup");
    std::set<long long> in_u;
    for (const auto& u : U) in_u.insert(g.index_of(u));
    std::vector<AbelianElement> out;
    for (long long i = 0; i < g.order(); ++i) {
        if (in_u.count(i)) continue;
        AbelianElement a = g.element_at(i);
        if (g.square(a) != y) out.push_back(std::move(a));
    }
    return out;
}

std::vector<AbelianElement> subgroup_closure(const AbelianGroup& g,
                                             const std::vector<AbelianElement>& gens) {
    std::set<long long> seen{g.index_of(g.identity())};
    std::vector<AbelianElement> work{g.identity()};
    for (size_t i = 0; i < work.size(); ++i) {
        for (const auto& s : gens) {
            AbelianElement v = g.mul(work[i], s);
            if (seen.insert(g.index_of(v)).second) work.push_back(std::move(v));
        }
    }
    std::vector<AbelianElement> out;
    out.reserve(seen.size());
    for (long long idx : seen) out.push_back(g.element_at(idx));
    return out;
}

std::vector<std::vector<AbelianElement>> all_subgroups(const AbelianGroup& g) {
    if (g.order() > 64) throw std::domain_error("subgroup enumeration is desk scale only (order <= 64)");
    // grow each known subgroup by one extra generator until nothing new appears
    std::map<std::vector<long long>, std::vector<AbelianElement>> found;
    auto key_of = [&](const std::vector<AbelianElement>& h) {
        std::vector<long long> k;
        k.reserve(h.size());
        for (const auto& e : h) k.push_back(g.index_of(e));
        std::sort(k.begin(), k.end());
        return k;
    };
    std::vector<std::vector<AbelianElement>> frontier{{g.identity()}};
    found[key_of(frontier[0])] = frontier[0];
    while (!frontier.empty()) {
        std::vector<std::vector<AbelianElement>> next;
        for (const auto& h : frontier) {
            for (long long i = 0; i < g.order(); ++i) {
                AbelianElement a = g.element_at(i);
                std::vector<AbelianElement> gens = h;
                gens.push_back(a);
                auto k = subgroup_closure(g, gens);
                auto key = key_of(k);
                if (!found.count(key)) {
                    found[key] = k;
                    next.push_back(std::move(k));
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<std::vector<AbelianElement>> out;
    out.reserve(found.size());
    for (auto& [k, v] : found) out.push_back(std::move(v));
    return out;
}

}  // namespace dcc
