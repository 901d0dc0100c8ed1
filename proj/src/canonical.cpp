#include "dcc/canonical.hpp"

#include <optional>
#include <set>
#include <stdexcept>

#include "dcc/cayley.hpp"
#include "dcc/rng.hpp"

namespace dcc {

Permutation translation(const DicyclicGroup& g, const DicyclicElement& t) {
    long long n = g.order();
    std::vector<int> img((size_t)n);
    for (long long u = 0; u < n; ++u) img[u] = (int)g.index_of(g.mul(g.element_at(u), t));
    return Permutation(std::move(img));
}

namespace {

std::vector<Permutation> regular_generators(const DicyclicGroup& g) {
    std::vector<Permutation> gens;
    const AbelianGroup& a = g.base();
    for (int i = 0; i < a.rank(); ++i) {
        AbelianElement e = a.identity();
        e[i] = 1;
        gens.push_back(translation(g, {e, 0}));
    }
    gens.push_back(translation(g, g.x()));
    return gens;
}

// all A-part translations, i.e. the regular copy of the abelian base
std::set<Permutation> a_translation_set(const DicyclicGroup& g) {
    std::set<Permutation> set;
    for (long long i = 0; i < g.base().order(); ++i)
        set.insert(translation(g, {g.base().element_at(i), 0}));
    return set;
}

std::optional<std::vector<Permutation>> enumerate_group(const std::vector<Permutation>& gens,
                                                        int degree, std::size_t cap) {
    std::set<std::vector<int>> seen;
    std::vector<Permutation> work{Permutation::identity(degree)};
    seen.insert(work[0].images());
    for (std::size_t i = 0; i < work.size(); ++i) {
        for (const auto& s : gens) {
            Permutation next = compose(work[i], s);
            if (seen.insert(next.images()).second) {
                if (seen.size() > cap) return std::nullopt;
                work.push_back(std::move(next));
            }
        }
    }
    return work;
}

bool commute(const Permutation& p, const Permutation& q) {
    return compose(p, q) == compose(q, p);
}

}  // namespace

PermGroup regular_representation(const DicyclicGroup& g) {
    return PermGroup((int)g.order(), regular_generators(g));
}

CanonicalB build_canonical_B(const DicyclicGroup& g) {
    const AbelianGroup& a = g.base();
    long long half = a.order();

    CanonicalB b{.kind = g.is_q8_x_c2l() ? BKind::Q8E : BKind::Generic,
                 .group = PermGroup(1, {}),
                 .regular_gens = regular_generators(g),
                 .iota = g.iota(),
                 .alphas = {},
                 .m_orbit_size = 0};

    std::vector<Permutation> gens = b.regular_gens;
    if (b.kind == BKind::Q8E) {
        // the three involutions from the header comment, in coordinates
        auto swap_by_y = [&](int eps, bool square_is_y) {
            std::vector<int> img((size_t)2 * half);
            for (long long u = 0; u < 2 * half; ++u) img[u] = (int)u;
            for (long long i = 0; i < half; ++i) {
                AbelianElement e = a.element_at(i);
                bool sq_y = a.square(e) == g.y();
                bool sq_1 = a.is_identity(a.square(e));
                if ((square_is_y && sq_y) || (!square_is_y && sq_1)) {
                    long long from = (eps ? half : 0) + i;
                    long long to = (eps ? half : 0) + a.index_of(a.mul(e, g.y()));
                    img[from] = (int)to;
                }
            }
            return Permutation(std::move(img));
        };
        b.alphas = {swap_by_y(0, true), swap_by_y(1, false), swap_by_y(1, true)};
        gens.insert(gens.end(), b.alphas.begin(), b.alphas.end());
        b.m_orbit_size = g.order_le2_count();
    } else {
        gens.push_back(b.iota);
    }
    b.group = PermGroup((int)g.order(), std::move(gens));
    return b;
}

FactReport verify_canonical_facts(const DicyclicGroup& g, const CanonicalB& b) {
    FactReport rep;
    auto add = [&](std::string name, bool pass, std::string detail = "") {
        rep.facts.push_back({std::move(name), pass, std::move(detail)});
    };
    const long long n = g.order();
    const int deg = (int)n;

    add("regular_subgroup_of_B", is_subgroup(regular_representation(g), b.group));

    if (b.kind == BKind::Generic) {
        add("B_order_2n", b.group.order() == BigInt(2 * n),
            "order " + b.group.order().str());
        add("iota_outside_regular", !regular_representation(g).contains(b.iota));

        // C = <A, iota>: abelian, order n
        std::vector<Permutation> cgens;
        for (int i = 0; i < g.base().rank(); ++i) {
            AbelianElement e = g.base().identity();
            e[i] = 1;
            cgens.push_back(translation(g, {e, 0}));
        }
        cgens.push_back(b.iota);
        bool c_abelian = true;
        for (size_t i = 0; i < cgens.size(); ++i)
            for (size_t j = i + 1; j < cgens.size(); ++j)
                if (!commute(cgens[i], cgens[j])) c_abelian = false;
        add("C_abelian", c_abelian);
        add("C_order_n", PermGroup(deg, cgens).order() == BigInt(n));

        // D = <A, iota followed by translation by x>: generalised dihedral
        // on A, so every element outside the A-part is an involution that
        // inverts A by conjugation
        std::vector<Permutation> dgens(cgens.begin(), cgens.end() - 1);
        Permutation w = compose(b.iota, translation(g, g.x()));
        dgens.push_back(w);
        auto delems = enumerate_group(dgens, deg, 1u << 14);
        bool d_ok = delems.has_value() && (long long)delems->size() == n;
        if (d_ok) {
            std::set<Permutation> apart = a_translation_set(g);
            for (const auto& d : *delems) {
                if (apart.count(d)) continue;
                if (!compose(d, d).is_identity()) d_ok = false;
                for (long long i = 0; i < g.base().order() && d_ok; ++i) {
                    AbelianElement e = g.base().element_at(i);
                    if (conjugate(translation(g, {e, 0}), d) !=
                        translation(g, {g.base().inv(e), 0}))
                        d_ok = false;
                }
                if (!d_ok) break;
            }
        }
        add("D_generalised_dihedral_on_A", d_ok);
    } else {
        add("B_order_8n", b.group.order() == BigInt(8 * n),
            "order " + b.group.order().str());
        add("m_equals_M_equals_n_over_4",
            g.order_le2_count() == b.m_orbit_size && b.m_orbit_size == n / 4);
        add("inverse_closed_count_2_pow_5n8",
            count_inverse_closed(g) == BigInt(1) << (5 * (int)n / 8));

        // translations by M = elements of order at most 2
        std::set<Permutation> m_translations;
        for (long long i = 0; i < g.base().order(); ++i) {
            AbelianElement e = g.base().element_at(i);
            if (g.base().is_identity(g.base().square(e)))
                m_translations.insert(translation(g, {e, 0}));
        }

        auto belems = enumerate_group(b.group.generators(), deg, 1u << 12);
        if (belems) {
            bool centre_ok = true;
            std::size_t centre_size = 0;
            for (const auto& p : *belems) {
                bool central = true;
                for (const auto& s : b.group.generators())
                    if (!commute(p, s)) {
                        central = false;
                        break;
                    }
                if (central) {
                    ++centre_size;
                    if (!m_translations.count(p)) centre_ok = false;
                }
            }
            add("centre_equals_M_translations",
                centre_ok && centre_size == m_translations.size(),
                "centre size " + std::to_string(centre_size));
            bool exp_ok = true;
            for (const auto& p : *belems) {
                Permutation sq = compose(p, p);
                if (!compose(sq, sq).is_identity()) exp_ok = false;
            }
            add("exponent_divides_4", exp_ok, "exhaustive over " +
                                                  std::to_string(belems->size()) + " elements");
        } else {
            // group too big to enumerate: sampled words instead
            bool centre_ok = true, exp_ok = true;
            for (const auto& p : m_translations)
                for (const auto& s : b.group.generators())
                    if (!commute(p, s)) centre_ok = false;
            SplitMix64 rng(0x6a09e667f3bcc908ull);
            const auto& gens = b.group.generators();
            for (int t = 0; t < 10000; ++t) {
                Permutation wperm = Permutation::identity(deg);
                int len = 1 + (int)rng.next_below(12);
                for (int i = 0; i < len; ++i)
                    wperm = compose(wperm, gens[rng.next_below(gens.size())]);
                Permutation sq = compose(wperm, wperm);
                if (!compose(sq, sq).is_identity()) exp_ok = false;
                bool central = true;
                for (const auto& s : gens)
                    if (!commute(wperm, s)) central = false;
                if (central && !m_translations.count(wperm)) centre_ok = false;
            }
            add("centre_equals_M_translations", centre_ok, "sampled (group beyond 2^12)");
            add("exponent_divides_4", exp_ok, "sampled (group beyond 2^12)");
        }
    }
    return rep;
}

}  // namespace dcc
