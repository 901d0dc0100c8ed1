#include "dcc/dicyclic.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace dcc {

namespace {

bool detect_q8e(const AbelianGroup& a, const AbelianElement& y) {
    if (a.exponent() != 4) return false;
    if (2 * a.involution_closure_count() != a.order()) return false;
    // shape is now C4 x C2^l: exactly one factor of order 4, rest order 2;
    // the unique non-identity square sits at coordinate 2 of that factor
    int four_pos = -1, fours = 0;
    for (int i = 0; i < a.rank(); ++i)
        if (a.factors()[i] == 4) {
            four_pos = i;
            ++fours;
        }
    if (fours != 1) return false;
    AbelianElement z = a.identity();
    z[four_pos] = 2;
    return y == z;
}

}  // namespace

DicyclicGroup::DicyclicGroup(AbelianGroup base, AbelianElement y)
    : base_(std::move(base)), y_(std::move(y)) {
    if (base_.order() % 2 != 0) throw std::invalid_argument("base group must have even order");
    if (base_.exponent() <= 2) throw std::invalid_argument("base group must have exponent greater than 2");
    if (!base_.valid(y_) || !base_.is_involution(y_))
        throw std::invalid_argument("y must be an involution of the base group");
    if (base_.order() > (1LL << 20)) throw std::invalid_argument("group order beyond supported scale");
    q8e_ = detect_q8e(base_, y_);
}

DicyclicGroup DicyclicGroup::parse(const std::string& spec) {
    std::string low(spec);
    std::transform(low.begin(), low.end(), low.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (low.rfind("q8e:", 0) == 0) {
        const std::string arg = spec.substr(4);
        if (arg.empty() || !std::all_of(arg.begin(), arg.end(),
                                        [](unsigned char c) { return std::isdigit(c); }))
            throw std::invalid_argument("bad group spec '" + spec + "': q8e wants a count of C2 factors");
        long long l = std::stoll(arg);
        if (l > 18) throw std::invalid_argument("bad group spec '" + spec + "': too many C2 factors");
        std::vector<int> factors{4};
        factors.insert(factors.end(), (size_t)l, 2);
        AbelianGroup a(std::move(factors));
        AbelianElement y = a.identity();
        y[0] = 2;
        return DicyclicGroup(std::move(a), std::move(y));
    }
    if (low.rfind("dic:", 0) == 0) {
        size_t colon = spec.find(':', 4);
        if (colon == std::string::npos)
            throw std::invalid_argument("bad group spec '" + spec + "': expected dic:<base>:y=<coords>");
        AbelianGroup a = AbelianGroup::parse(spec.substr(4, colon - 4));
        std::string ypart = spec.substr(colon + 1);
        if (ypart.size() < 3 || std::tolower((unsigned char)ypart[0]) != 'y' || ypart[1] != '=')
            throw std::invalid_argument("bad group spec '" + spec + "': expected y=<coords>");
        AbelianElement y;
        size_t i = 2;
        while (i <= ypart.size()) {
            size_t j = ypart.find(',', i);
            if (j == std::string::npos) j = ypart.size();
            std::string coord = ypart.substr(i, j - i);
            if (coord.empty() || !std::all_of(coord.begin(), coord.end(),
                                              [](unsigned char c) { return std::isdigit(c); }))
                throw std::invalid_argument("bad group spec '" + spec + "': bad y coordinate");
            y.push_back(std::stoi(coord));
            i = j + 1;
        }
        if (!a.valid(y)) throw std::invalid_argument("bad group spec '" + spec + "': y out of range");
        return DicyclicGroup(std::move(a), std::move(y));
    }
    throw std::invalid_argument("bad group spec '" + spec + "': expected dic:... or q8e:<l>");
}

std::string DicyclicGroup::spec() const {
    std::string s = "dic:" + base_.spec() + ":y=";
    for (size_t i = 0; i < y_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(y_[i]);
    }
    return s;
}

DicyclicElement DicyclicGroup::mul(const DicyclicElement& u, const DicyclicElement& v) const {
    AbelianElement b = u.eps ? base_.inv(v.a) : v.a;
    AbelianElement r = base_.mul(u.a, b);
    if (u.eps && v.eps) r = base_.mul(r, y_);
    return {std::move(r), u.eps ^ v.eps};
}

DicyclicElement DicyclicGroup::inv(const DicyclicElement& u) const {
    if (u.eps) return {base_.mul(u.a, y_), 1};
    return {base_.inv(u.a), 0};
}

long long DicyclicGroup::index_of(const DicyclicElement& u) const {
    return (u.eps ? base_.order() : 0) + base_.index_of(u.a);
}

DicyclicElement DicyclicGroup::element_at(long long idx) const {
    long long half = base_.order();
    if (idx < half) return {base_.element_at(idx), 0};
    return {base_.element_at(idx - half), 1};
}

Permutation DicyclicGroup::iota() const {
    long long half = base_.order();
    std::vector<int> img(2 * half);
    for (long long i = 0; i < half; ++i) {
        img[i] = (int)i;
        img[half + i] = (int)(half + base_.index_of(base_.mul(base_.element_at(i), y_)));
    }
    return Permutation(std::move(img));
}

}  // namespace dcc
