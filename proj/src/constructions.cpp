#include "indfam/constructions.hpp"

#include <string>

namespace indfam {

const char* family_tag_name(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::EKR: return "ekr";
        case FamilyTag::HM: return "hm";
        case FamilyTag::HM_CROSS_H: return "hm-cross-h";
        case FamilyTag::HM_CROSS_M: return "hm-cross-m";
        case FamilyTag::TRIANGLE_R3: return "triangle";
        case FamilyTag::MAIN_RN: return "main-rn";
    }
    return "?";
}

FamilyTag family_tag_from_name(const std::string& name) {
    if (name == "ekr") return FamilyTag::EKR;
    if (name == "hm") return FamilyTag::HM;
    if (name == "hm-cross-h") return FamilyTag::HM_CROSS_H;
    if (name == "hm-cross-m") return FamilyTag::HM_CROSS_M;
    if (name == "triangle") return FamilyTag::TRIANGLE_R3;
    if (name == "main-rn") return FamilyTag::MAIN_RN;
    throw param_error("unknown family tag '" + name + "'");
}

namespace {

// [a, b] x {1} as a bit vector
word row_one(const Params& p, int a, int b) {
    word bits = 0;
    for (int i = a; i <= b; ++i) bits |= word{1} << bit_index(p, Vertex{i, 1});
    return bits;
}

} // namespace

Family ekr_family(const Params& p, Vertex anchor) {
    if (!vertex_valid(p, anchor)) throw param_error("invalid anchor vertex");
    if (p.r < 1) throw param_error("ekr family needs r >= 1");
    const word a = word{1} << bit_index(p, anchor);
    std::vector<IndSet> members;
    for (const IndSet& x : enumerate_r_independent(p).members)
        if (x.bits & a) members.push_back(x);
    return make_family_unchecked(p, std::move(members));
}

i128 ekr_size(const Params& p) {
    return checked_mul(binom(p.n - 1, p.r - 1), ipow(p.k, p.r - 1));
}

Family hm_family(const Params& p) {
    if (p.r < 2 || p.r > p.n - 1)
        throw param_error("hm family needs 2 <= r <= n-1");
    const word h = row_one(p, 2, p.r + 1);
    const word anchor = word{1} << bit_index(p, Vertex{1, 1});
    std::vector<IndSet> members;
    for (const IndSet& x : enumerate_r_independent(p).members)
        if ((x.bits & anchor) && (x.bits & h)) members.push_back(x);
    members.push_back(IndSet{h});
    return make_family_unchecked(p, std::move(members));
}

i128 hm_size(const Params& p) {
    if (p.r < 2 || p.r > p.n - 1)
        throw param_error("hm size needs 2 <= r <= n-1");
    i128 total = 1;
    for (int j = 1; j <= p.r - 1; ++j) {
        i128 term = checked_mul(binom(p.r, j), binom(p.n - p.r - 1, p.r - j - 1));
        term = checked_mul(term, ipow(p.k, p.r - j - 1));
        term = checked_mul(term, ipow(p.k, j) - ipow(p.k - 1, j));
        total = checked_add(total, term);
    }
    return total;
}

std::pair<Family, Family> hm_cross_pair(const Params& p) {
    if (p.r < 1) throw param_error("hm cross pair needs r >= 1");
    const word h = row_one(p, 1, p.r);
    std::vector<IndSet> m;
    for (const IndSet& x : enumerate_r_independent(p).members)
        if (x.bits & h) m.push_back(x);
    return {make_family_unchecked(p, {IndSet{h}}), make_family_unchecked(p, std::move(m))};
}

i128 hm_cross_m_size(const Params& p) {
    if (p.r < 1) throw param_error("hm cross size needs r >= 1");
    i128 avoiding = 0;
    for (int j = 0; j <= p.r; ++j) {
        i128 term = checked_mul(binom(p.r, j), ipow(p.k - 1, j));
        term = checked_mul(term, binom(p.n - p.r, p.r - j));
        term = checked_mul(term, ipow(p.k, p.r - j));
        avoiding = checked_add(avoiding, term);
    }
    return count_r_independent(p) - avoiding;
}

Family triangle_family(const Params& p) {
    if (p.r != 3) throw param_error("triangle family is defined for r = 3 only");
    if (p.n < 3) throw param_error("triangle family needs n >= 3");
    const word t = row_one(p, 1, 3);
    std::vector<IndSet> members;
    for (const IndSet& x : enumerate_r_independent(p).members)
        if (popcount_word(x.bits & t) >= 2) members.push_back(x);
    return make_family_unchecked(p, std::move(members));
}

i128 triangle_size(const Params& p) {
    if (p.r != 3) throw param_error("triangle size is defined for r = 3 only");
    return static_cast<i128>(3) * p.k * p.n - 6 * p.k - 2;
}

Family main_rn_family(int n, int k) {
    if (k < 2) throw param_error("main r=n family needs k >= 2");
    if (n < 2) throw param_error("main r=n family needs n >= 2");
    Params p = make_params(n, k, n);
    const word tail = row_one(p, 2, n);
    const word anchor = word{1} << bit_index(p, Vertex{1, 1});
    std::vector<IndSet> members;
    for (const IndSet& x : enumerate_r_independent(p).members)
        if ((x.bits & anchor) && (x.bits & tail)) members.push_back(x);
    for (int i = 2; i <= k; ++i)
        members.push_back(IndSet{tail | (word{1} << bit_index(p, Vertex{1, i}))});
    return make_family_unchecked(p, std::move(members));
}

i128 main_rn_size(int n, int k) {
    return checked_add(ipow(k, n - 1) - ipow(k - 1, n - 1), k - 1);
}

std::vector<long long> degree_profile(const Family& f) {
    std::vector<long long> deg(f.params.slots(), 0);
    for (const IndSet& x : f.members)
        for (int b = 0; b < f.params.slots(); ++b)
            if ((x.bits >> b) & word{1}) ++deg[b];
    return deg;
}

NamedFamily build_named(FamilyTag tag, const Params& p) {
    switch (tag) {
        case FamilyTag::EKR:
            return NamedFamily{tag, p, ekr_family(p, Vertex{1, 1}), {}};
        case FamilyTag::HM:
            return NamedFamily{tag, p, hm_family(p), {}};
        case FamilyTag::HM_CROSS_H: {
            auto [h, m] = hm_cross_pair(p);
            return NamedFamily{tag, p, std::move(h), std::move(m)};
        }
        case FamilyTag::HM_CROSS_M: {
            auto [h, m] = hm_cross_pair(p);
            return NamedFamily{tag, p, std::move(m), std::move(h)};
        }
        case FamilyTag::TRIANGLE_R3:
            return NamedFamily{tag, p, triangle_family(p), {}};
        case FamilyTag::MAIN_RN:
            return NamedFamily{tag, p, main_rn_family(p.n, p.k), {}};
    }
    throw param_error("unknown family tag");
}

} // namespace indfam
