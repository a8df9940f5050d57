#include "indfam/randomfam.hpp"

namespace indfam {

Family random_gamma_family(const Params& p, int permille, SplitMix64& rng) {
    std::vector<IndSet> members;
    for (const IndSet& x : enumerate_r_independent(p).members)
        if (rng.chance_permille(permille)) members.push_back(x);
    return make_family_unchecked(p, std::move(members));
}

Family random_gamma_intersecting(const Params& p, int permille, SplitMix64& rng) {
    std::vector<IndSet> kept;
    for (const IndSet& x : random_gamma_family(p, permille, rng).members) {
        if (x.bits == 0) continue;
        bool ok = true;
        for (const IndSet& m : kept)
            if (!x.intersects(m)) {
                ok = false;
                break;
            }
        if (ok) kept.push_back(x);
    }
    if (kept.empty() && p.r >= 1) {
        std::vector<Vertex> vs;
        for (int i = 1; i <= p.r; ++i) vs.push_back(Vertex{i, 1});
        kept.push_back(make_indset(p, vs));
    }
    return make_family_unchecked(p, std::move(kept));
}

std::pair<Family, Family> random_gamma_cross_pair(const Params& p, int permille,
                                                  SplitMix64& rng) {
    Family da = random_gamma_family(p, permille, rng);
    Family db = random_gamma_family(p, permille, rng);
    std::vector<IndSet> ka, kb;
    auto meets_all = [](IndSet x, const std::vector<IndSet>& fam) {
        for (const IndSet& m : fam)
            if (!x.intersects(m)) return false;
        return true;
    };
    for (const IndSet& x : enumerate_r_independent(p).members) {
        if (x.bits == 0) continue;
        if (da.contains(x) && meets_all(x, kb)) ka.push_back(x);
        if (db.contains(x) && meets_all(x, ka)) kb.push_back(x);
    }
    if (ka.empty() || kb.empty()) {
        std::vector<Vertex> vs;
        for (int i = 1; i <= p.r; ++i) vs.push_back(Vertex{i, 1});
        IndSet seed = make_indset(p, vs);
        ka = {seed};
        kb = {seed};
    }
    return {make_family_unchecked(p, std::move(ka)), make_family_unchecked(p, std::move(kb))};
}

GroundFamily random_ground_family(int n, int r, int permille, SplitMix64& rng) {
    std::vector<GroundSet> members;
    for (GroundSet s : ground_universe(n, r))
        if (rng.chance_permille(permille)) members.push_back(s);
    return make_ground_family(n, r, std::move(members));
}

GroundFamily random_ground_intersecting(int n, int r, int permille, SplitMix64& rng) {
    std::vector<GroundSet> kept;
    for (GroundSet s : random_ground_family(n, r, permille, rng).members) {
        if (s.bits == 0) continue;
        bool ok = true;
        for (GroundSet m : kept)
            if (!s.intersects(m)) {
                ok = false;
                break;
            }
        if (ok) kept.push_back(s);
    }
    if (kept.empty()) kept.push_back(make_ground_set(n, {1}));
    return make_ground_family(n, r, std::move(kept));
}

std::pair<GroundFamily, GroundFamily> random_ground_cross_pair(int n, int r, int permille,
                                                               SplitMix64& rng) {
    GroundFamily da = random_ground_family(n, r, permille, rng);
    GroundFamily db = random_ground_family(n, r, permille, rng);
    std::vector<GroundSet> ka, kb;
    auto meets_all = [](GroundSet x, const std::vector<GroundSet>& fam) {
        for (GroundSet m : fam)
            if (!x.intersects(m)) return false;
        return true;
    };
    for (GroundSet s : ground_universe(n, r)) {
        if (s.bits == 0) continue;
        if (da.contains(s) && meets_all(s, kb)) ka.push_back(s);
        if (db.contains(s) && meets_all(s, ka)) kb.push_back(s);
    }
    if (ka.empty() || kb.empty()) {
        GroundSet seed{(r >= 64) ? ~0ull : ((1ull << r) - 1)};
        ka = {seed};
        kb = {seed};
    }
    return {make_ground_family(n, r, std::move(ka)), make_ground_family(n, r, std::move(kb))};
}

} // namespace indfam
