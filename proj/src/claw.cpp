#include "indfam/claw.hpp"

#include <algorithm>
#include <sstream>

namespace indfam {

int claw_bit(int n, ClawVertex v) {
    switch (v.kind) {
        case ClawVertex::Kind::Leaf: return 2 * (v.leg - 1);
        case ClawVertex::Kind::Mid: return 2 * (v.leg - 1) + 1;
        case ClawVertex::Kind::Root: return 2 * n;
    }
    throw param_error("bad claw vertex");
}

ClawVertex claw_vertex_at(int n, int bit) {
    if (bit == 2 * n) return ClawVertex{ClawVertex::Kind::Root, 0};
    return ClawVertex{(bit % 2) ? ClawVertex::Kind::Mid : ClawVertex::Kind::Leaf,
                      bit / 2 + 1};
}

namespace {

int claw_slots(int n) { return 2 * n + 1; }

void check_claw_params(int n, int r) {
    if (n < 1) throw param_error("claw needs n >= 1");
    if (r < 1 || r > n) throw param_error("claw needs 1 <= r <= n");
    if (claw_slots(n) > kWordBits) throw capacity_error("claw universe exceeds bit width");
}

} // namespace

bool claw_set_valid(int n, word bits) {
    const word root = word{1} << (2 * n);
    for (int i = 0; i < n; ++i) {
        word leaf = word{1} << (2 * i), mid = word{1} << (2 * i + 1);
        if ((bits & leaf) && (bits & mid)) return false; // a_i -- b_i edge
        if ((bits & root) && (bits & mid)) return false; // c -- b_i edge
    }
    return true;
}

ClawFamily make_claw_family(int n, int r, std::vector<word> members) {
    check_claw_params(n, r);
    for (word m : members) {
        if (!claw_set_valid(n, m)) throw param_error("claw set contains adjacent vertices");
        if (popcount_word(m) != r) throw param_error("claw set has wrong size");
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return ClawFamily{n, r, std::move(members)};
}

ClawFamily enumerate_claw_independent(int n, int r) {
    check_claw_params(n, r);
    const int slots = claw_slots(n);
    // adjacency of G_n as vertex masks, enumerated by direct backtracking
    std::vector<word> nbr(slots, 0);
    const int root = 2 * n;
    for (int i = 0; i < n; ++i) {
        int leaf = 2 * i, mid = 2 * i + 1;
        nbr[leaf] |= word{1} << mid;
        nbr[mid] |= (word{1} << leaf) | (word{1} << root);
        nbr[root] |= word{1} << mid;
    }
    std::vector<word> out;
    auto dfs = [&](auto&& self, int first, word cur, word blocked, int picked) -> void {
        if (picked == r) {
            out.push_back(cur);
            return;
        }
        for (int v = first; v < slots; ++v) {
            if ((blocked >> v) & word{1}) continue;
            self(self, v + 1, cur | (word{1} << v), blocked | nbr[v], picked + 1);
        }
    };
    dfs(dfs, 0, 0, 0, 0);
    std::sort(out.begin(), out.end());
    return ClawFamily{n, r, std::move(out)};
}

i128 count_claw_independent(int n, int r) {
    check_claw_params(n, r);
    return checked_add(checked_mul(binom(n, r), ipow(2, r)), binom(n, r - 1));
}

i128 canonical_claw_size(int n, int r) {
    check_claw_params(n, r);
    return checked_add(checked_mul(binom(n - 1, r - 1), ipow(2, r - 1)), binom(n - 1, r - 2));
}

i128 tech_sum(int n, int r, int m) {
    i128 total = 0;
    for (int j = 0; j <= r - 1; ++j) {
        i128 term = checked_mul(binom(m, j), binom(n - m - 1, r - j - 1));
        total = checked_add(total, checked_mul(term, ipow(2, r - j - 1)));
    }
    return total;
}

CheckOutcome tech_check(int n, int r, int m) {
    if (!(4 <= r && r <= n - 1)) throw param_error("tech check needs 4 <= r <= n-1");
    if (m != r && m != r - 1 && m != r - 2)
        throw param_error("tech check needs m in {r, r-1, r-2}");
    i128 sum = tech_sum(n, r, m);
    if (m == n - 1) {
        if (sum != binom(n - 1, r - 1)) return {false, "equality-at-m-eq-n-1-violated"};
        return {true, "equality"};
    }
    if (sum <= checked_add(1, binom(n - 1, r - 1))) return {false, "bound-violated"};
    return {true, "strict"};
}

ClawFamily prop_counterexample_family(int n) {
    if (n <= 2) throw param_error("proposition family needs n > 2");
    const int r = n;
    check_claw_params(n, r);
    std::vector<word> out;
    const int leaf_majority = (n + 2) / 2; // ceil((n+1)/2)
    Params gamma = make_params(n, 2, n);
    const word a1 = word{1};
    for (const IndSet& x : enumerate_r_independent(gamma).members) {
        int leaves = 0;
        for (int i = 0; i < n; ++i)
            if ((x.bits >> (2 * i)) & word{1}) ++leaves;
        if (leaves >= leaf_majority)
            out.push_back(x.bits);
        else if (n % 2 == 0 && leaves == n / 2 && (x.bits & a1))
            out.push_back(x.bits);
    }
    // all root-containing n-independent sets: c plus n-1 leaves
    const word root = word{1} << (2 * n);
    word all_leaves = 0;
    for (int i = 0; i < n; ++i) all_leaves |= word{1} << (2 * i);
    for (int skip = 0; skip < n; ++skip)
        out.push_back(root | (all_leaves & ~(word{1} << (2 * skip))));
    std::sort(out.begin(), out.end());
    return ClawFamily{n, r, std::move(out)};
}

bool claw_is_intersecting(const ClawFamily& f) {
    for (std::size_t i = 0; i < f.members.size(); ++i)
        for (std::size_t j = i + 1; j < f.members.size(); ++j)
            if ((f.members[i] & f.members[j]) == 0) return false;
    return true;
}

std::vector<ClawVertex> claw_common_intersection(const ClawFamily& f) {
    if (f.members.empty()) throw param_error("common intersection of an empty family");
    word acc = ~word{0};
    for (word m : f.members) acc &= m;
    acc &= (word{1} << claw_slots(f.n)) - 1;
    std::vector<ClawVertex> out;
    for (int b = 0; b < claw_slots(f.n); ++b)
        if ((acc >> b) & word{1}) out.push_back(claw_vertex_at(f.n, b));
    return out;
}

IndSet claw_psi(int n, word root_free_bits) {
    if ((root_free_bits >> (2 * n)) & word{1})
        throw param_error("psi applies to root-free sets only");
    word img = 0;
    for (int i = 1; i <= n; ++i) {
        if ((root_free_bits >> (2 * (i - 1))) & word{1})
            img |= word{1} << ((i - 1) * 2);     // a_i -> (i,1)
        if ((root_free_bits >> (2 * (i - 1) + 1)) & word{1})
            img |= word{1} << ((i - 1) * 2 + 1); // b_i -> (i,2)
    }
    return IndSet{img};
}

ClawSearchResult max_intersecting_claw(int n, int r, const SearchBudget& budget,
                                       bool enumerate_optima, int workers) {
    ClawFamily all = enumerate_claw_independent(n, r);
    UniverseResult stars = universe_star_max(all.members, claw_slots(n));
    UniverseResult ec = universe_empty_cap_max(all.members, claw_slots(n), budget);

    ClawSearchResult out;
    out.optimum = std::max(stars.optimum, ec.optimum);
    out.explored_nodes = ec.explored_nodes;

    auto to_family = [&](const std::vector<int>& idx) {
        std::vector<word> ws;
        ws.reserve(idx.size());
        for (int i : idx) ws.push_back(all.members[i]);
        return make_claw_family(n, r, std::move(ws));
    };

    if (!enumerate_optima) {
        if (stars.optimum >= ec.optimum && !stars.witness_indices.empty())
            out.witnesses.push_back(to_family(stars.witness_indices[0]));
        else if (!ec.witness_indices.empty())
            out.witnesses.push_back(to_family(ec.witness_indices[0]));
        return out;
    }

    // all optima: stars of optimal size at every vertex, plus every optimal
    // empty-intersection family
    for (int u = 0; u < claw_slots(n); ++u) {
        std::vector<int> idx;
        for (int i = 0; i < static_cast<int>(all.members.size()); ++i)
            if ((all.members[i] >> u) & word{1}) idx.push_back(i);
        if (static_cast<long long>(idx.size()) == out.optimum)
            out.witnesses.push_back(to_family(idx));
    }
    if (ec.optimum == out.optimum) {
        UniverseResult en = universe_empty_cap_enumerate(all.members, claw_slots(n),
                                                         out.optimum, budget, workers);
        out.explored_nodes += en.explored_nodes;
        for (const auto& idx : en.witness_indices) out.witnesses.push_back(to_family(idx));
    }
    std::sort(out.witnesses.begin(), out.witnesses.end(),
              [](const ClawFamily& a, const ClawFamily& b) { return a.members < b.members; });
    out.witnesses.erase(std::unique(out.witnesses.begin(), out.witnesses.end()),
                        out.witnesses.end());
    return out;
}

std::string claw_canonical_form(const ClawFamily& f) {
    std::vector<int> sigma(f.n);
    for (int i = 0; i < f.n; ++i) sigma[i] = i;
    bool first = true;
    std::vector<word> best;
    do {
        std::vector<word> img;
        img.reserve(f.members.size());
        for (word m : f.members) {
            word w = m & (word{1} << (2 * f.n)); // root fixed
            for (int i = 0; i < f.n; ++i) {
                if ((m >> (2 * i)) & word{1}) w |= word{1} << (2 * sigma[i]);
                if ((m >> (2 * i + 1)) & word{1}) w |= word{1} << (2 * sigma[i] + 1);
            }
            img.push_back(w);
        }
        std::sort(img.begin(), img.end());
        if (first || img < best) {
            best = std::move(img);
            first = false;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    std::string out;
    static const char* digits = "0123456789abcdef";
    for (std::size_t i = 0; i < best.size(); ++i) {
        if (i) out.push_back(',');
        word b = best[i];
        std::string s;
        if (b == 0) s = "0";
        while (b != 0) {
            s.push_back(digits[static_cast<unsigned>(b & 0xf)]);
            b >>= 4;
        }
        out += std::string(s.rbegin(), s.rend());
    }
    return out;
}

std::string claw_to_text(const ClawFamily& f) {
    std::ostringstream out;
    out << "claw " << f.n << ' ' << f.r << '\n';
    for (word m : f.members) {
        bool first = true;
        auto emit = [&](const std::string& tok) {
            if (!first) out << ' ';
            out << tok;
            first = false;
        };
        if ((m >> (2 * f.n)) & word{1}) emit("c");
        for (int i = 1; i <= f.n; ++i) {
            if ((m >> (2 * (i - 1))) & word{1}) emit("a" + std::to_string(i));
            if ((m >> (2 * (i - 1) + 1)) & word{1}) emit("b" + std::to_string(i));
        }
        out << '\n';
    }
    return out.str();
}

ClawFamily claw_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw io_error("empty claw file");
    std::istringstream head(line);
    std::string tag;
    int n = 0, r = 0;
    head >> tag >> n >> r;
    if (tag != "claw" || head.fail()) throw io_error("expected header 'claw n r'");

    std::vector<word> members;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tok;
        word bits = 0;
        while (ls >> tok) {
            if (tok == "c") {
                bits |= word{1} << (2 * n);
            } else if (tok.size() >= 2 && (tok[0] == 'a' || tok[0] == 'b')) {
                int leg = std::stoi(tok.substr(1));
                if (leg < 1 || leg > n) throw io_error("claw leg out of range");
                bits |= word{1} << (2 * (leg - 1) + (tok[0] == 'b' ? 1 : 0));
            } else {
                throw io_error("bad claw token '" + tok + "'");
            }
        }
        members.push_back(bits);
    }
    return make_claw_family(n, r, std::move(members));
}

} // namespace indfam
