#include "indfam/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdio>
#include <future>
#include <map>
#include <set>
#include <string>

#include "indfam/constructions.hpp"

namespace indfam {

namespace {

using clock_type = std::chrono::steady_clock;

// Dynamic bitset over universe indices.
struct Bits {
    std::vector<std::uint64_t> w;

    Bits() = default;
    explicit Bits(int n) : w((n + 63) / 64, 0) {}

    void assign_and(const Bits& a, const Bits& b) {
        w.resize(a.w.size());
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = a.w[i] & b.w[i];
    }
    void set(int i) { w[i >> 6] |= 1ull << (i & 63); }
    void clear(int i) { w[i >> 6] &= ~(1ull << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }

    bool empty() const {
        for (std::uint64_t x : w)
            if (x) return false;
        return true;
    }
    int count() const {
        int c = 0;
        for (std::uint64_t x : w) c += std::popcount(x);
        return c;
    }
    void and_with(const Bits& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
    }
    bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] & ~o.w[i]) return false;
        return true;
    }
    template <class F>
    void for_each(F f) const {
        for (std::size_t b = 0; b < w.size(); ++b) {
            std::uint64_t x = w[b];
            while (x) {
                f(static_cast<int>(b * 64) + std::countr_zero(x));
                x &= x - 1;
            }
        }
    }
};

word slots_mask(int slots) {
    return (slots >= kWordBits) ? ~word{0} : ((word{1} << slots) - 1);
}

struct EmptyCapEngine {
    std::vector<word> sets;       // reordered by meet-degree descending
    std::vector<int> orig_index;  // engine index -> caller index
    int slots;
    int m;
    std::vector<Bits> adj;   // meet-graph adjacency (no self loops)
    std::vector<Bits> star;  // star[u] = sets containing vertex slot u

    SearchBudget budget;
    clock_type::time_point t0;
    std::uint64_t nodes = 0;

    // phase-1 state
    long long best = 0;
    std::vector<int> best_clique;

    // phase-2 state
    long long target = -1;

    // per-depth scratch: no per-node heap traffic
    std::vector<std::vector<std::pair<int, int>>> order_buf;
    std::vector<Bits> sub_buf, next_buf, rest_buf, avail_buf;
    Bits killer_scratch, prime_scratch;

    // structured clique cover of the disjointness relation: class_of[i] (in
    // engine index space) names a group of pairwise-disjoint sets; any
    // intersecting family takes at most one member per class
    std::vector<int> class_of;
    std::vector<int> class_stamp;
    int stamp_gen = 0;

    EmptyCapEngine(const std::vector<word>& input, int slot_count, const SearchBudget& b,
                   const std::vector<int>& classes = {})
        : slots(slot_count), m(static_cast<int>(input.size())), budget(b) {
        t0 = clock_type::now();

        orig_index.resize(m);
        for (int i = 0; i < m; ++i) orig_index[i] = i;
        if (classes.empty()) {
            std::vector<long long> degree(m, 0);
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j)
                    if (input[i] & input[j]) {
                        ++degree[i];
                        ++degree[j];
                    }
            std::sort(orig_index.begin(), orig_index.end(), [&](int a, int b) {
                if (degree[a] != degree[b]) return degree[a] > degree[b];
                return input[a] < input[b];
            });
        } else {
            // class-major order: greedy coloring then rebuilds whole classes
            std::sort(orig_index.begin(), orig_index.end(), [&](int a, int b) {
                if (classes[a] != classes[b]) return classes[a] < classes[b];
                return input[a] < input[b];
            });
            class_of.resize(m);
            int next_id = -1, prev = -1;
            for (int i = 0; i < m; ++i) {
                if (classes[orig_index[i]] != prev) {
                    prev = classes[orig_index[i]];
                    ++next_id;
                }
                class_of[i] = next_id;
            }
            class_stamp.assign(next_id + 1, 0);
        }
        sets.resize(m);
        for (int i = 0; i < m; ++i) sets[i] = input[orig_index[i]];

        adj.assign(m, Bits(m));
        star.assign(slots, Bits(m));
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j)
                if (sets[i] & sets[j]) {
                    adj[i].set(j);
                    adj[j].set(i);
                }
            for (int u = 0; u < slots; ++u)
                if ((sets[i] >> u) & word{1}) star[u].set(i);
        }
        order_buf.assign(m + 2, {});
        sub_buf.assign(m + 2, Bits(m));
        next_buf.assign(m + 2, Bits(m));
        rest_buf.assign(m + 2, Bits(m));
        avail_buf.assign(m + 2, Bits(m));
        killer_scratch = Bits(m);
        prime_scratch = Bits(m);
    }

    std::vector<int> to_original(const std::vector<int>& clique) const {
        std::vector<int> out;
        out.reserve(clique.size());
        for (int v : clique) out.push_back(orig_index[v]);
        return out;
    }

    void tick() {
        std::uint64_t n = ++nodes;
        if (n > budget.node_cap)
            throw budget_error("node cap exceeded", best);
        if ((n & 0x1fff) == 0) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          clock_type::now() - t0).count();
            if (ms > budget.time_cap_ms)
                throw budget_error("time cap exceeded", best);
        }
    }

    // Prune when some running-intersection vertex lies in every remaining
    // candidate: all completions would keep a common vertex.
    bool lookahead_prune(word cap, const Bits& pool) const {
        word c = cap;
        while (c != 0) {
            int u;
#ifdef INDFAM_WIDE_BITSET
            std::uint64_t lo = static_cast<std::uint64_t>(c);
            u = lo ? std::countr_zero(lo)
                   : 64 + std::countr_zero(static_cast<std::uint64_t>(c >> 64));
#else
            u = std::countr_zero(c);
#endif
            if (pool.subset_of(star[u])) return true;
            c &= c - 1;
        }
        return false;
    }

    // Greedy sequential coloring; emits (vertex, color) grouped by color
    // ascending.
    void color_order(const Bits& pool, std::vector<std::pair<int, int>>& order, int depth) {
        order.clear();
        Bits& rest = rest_buf[depth];
        Bits& avail = avail_buf[depth];
        rest = pool;
        int cls = 0;
        while (!rest.empty()) {
            ++cls;
            avail = rest;
            while (!avail.empty()) {
                int v = -1;
                for (std::size_t b = 0; b < avail.w.size(); ++b)
                    if (avail.w[b]) {
                        v = static_cast<int>(b * 64) + std::countr_zero(avail.w[b]);
                        break;
                    }
                order.emplace_back(v, cls);
                avail.clear(v);
                rest.clear(v);
                for (std::size_t b = 0; b < avail.w.size(); ++b) avail.w[b] &= ~adj[v].w[b];
            }
        }
    }

    // Greedy feasible family to prime the incumbent: grow a clique from each
    // of a few high-degree roots, preferring candidates that cut the running
    // common intersection fastest.
    void prime_incumbent() {
        const int tries = std::min(m, 24);
        for (int v0 = 0; v0 < tries; ++v0) {
            std::vector<int> clique{v0};
            word cap = sets[v0];
            Bits pool = adj[v0];
            while (true) {
                int pick = -1, pick_cut = -1;
                long long pick_deg = -1;
                pool.for_each([&](int v) {
                    int cut = popcount_word(cap) - popcount_word(cap & sets[v]);
                    if (cut < pick_cut) return;
                    prime_scratch.assign_and(pool, adj[v]);
                    long long deg = prime_scratch.count();
                    if (cut > pick_cut || (cut == pick_cut && deg > pick_deg)) {
                        pick = v;
                        pick_cut = cut;
                        pick_deg = deg;
                    }
                });
                if (pick < 0) break;
                clique.push_back(pick);
                cap &= sets[pick];
                pool.and_with(adj[pick]);
            }
            if (cap == 0 && static_cast<long long>(clique.size()) > best) {
                best = static_cast<long long>(clique.size());
                best_clique = clique;
            }
        }
    }

    // Branch on the first candidate that removes a chosen vertex from the
    // running intersection.  The cap strictly shrinks along these branches,
    // so this phase runs at most r deep before the plain clique phase.
    // Returns the branch list for the cap vertex with fewest killers, or an
    // empty list when some cap vertex cannot be removed at all (prune).
    bool killer_branches(word cap, const Bits& pool, std::vector<int>& out) const {
        out.clear();
        int best_u = -1;
        long long best_cnt = -1;
        word c = cap;
        while (c != 0) {
            int u;
#ifdef INDFAM_WIDE_BITSET
            std::uint64_t lo = static_cast<std::uint64_t>(c);
            u = lo ? std::countr_zero(lo)
                   : 64 + std::countr_zero(static_cast<std::uint64_t>(c >> 64));
#else
            u = std::countr_zero(c);
#endif
            long long cnt = 0;
            for (std::size_t b = 0; b < pool.w.size(); ++b)
                cnt += std::popcount(pool.w[b] & ~star[u].w[b]);
            if (cnt == 0) return false; // no completion can empty the cap
            if (best_cnt < 0 || cnt < best_cnt) {
                best_cnt = cnt;
                best_u = u;
            }
            c &= c - 1;
        }
        const Bits& killers_src = pool;
        for (int b = 0; b < static_cast<int>(killers_src.w.size()); ++b) {
            std::uint64_t x = killers_src.w[b] & ~star[best_u].w[b];
            while (x) {
                out.push_back(b * 64 + std::countr_zero(x));
                x &= x - 1;
            }
        }
        return true;
    }

    // Upper bound: greedy-coloring class count of the pool.
    long long color_bound(const Bits& pool, int depth) {
        std::vector<std::pair<int, int>>& order = order_buf[depth];
        color_order(pool, order, depth);
        long long bound = order.empty() ? 0 : order.back().second;
        if (!class_of.empty()) bound = std::min(bound, cover_bound(pool));
        return bound;
    }

    // Number of structured cover classes the pool touches.
    long long cover_bound(const Bits& pool) {
        ++stamp_gen;
        long long touched = 0;
        pool.for_each([&](int v) {
            if (class_stamp[class_of[v]] != stamp_gen) {
                class_stamp[class_of[v]] = stamp_gen;
                ++touched;
            }
        });
        return touched;
    }

    void rec_max(std::vector<int>& clique, word cap, const Bits& pool, int depth) {
        tick();
#ifdef INDFAM_SEARCH_TRACE
        if ((nodes & 0x3fff) == 0)
            std::fprintf(stderr,
                         "[trace] nodes=%llu depth=%d |C|=%zu cap=%d |pool|=%d cover=%lld best=%lld\n",
                         (unsigned long long)nodes, depth, clique.size(), popcount_word(cap),
                         pool.count(), class_of.empty() ? -1 : cover_bound(pool), best);
#endif
        if (cap == 0 && static_cast<long long>(clique.size()) > best) {
            best = static_cast<long long>(clique.size());
            best_clique = clique;
        }
        if (pool.empty()) return;

        if (cap != 0 && !clique.empty()) {
            if (static_cast<long long>(clique.size()) + pool.count() <= best) return;
            if (!class_of.empty() &&
                static_cast<long long>(clique.size()) + cover_bound(pool) <= best)
                return;
            std::vector<int> branches;
            if (!killer_branches(cap, pool, branches)) return;
            if (static_cast<long long>(clique.size()) + color_bound(pool, depth) <= best)
                return;
            Bits& sub = sub_buf[depth];
            Bits& next = next_buf[depth];
            sub = pool;
            for (int v : branches) {
                sub.clear(v);
                next.assign_and(sub, adj[v]);
                clique.push_back(v);
                rec_max(clique, cap & sets[v], next, depth + 1);
                clique.pop_back();
            }
            return;
        }

        if (!class_of.empty() &&
            static_cast<long long>(clique.size()) + cover_bound(pool) <= best)
            return;
        std::vector<std::pair<int, int>>& order = order_buf[depth];
        color_order(pool, order, depth);

        Bits& sub = sub_buf[depth];
        Bits& next = next_buf[depth];
        sub = pool;
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            auto [v, col] = order[i];
            if (static_cast<long long>(clique.size()) + col <= best) return;
            sub.clear(v);
            next.assign_and(sub, adj[v]);
            clique.push_back(v);
            rec_max(clique, cap & sets[v], next, depth + 1);
            clique.pop_back();
        }
    }

    void rec_enum(std::vector<int>& clique, word cap, const Bits& pool, int depth,
                  std::vector<std::vector<int>>& found) {
        tick();
        if (cap == 0 && static_cast<long long>(clique.size()) == target)
            found.push_back(to_original(clique));
        if (pool.empty()) return;

        if (cap != 0 && !clique.empty()) {
            if (static_cast<long long>(clique.size()) + pool.count() < target) return;
            if (!class_of.empty() &&
                static_cast<long long>(clique.size()) + cover_bound(pool) < target)
                return;
            std::vector<int> branches;
            if (!killer_branches(cap, pool, branches)) return;
            if (static_cast<long long>(clique.size()) + color_bound(pool, depth) < target)
                return;
            Bits& sub = sub_buf[depth];
            Bits& next = next_buf[depth];
            sub = pool;
            for (int v : branches) {
                sub.clear(v);
                next.assign_and(sub, adj[v]);
                clique.push_back(v);
                rec_enum(clique, cap & sets[v], next, depth + 1, found);
                clique.pop_back();
            }
            return;
        }

        if (!class_of.empty() &&
            static_cast<long long>(clique.size()) + cover_bound(pool) < target)
            return;
        std::vector<std::pair<int, int>>& order = order_buf[depth];
        color_order(pool, order, depth);

        Bits& sub = sub_buf[depth];
        Bits& next = next_buf[depth];
        sub = pool;
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            auto [v, col] = order[i];
            if (static_cast<long long>(clique.size()) + col < target) return;
            sub.clear(v);
            next.assign_and(sub, adj[v]);
            clique.push_back(v);
            rec_enum(clique, cap & sets[v], next, depth + 1, found);
            clique.pop_back();
        }
    }
};

std::vector<std::vector<int>> sorted_witnesses(std::vector<std::vector<int>> ws) {
    for (auto& w : ws) std::sort(w.begin(), w.end());
    std::sort(ws.begin(), ws.end());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    return ws;
}

} // namespace

UniverseResult universe_star_max(const std::vector<word>& sets, int slots) {
    UniverseResult out;
    int arg = -1;
    for (int u = 0; u < slots; ++u) {
        long long cnt = 0;
        for (word s : sets)
            if ((s >> u) & word{1}) ++cnt;
        if (cnt > out.optimum) {
            out.optimum = cnt;
            arg = u;
        }
    }
    if (arg >= 0) {
        std::vector<int> w;
        for (int i = 0; i < static_cast<int>(sets.size()); ++i)
            if ((sets[i] >> arg) & word{1}) w.push_back(i);
        out.witness_indices.push_back(std::move(w));
    }
    return out;
}

UniverseResult universe_empty_cap_max(const std::vector<word>& sets, int slots,
                                      const SearchBudget& budget, bool transitive_sets,
                                      const std::vector<int>& cover_classes) {
    EmptyCapEngine eng(sets, slots, budget, cover_classes);
    eng.prime_incumbent();
    if (transitive_sets && eng.m > 0) {
        // the automorphism group is transitive on the universe, so some
        // maximum family contains sets[0]; search only those
        std::vector<int> clique{0};
        Bits pool = eng.adj[0];
        eng.rec_max(clique, eng.sets[0], pool, 1);
    } else {
        std::vector<int> clique;
        Bits pool(eng.m);
        for (int i = 0; i < eng.m; ++i) pool.set(i);
        eng.rec_max(clique, slots_mask(slots), pool, 0);
    }
    UniverseResult out;
    out.optimum = eng.best;
    if (eng.best > 0) out.witness_indices = sorted_witnesses({eng.to_original(eng.best_clique)});
    out.explored_nodes = eng.nodes;
    return out;
}

UniverseResult universe_empty_cap_enumerate(const std::vector<word>& sets, int slots,
                                            long long target, const SearchBudget& budget,
                                            int workers, const std::vector<int>& cover_classes) {
    if (workers < 1) workers = 1;
    const int m = static_cast<int>(sets.size());
    UniverseResult out;
    out.optimum = target;
    if (target <= 0 || m == 0) return out;

    // Root-level branches are distributed across workers; each branch is an
    // independent deterministic subtree, so any worker count produces the
    // same witness set.
    std::atomic<std::uint64_t> total_nodes{0};

    auto run_roots = [&](int first_root, int stride) {
        EmptyCapEngine eng(sets, slots, budget, cover_classes);
        eng.target = target;
        std::vector<std::vector<int>> found;
        // engine-space root v: cliques whose highest engine index is v
        for (int v = first_root; v < m; v += stride) {
            std::vector<int> clique{v};
            Bits pool(m);
            for (int j = 0; j < v; ++j) pool.set(j);
            pool.and_with(eng.adj[v]);
            eng.rec_enum(clique, eng.sets[v], pool, 1, found);
        }
        total_nodes += eng.nodes;
        return found;
    };

    std::vector<std::vector<int>> all;
    if (workers == 1) {
        all = run_roots(0, 1);
    } else {
        std::vector<std::future<std::vector<std::vector<int>>>> futs;
        for (int wk = 0; wk < workers; ++wk)
            futs.push_back(std::async(std::launch::async, run_roots, wk, workers));
        for (auto& f : futs) {
            auto part = f.get();
            all.insert(all.end(), part.begin(), part.end());
        }
    }
    out.witness_indices = sorted_witnesses(std::move(all));
    out.explored_nodes = total_nodes.load();
    return out;
}

// Same-support pattern-shift classes: X and X + c (mod k, applied to every
// position in the support) are pairwise disjoint, so any intersecting family
// holds at most one set per class.
std::vector<int> gamma_shift_classes(const Params& p, const std::vector<word>& sets) {
    std::map<std::pair<word, std::vector<int>>, int> ids;
    std::vector<int> out;
    out.reserve(sets.size());
    for (word s : sets) {
        word support = 0;
        std::vector<int> pos;
        int base = -1;
        for (int i = 0; i < p.n; ++i) {
            for (int j = 0; j < p.k; ++j)
                if ((s >> (i * p.k + j)) & word{1}) {
                    support |= word{1} << i;
                    if (base < 0) base = j;
                    pos.push_back((j - base + p.k) % p.k);
                }
        }
        auto key = std::make_pair(support, std::move(pos));
        auto [it, inserted] = ids.emplace(std::move(key), static_cast<int>(ids.size()));
        out.push_back(it->second);
    }
    return out;
}

// Orbit representatives of `candidates` under the stabilizer of x0 in the
// wreath group.  Used to branch the second family member over one candidate
// per orbit: any family through x0 maps, by a stabilizer element, to one
// through x0 and a representative.
std::vector<int> gamma_stab_orbit_reps(const Params& p, word x0,
                                       const std::vector<word>& candidates,
                                       i128 stab_limit = 1'000'000) {
    std::vector<int> all;
    for (int i = 0; i < static_cast<int>(candidates.size()); ++i) all.push_back(i);

    std::vector<int> sup, nonsup, pos(p.n, -1);
    for (int i = 0; i < p.n; ++i) {
        bool has = false;
        for (int j = 0; j < p.k; ++j)
            if ((x0 >> (i * p.k + j)) & word{1}) {
                has = true;
                pos[i] = j;
            }
        (has ? sup : nonsup).push_back(i);
    }

    i128 fact_k = 1;
    for (int i = 2; i <= p.k; ++i) fact_k = checked_mul(fact_k, i);
    i128 order = 1;
    for (int i = 2; i <= static_cast<int>(sup.size()); ++i) order = checked_mul(order, i);
    for (int i = 2; i <= static_cast<int>(nonsup.size()); ++i) order = checked_mul(order, i);
    order = checked_mul(order, ipow(fact_k / std::max<i128>(p.k, 1), sup.size()));
    order = checked_mul(order, ipow(fact_k, nonsup.size()));
    if (order > stab_limit) return all; // graceful: no reduction

    // all permutations of [k], indexed; and, per (from, to), those mapping
    // from -> to
    std::vector<std::vector<int>> perms_k;
    {
        std::vector<int> base(p.k);
        for (int j = 0; j < p.k; ++j) base[j] = j;
        std::vector<int> q = base;
        do {
            perms_k.push_back(q);
        } while (std::next_permutation(q.begin(), q.end()));
    }
    std::vector<std::vector<std::vector<std::vector<int>>>> fixed(
        p.k, std::vector<std::vector<std::vector<int>>>(p.k));
    for (const auto& q : perms_k)
        for (int from = 0; from < p.k; ++from) fixed[from][q[from]].push_back(q);

    // enumerate all stabilizer vertex maps
    std::vector<std::vector<int>> vmaps;
    std::vector<int> sperm(sup.size()), nperm(nonsup.size());
    for (std::size_t i = 0; i < sup.size(); ++i) sperm[i] = static_cast<int>(i);
    for (std::size_t i = 0; i < nonsup.size(); ++i) nperm[i] = static_cast<int>(i);

    std::vector<int> vmap(p.slots());
    do {
        std::vector<int> np = nperm;
        do {
            // per-clique choice lists under this clique permutation
            std::vector<const std::vector<std::vector<int>>*> choices(p.n);
            std::vector<int> target_clique(p.n);
            for (std::size_t a = 0; a < sup.size(); ++a) {
                int i = sup[a], ti = sup[sperm[a]];
                target_clique[i] = ti;
                choices[i] = &fixed[pos[i]][pos[ti]];
            }
            for (std::size_t a = 0; a < nonsup.size(); ++a) {
                int i = nonsup[a], ti = nonsup[np[a]];
                target_clique[i] = ti;
                choices[i] = nullptr; // all perms
            }
            std::vector<std::size_t> odo(p.n, 0);
            while (true) {
                for (int i = 0; i < p.n; ++i) {
                    const std::vector<int>& tau =
                        choices[i] ? (*choices[i])[odo[i]] : perms_k[odo[i]];
                    for (int j = 0; j < p.k; ++j)
                        vmap[i * p.k + j] = target_clique[i] * p.k + tau[j];
                }
                vmaps.push_back(vmap);
                int c = p.n - 1;
                while (c >= 0) {
                    std::size_t lim = choices[c] ? choices[c]->size() : perms_k.size();
                    if (odo[c] + 1 < lim) {
                        ++odo[c];
                        break;
                    }
                    odo[c--] = 0;
                }
                if (c < 0) break;
            }
        } while (std::next_permutation(np.begin(), np.end()));
    } while (std::next_permutation(sperm.begin(), sperm.end()));

    std::map<word, int> index_of;
    for (int i = 0; i < static_cast<int>(candidates.size()); ++i)
        index_of[candidates[i]] = i;
    std::vector<char> visited(candidates.size(), 0);
    std::vector<int> reps;
    for (int i = 0; i < static_cast<int>(candidates.size()); ++i) {
        if (visited[i]) continue;
        reps.push_back(i);
        for (const auto& vm : vmaps) {
            word img = 0, b = candidates[i];
            while (b != 0) {
#ifdef INDFAM_WIDE_BITSET
                std::uint64_t lo = static_cast<std::uint64_t>(b);
                int bit = lo ? std::countr_zero(lo)
                             : 64 + std::countr_zero(static_cast<std::uint64_t>(b >> 64));
#else
                int bit = std::countr_zero(b);
#endif
                img |= word{1} << vm[bit];
                b &= b - 1;
            }
            auto it = index_of.find(img);
            if (it != index_of.end()) visited[it->second] = 1;
        }
    }
    return reps;
}

// Value-phase search specialised to I^r_{n,k}: fixes sets[0] as a member
// (set-transitivity), branches the second member over stabilizer orbit
// representatives only, and warm-starts the incumbent from any feasible
// constructed family (feasibility re-checked here; the bound proof does not
// depend on the seed).
UniverseResult gamma_empty_cap_value(const Params& p, const std::vector<word>& sets,
                                     const SearchBudget& budget) {
    EmptyCapEngine eng(sets, p.slots(), budget, gamma_shift_classes(p, sets));
    eng.prime_incumbent();

    {
        std::map<word, int> engine_index;
        for (int i = 0; i < eng.m; ++i) engine_index[eng.sets[i]] = i;
        auto seed = [&](const Family& f) {
            if (static_cast<long long>(f.size()) <= eng.best) return;
            if (!is_intersecting(f)) return;
            if (f.members.empty() || !common_intersection(f).empty()) return;
            std::vector<int> clique;
            for (const IndSet& x : f.members) {
                auto it = engine_index.find(x.bits);
                if (it == engine_index.end()) return;
                clique.push_back(it->second);
            }
            eng.best = static_cast<long long>(clique.size());
            eng.best_clique = std::move(clique);
        };
        if (p.r >= 2 && p.r <= p.n - 1) seed(hm_family(p));
        if (p.r == 3 && p.n >= 3) seed(triangle_family(p));
        if (p.r == p.n && p.k >= 2 && p.n >= 2) seed(main_rn_family(p.n, p.k));
    }
    if (eng.m > 0 && p.r >= 1) {
        word x0 = eng.sets[0];
        std::vector<int> cand_idx;
        std::vector<word> cand_words;
        eng.adj[0].for_each([&](int v) {
            cand_idx.push_back(v);
            cand_words.push_back(eng.sets[v]);
        });
        for (int rep : gamma_stab_orbit_reps(p, x0, cand_words)) {
            int v = cand_idx[rep];
            std::vector<int> clique{0, v};
            Bits pool = eng.adj[0];
            pool.and_with(eng.adj[v]);
            eng.rec_max(clique, x0 & eng.sets[v], pool, 2);
        }
    }
    UniverseResult out;
    out.optimum = eng.best;
    if (eng.best > 0) out.witness_indices = {eng.to_original(eng.best_clique)};
    for (auto& w : out.witness_indices) std::sort(w.begin(), w.end());
    out.explored_nodes = eng.nodes;
    return out;
}

namespace {

Family family_from_indices(const Params& p, const std::vector<word>& sets,
                           const std::vector<int>& idx) {
    std::vector<IndSet> members;
    members.reserve(idx.size());
    for (int i : idx) members.push_back(IndSet{sets[i]});
    return make_family_unchecked(p, std::move(members));
}

double elapsed_ms(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

} // namespace

SearchResult max_intersecting(const Params& p, const SearchBudget& budget, int workers) {
    (void)workers;
    if (p.r < 1) throw param_error("max_intersecting needs r >= 1");
    auto t0 = clock_type::now();
    Family all = enumerate_r_independent(p);
    std::vector<word> sets;
    sets.reserve(all.size());
    for (const IndSet& x : all.members) sets.push_back(x.bits);

    UniverseResult stars = universe_star_max(sets, p.slots());
    UniverseResult ec = gamma_empty_cap_value(p, sets, budget);

    SearchResult out;
    out.explored_nodes = ec.explored_nodes;
    if (stars.optimum >= ec.optimum) { // ties go to the star witness
        out.optimum = stars.optimum;
        if (!stars.witness_indices.empty())
            out.witnesses.push_back(family_from_indices(p, sets, stars.witness_indices[0]));
    } else {
        out.optimum = ec.optimum;
        if (!ec.witness_indices.empty())
            out.witnesses.push_back(family_from_indices(p, sets, ec.witness_indices[0]));
    }
    out.wall_ms = elapsed_ms(t0);
    return out;
}

SearchResult max_intersecting_empty_cap(const Params& p, const SearchBudget& budget,
                                        int workers) {
    (void)workers;
    if (p.r < 2) throw param_error("max_intersecting_empty_cap needs r >= 2");
    auto t0 = clock_type::now();
    Family all = enumerate_r_independent(p);
    std::vector<word> sets;
    sets.reserve(all.size());
    for (const IndSet& x : all.members) sets.push_back(x.bits);

    UniverseResult ec = gamma_empty_cap_value(p, sets, budget);
    SearchResult out;
    out.optimum = ec.optimum;
    for (const auto& w : ec.witness_indices)
        out.witnesses.push_back(family_from_indices(p, sets, w));
    out.explored_nodes = ec.explored_nodes;
    out.wall_ms = elapsed_ms(t0);
    return out;
}

SearchResult enumerate_optimal_empty_cap(const Params& p, const SearchBudget& budget,
                                         int workers) {
    if (p.r < 2) throw param_error("enumerate_optimal_empty_cap needs r >= 2");
    auto t0 = clock_type::now();
    Family all = enumerate_r_independent(p);
    std::vector<word> sets;
    sets.reserve(all.size());
    for (const IndSet& x : all.members) sets.push_back(x.bits);

    UniverseResult ec = gamma_empty_cap_value(p, sets, budget);
    SearchResult out;
    out.optimum = ec.optimum;
    out.explored_nodes = ec.explored_nodes;
    if (ec.optimum > 0) {
        UniverseResult en = universe_empty_cap_enumerate(sets, p.slots(), ec.optimum, budget,
                                                         workers, gamma_shift_classes(p, sets));
        out.explored_nodes += en.explored_nodes;
        for (const auto& w : en.witness_indices)
            out.witnesses.push_back(family_from_indices(p, sets, w));
        std::sort(out.witnesses.begin(), out.witnesses.end(),
                  [](const Family& a, const Family& b) { return a.members < b.members; });
    }
    out.wall_ms = elapsed_ms(t0);
    return out;
}

// ---------------------------------------------------------------------------
// Cross-intersecting pairs: NextClosure walk over the meets relation.

UniversePairResult universe_max_cross(const std::vector<word>& sets, bool collect_all,
                                      const SearchBudget& budget) {
    const int m = static_cast<int>(sets.size());
    UniversePairResult out;
    if (m == 0) return out;

    std::vector<Bits> row(m, Bits(m)); // row[i] = sets meeting set i (incl. i when nonempty)
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (sets[i] & sets[j]) row[i].set(j);

    Bits all(m);
    for (int i = 0; i < m; ++i) all.set(i);

    auto meets = [&](const Bits& a) {
        Bits acc = all;
        a.for_each([&](int i) { acc.and_with(row[i]); });
        return acc;
    };
    auto closure = [&](const Bits& a) { return meets(meets(a)); };

    auto t0 = clock_type::now();
    std::uint64_t visited = 0;
    std::set<std::pair<std::vector<int>, std::vector<int>>> best_pairs;
    long long best = -1;

    auto to_indices = [](const Bits& b) {
        std::vector<int> v;
        b.for_each([&](int i) { v.push_back(i); });
        return v;
    };

    auto process = [&](const Bits& a) {
        Bits b = meets(a);
        if (a.empty() || b.empty()) return;
        long long score = a.count() + b.count();
        if (score < best) return;
        auto ia = to_indices(a), ib = to_indices(b);
        auto pr = (ia <= ib) ? std::make_pair(ia, ib) : std::make_pair(ib, ia);
        if (score > best) {
            best = score;
            best_pairs.clear();
            best_pairs.insert(pr);
        } else if (collect_all) {
            best_pairs.insert(pr);
        }
    };

    // NextClosure in lectic order
    Bits cur = closure(Bits(m));
    process(cur);
    while (true) {
        if (++visited > budget.node_cap) throw budget_error("node cap exceeded", best);
        if ((visited & 0x3ff) == 0) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          clock_type::now() - t0).count();
            if (ms > budget.time_cap_ms) throw budget_error("time cap exceeded", best);
        }
        bool advanced = false;
        Bits a = cur;
        for (int i = m - 1; i >= 0; --i) {
            if (a.test(i)) {
                a.clear(i);
                continue;
            }
            Bits trial = a;
            trial.set(i);
            Bits closed = closure(trial);
            // lectic successor test: nothing new below i
            bool ok = true;
            for (int b = 0; b < i && ok; ++b)
                if (closed.test(b) && !a.test(b)) ok = false;
            if (ok) {
                cur = closed;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
        process(cur);
    }

    out.optimum = best < 0 ? 0 : best;
    out.explored_nodes = visited;
    for (const auto& pr : best_pairs) out.pair_indices.push_back(pr);
    return out;
}

namespace {

SearchResult cross_common(const Params& p, bool collect_all, const SearchBudget& budget) {
    if (p.r < 1) throw param_error("cross search needs r >= 1");
    auto t0 = clock_type::now();
    Family all = enumerate_r_independent(p);
    std::vector<word> sets;
    sets.reserve(all.size());
    for (const IndSet& x : all.members) sets.push_back(x.bits);

    UniversePairResult res = universe_max_cross(sets, collect_all, budget);
    SearchResult out;
    out.optimum = res.optimum;
    out.explored_nodes = res.explored_nodes;
    for (const auto& [ia, ib] : res.pair_indices)
        out.pair_witnesses.emplace_back(family_from_indices(p, sets, ia),
                                        family_from_indices(p, sets, ib));
    std::sort(out.pair_witnesses.begin(), out.pair_witnesses.end(),
              [](const auto& x, const auto& y) {
                  return std::tie(x.first.members, x.second.members) <
                         std::tie(y.first.members, y.second.members);
              });
    out.wall_ms = elapsed_ms(t0);
    return out;
}

} // namespace

SearchResult max_cross_sum(const Params& p, const SearchBudget& budget) {
    return cross_common(p, false, budget);
}

SearchResult enumerate_optimal_cross_pairs(const Params& p, const SearchBudget& budget) {
    return cross_common(p, true, budget);
}

} // namespace indfam
