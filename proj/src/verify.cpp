#include "distinguo/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>
#include <string>

namespace distinguo {

std::vector<std::pair<int, int>> monochromatic_two_cycles(const ArcColouring& c) {
    std::vector<std::pair<int, int>> out;
    for (auto [u, v] : c.graph().edges())
        if (c.colour(u, v) != 0 && c.colour(u, v) == c.colour(v, u))
            out.emplace_back(u, v);
    return out; // edges() is already lex-sorted
}

std::vector<std::array<int, 3>> monochromatic_two_paths(const ArcColouring& c) {
    const SimpleGraph& g = c.graph();
    std::vector<std::array<int, 3>> out;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbours(u)) {
            const int in = c.colour(u, v);
            if (in == 0)
                continue;
            for (int w : g.neighbours(v))
                if (w != u && c.colour(v, w) == in)
                    out.push_back({u, v, w});
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> find_monochromatic(const ArcColouring& c, Pattern pattern) {
    std::vector<std::vector<int>> out;
    if (pattern == Pattern::TwoCycle) {
        for (auto [u, v] : monochromatic_two_cycles(c))
            out.push_back({u, v});
    } else {
        for (auto [u, v, w] : monochromatic_two_paths(c))
            out.push_back({u, v, w});
    }
    return out;
}

bool preserves_colouring(const ArcColouring& c, const VertexPermutation& phi) {
    const SimpleGraph& g = c.graph();
    const int n = g.vertex_count();
    if (static_cast<int>(phi.image.size()) != n)
        return false;
    std::vector<char> hit(n, 0);
    for (int v = 0; v < n; ++v) {
        const int x = phi.image[v];
        if (x < 0 || x >= n || hit[x])
            return false;
        hit[x] = 1;
    }
    for (auto [u, v] : g.edges()) {
        const int pu = phi.image[u], pv = phi.image[v];
        if (!g.adjacent(pu, pv))
            return false;
        if (c.colour(u, v) != c.colour(pu, pv) || c.colour(v, u) != c.colour(pv, pu))
            return false;
    }
    return true;
}

std::uint64_t default_node_budget() {
    if (const char* env = std::getenv("DISTINGUO_NODE_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0)
            return v;
    }
    return 100'000'000ull;
}

namespace {

// Iterated signature refinement. Round zero keys each vertex by the sorted
// multiset of (outgoing colour, ingoing colour) pairs over its incident
// edges (the multiset size is the degree); later rounds fold in the class
// of the neighbour until the partition stops splitting. Class ids are
// assigned in sorted key order, which makes them canonical for the input.
std::vector<int> refine_classes(const ArcColouring& c) {
    const SimpleGraph& g = c.graph();
    const int n = g.vertex_count();
    std::vector<int> cls(n, 0);
    int count = 1;
    for (;;) {
        std::map<std::vector<int>, int> ids;
        std::vector<std::vector<int>> keys(n);
        for (int v = 0; v < n; ++v) {
            std::vector<std::array<int, 3>> sig;
            sig.reserve(g.degree(v));
            for (int u : g.neighbours(v))
                sig.push_back({cls[u], c.colour(v, u), c.colour(u, v)});
            std::sort(sig.begin(), sig.end());
            std::vector<int>& key = keys[v];
            key.push_back(cls[v]);
            for (auto& t : sig) {
                key.push_back(t[0]);
                key.push_back(t[1]);
                key.push_back(t[2]);
            }
            ids.emplace(key, 0);
        }
        int next = 0;
        for (auto& [key, id] : ids)
            id = next++;
        if (next == count)
            break;
        count = next;
        for (int v = 0; v < n; ++v)
            cls[v] = ids[keys[v]];
    }
    return cls;
}

struct MapSearch {
    const ArcColouring& c;
    const SimpleGraph& g;
    int n;
    std::vector<int> cls;
    std::vector<int> map, inv;
    std::vector<int> mapped_nbrs; // per domain vertex
    std::vector<int> used_nbrs;   // per image vertex
    std::uint64_t nodes = 0;
    std::uint64_t budget;
    bool budget_hit = false;

    MapSearch(const ArcColouring& col, std::uint64_t b)
        : c(col), g(col.graph()), n(g.vertex_count()), cls(refine_classes(col)),
          map(n, -1), inv(n, -1), mapped_nbrs(n, 0), used_nbrs(n, 0), budget(b) {}

    bool consistent(int v, int x) const {
        if (cls[v] != cls[x] || inv[x] != -1)
            return false;
        if (mapped_nbrs[v] != used_nbrs[x])
            return false;
        for (int u : g.neighbours(v)) {
            const int y = map[u];
            if (y < 0)
                continue;
            if (!g.adjacent(x, y))
                return false;
            if (c.colour(v, u) != c.colour(x, y) || c.colour(u, v) != c.colour(y, x))
                return false;
        }
        return true;
    }

    void assign(int v, int x) {
        map[v] = x;
        inv[x] = v;
        for (int u : g.neighbours(v))
            ++mapped_nbrs[u];
        for (int y : g.neighbours(x))
            ++used_nbrs[y];
    }

    void unassign(int v, int x) {
        map[v] = -1;
        inv[x] = -1;
        for (int u : g.neighbours(v))
            --mapped_nbrs[u];
        for (int y : g.neighbours(x))
            --used_nbrs[y];
    }

    // Completes the current partial map to a full automorphism if possible.
    // lex_order picks the smallest unmapped vertex next (so the first
    // completion found is the lexicographically smallest one); otherwise the
    // most constrained vertex is picked, which prunes harder.
    bool complete(bool lex_order) {
        if (budget_hit)
            return false;
        if (++nodes > budget) {
            budget_hit = true;
            return false;
        }
        int v = -1;
        if (lex_order) {
            for (int u = 0; u < n; ++u)
                if (map[u] < 0) {
                    v = u;
                    break;
                }
        } else {
            int best = -1;
            for (int u = 0; u < n; ++u)
                if (map[u] < 0 && mapped_nbrs[u] > best) {
                    best = mapped_nbrs[u];
                    v = u;
                }
        }
        if (v < 0)
            return true;
        for (int x = 0; x < n; ++x) {
            if (!consistent(v, x))
                continue;
            assign(v, x);
            if (complete(lex_order))
                return true;
            unassign(v, x);
        }
        return false;
    }

    // Is there an automorphism fixing 0..j-1 pointwise with phi(j) = x?
    std::optional<VertexPermutation> witness_with_prefix(int j, int x, bool lex_order) {
        std::fill(map.begin(), map.end(), -1);
        std::fill(inv.begin(), inv.end(), -1);
        std::fill(mapped_nbrs.begin(), mapped_nbrs.end(), 0);
        std::fill(used_nbrs.begin(), used_nbrs.end(), 0);
        for (int t = 0; t < j; ++t) {
            if (!consistent(t, t))
                return std::nullopt;
            assign(t, t);
        }
        if (!consistent(j, x))
            return std::nullopt;
        assign(j, x);
        if (!complete(lex_order))
            return std::nullopt;
        return VertexPermutation{map};
    }
};

std::vector<std::vector<int>> orbits_from_generators(int n,
                                                     const std::vector<VertexPermutation>& gens) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (const auto& phi : gens)
        for (int v = 0; v < n; ++v) {
            const int a = find(v), b = find(phi.image[v]);
            if (a != b)
                parent[std::max(a, b)] = std::min(a, b);
        }
    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < n; ++v)
        groups[find(v)].push_back(v);
    std::vector<std::vector<int>> orbits;
    for (auto& [root, members] : groups)
        orbits.push_back(std::move(members));
    return orbits;
}

void finish_report(AutomorphismReport& r, int n) {
    r.orbits = orbits_from_generators(n, r.generators);
    r.fixed.clear();
    for (const auto& orbit : r.orbits)
        if (orbit.size() == 1)
            r.fixed.push_back(orbit[0]);
}

void require_connected(const ArcColouring& c) {
    if (!c.graph().is_connected())
        throw InputError("automorphism search requires a connected graph");
}

} // namespace

AutomorphismReport colour_automorphisms(const ArcColouring& c, std::uint64_t node_budget) {
    require_connected(c);
    const int n = c.graph().vertex_count();
    MapSearch search(c, node_budget);
    AutomorphismReport report;
    std::vector<int> class_size(n, 0);
    for (int v = 0; v < n; ++v)
        ++class_size[search.cls[v]];
    std::uint64_t order = 1;
    for (int j = 0; j < n && !search.budget_hit; ++j) {
        if (class_size[search.cls[j]] == 1)
            continue;
        std::uint64_t orbit = 1; // j itself, via the identity
        for (int x = 0; x < n; ++x) {
            if (x == j || search.cls[x] != search.cls[j])
                continue;
            auto phi = search.witness_with_prefix(j, x, false);
            if (search.budget_hit)
                break;
            if (!phi)
                continue;
            if (!preserves_colouring(c, *phi))
                throw Error("automorphism search produced an invalid witness");
            ++orbit;
            report.generators.push_back(std::move(*phi));
        }
        if (order > std::numeric_limits<std::uint64_t>::max() / orbit)
            order = std::numeric_limits<std::uint64_t>::max();
        else
            order *= orbit;
    }
    report.group_order = order;
    report.exact = !search.budget_hit && order <= 100'000'000ull;
    report.nodes = search.nodes;
    finish_report(report, n);
    return report;
}

AutomorphismReport colour_automorphisms_exhaustive(const ArcColouring& c) {
    require_connected(c);
    const int n = c.graph().vertex_count();
    if (n > 8)
        throw InputError("exhaustive sweep limited to n <= 8");
    VertexPermutation phi;
    phi.image.resize(n);
    std::iota(phi.image.begin(), phi.image.end(), 0);
    AutomorphismReport report;
    std::uint64_t order = 0;
    do {
        if (!preserves_colouring(c, phi))
            continue;
        ++order;
        if (phi.is_identity())
            continue;
        // keep only generators that actually merge orbits
        auto with = report.generators;
        with.push_back(phi);
        if (orbits_from_generators(n, with).size() <
            orbits_from_generators(n, report.generators).size())
            report.generators.push_back(phi);
    } while (std::next_permutation(phi.image.begin(), phi.image.end()));
    report.group_order = order;
    report.exact = true;
    finish_report(report, n);
    return report;
}

DistinguishingVerdict is_distinguishing(const ArcColouring& c, std::uint64_t node_budget) {
    require_connected(c);
    const int n = c.graph().vertex_count();
    MapSearch search(c, node_budget);
    DistinguishingVerdict verdict;
    // every class a singleton: only the identity can preserve the colouring
    bool all_singleton = true;
    std::vector<int> size(n, 0);
    for (int v = 0; v < n; ++v)
        if (++size[search.cls[v]] > 1)
            all_singleton = false;
    if (all_singleton) {
        verdict.distinguishing = true;
        verdict.nodes = 0;
        return verdict;
    }
    // A nontrivial automorphism fixing 0..j-1 and moving j exists for the
    // largest such j exactly when the lexicographically smallest witness
    // moves j first, so scan prefixes from the longest down.
    for (int j = n - 1; j >= 0; --j) {
        if (size[search.cls[j]] == 1)
            continue;
        for (int x = j + 1; x < n; ++x) {
            if (search.cls[x] != search.cls[j])
                continue;
            auto phi = search.witness_with_prefix(j, x, true);
            if (search.budget_hit) {
                verdict.exact = false;
                verdict.nodes = search.nodes;
                return verdict;
            }
            if (!phi)
                continue;
            if (!preserves_colouring(c, *phi) || phi->is_identity())
                throw Error("distinguishing search produced an invalid witness");
            verdict.distinguishing = false;
            verdict.witness = std::move(*phi);
            verdict.nodes = search.nodes;
            return verdict;
        }
    }
    verdict.distinguishing = true;
    verdict.nodes = search.nodes;
    return verdict;
}

} // namespace distinguo
