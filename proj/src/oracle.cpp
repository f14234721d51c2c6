#include "distinguo/oracle.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace distinguo {

void ConstraintSet::validate() const {
    if (!forbid_two_cycle && !forbid_two_path && !require_distinguishing)
        throw InputError("constraint set: at least one constraint must be on");
}

std::string ConstraintSet::label() const {
    std::string s;
    if (forbid_two_cycle)
        s = "two_cycle";
    if (forbid_two_path)
        s += (s.empty() ? "" : "+") + std::string("two_path");
    if (require_distinguishing)
        s += (s.empty() ? "" : "+") + std::string("distinguishing");
    return s;
}

namespace {

// Greedy clique on a degree-descending order: a quick lower bound for chi.
int clique_lower_bound(const SimpleGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    });
    int best = 0;
    for (int start : order) {
        std::vector<int> clique{start};
        for (int v : order) {
            if (v == start)
                continue;
            bool ok = true;
            for (int u : clique)
                if (!g.adjacent(u, v))
                    ok = false;
            if (ok)
                clique.push_back(v);
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

struct VertexColourSearch {
    const SimpleGraph& g;
    int n, k;
    std::vector<int> colour;

    VertexColourSearch(const SimpleGraph& graph, int limit)
        : g(graph), n(graph.vertex_count()), k(limit), colour(n, 0) {}

    int saturation(int v) const {
        std::array<char, 17> seen{};
        int s = 0;
        for (int u : g.neighbours(v))
            if (colour[u] && !seen[colour[u]]) {
                seen[colour[u]] = 1;
                ++s;
            }
        return s;
    }

    bool solve(int done, int used) {
        if (done == n)
            return true;
        int v = -1, best_sat = -1, best_deg = -1;
        for (int u = 0; u < n; ++u) {
            if (colour[u])
                continue;
            const int s = saturation(u);
            if (s > best_sat || (s == best_sat && g.degree(u) > best_deg)) {
                best_sat = s;
                best_deg = g.degree(u);
                v = u;
            }
        }
        const int limit = std::min(used + 1, k);
        for (int c = 1; c <= limit; ++c) {
            bool ok = true;
            for (int u : g.neighbours(v))
                if (colour[u] == c)
                    ok = false;
            if (!ok)
                continue;
            colour[v] = c;
            if (solve(done + 1, std::max(used, c)))
                return true;
            colour[v] = 0;
        }
        return false;
    }
};

} // namespace

std::vector<int> greedy_vertex_colouring(const SimpleGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> colour(n, 0);
    for (int step = 0; step < n; ++step) {
        int v = -1, best_sat = -1, best_deg = -1;
        for (int u = 0; u < n; ++u) {
            if (colour[u])
                continue;
            std::vector<char> seen(n + 2, 0);
            int s = 0;
            for (int w : g.neighbours(u))
                if (colour[w] && !seen[colour[w]]) {
                    seen[colour[w]] = 1;
                    ++s;
                }
            if (s > best_sat || (s == best_sat && g.degree(u) > best_deg)) {
                best_sat = s;
                best_deg = g.degree(u);
                v = u;
            }
        }
        int c = 1;
        for (;;) {
            bool clash = false;
            for (int u : g.neighbours(v))
                if (colour[u] == c)
                    clash = true;
            if (!clash)
                break;
            ++c;
        }
        colour[v] = c;
    }
    for (int& c : colour)
        --c;
    return colour;
}

std::vector<int> exact_vertex_colouring(const SimpleGraph& g) {
    const int n = g.vertex_count();
    if (n > 16)
        throw InputError("exact_vertex_colouring: limited to n <= 16");
    if (n == 0)
        return {};
    auto greedy = greedy_vertex_colouring(g);
    const int ub = 1 + *std::max_element(greedy.begin(), greedy.end());
    const int lb = std::max(1, clique_lower_bound(g));
    for (int k = lb; k <= ub; ++k) {
        VertexColourSearch search(g, k);
        if (search.solve(0, 0)) {
            for (int& c : search.colour)
                --c;
            return search.colour;
        }
    }
    for (int& c : greedy) // unreachable: the greedy bound always colours
        ++c;
    throw Error("exact_vertex_colouring: internal bound failure");
}

std::optional<std::vector<int>> try_vertex_colouring(const SimpleGraph& g, int k) {
    if (g.vertex_count() > 16)
        throw InputError("try_vertex_colouring: limited to n <= 16");
    if (k < 1)
        return std::nullopt;
    VertexColourSearch search(g, std::min(k, 16));
    if (!search.solve(0, 0))
        return std::nullopt;
    for (int& c : search.colour)
        --c;
    return search.colour;
}

int chromatic_number(const SimpleGraph& g) {
    auto colouring = exact_vertex_colouring(g);
    if (colouring.empty())
        return 0;
    return 1 + *std::max_element(colouring.begin(), colouring.end());
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Arcs in BFS edge order, the two directions of an edge adjacent.
std::vector<std::pair<int, int>> bfs_arc_order(const SimpleGraph& g) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> arcs;
    std::vector<char> seen_vertex(n, 0);
    std::vector<char> seen_edge(g.edge_count(), 0);
    for (int root = 0; root < n; ++root) {
        if (seen_vertex[root])
            continue;
        std::vector<int> queue{root};
        seen_vertex[root] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int v = queue[head];
            for (int u : g.neighbours(v)) {
                const int e = g.edge_index(v, u);
                if (!seen_edge[e]) {
                    seen_edge[e] = 1;
                    arcs.emplace_back(v, u);
                    arcs.emplace_back(u, v);
                }
                if (!seen_vertex[u]) {
                    seen_vertex[u] = 1;
                    queue.push_back(u);
                }
            }
        }
    }
    return arcs;
}

// Twins can be swapped by an automorphism whenever their incident arc
// patterns coincide, so no completion of such a branch is distinguishing.
struct TwinPair {
    int u, v;
    bool adjacent;
};

std::vector<TwinPair> twin_pairs(const SimpleGraph& g) {
    const int n = g.vertex_count();
    std::vector<TwinPair> twins;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            std::vector<int> nu = g.neighbours(u), nv = g.neighbours(v);
            if (g.adjacent(u, v)) {
                nu.erase(std::find(nu.begin(), nu.end(), v));
                nv.erase(std::find(nv.begin(), nv.end(), u));
                if (nu == nv)
                    twins.push_back({u, v, true});
            } else if (nu == nv) {
                twins.push_back({u, v, false});
            }
        }
    return twins;
}

struct ArcSearch {
    const SimpleGraph& g;
    int k;
    ConstraintSet cs;
    SearchOptions opts;
    std::vector<std::pair<int, int>> arcs;
    ArcColouring work;
    std::uint64_t nodes = 0;
    bool budget_hit = false;

    std::vector<TwinPair> twins;
    std::vector<int> twin_remaining;            // uncoloured incident arcs per twin pair
    std::vector<std::vector<int>> arc_to_twins; // arc position -> twin indices

    ArcSearch(const SimpleGraph& graph, int colours, ConstraintSet constraints,
              SearchOptions options)
        : g(graph), k(colours), cs(constraints), opts(options), arcs(bfs_arc_order(graph)),
          work(graph, colours) {
        if (cs.require_distinguishing) {
            twins = twin_pairs(g);
            twin_remaining.assign(twins.size(), 0);
            arc_to_twins.assign(arcs.size(), {});
            for (std::size_t t = 0; t < twins.size(); ++t)
                for (std::size_t a = 0; a < arcs.size(); ++a) {
                    auto [tail, head] = arcs[a];
                    if (tail == twins[t].u || tail == twins[t].v || head == twins[t].u ||
                        head == twins[t].v) {
                        arc_to_twins[a].push_back(static_cast<int>(t));
                        ++twin_remaining[t];
                    }
                }
        }
    }

    bool pattern_ok(int tail, int head, int colour) const {
        if (cs.forbid_two_cycle && work.colour(head, tail) == colour)
            return false;
        if (cs.forbid_two_path) {
            for (int x : g.neighbours(tail))
                if (x != head && work.colour(x, tail) == colour)
                    return false;
            for (int y : g.neighbours(head))
                if (y != tail && work.colour(head, y) == colour)
                    return false;
        }
        return true;
    }

    bool twins_swappable(const TwinPair& t) const {
        if (t.adjacent && work.colour(t.u, t.v) != work.colour(t.v, t.u))
            return false;
        for (int x : g.neighbours(t.u)) {
            if (x == t.v)
                continue;
            if (work.colour(t.u, x) != work.colour(t.v, x) ||
                work.colour(x, t.u) != work.colour(x, t.v))
                return false;
        }
        return true;
    }

    // Colour order for one arc: previously used colours (optionally
    // shuffled), then the single smallest unused colour.
    std::vector<int> colour_order(int used, std::size_t depth) const {
        std::vector<int> order;
        for (int c = 1; c <= std::min(used, k); ++c)
            order.push_back(c);
        if (opts.value_seed && order.size() > 1) {
            std::uint64_t state = splitmix64(*opts.value_seed ^ (depth * 0x9e3779b9ull));
            for (std::size_t i = order.size(); i > 1; --i) {
                state = splitmix64(state);
                std::swap(order[i - 1], order[state % i]);
            }
        }
        if (used < k)
            order.push_back(used + 1);
        return order;
    }

    bool try_colour(std::size_t pos, int used, int c) {
        auto [tail, head] = arcs[pos];
        if (++nodes > opts.node_budget) {
            budget_hit = true;
            return false;
        }
        if (!pattern_ok(tail, head, c))
            return false;
        work.set_colour(tail, head, c);
        bool pruned = false;
        if (cs.require_distinguishing)
            for (int t : arc_to_twins[pos])
                if (--twin_remaining[t] == 0 && twins_swappable(twins[t]))
                    pruned = true;
        const bool done = !pruned && solve(pos + 1, std::max(used, c));
        if (!done) {
            if (cs.require_distinguishing)
                for (int t : arc_to_twins[pos])
                    ++twin_remaining[t];
            work.set_colour(tail, head, 0);
        }
        return done;
    }

    bool solve(std::size_t pos, int used) {
        if (budget_hit)
            return false;
        if (pos == arcs.size()) {
            if (!cs.require_distinguishing)
                return true;
            const std::uint64_t remaining =
                opts.node_budget > nodes ? opts.node_budget - nodes : 1;
            auto verdict = is_distinguishing(work, remaining);
            nodes += verdict.nodes;
            if (!verdict.exact) {
                budget_hit = true;
                return false;
            }
            return verdict.distinguishing;
        }
        if (!opts.value_seed) {
            const int limit = std::min(used + 1, k);
            for (int c = 1; c <= limit; ++c)
                if (try_colour(pos, used, c))
                    return true;
            return false;
        }
        for (int c : colour_order(used, pos))
            if (try_colour(pos, used, c))
                return true;
        return false;
    }
};

} // namespace

SearchResult search_colouring(const SimpleGraph& g, int k, ConstraintSet cs,
                              SearchOptions opts) {
    cs.validate();
    if (k < 1 || k > 16)
        throw InputError("search_colouring: k must be in [1, 16]");
    const int arc_limit = cs.require_distinguishing ? 40 : 60;
    if (!opts.allow_oversize && g.arc_count() > arc_limit)
        throw InputError("search_colouring: at most " + std::to_string(arc_limit) +
                         " arcs supported, graph has " + std::to_string(g.arc_count()));
    if (cs.require_distinguishing && !g.is_connected())
        throw InputError("search_colouring: distinguishing mode requires a connected graph");
    ArcSearch search(g, k, cs, opts);
    SearchResult result;
    const bool found = search.solve(0, 0);
    result.nodes = search.nodes;
    if (found) {
        result.status = SearchStatus::Found;
        result.colouring = search.work;
    } else {
        result.status =
            search.budget_hit ? SearchStatus::BudgetExceeded : SearchStatus::ProvenImpossible;
    }
    return result;
}

IndexResult exact_index(const SimpleGraph& g, ConstraintSet cs, SearchOptions opts) {
    cs.validate();
    bool proven = true;
    std::uint64_t nodes = 0;
    for (int k = 1; k <= 16; ++k) {
        auto res = search_colouring(g, k, cs, opts);
        nodes += res.nodes;
        if (res.status == SearchStatus::Found) {
            const ArcColouring& cert = *res.colouring;
            if (cs.forbid_two_cycle && !monochromatic_two_cycles(cert).empty())
                throw Error("exact_index: certificate has a monochromatic 2-cycle");
            if (cs.forbid_two_path && !monochromatic_two_paths(cert).empty())
                throw Error("exact_index: certificate has a monochromatic 2-path");
            if (cs.require_distinguishing && !is_distinguishing(cert).distinguishing)
                throw Error("exact_index: certificate is not distinguishing");
            return {k, cert, proven, nodes};
        }
        if (res.status == SearchStatus::BudgetExceeded)
            proven = false;
    }
    throw InputError("exact_index: no colouring found for any k <= 16");
}

} // namespace distinguo
