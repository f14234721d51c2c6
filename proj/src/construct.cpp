#include "distinguo/construct.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>

#include "distinguo/bounds.hpp"
#include "distinguo/oracle.hpp"
#include "distinguo/verify.hpp"

namespace distinguo {

namespace {

constexpr std::uint64_t kGroupSearchNodeCap = 1'000'000;
constexpr std::uint64_t kEscalationRungNodeCap = 20'000'000;

std::uint32_t colour_bit(int c) {
    return std::uint32_t{1} << (c - 1);
}

int lowest_colour(std::uint32_t mask) {
    return std::countr_zero(mask) + 1;
}

std::uint32_t range_mask(int lo, int hi) {
    std::uint32_t m = 0;
    for (int c = lo; c <= hi; ++c)
        m |= colour_bit(c);
    return m;
}

// All t-element subsets of {first..first+k-1} as bitmasks, in the
// lexicographic order of their sorted tuples.
std::vector<std::uint32_t> subsets_lex(int k, int t, int first = 1) {
    std::vector<std::uint32_t> out;
    if (t < 0 || t > k)
        return out;
    if (t == 0)
        return {0u};
    std::vector<int> pick(t);
    std::iota(pick.begin(), pick.end(), first);
    for (;;) {
        std::uint32_t m = 0;
        for (int c : pick)
            m |= colour_bit(c);
        out.push_back(m);
        int i = t - 1;
        while (i >= 0 && pick[i] == first + k - (t - i))
            --i;
        if (i < 0)
            break;
        ++pick[i];
        for (int j = i + 1; j < t; ++j)
            pick[j] = pick[j - 1] + 1;
    }
    return out;
}

// Colours the arcs of a path along the walk `seq`: forward arcs alternate
// 1,2, opposite arcs carry the other colour, and odd orders get colour 3 on
// the first forward arc, which pins the first vertex.
void colour_path_walk(ArcColouring& col, const std::vector<int>& seq) {
    const int n = static_cast<int>(seq.size());
    for (int j = 0; j + 1 < n; ++j) {
        col.set_colour(seq[j], seq[j + 1], j % 2 == 0 ? 1 : 2);
        col.set_colour(seq[j + 1], seq[j], j % 2 == 0 ? 2 : 1);
    }
    if (n % 2 == 1)
        col.set_colour(seq[0], seq[1], 3);
}

// Even cycles: the unique two-colour pattern with one forward arc recoloured
// to 3. Odd cycles: the wrap edge and the first backward arc carry colour 3,
// giving the first vertex a unique ingoing colour set.
void colour_cycle_walk(ArcColouring& col, const std::vector<int>& seq) {
    const int n = static_cast<int>(seq.size());
    if (n % 2 == 0) {
        for (int j = 0; j < n; ++j) {
            col.set_colour(seq[j], seq[(j + 1) % n], j % 2 == 0 ? 1 : 2);
            col.set_colour(seq[(j + 1) % n], seq[j], j % 2 == 0 ? 2 : 1);
        }
        col.set_colour(seq[0], seq[1], 3);
    } else {
        for (int j = 0; j + 1 < n; ++j) {
            col.set_colour(seq[j], seq[j + 1], j % 2 == 0 ? 1 : 2);
            col.set_colour(seq[j + 1], seq[j], j == 0 ? 3 : (j % 2 == 0 ? 2 : 1));
        }
        col.set_colour(seq[n - 1], seq[0], 3);
        col.set_colour(seq[0], seq[n - 1], 2);
    }
}

ArcColouring colour_star(int delta) {
    const ColourBudget b = colour_budget(delta);
    ArcColouring col(star_graph(delta), b.k);
    for (int j = 0; j < delta; ++j) {
        const int out = 1 + j / b.half_floor;
        const int in = b.half_ceil + 1 + j % b.half_floor;
        col.set_colour(0, j + 1, out);
        col.set_colour(j + 1, 0, in);
    }
    return col;
}

// Distinct lists, one per vertex, with every arc coloured by the smallest
// admissible colour.
ArcColouring colour_by_lists(SimpleGraph g, int k, const std::vector<std::uint32_t>& lists) {
    ArcColouring col(std::move(g), k);
    for (auto [u, v] : col.graph().edges()) {
        const std::uint32_t into_v = lists[v] & ~lists[u];
        const std::uint32_t into_u = lists[u] & ~lists[v];
        if (!into_v || !into_u)
            throw Error("list colouring: adjacent vertices share a list");
        col.set_colour(u, v, lowest_colour(into_v));
        col.set_colour(v, u, lowest_colour(into_u));
    }
    return col;
}

ArcColouring colour_complete(int n) {
    if (n < 2)
        throw InputError("complete family colouring: need n >= 2");
    const int k = min_k_threshold(n);
    auto all = subsets_lex(k, k / 2);
    std::vector<std::uint32_t> lists(all.begin(), all.begin() + n);
    return colour_by_lists(complete_graph(n), k, lists);
}

// Distinct floor(k/2)-subsets of {first..first+k-1}, chosen so that every
// list has a disjoint partner among the chosen ones whenever the subset
// family allows it; if one partner-less list is unavoidable it is placed
// last (for an odd complete graph that slot is the singleton class, which
// needs no transposition breaking).
std::vector<std::uint32_t> quotient_lists(int q, int k, int first) {
    auto all = subsets_lex(k, k / 2, first);
    if (q > static_cast<int>(all.size()))
        throw Error("quotient_lists: not enough subsets");
    std::vector<char> used(all.size(), 0);
    std::vector<std::uint32_t> chosen;
    auto first_unused = [&](auto pred) -> int {
        for (std::size_t i = 0; i < all.size(); ++i)
            if (!used[i] && pred(all[i]))
                return static_cast<int>(i);
        return -1;
    };
    while (static_cast<int>(chosen.size()) < q) {
        if (static_cast<int>(chosen.size()) + 1 == q && !chosen.empty()) {
            int pick = first_unused([&](std::uint32_t m) {
                for (std::uint32_t c : chosen)
                    if ((m & c) == 0)
                        return true;
                return false;
            });
            if (pick < 0)
                pick = first_unused([](std::uint32_t) { return true; });
            used[pick] = 1;
            chosen.push_back(all[pick]);
            break;
        }
        const int s = first_unused([](std::uint32_t) { return true; });
        used[s] = 1;
        chosen.push_back(all[s]);
        if (static_cast<int>(chosen.size()) == q)
            break;
        const int partner = first_unused([&](std::uint32_t m) { return (m & all[s]) == 0; });
        if (partner >= 0) {
            used[partner] = 1;
            chosen.push_back(all[partner]);
        }
    }
    return chosen;
}

struct PairedComplete {
    ArcColouring colouring;
    int quotient_size;
    int pair_count;
    std::vector<std::uint32_t> lists;          // per quotient class
    std::vector<std::vector<int>> arc_colour;  // quotient arc colours
};

PairedComplete build_type2_complete(int n) {
    if (n < 3)
        throw InputError("colour_type2_complete: need n >= 3");
    const int q = (n + 1) / 2;
    const int pairs = n / 2;
    const int kq = min_k_threshold(q);
    auto lists = quotient_lists(q, kq, 2);
    std::vector<std::vector<int>> qcol(q, std::vector<int>(q, 0));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            if (i == j)
                continue;
            const std::uint32_t admissible = lists[j] & ~lists[i];
            if (!admissible)
                throw Error("type2 quotient: adjacent classes share a list");
            qcol[i][j] = lowest_colour(admissible);
        }
    ArcColouring col(complete_graph(n), 1 + kq);
    for (int i = 0; i < pairs; ++i) {
        col.set_colour(2 * i, 2 * i + 1, 1);
        col.set_colour(2 * i + 1, 2 * i, 1);
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y || x / 2 == y / 2)
                continue;
            col.set_colour(x, y, qcol[x / 2][y / 2]);
        }
    return {std::move(col), q, pairs, std::move(lists), std::move(qcol)};
}

} // namespace

ArcColouring colour_type2_complete(int n) {
    return build_type2_complete(n).colouring;
}

ArcColouring colour_distinguishing_type2_complete(int n) {
    if (n < 7)
        throw InputError("colour_distinguishing_type2_complete: need n >= 7");
    PairedComplete built = build_type2_complete(n);
    // Break each intra-pair transposition: recolour one arc ingoing to u_i
    // with a colour admissible for its class, not admissible for the tail's
    // class, and different from the arc's current colour.
    for (int i = 0; i < built.pair_count; ++i) {
        bool done = false;
        for (int j = 0; j < built.quotient_size && !done; ++j) {
            if (j == i)
                continue;
            const std::uint32_t options =
                built.lists[i] & ~built.lists[j] & ~colour_bit(built.arc_colour[j][i]);
            if (!options)
                continue;
            built.colouring.set_colour(2 * j, 2 * i, lowest_colour(options));
            done = true;
        }
        if (!done)
            throw InputError("colour_distinguishing_type2_complete: no valid recolouring "
                             "target for pair " +
                             std::to_string(i + 1) + " (n = " + std::to_string(n) + ")");
    }
    return built.colouring;
}

ArcColouring colour_family_distinguishing(FamilyKind kind, int param) {
    switch (kind) {
    case FamilyKind::Path: {
        SimpleGraph g = path_graph(param);
        std::vector<int> seq(param);
        std::iota(seq.begin(), seq.end(), 0);
        ArcColouring col(std::move(g), param % 2 == 0 ? 2 : 3);
        colour_path_walk(col, seq);
        return col;
    }
    case FamilyKind::Cycle: {
        SimpleGraph g = cycle_graph(param);
        std::vector<int> seq(param);
        std::iota(seq.begin(), seq.end(), 0);
        ArcColouring col(std::move(g), 3);
        colour_cycle_walk(col, seq);
        return col;
    }
    case FamilyKind::Star:
        return colour_star(param);
    case FamilyKind::Complete:
        return colour_complete(param);
    case FamilyKind::CompleteBipartite:
        break;
    }
    throw InputError("colour_family_distinguishing: unsupported family");
}

ArcColouring colour_type1_minimum(const SimpleGraph& g, std::optional<int> chi) {
    const int n = g.vertex_count();
    if (n < 2)
        throw InputError("colour_type1_minimum: need n >= 2");
    if (!g.is_connected())
        throw InputError("colour_type1_minimum: graph must be connected");
    std::vector<int> classes;
    int chi_used = 0;
    if (chi) {
        if (*chi < 1)
            throw InputError("colour_type1_minimum: chi must be positive");
        chi_used = *chi;
        if (n <= 16) {
            auto attempt = try_vertex_colouring(g, *chi);
            if (!attempt)
                throw InputError("colour_type1_minimum: graph is not " +
                                 std::to_string(*chi) + "-colourable");
            classes = *attempt;
        } else {
            classes = greedy_vertex_colouring(g);
            if (1 + *std::max_element(classes.begin(), classes.end()) > *chi)
                throw InputError("colour_type1_minimum: greedy colouring exceeds chi");
        }
    } else if (n <= 16) {
        classes = exact_vertex_colouring(g);
        chi_used = 1 + *std::max_element(classes.begin(), classes.end());
    } else {
        classes = greedy_vertex_colouring(g);
        chi_used = 1 + *std::max_element(classes.begin(), classes.end());
    }
    for (auto [u, v] : g.edges())
        if (classes[u] == classes[v])
            throw InputError("colour_type1_minimum: chi inconsistent, class " +
                             std::to_string(classes[u]) + " contains an edge");
    const int k = min_k_threshold(static_cast<std::uint64_t>(chi_used));
    auto all = subsets_lex(k, k / 2);
    std::vector<std::uint32_t> lists(n);
    for (int v = 0; v < n; ++v)
        lists[v] = all[classes[v]];
    return colour_by_lists(g, k, lists);
}

namespace {

// ---- the rooted-star list construction ------------------------------------

enum class GroupPhase { Distinct, DistinctReuse, SharedReuse };

struct Separator {
    int member;
    int anchor; // a previously listed common neighbour
    int in;     // colour of arc anchor -> member
    int out;    // colour of arc member -> anchor
};

struct ListBuilder {
    const SimpleGraph& g;
    int n, k, t;
    std::uint32_t root_list;
    ArcColouring colouring;
    std::vector<std::uint32_t> lists;
    BfsTree tree;
    int root;
    std::vector<std::uint32_t> all_lists;
    std::vector<std::vector<int>> children;
    std::vector<GroupTrace>* trace;

    ListBuilder(const SimpleGraph& graph, int colours, std::vector<GroupTrace>* tr)
        : g(graph), n(graph.vertex_count()), k(colours), t(colours / 2),
          colouring(graph, colours), lists(n, 0), tree(bfs_tree(graph, pick_root(graph))),
          root(tree.root), all_lists(subsets_lex(colours, colours / 2)), trace(tr) {
        children.assign(n, {});
        for (int v = 0; v < n; ++v)
            if (tree.parent[v] >= 0)
                children[tree.parent[v]].push_back(v);
    }

    static int pick_root(const SimpleGraph& graph) {
        const int delta = graph.max_degree();
        for (int v = 0;; ++v)
            if (graph.degree(v) == delta)
                return v;
    }

    std::vector<int> listed_neighbours(int u) const {
        std::vector<int> out;
        for (int x : g.neighbours(u))
            if (lists[x])
                out.push_back(x);
        return out;
    }

    // Rule-star colours for every uncoloured arc between u and a listed
    // neighbour.
    void close_arcs(int u) {
        for (int x : g.neighbours(u)) {
            if (!lists[x] || colouring.colour(u, x) != 0)
                continue;
            const std::uint32_t into_u = lists[u] & ~lists[x];
            const std::uint32_t into_x = lists[x] & ~lists[u];
            if (!into_u || !into_x)
                throw Error("list construction: adjacent vertices share a list");
            colouring.set_colour(x, u, lowest_colour(into_u));
            colouring.set_colour(u, x, lowest_colour(into_x));
        }
    }

    void build_root_star() {
        lists[root] = root_list = range_mask(k - t + 1, k);
        const auto& nb = g.neighbours(root);
        for (std::size_t j = 0; j < nb.size(); ++j) {
            const int out = 1 + static_cast<int>(j) / t;
            const int in = (k - t) + 1 + static_cast<int>(j) % t;
            if (out > k - t)
                throw Error("root star: pair capacity exceeded");
            colouring.set_colour(root, nb[j], out);
            colouring.set_colour(nb[j], root, in);
            lists[nb[j]] = (root_list | colour_bit(out)) & ~colour_bit(in);
        }
        for (int u : nb)
            close_arcs(u);
    }

    std::vector<std::pair<int, int>> pair_domain(int v) const {
        std::vector<std::pair<int, int>> pairs;
        for (int a = 1; a <= k; ++a) {
            if (lists[v] & colour_bit(a))
                continue;
            for (int b = 1; b <= k; ++b)
                if (lists[v] & colour_bit(b))
                    pairs.emplace_back(a, b);
        }
        return pairs;
    }

    // Lexicographically first admissible list for member `u` coloured with
    // pair (alpha, beta): contains alpha, excludes beta, differs from the
    // lists of u's listed neighbours and of those group members already
    // assigned that are adjacent to u. The root's list is excluded unless
    // reuse is allowed.
    std::uint32_t first_list(int u, int alpha, int beta, const std::vector<int>& members,
                             const std::vector<std::uint32_t>& member_lists, std::size_t upto,
                             bool allow_root_reuse) const {
        std::vector<std::uint32_t> forbidden;
        for (int x : g.neighbours(u))
            if (lists[x])
                forbidden.push_back(lists[x]);
        for (std::size_t m = 0; m < upto; ++m)
            if (member_lists[m] && g.adjacent(u, members[m]))
                forbidden.push_back(member_lists[m]);
        const std::uint32_t need = colour_bit(alpha);
        const std::uint32_t avoid = colour_bit(beta);
        for (std::uint32_t cand : all_lists) {
            if (!(cand & need) || (cand & avoid))
                continue;
            if (cand == root_list && !allow_root_reuse)
                continue;
            if (std::find(forbidden.begin(), forbidden.end(), cand) != forbidden.end())
                continue;
            return cand;
        }
        return 0;
    }

    // Distinct (in, out) colour pairs on arcs to a common listed neighbour,
    // separating group members whose arcs to the parent coincide.
    bool separate_bucket(const std::vector<int>& bucket,
                         const std::vector<std::uint32_t>& bucket_lists, int skip_vertex,
                         std::vector<Separator>& out) const {
        if (bucket.empty())
            return true;
        for (int anchor : g.neighbours(bucket[0])) {
            if (anchor == skip_vertex || !lists[anchor])
                continue;
            std::vector<Separator> picks;
            std::vector<std::pair<int, int>> used;
            bool ok = true;
            // few members, few colours: greedy with backtracking
            std::vector<std::size_t> choice(bucket.size(), 0);
            std::size_t m = 0;
            std::vector<std::vector<std::pair<int, int>>> domains(bucket.size());
            for (std::size_t i = 0; i < bucket.size(); ++i) {
                const std::uint32_t ins = bucket_lists[i] & ~lists[anchor];
                const std::uint32_t outs = lists[anchor] & ~bucket_lists[i];
                for (int a = 1; a <= k; ++a)
                    if (ins & colour_bit(a))
                        for (int b = 1; b <= k; ++b)
                            if (outs & colour_bit(b))
                                domains[i].emplace_back(a, b);
            }
            while (true) {
                if (m == bucket.size())
                    break;
                bool advanced = false;
                for (std::size_t& c = choice[m]; c < domains[m].size(); ++c) {
                    if (std::find(used.begin(), used.end(), domains[m][c]) == used.end()) {
                        used.push_back(domains[m][c]);
                        ++m;
                        advanced = true;
                        break;
                    }
                }
                if (advanced)
                    continue;
                if (m == 0) {
                    ok = false;
                    break;
                }
                choice[m] = 0;
                --m;
                used.pop_back();
                ++choice[m];
            }
            if (!ok)
                continue;
            for (std::size_t i = 0; i < bucket.size(); ++i)
                picks.push_back({bucket[i], anchor, domains[i][choice[i]].first,
                                 domains[i][choice[i]].second});
            out.insert(out.end(), picks.begin(), picks.end());
            return true;
        }
        return false;
    }

    struct GroupAssignment {
        std::vector<std::pair<int, int>> pairs;
        std::vector<std::uint32_t> member_lists;
        std::vector<Separator> separators;
    };

    bool group_dfs(int v, const std::vector<int>& A, GroupPhase phase, GroupAssignment& out,
                   std::uint64_t& nodes) const {
        const auto pairs = pair_domain(v);
        std::vector<std::pair<int, int>> chosen_pairs(A.size());
        std::vector<std::uint32_t> chosen_lists(A.size(), 0);
        std::vector<char> pair_used(pairs.size(), 0);

        const bool allow_reuse = phase != GroupPhase::Distinct;
        const bool shared_pairs = phase == GroupPhase::SharedReuse;

        auto admissible_lists = [&](int u, int alpha, int beta,
                                    std::size_t upto) -> std::vector<std::uint32_t> {
            std::vector<std::uint32_t> result;
            std::vector<std::uint32_t> forbidden;
            for (int x : g.neighbours(u))
                if (lists[x])
                    forbidden.push_back(lists[x]);
            for (std::size_t m = 0; m < upto; ++m)
                if (g.adjacent(u, A[m]))
                    forbidden.push_back(chosen_lists[m]);
            for (std::uint32_t cand : all_lists) {
                if (!(cand & colour_bit(alpha)) || (cand & colour_bit(beta)))
                    continue;
                if (cand == root_list && !allow_reuse)
                    continue;
                if (std::find(forbidden.begin(), forbidden.end(), cand) != forbidden.end())
                    continue;
                result.push_back(cand);
            }
            return result;
        };

        std::function<bool(std::size_t)> place = [&](std::size_t m) -> bool {
            if (m == A.size()) {
                std::vector<Separator> seps;
                if (shared_pairs) {
                    std::map<std::pair<int, int>, std::vector<std::size_t>> buckets;
                    for (std::size_t i = 0; i < A.size(); ++i)
                        buckets[chosen_pairs[i]].push_back(i);
                    for (auto& [pair, idx] : buckets) {
                        if (idx.size() < 2)
                            continue;
                        std::vector<int> members;
                        std::vector<std::uint32_t> member_lists;
                        for (std::size_t i : idx) {
                            members.push_back(A[i]);
                            member_lists.push_back(chosen_lists[i]);
                        }
                        if (!separate_bucket(members, member_lists, v, seps))
                            return false;
                    }
                }
                out.pairs = chosen_pairs;
                out.member_lists = chosen_lists;
                out.separators = std::move(seps);
                return true;
            }
            for (std::size_t p = 0; p < pairs.size(); ++p) {
                if (!shared_pairs && pair_used[p])
                    continue;
                auto [alpha, beta] = pairs[p];
                for (std::uint32_t cand : admissible_lists(A[m], alpha, beta, m)) {
                    if (++nodes > kGroupSearchNodeCap)
                        return false;
                    chosen_pairs[m] = pairs[p];
                    chosen_lists[m] = cand;
                    pair_used[p] = 1;
                    if (place(m + 1))
                        return true;
                    pair_used[p] = 0;
                    chosen_lists[m] = 0;
                }
                if (nodes > kGroupSearchNodeCap)
                    return false;
            }
            return false;
        };
        return place(0);
    }

    void commit(int v, const std::vector<int>& A, const GroupAssignment& plan) {
        for (std::size_t m = 0; m < A.size(); ++m) {
            colouring.set_colour(v, A[m], plan.pairs[m].first);
            colouring.set_colour(A[m], v, plan.pairs[m].second);
            lists[A[m]] = plan.member_lists[m];
        }
        for (const Separator& s : plan.separators) {
            colouring.set_colour(s.anchor, s.member, s.in);
            colouring.set_colour(s.member, s.anchor, s.out);
        }
        for (int u : A)
            close_arcs(u);
    }

    bool process_group(int v, const std::vector<int>& A) {
        const auto pairs = pair_domain(v);
        GroupAssignment plan;
        plan.pairs.resize(A.size());
        plan.member_lists.assign(A.size(), 0);
        std::vector<char> pair_used(pairs.size(), 0);
        bool repair_used = false;
        bool ok = true;
        for (std::size_t m = 0; m < A.size() && ok; ++m) {
            std::size_t first_free = pairs.size();
            bool assigned = false;
            for (std::size_t p = 0; p < pairs.size(); ++p) {
                if (pair_used[p])
                    continue;
                if (first_free == pairs.size())
                    first_free = p;
                const std::uint32_t cand = first_list(A[m], pairs[p].first, pairs[p].second, A,
                                                      plan.member_lists, m, false);
                if (cand) {
                    pair_used[p] = 1;
                    plan.pairs[m] = pairs[p];
                    plan.member_lists[m] = cand;
                    if (p != first_free)
                        repair_used = true;
                    assigned = true;
                    break;
                }
            }
            ok = assigned;
        }
        GroupTrace record{v, static_cast<int>(A.size()), GroupTrace::Strategy::Greedy};
        if (ok) {
            record.strategy =
                repair_used ? GroupTrace::Strategy::Repair : GroupTrace::Strategy::Greedy;
            commit(v, A, plan);
            if (trace)
                trace->push_back(record);
            return true;
        }
        for (GroupPhase phase :
             {GroupPhase::Distinct, GroupPhase::DistinctReuse, GroupPhase::SharedReuse}) {
            std::uint64_t nodes = 0;
            GroupAssignment searched;
            if (group_dfs(v, A, phase, searched, nodes)) {
                record.strategy = GroupTrace::Strategy::Search;
                commit(v, A, searched);
                if (trace)
                    trace->push_back(record);
                return true;
            }
        }
        return false;
    }

    bool run() {
        build_root_star();
        // Lists are only ever assigned, so the first vertex in BFS order
        // with an unlisted child moves monotonically forward.
        std::size_t cursor = 0;
        for (;;) {
            int v = -1;
            while (cursor < tree.order.size()) {
                const int cand = tree.order[cursor];
                for (int u : children[cand])
                    if (!lists[u]) {
                        v = cand;
                        break;
                    }
                if (v >= 0)
                    break;
                ++cursor;
            }
            if (v < 0)
                break;
            int u0 = -1;
            for (int u : children[v])
                if (!lists[u]) {
                    u0 = u;
                    break;
                }
            const auto key = listed_neighbours(u0);
            std::vector<int> group;
            for (int u : children[v])
                if (!lists[u] && g.degree(u) == g.degree(u0) && listed_neighbours(u) == key)
                    group.push_back(u);
            if (!process_group(v, group))
                return false;
        }
        for (int v = 0; v < n; ++v)
            if (!lists[v])
                throw Error("list construction left a vertex unlisted");
        if (!colouring.total())
            throw Error("list construction left an arc uncoloured");
        return true;
    }
};

// Degree at most 2 and connected: a path or a cycle. Recover the walk and
// apply the family pattern with the graph's own labels.
ArcColouring colour_degree_two(const SimpleGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> ends;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 1)
            ends.push_back(v);
    std::vector<int> seq;
    seq.reserve(n);
    if (!ends.empty()) {
        int prev = -1, cur = ends[0];
        while (static_cast<int>(seq.size()) < n) {
            seq.push_back(cur);
            int next = -1;
            for (int x : g.neighbours(cur))
                if (x != prev)
                    next = x;
            prev = cur;
            cur = next;
        }
        ArcColouring col(g, n % 2 == 0 ? 2 : 3);
        colour_path_walk(col, seq);
        return col;
    }
    int prev = -1, cur = 0;
    while (static_cast<int>(seq.size()) < n) {
        seq.push_back(cur);
        int next = -1;
        for (int x : g.neighbours(cur)) {
            if (x == prev)
                continue;
            next = x;
            break; // neighbours ascend, so the walk direction is canonical
        }
        prev = cur;
        cur = next;
    }
    ArcColouring col(g, 3);
    colour_cycle_walk(col, seq);
    return col;
}

} // namespace

std::string emit_trace(const ConstructionTrace& trace) {
    std::ostringstream out;
    out << "root " << trace.root + 1 << " k " << trace.k << "\n";
    for (const GroupTrace& gt : trace.groups) {
        const char* name = gt.strategy == GroupTrace::Strategy::Greedy   ? "greedy"
                           : gt.strategy == GroupTrace::Strategy::Repair ? "repair"
                                                                         : "search";
        out << "group parent=" << gt.parent + 1 << " size=" << gt.size << " strategy=" << name
            << "\n";
    }
    if (trace.whole_colouring)
        out << "whole-colouring seed=" << trace.whole_seed << "\n";
    return out.str();
}

bool lists_admit_colouring(const ArcColouring& c, const std::vector<std::uint32_t>& lists) {
    const SimpleGraph& g = c.graph();
    if (lists.size() != static_cast<std::size_t>(g.vertex_count()))
        return false;
    for (auto [u, v] : g.edges()) {
        if (!lists[u] || !lists[v])
            continue;
        const int uv = c.colour(u, v), vu = c.colour(v, u);
        if (uv != 0) {
            if (!(lists[v] & colour_bit(uv)) || (lists[u] & colour_bit(uv)))
                return false;
        }
        if (vu != 0) {
            if (!(lists[u] & colour_bit(vu)) || (lists[v] & colour_bit(vu)))
                return false;
        }
    }
    return true;
}

ArcColouring colour_distinguishing_type1(const SimpleGraph& g, ConstructionTrace* trace) {
    const int n = g.vertex_count();
    if (n < 2)
        throw InputError("colour_distinguishing_type1: need n >= 2");
    if (!g.is_connected())
        throw InputError("colour_distinguishing_type1: graph must be connected");
    ConstructionTrace local;
    ConstructionTrace& tr = trace ? *trace : local;
    tr = ConstructionTrace{};
    const int delta = g.max_degree();
    if (delta <= 2) {
        ArcColouring col = colour_degree_two(g);
        tr.k = col.palette_size();
        return col;
    }
    const int k = colour_budget(delta).k;
    tr.k = k;
    ListBuilder builder(g, k, &tr.groups);
    const bool built = builder.run();
    tr.root = builder.root;
    if (built) {
        const bool proper = monochromatic_two_cycles(builder.colouring).empty() &&
                            monochromatic_two_paths(builder.colouring).empty();
        if (proper && is_distinguishing(builder.colouring).distinguishing) {
            tr.lists = builder.lists;
            return builder.colouring;
        }
    }
    // A group exhausted its local search: fall back to a bounded search for
    // any distinguishing proper colouring within the same palette.
    tr.whole_colouring = true;
    const ConstraintSet cs = ConstraintSet::type1(true);
    struct Rung {
        std::optional<std::uint32_t> seed;
        std::uint64_t cap;
    };
    std::vector<Rung> ladder{{std::nullopt, kEscalationRungNodeCap}};
    for (std::uint32_t s = 1; s <= 8; ++s)
        ladder.push_back({s, kEscalationRungNodeCap});
    ladder.push_back({std::nullopt, default_node_budget()});
    for (const Rung& rung : ladder) {
        SearchOptions opts;
        opts.node_budget = rung.cap;
        opts.value_seed = rung.seed;
        opts.allow_oversize = true;
        auto res = search_colouring(g, k, cs, opts);
        if (res.status == SearchStatus::Found) {
            tr.whole_seed = rung.seed.value_or(0);
            return *res.colouring;
        }
        if (res.status == SearchStatus::ProvenImpossible)
            throw Error("colour_distinguishing_type1: palette bound refuted by search");
    }
    throw BudgetError("colour_distinguishing_type1: search budget exhausted\n" + emit_trace(tr));
}

} // namespace distinguo
