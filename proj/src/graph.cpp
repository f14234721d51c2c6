#include "distinguo/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace distinguo {

SimpleGraph::SimpleGraph(int n, std::vector<std::pair<int, int>> edge_list) {
    if (n < 0)
        throw InputError("graph: negative vertex count");
    n_ = n;
    for (auto& [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("graph: vertex index out of range");
        if (u == v)
            throw InputError("graph: self-loop");
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end())
        throw InputError("graph: duplicate edge");
    edges_ = std::move(edge_list);
    adj_.assign(n_, {});
    eid_.assign(n_, {});
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        auto [u, v] = edges_[e];
        adj_[u].push_back(v);
        eid_[u].push_back(e);
        adj_[v].push_back(u);
        eid_[v].push_back(e);
    }
    // edges_ is lex-sorted, so each adjacency list built this way is sorted
    // for the second endpoint only; sort both together.
    for (int v = 0; v < n_; ++v) {
        std::vector<int> idx(adj_[v].size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            idx[i] = static_cast<int>(i);
        std::sort(idx.begin(), idx.end(),
                  [&](int a, int b) { return adj_[v][a] < adj_[v][b]; });
        std::vector<int> na(adj_[v].size()), ne(adj_[v].size());
        for (std::size_t i = 0; i < idx.size(); ++i) {
            na[i] = adj_[v][idx[i]];
            ne[i] = eid_[v][idx[i]];
        }
        adj_[v] = std::move(na);
        eid_[v] = std::move(ne);
    }
}

int SimpleGraph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v)
        d = std::max(d, degree(v));
    return d;
}

bool SimpleGraph::adjacent(int u, int v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

int SimpleGraph::edge_index(int u, int v) const {
    auto it = std::lower_bound(adj_[u].begin(), adj_[u].end(), v);
    if (it == adj_[u].end() || *it != v)
        return -1;
    return eid_[u][it - adj_[u].begin()];
}

std::vector<int> SimpleGraph::unreachable_from(int root) const {
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{root};
    seen[root] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj_[v])
            if (!seen[u]) {
                seen[u] = 1;
                stack.push_back(u);
            }
    }
    std::vector<int> missing;
    for (int v = 0; v < n_; ++v)
        if (!seen[v])
            missing.push_back(v);
    return missing;
}

bool SimpleGraph::is_connected() const {
    if (n_ == 0)
        return true;
    return unreachable_from(0).empty();
}

BfsTree bfs_tree(const SimpleGraph& g, int root) {
    const int n = g.vertex_count();
    if (root < 0 || root >= n)
        throw InputError("bfs_tree: root out of range");
    auto missing = g.unreachable_from(root);
    if (!missing.empty()) {
        std::string msg = "bfs_tree: graph disconnected, unreached vertices:";
        for (int v : missing)
            msg += " " + std::to_string(v + 1);
        throw InputError(msg);
    }
    BfsTree t;
    t.root = root;
    t.parent.assign(n, -1);
    t.depth.assign(n, -1);
    t.order.reserve(n);
    std::queue<int> q;
    q.push(root);
    t.depth[root] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        t.order.push_back(v);
        for (int u : g.neighbours(v))
            if (t.depth[u] < 0) {
                t.depth[u] = t.depth[v] + 1;
                t.parent[u] = v;
                q.push(u);
            }
    }
    return t;
}

SimpleGraph path_graph(int n) {
    if (n < 2)
        throw InputError("path: need n >= 2");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return SimpleGraph(n, std::move(e));
}

SimpleGraph cycle_graph(int n) {
    if (n < 3)
        throw InputError("cycle: need n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    e.emplace_back(0, n - 1);
    return SimpleGraph(n, std::move(e));
}

SimpleGraph star_graph(int delta) {
    if (delta < 1)
        throw InputError("star: need delta >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= delta; ++i)
        e.emplace_back(0, i);
    return SimpleGraph(delta + 1, std::move(e));
}

SimpleGraph complete_graph(int n) {
    if (n < 1)
        throw InputError("complete: need n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            e.emplace_back(u, v);
    return SimpleGraph(n, std::move(e));
}

SimpleGraph complete_bipartite_graph(int a, int b) {
    if (a < 1 || b < 1)
        throw InputError("complete_bipartite: need a, b >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v)
            e.emplace_back(u, a + v);
    return SimpleGraph(a + b, std::move(e));
}

SimpleGraph generate_family(FamilyKind kind, const std::vector<int>& params) {
    auto need = [&](std::size_t c) {
        if (params.size() != c)
            throw InputError("generate_family: wrong parameter count");
    };
    switch (kind) {
    case FamilyKind::Path:
        need(1);
        return path_graph(params[0]);
    case FamilyKind::Cycle:
        need(1);
        return cycle_graph(params[0]);
    case FamilyKind::Star:
        need(1);
        return star_graph(params[0]);
    case FamilyKind::Complete:
        need(1);
        return complete_graph(params[0]);
    case FamilyKind::CompleteBipartite:
        need(2);
        return complete_bipartite_graph(params[0], params[1]);
    }
    throw InputError("generate_family: unknown kind");
}

SimpleGraph parse_family_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw ParseError("family spec: expected name:params");
    const std::string name = spec.substr(0, colon);
    std::vector<int> params;
    std::string rest = spec.substr(colon + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
        auto comma = rest.find(',', pos);
        std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
        try {
            std::size_t used = 0;
            int value = std::stoi(tok, &used);
            if (used != tok.size())
                throw std::invalid_argument(tok);
            if (value > 100000)
                throw ParseError("family spec: parameter above the supported 100000");
            params.push_back(value);
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError("family spec: bad parameter '" + tok + "'");
        }
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    if (name == "path")
        return generate_family(FamilyKind::Path, params);
    if (name == "cycle")
        return generate_family(FamilyKind::Cycle, params);
    if (name == "star")
        return generate_family(FamilyKind::Star, params);
    if (name == "complete")
        return generate_family(FamilyKind::Complete, params);
    if (name == "complete_bipartite")
        return generate_family(FamilyKind::CompleteBipartite, params);
    throw ParseError("family spec: unknown family '" + name + "'");
}

} // namespace distinguo
