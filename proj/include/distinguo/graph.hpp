#pragma once

#include <string>
#include <utility>
#include <vector>

#include "distinguo/error.hpp"

namespace distinguo {

/// Undirected simple graph with vertices 0..n-1. Immutable once built;
/// neighbour sets are kept sorted so every traversal is deterministic.
/// The symmetric digraph is never materialised: each edge {u, v} stands
/// for the two opposite arcs u->v and v->u.
class SimpleGraph {
public:
    SimpleGraph() = default;

    // Validates and canonicalises the edge list: rejects self-loops,
    // duplicates (in either orientation) and endpoints outside [0, n).
    SimpleGraph(int n, std::vector<std::pair<int, int>> edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int arc_count() const { return 2 * edge_count(); }

    const std::vector<int>& neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;

    bool adjacent(int u, int v) const;

    // Edges in lexicographic order, each stored with u < v.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    // Index of edge {u, v} in edges(), or -1 if absent.
    int edge_index(int u, int v) const;

    bool is_connected() const;

    // Vertices not reachable from `root`, in increasing order.
    std::vector<int> unreachable_from(int root) const;

    bool operator==(const SimpleGraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> eid_; // edge index parallel to adj_
};

/// Breadth-first scaffold: order[0] is the root, neighbours are visited in
/// increasing index order, so the tree is unique for a given graph.
struct BfsTree {
    int root = 0;
    std::vector<int> order;
    std::vector<int> parent; // -1 for the root
    std::vector<int> depth;
};

// Requires a connected graph; reports the unreachable vertex set otherwise.
BfsTree bfs_tree(const SimpleGraph& g, int root);

enum class FamilyKind { Path, Cycle, Star, Complete, CompleteBipartite };

// path/cycle vertices in walk order; the star centre is vertex 0;
// complete_bipartite parts are {0..a-1} and {a..a+b-1}.
SimpleGraph generate_family(FamilyKind kind, const std::vector<int>& params);

SimpleGraph path_graph(int n);
SimpleGraph cycle_graph(int n);
SimpleGraph star_graph(int delta);
SimpleGraph complete_graph(int n);
SimpleGraph complete_bipartite_graph(int a, int b);

// "name:p" or "name:p,q", e.g. "star:9" or "complete_bipartite:4,4".
SimpleGraph parse_family_spec(const std::string& spec);

enum class GraphFormat { EdgeList, Graph6 };

// Edge list: optional "p n m" header, then one "u v" line per edge,
// 1-indexed, '#' starts a comment. Graph6: standard bit-packed encoding,
// single-byte size (n <= 62).
SimpleGraph parse_graph(const std::string& text, GraphFormat format);

std::string emit_edge_list(const SimpleGraph& g);
std::string emit_graph6(const SimpleGraph& g);

} // namespace distinguo
