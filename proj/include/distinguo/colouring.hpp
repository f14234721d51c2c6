#pragma once

#include <string>
#include <vector>

#include "distinguo/graph.hpp"

namespace distinguo {

/// Total (or, while a constructor is running, partial) map from the arcs of
/// the symmetric digraph to colours 1..k. Colour 0 marks an unset arc.
/// Arc u->v of edge e = {u, v} with u < v lives in slot 2e, the opposite arc
/// in slot 2e+1.
class ArcColouring {
public:
    ArcColouring(SimpleGraph g, int k)
        : graph_(std::move(g)), k_(k), colour_(2 * graph_.edge_count(), 0) {
        if (k < 1)
            throw InputError("colouring: k must be positive");
    }

    const SimpleGraph& graph() const { return graph_; }
    int palette_size() const { return k_; }

    int colour(int tail, int head) const { return colour_[slot(tail, head)]; }

    void set_colour(int tail, int head, int c) {
        if (c < 0 || c > k_)
            throw InputError("colouring: colour out of range");
        colour_[slot(tail, head)] = c;
    }

    bool total() const {
        for (int c : colour_)
            if (c == 0)
                return false;
        return true;
    }

    int used_colour_count() const {
        std::vector<char> seen(k_ + 1, 0);
        int used = 0;
        for (int c : colour_)
            if (c > 0 && !seen[c]) {
                seen[c] = 1;
                ++used;
            }
        return used;
    }

    bool operator==(const ArcColouring& other) const {
        return graph_ == other.graph_ && k_ == other.k_ && colour_ == other.colour_;
    }

private:
    int slot(int tail, int head) const {
        const int e = graph_.edge_index(tail, head);
        if (e < 0)
            throw InputError("colouring: no such arc");
        return 2 * e + (tail < head ? 0 : 1);
    }

    SimpleGraph graph_;
    int k_;
    std::vector<int> colour_;
};

// Header "c n k", then one "a u v colour" line per arc, 1-indexed, sorted by
// (tail, head). The underlying graph is recovered from the arc set, which
// must be symmetric.
std::string emit_colouring(const ArcColouring& c);
ArcColouring parse_colouring(const std::string& text);

} // namespace distinguo
