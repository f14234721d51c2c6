#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "distinguo/colouring.hpp"

namespace distinguo {

enum class Pattern { TwoCycle, TwoPath };

// Monochromatic 2-cycles: edges {u, v} with u < v and c(uv) == c(vu),
// in lexicographic order.
std::vector<std::pair<int, int>> monochromatic_two_cycles(const ArcColouring& c);

// Monochromatic 2-paths: triples (u, v, w) with u != w and c(uv) == c(vw),
// in lexicographic order.
std::vector<std::array<int, 3>> monochromatic_two_paths(const ArcColouring& c);

// Witnesses as vertex tuples; empty result means the pattern is absent.
std::vector<std::vector<int>> find_monochromatic(const ArcColouring& c, Pattern pattern);

struct VertexPermutation {
    std::vector<int> image;

    bool is_identity() const {
        for (std::size_t v = 0; v < image.size(); ++v)
            if (image[v] != static_cast<int>(v))
                return false;
        return true;
    }
    int operator()(int v) const { return image[v]; }
    bool operator==(const VertexPermutation&) const = default;
};

// Direct definition check: phi is a bijection, maps edges onto edges and
// preserves both arc colours of every edge.
bool preserves_colouring(const ArcColouring& c, const VertexPermutation& phi);

struct AutomorphismReport {
    std::vector<VertexPermutation> generators; // identity excluded
    std::uint64_t group_order = 1;
    bool exact = true; // false: group_order is only a lower bound
    std::vector<std::vector<int>> orbits;
    std::vector<int> fixed; // vertices in singleton orbits
    std::uint64_t nodes = 0;
};

// DISTINGUO_NODE_BUDGET when set, otherwise 10^8.
std::uint64_t default_node_budget();

/// Full group of colour-preserving automorphisms, found by backtracking over
/// partial vertex maps pruned with iterated signature refinement. The order
/// is assembled level by level (orbit sizes along the point stabiliser
/// chain), so large groups are counted without being enumerated.
/// Requires a connected underlying graph.
AutomorphismReport colour_automorphisms(const ArcColouring& c,
                                        std::uint64_t node_budget = default_node_budget());

// Independent cross-check: sweeps all n! vertex permutations. n <= 8.
AutomorphismReport colour_automorphisms_exhaustive(const ArcColouring& c);

struct DistinguishingVerdict {
    bool distinguishing = false;
    std::optional<VertexPermutation> witness; // lexicographically smallest, re-verified
    bool exact = true;
    std::uint64_t nodes = 0;
};

// Yes iff the identity is the only colour-preserving automorphism. A "no"
// verdict carries the lexicographically smallest nontrivial witness.
DistinguishingVerdict is_distinguishing(const ArcColouring& c,
                                        std::uint64_t node_budget = default_node_budget());

} // namespace distinguo
