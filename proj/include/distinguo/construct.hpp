#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "distinguo/colouring.hpp"
#include "distinguo/graph.hpp"

namespace distinguo {

/// How a sibling group was coloured: plain greedy choices, the pair-swap
/// repair, or group-local backtracking over (pair, list) combinations.
struct GroupTrace {
    enum class Strategy { Greedy, Repair, Search };
    int parent = -1;
    int size = 0;
    Strategy strategy = Strategy::Greedy;
};

struct ConstructionTrace {
    int root = -1;
    int k = 0;
    std::vector<GroupTrace> groups;
    bool whole_colouring = false; // list machinery abandoned, full search used
    std::uint32_t whole_seed = 0;
    // Final admissible-ingoing-colour list per vertex as a bitmask
    // (bit c-1 for colour c); empty when the whole-colouring route was taken.
    std::vector<std::uint32_t> lists;
};

std::string emit_trace(const ConstructionTrace& trace);

// True when every coloured arc u->v between vertices with nonzero list masks
// has its colour in lists[v] and not in lists[u].
bool lists_admit_colouring(const ArcColouring& c, const std::vector<std::uint32_t>& lists);

/// k = min_k_threshold(chi) colours; vertex colour classes are mapped to the
/// lexicographically first floor(k/2)-subsets of {1..k} and each arc uv gets
/// the smallest colour in L(v)\L(u). chi is computed exactly for n <= 16 and
/// by deterministic DSATUR otherwise (the result then only certifies an
/// upper bound).
ArcColouring colour_type1_minimum(const SimpleGraph& g, std::optional<int> chi = {});

/// Distinguishing proper arc-colouring of type I with at most
/// ceil(2*sqrt(Delta)) colours: paths and cycles by their family patterns,
/// everything else by the rooted-star list construction with greedy, repair
/// and group-local search levels, escalating to a bounded whole-colouring
/// search only when a group is exhausted.
ArcColouring colour_distinguishing_type1(const SimpleGraph& g,
                                         ConstructionTrace* trace = nullptr);

// path/cycle/star/complete distinguishing colourings on canonically
// labelled family graphs.
ArcColouring colour_family_distinguishing(FamilyKind kind, int param);

/// Pairs the vertices of K_n, spends colour 1 on the intra-pair 2-cycles and
/// colours everything else through a type-I colouring of the quotient
/// K_{ceil(n/2)}, for 1 + min_k_threshold(ceil(n/2)) colours total and no
/// monochromatic 2-path. n >= 3.
ArcColouring colour_type2_complete(int n);

/// colour_type2_complete with the quotient coloured by distinct lists, then
/// one ingoing arc per pair recoloured to break the intra-pair
/// transposition. n >= 7.
ArcColouring colour_distinguishing_type2_complete(int n);

} // namespace distinguo
