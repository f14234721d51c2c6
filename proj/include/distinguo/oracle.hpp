#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "distinguo/colouring.hpp"
#include "distinguo/verify.hpp"

namespace distinguo {

/// Which two-arc patterns may not be monochromatic, and whether the
/// colouring must additionally be distinguishing. forbid_two_cycle and
/// forbid_two_path together give a proper colouring of type I; forbidding
/// only two-paths gives type 2.
struct ConstraintSet {
    bool forbid_two_cycle = false;
    bool forbid_two_path = false;
    bool require_distinguishing = false;

    static ConstraintSet type1(bool distinguishing = false) {
        return {true, true, distinguishing};
    }
    static ConstraintSet type2(bool distinguishing = false) {
        return {false, true, distinguishing};
    }

    void validate() const;
    std::string label() const; // e.g. "two_cycle+two_path+distinguishing"
};

// Exact chromatic number via branch and bound. Requires n <= 16.
int chromatic_number(const SimpleGraph& g);

// An optimal proper vertex colouring (classes 0..chi-1). Requires n <= 16.
std::vector<int> exact_vertex_colouring(const SimpleGraph& g);

// A proper vertex colouring with at most k classes, or nullopt when none
// exists. Requires n <= 16.
std::optional<std::vector<int>> try_vertex_colouring(const SimpleGraph& g, int k);

// Deterministic DSATUR: an upper bound usable at any size.
std::vector<int> greedy_vertex_colouring(const SimpleGraph& g);

enum class SearchStatus { Found, ProvenImpossible, BudgetExceeded };

struct SearchOptions {
    std::uint64_t node_budget = default_node_budget();
    std::optional<std::uint32_t> value_seed; // shuffle old-colour order when set
    bool allow_oversize = false;             // waive the arc-count limits
};

struct SearchResult {
    SearchStatus status = SearchStatus::BudgetExceeded;
    std::optional<ArcColouring> colouring;
    std::uint64_t nodes = 0;
};

/// Exhaustive backtracking over arcs in BFS edge order (both arc directions
/// adjacent), with forward checking of the pattern constraints and colour
/// symmetry broken by only introducing the smallest unused colour. With
/// require_distinguishing, complete candidates are accepted only if
/// is_distinguishing says yes. Size limits: k <= 16 and at most 40 arcs
/// (distinguishing) or 60 arcs (patterns only).
SearchResult search_colouring(const SimpleGraph& g, int k, ConstraintSet cs,
                              SearchOptions opts = {});

struct IndexResult {
    int k = 0;
    ArcColouring certificate;
    bool proven_optimal = true; // false if a smaller k only exceeded its budget
    std::uint64_t nodes = 0;
};

// Smallest k for which search_colouring succeeds; the certificate is
// re-verified before it is returned.
IndexResult exact_index(const SimpleGraph& g, ConstraintSet cs, SearchOptions opts = {});

} // namespace distinguo
