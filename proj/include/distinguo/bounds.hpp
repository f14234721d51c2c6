#pragma once

#include <cstdint>

namespace distinguo {

/// Capacities derived from a palette of k colours. The palette is split into
/// a low half {1..ceil(k/2)} and a high half {ceil(k/2)+1..k}; pair_capacity
/// counts (low, high) colour pairs and list_capacity counts the admissible
/// floor(k/2)-element lists that contain one prescribed colour and exclude
/// another.
struct ColourBudget {
    int k = 0;
    int half_floor = 0;
    int half_ceil = 0;
    std::uint64_t pair_capacity = 0; // ceil(k/2) * floor(k/2) == floor(k^2/4)
    std::uint64_t list_capacity = 0; // C(k-2, floor(k/2)-1), saturating
};

// C(n, r); 0 when r < 0 or r > n. Saturates at UINT64_MAX.
std::uint64_t binomial(int n, int r);

// C(k, floor(k/2)) computed exactly. Requires 1 <= k <= 64.
std::uint64_t central_binomial(int k);

// Smallest k with t <= C(k, floor(k/2)). Requires t >= 1 and t <= C(64, 32).
int min_k_threshold(std::uint64_t t);

// Smallest k with k*k >= 4*delta, i.e. ceil(2*sqrt(delta)) without any
// floating point. Requires delta >= 1.
ColourBudget colour_budget(std::uint64_t delta);

// Integer form of C(k-2, floor(k/2)-1) >= k^2/4 + 1, evaluated as
// 4*C(k-2, floor(k/2)-1) >= k^2 + 4. Requires k >= 3.
bool list_inequality_holds(int k);

} // namespace distinguo
