#include "distinguo/bounds.hpp"

#include <limits>

#include "distinguo/error.hpp"

namespace distinguo {

std::uint64_t binomial(int n, int r) {
    if (r < 0 || r > n || n < 0)
        return 0;
    if (r > n - r)
        r = n - r;
    unsigned __int128 acc = 1;
    for (int i = 1; i <= r; ++i) {
        acc = acc * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
        if (acc > std::numeric_limits<std::uint64_t>::max())
            return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t central_binomial(int k) {
    if (k < 1 || k > 64)
        throw InputError("central_binomial: k must be in [1, 64]");
    return binomial(k, k / 2);
}

int min_k_threshold(std::uint64_t t) {
    if (t == 0)
        throw InputError("min_k_threshold: t must be positive");
    for (int k = 1; k <= 64; ++k)
        if (t <= central_binomial(k))
            return k;
    throw InputError("min_k_threshold: t exceeds C(64, 32)");
}

ColourBudget colour_budget(std::uint64_t delta) {
    if (delta == 0)
        throw InputError("colour_budget: delta must be positive");
    if (delta > (std::uint64_t{1} << 60))
        throw InputError("colour_budget: delta out of supported range");
    std::uint64_t k = 1;
    // grow geometrically, then trim; k*k never overflows for any u64 delta
    while (k * k < 4 * delta && k < (std::uint64_t{1} << 33))
        k *= 2;
    while ((k - 1) * (k - 1) >= 4 * delta)
        --k;
    ColourBudget b;
    b.k = static_cast<int>(k);
    b.half_floor = b.k / 2;
    b.half_ceil = b.k - b.half_floor;
    b.pair_capacity = static_cast<std::uint64_t>(b.half_ceil) * b.half_floor;
    b.list_capacity = binomial(b.k - 2, b.half_floor - 1);
    return b;
}

bool list_inequality_holds(int k) {
    if (k < 3)
        throw InputError("list_inequality_holds: k must be >= 3");
    const std::uint64_t lhs = binomial(k - 2, k / 2 - 1);
    const std::uint64_t rhs = static_cast<std::uint64_t>(k) * k + 4;
    if (lhs > std::numeric_limits<std::uint64_t>::max() / 4)
        return true;
    return 4 * lhs >= rhs;
}

} // namespace distinguo
