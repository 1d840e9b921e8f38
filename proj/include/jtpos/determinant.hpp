#pragma once

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "core.hpp"
#include "schur.hpp"

namespace jtpos {

// Signed expansion over permutations, organised as a dynamic program over the
// set of columns already used: 2^n · n ring multiplications instead of n!.
// Works over any commutative ring.
template <class T>
T det_expand(const Matrix<T> &a, const T &zero, const T &one)
{
    const std::size_t n = a.size();
    if (n >= 31) {
        throw Error("determinant expansion order too large");
    }
    std::vector<T> dp(std::size_t{1} << n, zero);
    std::vector<bool> live(dp.size(), false);
    dp[0] = one;
    live[0] = true;
    for (std::uint32_t mask = 0; mask < dp.size(); ++mask) {
        if (!live[mask]) {
            continue;
        }
        const std::size_t row = static_cast<std::size_t>(std::popcount(mask));
        if (row == n) {
            continue;
        }
        for (std::size_t c = 0; c < n; ++c) {
            if (mask & (1u << c)) {
                continue;
            }
            const T &entry = a[row][c];
            if (entry == zero) {
                continue;
            }
            const int above = std::popcount(mask >> (c + 1));
            T term = dp[mask] * entry;
            const std::uint32_t next = mask | (1u << c);
            if (above % 2) {
                dp[next] -= term;
            } else {
                dp[next] += term;
            }
            live[next] = true;
        }
        if (mask != 0) {
            dp[mask] = zero;
        }
    }
    return dp.back();
}

inline SchurClass det_expand(const Matrix<SchurClass> &a, std::size_t factor_count)
{
    return det_expand(a, SchurClass::zero(factor_count), SchurClass::unit(factor_count));
}

} // namespace jtpos
