#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

namespace betasat::detail {

/// Calls fn(indices) for every k-subset of {0..n-1} in lexicographic order
/// until fn returns true. Returns whether some call returned true.
template <typename Fn>
bool for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return false;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
        if (fn(static_cast<const std::vector<std::size_t>&>(idx))) return true;
        // Advance to the next combination.
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

inline double binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0.0;
    return std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)));
}

} // namespace betasat::detail
