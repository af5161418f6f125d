#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace meshmat {

// Visits every k-subset of {0, ..., n-1} in lexicographic order.
template <typename Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return;
    std::vector<std::size_t> combo(k);
    std::iota(combo.begin(), combo.end(), std::size_t{0});
    while (true) {
        fn(static_cast<const std::vector<std::size_t>&>(combo));
        std::size_t i = k;
        while (i > 0 && combo[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return;
        ++combo[i - 1];
        for (std::size_t t = i; t < k; ++t) combo[t] = combo[t - 1] + 1;
    }
}

}  // namespace meshmat
