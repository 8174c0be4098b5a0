#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace mrsc {

// C(n, k), saturating at UINT64_MAX instead of overflowing.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max())
            return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(acc);
}

// Advances c (strictly increasing indices into {0..n-1}) to the next
// combination in lexicographic order. Returns false past the last one.
inline bool next_combination(std::vector<std::uint32_t>& c, std::uint32_t n) {
    const std::size_t k = c.size();
    if (k == 0) return false;
    std::size_t i = k;
    while (i-- > 0) {
        if (c[i] + 1 <= n - (k - i)) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

inline std::vector<std::uint32_t> first_combination(std::uint32_t k) {
    std::vector<std::uint32_t> c(k);
    for (std::uint32_t i = 0; i < k; ++i) c[i] = i;
    return c;
}

// Lexicographic rank -> combination. Used to partition scans into chunks.
inline std::vector<std::uint32_t> combination_unrank(std::uint32_t n, std::uint32_t k,
                                                     std::uint64_t rank) {
    std::vector<std::uint32_t> c(k);
    std::uint32_t x = 0;
    for (std::uint32_t i = 0; i < k; ++i) {
        while (true) {
            const std::uint64_t block = binomial(n - x - 1, k - i - 1);
            if (rank < block) break;
            rank -= block;
            ++x;
        }
        c[i] = x++;
    }
    return c;
}

// Visits all k-subsets of {0..n-1} in lexicographic order.
// fn returns false to stop early.
template <typename Fn>
void for_each_combination(std::uint32_t n, std::uint32_t k, Fn&& fn) {
    if (k > n) return;
    auto c = first_combination(k);
    do {
        if (!fn(static_cast<const std::vector<std::uint32_t>&>(c))) return;
    } while (next_combination(c, n));
}

} // namespace mrsc
