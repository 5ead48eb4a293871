#ifndef PARTPAT_TESTS_ORACLE_HPP
#define PARTPAT_TESTS_ORACLE_HPP

// Reference implementations for the tests.  Everything here works on plain
// block lists and bitmask subsets, with none of the library's growth-word
// machinery, so the two sides can disagree only if one of them is wrong.
// Exponential in n; keep n at 8 or below.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

using Blocks = std::vector<std::vector<int>>;

inline void sort_canonical(Blocks& blocks) {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return a.front() < b.front();
              });
}

// Partitions of [n], grown by inserting each element into every block of
// every partition of the previous ground set or into a new singleton.
inline std::vector<Blocks> all_partitions(int n) {
    std::vector<Blocks> out{{}};
    for (int element = 1; element <= n; ++element) {
        std::vector<Blocks> grown;
        for (const auto& partition : out) {
            for (std::size_t b = 0; b < partition.size(); ++b) {
                Blocks copy = partition;
                copy[b].push_back(element);
                grown.push_back(std::move(copy));
            }
            Blocks copy = partition;
            copy.push_back({element});
            grown.push_back(std::move(copy));
        }
        out = std::move(grown);
    }
    for (auto& blocks : out) sort_canonical(blocks);
    return out;
}

inline Blocks standardized(const Blocks& blocks) {
    std::map<int, int> rank;
    for (const auto& b : blocks)
        for (int e : b) rank[e] = 0;
    int next = 1;
    for (auto& entry : rank) entry.second = next++;
    Blocks out;
    for (const auto& b : blocks) {
        std::vector<int> mapped;
        for (int e : b) mapped.push_back(rank[e]);
        out.push_back(std::move(mapped));
    }
    sort_canonical(out);
    return out;
}

inline Blocks restricted(const Blocks& host, std::uint32_t mask) {
    Blocks out;
    for (const auto& b : host) {
        std::vector<int> kept;
        for (int e : b)
            if (mask >> (e - 1) & 1u) kept.push_back(e);
        if (!kept.empty()) out.push_back(std::move(kept));
    }
    sort_canonical(out);
    return out;
}

inline int element_count(const Blocks& blocks) {
    int total = 0;
    for (const auto& b : blocks) total += static_cast<int>(b.size());
    return total;
}

// Subpartition containment by exhaustive subset scan.  The pattern must be
// standardized over [m].
inline bool contains(const Blocks& host, int n, const Blocks& pattern) {
    int m = element_count(pattern);
    if (m == 0) return true;
    if (m > n) return false;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != m) continue;
        if (standardized(restricted(host, mask)) == pattern) return true;
    }
    return false;
}

// Growth word read off the canonical block order.
inline std::vector<int> growth_word(const Blocks& blocks) {
    Blocks sorted = blocks;
    sort_canonical(sorted);
    std::map<int, int> index;
    for (std::size_t b = 0; b < sorted.size(); ++b)
        for (int e : sorted[b]) index[e] = static_cast<int>(b) + 1;
    std::vector<int> word;
    for (auto& entry : index) word.push_back(entry.second);
    return word;
}

inline std::vector<int> value_ranks(const std::vector<int>& letters) {
    std::map<int, int> rank;
    for (int v : letters) rank[v] = 0;
    int next = 1;
    for (auto& entry : rank) entry.second = next++;
    std::vector<int> out;
    for (int v : letters) out.push_back(rank[v]);
    return out;
}

// Word-subsequence containment: some subsequence of the host growth word
// standardizes, by value rank, to the pattern growth word.
inline bool r_contains(const Blocks& host, int n, const Blocks& pattern) {
    std::vector<int> host_word = growth_word(host);
    std::vector<int> pattern_word = growth_word(pattern);
    int m = static_cast<int>(pattern_word.size());
    if (m == 0) return true;
    if (m > n) return false;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != m) continue;
        std::vector<int> letters;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1u) letters.push_back(host_word[static_cast<std::size_t>(i)]);
        if (value_ranks(letters) == pattern_word) return true;
    }
    return false;
}

inline long count_avoiders(int n, const Blocks& pattern) {
    long total = 0;
    for (const auto& host : all_partitions(n))
        if (!contains(host, n, pattern)) ++total;
    return total;
}

inline long count_r_avoiders(int n, const Blocks& pattern) {
    long total = 0;
    for (const auto& host : all_partitions(n))
        if (!r_contains(host, n, pattern)) ++total;
    return total;
}

} // namespace oracle

#endif
