#ifndef PARTPAT_GENERATE_HPP
#define PARTPAT_GENERATE_HPP

#include <atomic>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "partpat/set_partition.hpp"
#include "partpat/size_set.hpp"

namespace partpat {

// Structural restrictions applied during enumeration.  All of them are
// decidable from the growth word alone.
struct PartitionFilter {
    std::optional<int> max_blocks;
    std::optional<SizeSet> block_sizes;
    bool layered_only = false;    // blocks are consecutive intervals
    bool matching_only = false;   // every block has at most two elements

    bool accepts(const std::vector<int>& word) const;
};

// Yields the partitions of [n] passing the filter, one per call to next(),
// in lexicographic order of their growth words.  Single consumer.
class PartitionStream {
public:
    explicit PartitionStream(int n, PartitionFilter filter = {});

    std::optional<SetPartition> next();

    int ground_size() const { return n_; }

private:
    bool advance();

    int n_;
    PartitionFilter filter_;
    std::vector<int> word_;
    std::vector<int> prefix_max_;
    bool started_ = false;
    bool exhausted_ = false;
};

inline PartitionStream enumerate(int n, PartitionFilter filter = {}) {
    return PartitionStream(n, std::move(filter));
}

// Number of partitions of [n].
mpz_class bell(int n);

// Number of partitions of [n] into exactly `block_count` blocks whose sizes
// all lie in `sizes`.  Computed by dynamic programming on the block
// containing the smallest remaining element.
mpz_class count_by_block_sizes(int n, int block_count, const SizeSet& sizes);

namespace detail {

// Extends word[pos..] through every valid completion, in lexicographic
// order, invoking f on each finished word.  cur_max is the largest letter in
// word[0..pos-1].
template <typename F>
void visit_rgf_extensions(std::vector<int>& word, int pos, int cur_max, F&& f) {
    const int n = static_cast<int>(word.size());
    if (pos == n) {
        f(const_cast<const std::vector<int>&>(word));
        return;
    }
    for (int v = 1; v <= cur_max + 1; ++v) {
        word[pos] = v;
        visit_rgf_extensions(word, pos + 1, v > cur_max ? v : cur_max, f);
    }
}

} // namespace detail

// Visits every restricted growth word of length n in lexicographic order.
// The same buffer is passed to each call; copy it if it must outlive the
// visit.
template <typename F>
void for_each_rgf(int n, F&& f) {
    std::vector<int> word(n);
    if (n == 0) {
        f(const_cast<const std::vector<int>&>(word));
        return;
    }
    word[0] = 1;
    detail::visit_rgf_extensions(word, 1, 1, f);
}

// Counts the growth words of length n accepted by pred, splitting the space
// by word prefix across up to `workers` threads.  Every worker runs on its
// own copy of pred, so pred may carry mutable scratch state; the result is
// independent of the worker count.  workers <= 0 selects the hardware
// concurrency.
template <typename Pred>
mpz_class count_rgf_if(int n, Pred pred, int workers = 1) {
    if (workers <= 0) {
        unsigned hw = std::thread::hardware_concurrency();
        workers = hw == 0 ? 1 : static_cast<int>(hw);
    }
    if (n == 0) {
        std::vector<int> empty;
        return pred(const_cast<const std::vector<int>&>(empty)) ? 1 : 0;
    }
    if (workers == 1 || n <= 5) {
        mpz_class total = 0;
        for_each_rgf(n, [&](const std::vector<int>& w) {
            if (pred(w)) ++total;
        });
        return total;
    }

    int prefix_len = 1;
    while (prefix_len < n && bell(prefix_len) < 4 * workers) ++prefix_len;
    struct Prefix {
        std::vector<int> word;
        int max;
    };
    std::vector<Prefix> prefixes;
    for_each_rgf(prefix_len, [&](const std::vector<int>& w) {
        int m = 0;
        for (int a : w) m = std::max(m, a);
        prefixes.push_back({w, m});
    });

    std::atomic<std::size_t> cursor{0};
    std::vector<mpz_class> totals(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int wi = 0; wi < workers; ++wi) {
        pool.emplace_back([&, wi] {
            Pred local(pred);
            std::vector<int> word(static_cast<std::size_t>(n));
            mpz_class count = 0;
            for (;;) {
                std::size_t i = cursor.fetch_add(1);
                if (i >= prefixes.size()) break;
                std::copy(prefixes[i].word.begin(), prefixes[i].word.end(), word.begin());
                detail::visit_rgf_extensions(word, prefix_len, prefixes[i].max,
                                             [&](const std::vector<int>& w) {
                                                 if (local(w)) ++count;
                                             });
            }
            totals[static_cast<std::size_t>(wi)] = std::move(count);
        });
    }
    for (auto& t : pool) t.join();
    mpz_class total = 0;
    for (auto& part : totals) total += part;
    return total;
}

} // namespace partpat

#endif
