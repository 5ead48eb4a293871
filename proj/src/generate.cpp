#include "partpat/generate.hpp"

#include <algorithm>

namespace partpat {

bool PartitionFilter::accepts(const std::vector<int>& word) const {
    int max_letter = 0;
    for (int a : word) max_letter = std::max(max_letter, a);
    if (max_blocks && max_letter > *max_blocks) return false;
    if (layered_only) {
        for (std::size_t i = 1; i < word.size(); ++i)
            if (word[i] < word[i - 1]) return false;
    }
    if (block_sizes || matching_only) {
        std::vector<int> counts(static_cast<std::size_t>(max_letter) + 1, 0);
        for (int a : word) ++counts[static_cast<std::size_t>(a)];
        for (int b = 1; b <= max_letter; ++b) {
            if (matching_only && counts[static_cast<std::size_t>(b)] > 2) return false;
            if (block_sizes && !block_sizes->contains(counts[static_cast<std::size_t>(b)]))
                return false;
        }
    }
    return true;
}

PartitionStream::PartitionStream(int n, PartitionFilter filter)
    : n_(n), filter_(std::move(filter)),
      word_(static_cast<std::size_t>(n)),
      prefix_max_(static_cast<std::size_t>(n)) {
    if (n < 0) throw std::invalid_argument("ground set size must be >= 0");
}

bool PartitionStream::advance() {
    if (n_ == 0) return false;
    prefix_max_[0] = word_[0];
    for (int i = 1; i < n_; ++i)
        prefix_max_[i] = std::max(prefix_max_[i - 1], word_[i]);
    // rightmost position whose letter may still grow
    int i = n_ - 1;
    while (i >= 1 && word_[i] > prefix_max_[i - 1]) --i;
    if (i < 1) return false;
    ++word_[i];
    std::fill(word_.begin() + i + 1, word_.end(), 1);
    return true;
}

std::optional<SetPartition> PartitionStream::next() {
    while (!exhausted_) {
        if (!started_) {
            started_ = true;
            std::fill(word_.begin(), word_.end(), 1);
            if (n_ == 0) exhausted_ = true;  // ε is the single value below
        } else if (!advance()) {
            exhausted_ = true;
            return std::nullopt;
        }
        if (filter_.accepts(word_))
            return SetPartition::from_word_unchecked(word_);
        if (n_ == 0) break;
    }
    return std::nullopt;
}

mpz_class bell(int n) {
    if (n < 0) throw std::invalid_argument("bell: n must be >= 0");
    // Peirce triangle
    std::vector<mpz_class> row{1};
    for (int k = 0; k < n; ++k) {
        std::vector<mpz_class> next;
        next.reserve(row.size() + 1);
        next.push_back(row.back());
        for (const mpz_class& v : row) next.push_back(next.back() + v);
        row = std::move(next);
    }
    return row.front();
}

mpz_class count_by_block_sizes(int n, int block_count, const SizeSet& sizes) {
    if (n < 0 || block_count < 0)
        throw std::invalid_argument("count_by_block_sizes: arguments must be >= 0");
    // table[m][l]: partitions of an m-element set into l blocks, sizes in
    // `sizes`; the block containing the smallest element gets s-1 companions
    // chosen from the remaining m-1 elements.
    std::vector<std::vector<mpz_class>> table(
        static_cast<std::size_t>(n) + 1,
        std::vector<mpz_class>(static_cast<std::size_t>(block_count) + 1, 0));
    table[0][0] = 1;
    mpz_class choose;
    for (int m = 1; m <= n; ++m) {
        for (int l = 1; l <= block_count; ++l) {
            mpz_class acc = 0;
            for (int s = 1; s <= m; ++s) {
                if (!sizes.contains(s)) continue;
                mpz_bin_uiui(choose.get_mpz_t(), static_cast<unsigned long>(m - 1),
                             static_cast<unsigned long>(s - 1));
                acc += choose * table[static_cast<std::size_t>(m - s)]
                                     [static_cast<std::size_t>(l - 1)];
            }
            table[static_cast<std::size_t>(m)][static_cast<std::size_t>(l)] = std::move(acc);
        }
    }
    return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(block_count)];
}

} // namespace partpat
