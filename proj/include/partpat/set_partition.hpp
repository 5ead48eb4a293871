#ifndef PARTPAT_SET_PARTITION_HPP
#define PARTPAT_SET_PARTITION_HPP

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "partpat/errors.hpp"

namespace partpat {

class Rgf;

// A partition of [n] = {1,...,n} into nonempty blocks, kept in canonical
// order: blocks sorted by increasing minima, elements ascending inside each
// block.  Internally stored as the restricted growth word a_1...a_n where
// a_i is the canonical index of the block containing i; the block lists are
// a derived view.  Immutable value type; the default-constructed value is
// the empty partition of [0].
class SetPartition {
public:
    SetPartition() = default;

    // Builds from explicit blocks in any order.  The blocks must be nonempty,
    // pairwise disjoint, and cover {1,...,n} exactly; throws
    // std::invalid_argument otherwise.
    static SetPartition from_blocks(const std::vector<std::vector<int>>& blocks);

    // Builds from a restricted growth word, validating it.
    static SetPartition from_rgf_word(const std::vector<int>& word);

    // Wraps a word the caller guarantees to be a valid restricted growth
    // word (used by enumeration loops that construct words incrementally).
    static SetPartition from_word_unchecked(std::vector<int> word);

    int size() const { return static_cast<int>(word_.size()); }
    bool empty() const { return word_.empty(); }
    int block_count() const;

    const std::vector<int>& word() const { return word_; }

    // Canonical index of the block containing the given element (1-based).
    int block_of(int element) const;

    std::vector<std::vector<int>> blocks() const;

    bool operator==(const SetPartition&) const = default;
    // Lexicographic on the growth word; matches enumeration order.
    auto operator<=>(const SetPartition&) const = default;

private:
    explicit SetPartition(std::vector<int> word) : word_(std::move(word)) {}

    std::vector<int> word_;
};

// A restricted growth word: a_1 = 1 and a_i <= 1 + max(a_1,...,a_{i-1}) for
// i >= 2.  These words are in bijection with canonical set partitions.
class Rgf {
public:
    Rgf() = default;

    // Throws std::invalid_argument if the word violates the growth condition.
    explicit Rgf(std::vector<int> word);

    static bool is_valid(const std::vector<int>& word);

    int length() const { return static_cast<int>(word_.size()); }
    const std::vector<int>& word() const { return word_; }

    bool operator==(const Rgf&) const = default;

private:
    std::vector<int> word_;
};

Rgf to_rgf(const SetPartition& pi);
SetPartition from_rgf(const Rgf& r);

// The unique order-preserving bijection from `labels` onto {1,...,#labels},
// applied letter-wise to a sequence.  Every sequence entry must occur in
// `labels`; throws std::domain_error otherwise.
std::vector<int> standardize_sequence(const std::vector<int>& labels,
                                      const std::vector<int>& sequence);

// The same relabeling applied to the blocks of a partition whose elements
// are exactly `labels` (as a set); throws std::domain_error on mismatch.
SetPartition standardize_partition(const std::vector<int>& labels,
                                   const std::vector<std::vector<int>>& blocks);

// Convenience overload taking the label set to be the union of the blocks.
SetPartition standardize_partition(const std::vector<std::vector<int>>& blocks);

// Replaces every element b by n+1-b and re-canonicalizes.  An involution
// on partitions of [n].
SetPartition complement(const SetPartition& pi);

// The blocks of sigma intersected with `subset` (original labels kept),
// empty intersections dropped, canonically ordered.  `subset` is treated as
// a set and must be contained in [n]; throws std::domain_error otherwise.
std::vector<std::vector<int>> restrict_to(const SetPartition& sigma,
                                          const std::vector<int>& subset);

// standardize_partition(restrict_to(sigma, subset)): the pattern induced by
// sigma on the chosen elements.
SetPartition induced_pattern(const SetPartition& sigma,
                             const std::vector<int>& subset);

// Canonical text form: elements comma-separated inside a block, blocks
// separated by '/'; the empty partition prints as "ε".
std::string to_string(const SetPartition& pi);

// Parses the canonical form as well as the digit-run shorthand ("14/2/356")
// usable when every element is at most 9.  Blocks and elements may be given
// in any order; the result is canonical.  Throws PartitionParseError with a
// byte position on malformed input.
SetPartition parse_partition(std::string_view text);

std::ostream& operator<<(std::ostream& os, const SetPartition& pi);

} // namespace partpat

#endif
