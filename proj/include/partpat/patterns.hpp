#ifndef PARTPAT_PATTERNS_HPP
#define PARTPAT_PATTERNS_HPP

#include <string>
#include <vector>

#include <gmpxx.h>

#include "partpat/set_partition.hpp"

namespace partpat {

// The two containment orders.  `subpartition` asks for a restriction of the
// host that standardizes to the pattern.  `rgf` additionally requires the
// canonical block indices of the restriction, taken inside the host, to be
// increasing; equivalently, the host's growth word has a subsequence that
// standardizes to the pattern's growth word.
enum class Notion { subpartition, rgf };

std::string notion_name(Notion notion);
Notion notion_from_name(const std::string& name);

// One witness of a pattern inside a host: the chosen elements and the
// restriction they induce (original labels kept).
struct Copy {
    std::vector<int> elements;                 // ascending
    std::vector<std::vector<int>> blocks;      // restriction of the host to `elements`

    bool operator==(const Copy&) const = default;
};

// Reusable containment searcher for a fixed pattern.  Backtracks over the
// pattern's elements in increasing order, assigning each pattern block to a
// host block when its smallest element is placed.  Carries scratch buffers,
// so a single instance must not be shared across threads; copies are
// independent.
class PatternMatcher {
public:
    PatternMatcher(const SetPartition& pattern, Notion notion);

    bool contained_in(const std::vector<int>& host_word);

    // Appends every witness subset (ascending elements), in lexicographic
    // order of the subsets.
    void witnesses_in(const std::vector<int>& host_word,
                      std::vector<std::vector<int>>& out);

    const std::vector<int>& pattern_word() const { return pattern_; }
    Notion notion() const { return notion_; }

private:
    template <typename Visit>
    bool step(const std::vector<int>& host, int q, int min_elem, Visit&& visit);

    template <typename Visit>
    void search(const std::vector<int>& host, Visit&& visit);

    std::vector<int> pattern_;
    int pattern_blocks_;
    Notion notion_;
    std::vector<int> host_of_block_;   // 0 while unassigned
    std::vector<char> used_host_;
    std::vector<int> chosen_;
};

// All witnesses of `pattern` inside `sigma` under the subpartition order,
// sorted by their element sets.
std::vector<Copy> copies(const SetPartition& sigma, const SetPartition& pattern);

// Witnesses under the rgf order; always a subset of copies().
std::vector<Copy> r_copies(const SetPartition& sigma, const SetPartition& pattern);

bool contains(const SetPartition& sigma, const SetPartition& pattern);
bool r_contains(const SetPartition& sigma, const SetPartition& pattern);

bool contains(const SetPartition& sigma, const SetPartition& pattern, Notion notion);

bool avoids_all(const SetPartition& sigma, const std::vector<SetPartition>& patterns,
                Notion notion);

// Number of partitions of [n] containing none of the patterns.  workers <= 0
// selects the hardware concurrency; the count is the same for any worker
// count.
mpz_class count_avoiders(int n, const std::vector<SetPartition>& patterns, Notion notion,
                         int workers = 1);

// A pattern set together with its avoider counts for n = 0..N.
struct AvoidanceProfile {
    std::vector<SetPartition> patterns;
    Notion notion = Notion::subpartition;
    std::vector<mpz_class> counts;

    bool operator==(const AvoidanceProfile&) const = default;
};

AvoidanceProfile avoidance_profile(const std::vector<SetPartition>& patterns, Notion notion,
                                   int horizon, int workers = 1);

// Patterns over the same ground set grouped by identical avoider-count
// sequences up to the horizon.
struct WilfClass {
    std::vector<SetPartition> patterns;        // in word order
    std::vector<mpz_class> profile;

    bool operator==(const WilfClass&) const = default;
};

// Classes for all patterns over [pattern_size], ordered by their smallest
// member.
std::vector<WilfClass> wilf_classes(int pattern_size, Notion notion, int horizon,
                                    int workers = 1);

// --- implementation of the template members ---

template <typename Visit>
bool PatternMatcher::step(const std::vector<int>& host, int q, int min_elem, Visit&& visit) {
    const int m = static_cast<int>(pattern_.size());
    if (q == m) return visit(const_cast<const std::vector<int>&>(chosen_));
    const int n = static_cast<int>(host.size());
    const int pb = pattern_[static_cast<std::size_t>(q)];
    const int fixed = host_of_block_[static_cast<std::size_t>(pb)];
    const int last_start = n - (m - 1 - q);
    for (int t = min_elem; t <= last_start; ++t) {
        const int hb = host[static_cast<std::size_t>(t - 1)];
        if (fixed != 0) {
            if (hb != fixed) continue;
            chosen_[static_cast<std::size_t>(q)] = t;
            if (!step(host, q + 1, t + 1, visit)) return false;
        } else {
            if (used_host_[static_cast<std::size_t>(hb)]) continue;
            if (notion_ == Notion::rgf && pb >= 2 &&
                hb <= host_of_block_[static_cast<std::size_t>(pb - 1)])
                continue;
            chosen_[static_cast<std::size_t>(q)] = t;
            host_of_block_[static_cast<std::size_t>(pb)] = hb;
            used_host_[static_cast<std::size_t>(hb)] = 1;
            const bool keep_going = step(host, q + 1, t + 1, visit);
            host_of_block_[static_cast<std::size_t>(pb)] = 0;
            used_host_[static_cast<std::size_t>(hb)] = 0;
            if (!keep_going) return false;
        }
    }
    return true;
}

template <typename Visit>
void PatternMatcher::search(const std::vector<int>& host, Visit&& visit) {
    const int m = static_cast<int>(pattern_.size());
    const int n = static_cast<int>(host.size());
    if (m == 0) {
        std::vector<int> empty;
        visit(const_cast<const std::vector<int>&>(empty));
        return;
    }
    if (m > n) return;
    if (used_host_.size() < static_cast<std::size_t>(n) + 1)
        used_host_.resize(static_cast<std::size_t>(n) + 1, 0);
    chosen_.resize(static_cast<std::size_t>(m));
    step(host, 0, 1, visit);
}

} // namespace partpat

#endif
