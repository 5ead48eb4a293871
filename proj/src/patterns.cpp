#include "partpat/patterns.hpp"

#include <algorithm>
#include <map>

#include "partpat/generate.hpp"

namespace partpat {

std::string notion_name(Notion notion) {
    return notion == Notion::subpartition ? "sub" : "rgf";
}

Notion notion_from_name(const std::string& name) {
    if (name == "sub") return Notion::subpartition;
    if (name == "rgf") return Notion::rgf;
    throw std::invalid_argument("unknown containment notion '" + name + "'");
}

PatternMatcher::PatternMatcher(const SetPartition& pattern, Notion notion)
    : pattern_(pattern.word()), pattern_blocks_(pattern.block_count()), notion_(notion) {
    host_of_block_.assign(static_cast<std::size_t>(pattern_blocks_) + 1, 0);
}

bool PatternMatcher::contained_in(const std::vector<int>& host_word) {
    bool found = false;
    search(host_word, [&](const std::vector<int>&) {
        found = true;
        return false;
    });
    return found;
}

void PatternMatcher::witnesses_in(const std::vector<int>& host_word,
                                  std::vector<std::vector<int>>& out) {
    search(host_word, [&](const std::vector<int>& witness) {
        out.push_back(witness);
        return true;
    });
}

namespace {

std::vector<Copy> collect_copies(const SetPartition& sigma, const SetPartition& pattern,
                                 Notion notion) {
    PatternMatcher matcher(pattern, notion);
    std::vector<std::vector<int>> witnesses;
    matcher.witnesses_in(sigma.word(), witnesses);
    std::vector<Copy> result;
    result.reserve(witnesses.size());
    for (auto& t : witnesses) {
        Copy c;
        c.blocks = restrict_to(sigma, t);
        c.elements = std::move(t);
        result.push_back(std::move(c));
    }
    return result;
}

} // namespace

std::vector<Copy> copies(const SetPartition& sigma, const SetPartition& pattern) {
    return collect_copies(sigma, pattern, Notion::subpartition);
}

std::vector<Copy> r_copies(const SetPartition& sigma, const SetPartition& pattern) {
    return collect_copies(sigma, pattern, Notion::rgf);
}

bool contains(const SetPartition& sigma, const SetPartition& pattern) {
    return PatternMatcher(pattern, Notion::subpartition).contained_in(sigma.word());
}

bool r_contains(const SetPartition& sigma, const SetPartition& pattern) {
    return PatternMatcher(pattern, Notion::rgf).contained_in(sigma.word());
}

bool contains(const SetPartition& sigma, const SetPartition& pattern, Notion notion) {
    return PatternMatcher(pattern, notion).contained_in(sigma.word());
}

bool avoids_all(const SetPartition& sigma, const std::vector<SetPartition>& patterns,
                Notion notion) {
    for (const auto& pattern : patterns)
        if (PatternMatcher(pattern, notion).contained_in(sigma.word())) return false;
    return true;
}

namespace {

struct AvoiderPredicate {
    std::vector<PatternMatcher> matchers;

    bool operator()(const std::vector<int>& word) {
        for (auto& m : matchers)
            if (m.contained_in(word)) return false;
        return true;
    }
};

} // namespace

mpz_class count_avoiders(int n, const std::vector<SetPartition>& patterns, Notion notion,
                         int workers) {
    AvoiderPredicate pred;
    pred.matchers.reserve(patterns.size());
    for (const auto& pattern : patterns) pred.matchers.emplace_back(pattern, notion);
    return count_rgf_if(n, std::move(pred), workers);
}

AvoidanceProfile avoidance_profile(const std::vector<SetPartition>& patterns, Notion notion,
                                   int horizon, int workers) {
    if (horizon < 0) throw std::invalid_argument("horizon must be >= 0");
    AvoidanceProfile profile;
    profile.patterns = patterns;
    profile.notion = notion;
    profile.counts.reserve(static_cast<std::size_t>(horizon) + 1);
    for (int n = 0; n <= horizon; ++n)
        profile.counts.push_back(count_avoiders(n, patterns, notion, workers));
    return profile;
}

std::vector<WilfClass> wilf_classes(int pattern_size, Notion notion, int horizon,
                                    int workers) {
    std::map<std::vector<mpz_class>, std::vector<SetPartition>> grouped;
    PartitionStream stream(pattern_size);
    while (auto pattern = stream.next()) {
        auto profile = avoidance_profile({*pattern}, notion, horizon, workers);
        grouped[std::move(profile.counts)].push_back(*pattern);
    }
    std::vector<WilfClass> classes;
    classes.reserve(grouped.size());
    for (auto& [profile, members] : grouped)
        classes.push_back({std::move(members), profile});
    std::sort(classes.begin(), classes.end(), [](const WilfClass& a, const WilfClass& b) {
        return a.patterns.front() < b.patterns.front();
    });
    return classes;
}

} // namespace partpat
