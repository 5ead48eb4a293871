#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "partpat/formulas.hpp"
#include "partpat/generate.hpp"
#include "partpat/patterns.hpp"

#include "oracle.hpp"

using namespace partpat;

TEST_CASE("copies of 13/2 in 14/2/356") {
    SetPartition sigma = parse_partition("14/2/356");
    auto found = copies(sigma, parse_partition("13/2"));
    REQUIRE(found.size() == 4);
    CHECK(found[0].elements == std::vector<int>{1, 2, 4});
    CHECK(found[0].blocks == std::vector<std::vector<int>>{{1, 4}, {2}});
    CHECK(found[1].elements == std::vector<int>{1, 3, 4});
    CHECK(found[1].blocks == std::vector<std::vector<int>>{{1, 4}, {3}});
    CHECK(found[2].elements == std::vector<int>{3, 4, 5});
    CHECK(found[2].blocks == std::vector<std::vector<int>>{{3, 5}, {4}});
    CHECK(found[3].elements == std::vector<int>{3, 4, 6});
    CHECK(found[3].blocks == std::vector<std::vector<int>>{{3, 6}, {4}});
}

TEST_CASE("index-increasing copies of 13/2 in 14/2/356") {
    SetPartition sigma = parse_partition("14/2/356");
    auto found = r_copies(sigma, parse_partition("13/2"));
    REQUIRE(found.size() == 2);
    CHECK(found[0].elements == std::vector<int>{1, 2, 4});
    CHECK(found[1].elements == std::vector<int>{1, 3, 4});

    // same witnesses as the subsequence view of the growth words
    CHECK(r_contains(sigma, parse_partition("13/2")));
}

TEST_CASE("14/2/356 against the nearby 4-element patterns") {
    SetPartition sigma = parse_partition("14/2/356");

    // the only three-plus-singleton selection is T = {3,4,5,6}
    auto found = copies(sigma, parse_partition("134/2"));
    REQUIRE(found.size() == 1);
    CHECK(found[0].elements == std::vector<int>{3, 4, 5, 6});
    CHECK(found[0].blocks == std::vector<std::vector<int>>{{3, 5, 6}, {4}});
    CHECK(contains(sigma, parse_partition("134/2")));

    // no element can sit strictly between 5 and 6
    CHECK(copies(sigma, parse_partition("124/3")).empty());
    CHECK_FALSE(contains(sigma, parse_partition("124/3")));

    // and the index condition kills the {3,4,5,6} witness
    CHECK_FALSE(r_contains(sigma, parse_partition("134/2")));
}

TEST_CASE("empty pattern is contained everywhere") {
    SetPartition eps;
    SetPartition sigma = parse_partition("13/24");
    auto found = copies(sigma, eps);
    REQUIRE(found.size() == 1);
    CHECK(found[0].elements.empty());
    CHECK(found[0].blocks.empty());
    CHECK(contains(sigma, eps));
    CHECK(contains(eps, eps));
    CHECK(r_contains(eps, eps));
    CHECK(count_avoiders(0, {eps}, Notion::subpartition) == 0);
    CHECK(count_avoiders(5, {eps}, Notion::subpartition) == 0);
}

TEST_CASE("pattern larger than the host") {
    CHECK_FALSE(contains(parse_partition("12"), parse_partition("1/2/3")));
    CHECK(copies(parse_partition("1"), parse_partition("12")).empty());
}

TEST_CASE("avoids_all") {
    CHECK(avoids_all(parse_partition("12/34"), {parse_partition("1/2/3"), parse_partition("13/2")},
                     Notion::subpartition));
    CHECK_FALSE(avoids_all(parse_partition("13/24"), {parse_partition("13/24")},
                           Notion::subpartition));
    CHECK(avoids_all(parse_partition("13/24"), {}, Notion::subpartition));
    CHECK(avoids_all(parse_partition("13/24"), {}, Notion::rgf));
}

TEST_CASE("containment agrees with the subset-scan reference") {
    std::vector<SetPartition> patterns;
    PartitionStream pats(3);
    while (auto p = pats.next()) patterns.push_back(*p);
    patterns.push_back(parse_partition("13/24"));
    patterns.push_back(parse_partition("134/2"));
    patterns.push_back(parse_partition("1/2/34"));

    for (int n = 0; n <= 6; ++n) {
        auto hosts = oracle::all_partitions(n);
        for (const auto& pattern : patterns) {
            PatternMatcher sub(pattern, Notion::subpartition);
            PatternMatcher rgf(pattern, Notion::rgf);
            oracle::Blocks pattern_blocks = pattern.blocks();
            for (const auto& host : hosts) {
                SetPartition sigma = SetPartition::from_blocks(host);
                CHECK(sub.contained_in(sigma.word()) == oracle::contains(host, n, pattern_blocks));
                CHECK(rgf.contained_in(sigma.word()) ==
                      oracle::r_contains(host, n, pattern_blocks));
            }
        }
    }
}

TEST_CASE("witness lists agree with the subset-scan reference") {
    SetPartition pattern = parse_partition("13/2");
    oracle::Blocks pattern_blocks = pattern.blocks();
    for (const auto& host : oracle::all_partitions(6)) {
        SetPartition sigma = SetPartition::from_blocks(host);
        auto found = copies(sigma, pattern);

        long expected = 0;
        for (std::uint32_t mask = 1; mask < (1u << 6); ++mask) {
            if (__builtin_popcount(mask) != 3) continue;
            if (oracle::standardized(oracle::restricted(host, mask)) == pattern_blocks)
                ++expected;
        }
        CHECK(static_cast<long>(found.size()) == expected);

        // descending-index witnesses are a subset of subpartition witnesses
        auto restricted_found = r_copies(sigma, pattern);
        for (const auto& copy : restricted_found)
            CHECK(std::find(found.begin(), found.end(), copy) != found.end());
    }
}

TEST_CASE("witnesses are sorted by element tuple") {
    for (const auto& host : oracle::all_partitions(6)) {
        SetPartition sigma = SetPartition::from_blocks(host);
        auto found = copies(sigma, parse_partition("12/3"));
        for (std::size_t i = 1; i < found.size(); ++i)
            CHECK(found[i - 1].elements < found[i].elements);
    }
}

TEST_CASE("the notions agree on the extreme patterns") {
    for (int m = 1; m <= 3; ++m) {
        // One block: the increasing-block-index condition is vacuous, so even
        // the witness lists coincide.
        SetPartition one_block = max_pattern(m);
        for (const auto& host : oracle::all_partitions(6)) {
            SetPartition sigma = SetPartition::from_blocks(host);
            CHECK(copies(sigma, one_block) == r_copies(sigma, one_block));
        }
        // All singletons: the witness lists can differ (in 1,3/2 the elements
        // {2,3} form a copy of 1/2 across host blocks 2 then 1), but picking
        // block minima left to right shows the verdicts are equal.
        SetPartition singletons = min_pattern(m);
        for (const auto& host : oracle::all_partitions(6)) {
            SetPartition sigma = SetPartition::from_blocks(host);
            CHECK(contains(sigma, singletons) == r_contains(sigma, singletons));
        }
    }
}

TEST_CASE("avoider counts match the reference on [3] patterns") {
    PartitionStream pats(3);
    while (auto pattern = pats.next()) {
        oracle::Blocks pattern_blocks = pattern->blocks();
        for (int n = 0; n <= 7; ++n) {
            CHECK(count_avoiders(n, {*pattern}, Notion::subpartition) ==
                  oracle::count_avoiders(n, pattern_blocks));
            CHECK(count_avoiders(n, {*pattern}, Notion::rgf) ==
                  oracle::count_r_avoiders(n, pattern_blocks));
        }
    }
}

TEST_CASE("noncrossing partitions are counted by the Catalan numbers") {
    std::vector<long> catalan{1, 1, 2, 5, 14, 42, 132, 429};
    SetPartition crossing = parse_partition("13/24");
    for (int n = 0; n <= 7; ++n) {
        CHECK(count_avoiders(n, {crossing}, Notion::subpartition) == catalan[static_cast<std::size_t>(n)]);
        CHECK(oracle::count_avoiders(n, crossing.blocks()) == catalan[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("avoidance_profile spans 0..N inclusive") {
    AvoidanceProfile profile =
        avoidance_profile({parse_partition("13/2")}, Notion::subpartition, 6);
    REQUIRE(profile.counts.size() == 7);
    CHECK(profile.counts.front() == 1);
    CHECK(profile.counts.back() == 32);
    CHECK(profile.notion == Notion::subpartition);
    REQUIRE(profile.patterns.size() == 1);
    CHECK(profile.patterns[0] == parse_partition("13/2"));
}

TEST_CASE("multi-pattern avoidance intersects") {
    // layered matchings are counted by the Fibonacci numbers
    std::vector<long> fib{1, 1, 2, 3, 5, 8, 13, 21, 34};
    auto profile = avoidance_profile({parse_partition("123"), parse_partition("13/2")},
                                     Notion::subpartition, 8);
    for (std::size_t n = 0; n < fib.size(); ++n) CHECK(profile.counts[n] == fib[n]);
}

TEST_CASE("profile counts are worker independent") {
    auto one = avoidance_profile({parse_partition("12/3")}, Notion::rgf, 8, 1);
    auto many = avoidance_profile({parse_partition("12/3")}, Notion::rgf, 8, 5);
    CHECK(one == many);
}

TEST_CASE("wilf classes for tiny pattern sizes") {
    auto trivial = wilf_classes(0, Notion::subpartition, 5);
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].patterns == std::vector<SetPartition>{SetPartition{}});
    CHECK(trivial[0].profile == std::vector<mpz_class>(6, 0));

    auto single = wilf_classes(1, Notion::subpartition, 5);
    REQUIRE(single.size() == 1);
    CHECK(single[0].patterns == std::vector<SetPartition>{parse_partition("1")});
    CHECK(single[0].profile == std::vector<mpz_class>{1, 0, 0, 0, 0, 0});

    // 12 leaves only the all-singleton partition, 1/2 only the single block
    auto pairs = wilf_classes(2, Notion::subpartition, 6);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].patterns ==
          std::vector<SetPartition>{parse_partition("12"), parse_partition("1/2")});
    CHECK(pairs[0].profile == std::vector<mpz_class>{1, 1, 1, 1, 1, 1, 1});
}

TEST_CASE("notion names") {
    CHECK(notion_name(Notion::subpartition) == "sub");
    CHECK(notion_name(Notion::rgf) == "rgf");
    CHECK(notion_from_name("sub") == Notion::subpartition);
    CHECK(notion_from_name("rgf") == Notion::rgf);
    CHECK_THROWS_AS(notion_from_name("klazar"), std::invalid_argument);
}
