#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "partpat/generate.hpp"
#include "partpat/set_partition.hpp"

#include "oracle.hpp"

using namespace partpat;

TEST_CASE("from_blocks canonicalizes block and element order") {
    SetPartition pi = SetPartition::from_blocks({{5, 3, 6}, {2}, {4, 1}});
    CHECK(pi.word() == std::vector<int>{1, 2, 3, 1, 3, 3});
    CHECK(pi.block_count() == 3);
    CHECK(pi.blocks() == std::vector<std::vector<int>>{{1, 4}, {2}, {3, 5, 6}});
    CHECK(pi.block_of(5) == 3);
    CHECK(pi.block_of(2) == 2);
}

TEST_CASE("from_blocks rejects bad input") {
    CHECK_THROWS_AS(SetPartition::from_blocks({{1, 2}, {2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(SetPartition::from_blocks({{1}, {3}}), std::invalid_argument);
    CHECK_THROWS_AS(SetPartition::from_blocks({{}}), std::invalid_argument);
    CHECK_THROWS_AS(SetPartition::from_blocks({{0, 1}}), std::invalid_argument);
}

TEST_CASE("empty partition") {
    SetPartition eps;
    CHECK(eps.empty());
    CHECK(eps.size() == 0);
    CHECK(eps.block_count() == 0);
    CHECK(to_string(eps) == "ε");
    CHECK(parse_partition("") == eps);
    CHECK(parse_partition("ε") == eps);
}

TEST_CASE("growth word round trip") {
    SetPartition pi = parse_partition("14/2/356");
    Rgf r = to_rgf(pi);
    CHECK(r.word() == std::vector<int>{1, 2, 3, 1, 3, 3});
    CHECK(from_rgf(r) == pi);

    for (int n = 0; n <= 6; ++n) {
        PartitionStream stream(n);
        while (auto p = stream.next()) {
            CHECK(from_rgf(to_rgf(*p)) == *p);
        }
    }
}

TEST_CASE("growth word validation") {
    CHECK(Rgf::is_valid({1, 2, 3, 1, 3, 3}));
    CHECK(Rgf::is_valid({}));
    CHECK(Rgf::is_valid({1}));
    CHECK_FALSE(Rgf::is_valid({1, 2, 3, 1, 5, 3}));
    CHECK_FALSE(Rgf::is_valid({2}));
    CHECK_FALSE(Rgf::is_valid({1, 3}));
    CHECK_FALSE(Rgf::is_valid({1, 0}));
    CHECK_THROWS_AS(Rgf({1, 2, 3, 1, 5, 3}), std::invalid_argument);
    CHECK_THROWS_AS(SetPartition::from_rgf_word({1, 3}), std::invalid_argument);
    CHECK(SetPartition::from_rgf_word({1, 1, 1}) == parse_partition("123"));
    CHECK(from_rgf(Rgf({1, 2, 1, 2})) == parse_partition("13/24"));
}

TEST_CASE("standardize relabels by rank") {
    CHECK(standardize_sequence({3, 4, 6}, {4, 3, 4, 6}) == std::vector<int>{2, 1, 2, 3});
    CHECK(standardize_sequence({3, 4, 6}, {}) == std::vector<int>{});
    CHECK_THROWS_AS(standardize_sequence({3, 4, 6}, {5}), std::domain_error);

    CHECK(standardize_partition({3, 4, 6}, {{3, 6}, {4}}) == parse_partition("13/2"));
    CHECK(standardize_partition({{3, 6}, {4}}) == parse_partition("13/2"));
    CHECK_THROWS_AS(standardize_partition({3, 4}, {{3, 6}, {4}}), std::domain_error);

    SetPartition pi = parse_partition("13/24");
    CHECK(standardize_partition({1, 2, 3, 4}, pi.blocks()) == pi);
}

TEST_CASE("complement mirrors the ground set") {
    CHECK(complement(parse_partition("14/2/356")) == parse_partition("124/36/5"));
    CHECK(complement(parse_partition("1/2/3/4")) == parse_partition("1/2/3/4"));
    CHECK(complement(parse_partition("1234")) == parse_partition("1234"));
    CHECK(complement(SetPartition{}) == SetPartition{});

    for (int n = 0; n <= 6; ++n) {
        PartitionStream stream(n);
        while (auto p = stream.next()) {
            CHECK(complement(complement(*p)) == *p);
        }
    }
}

TEST_CASE("restriction keeps original labels") {
    SetPartition sigma = parse_partition("14/2/356");
    CHECK(restrict_to(sigma, {3, 4, 6}) == std::vector<std::vector<int>>{{3, 6}, {4}});
    CHECK(restrict_to(sigma, {6, 3, 4, 4}) == std::vector<std::vector<int>>{{3, 6}, {4}});
    CHECK(restrict_to(sigma, {}) == std::vector<std::vector<int>>{});
    CHECK_THROWS_AS(restrict_to(sigma, {7}), std::domain_error);

    CHECK(induced_pattern(sigma, {3, 4, 6}) == parse_partition("13/2"));
    CHECK(induced_pattern(sigma, {1, 2, 4}) == parse_partition("13/2"));
    CHECK(induced_pattern(sigma, {3, 4, 5, 6}) == parse_partition("134/2"));
}

TEST_CASE("text form") {
    CHECK(to_string(parse_partition("14/2/356")) == "1,4/2/3,5,6");
    CHECK(to_string(parse_partition("1")) == "1");
    std::ostringstream os;
    os << parse_partition("13/24");
    CHECK(os.str() == "1,3/2,4");
}

TEST_CASE("parser accepts both notations") {
    CHECK(parse_partition("14/2/356") == SetPartition::from_blocks({{1, 4}, {2}, {3, 5, 6}}));
    CHECK(parse_partition("1,4/2/3,5,6") == parse_partition("14/2/356"));
    CHECK(parse_partition("3/12") == parse_partition("12/3"));
    CHECK(parse_partition("  13/2 ") == parse_partition("13/2"));
    CHECK(parse_partition("12") == SetPartition::from_blocks({{1, 2}}));

    // every element over 9 forces the comma notation
    SetPartition big = SetPartition::from_blocks(
        {{1, 10}, {2}, {3}, {4}, {5}, {6}, {7}, {8}, {9}});
    CHECK(parse_partition("1,10/2/3/4/5/6/7/8/9") == big);
    CHECK(parse_partition(to_string(big)) == big);
}

TEST_CASE("parser reports the error position") {
    try {
        parse_partition("1//2");
        FAIL("expected a parse error");
    } catch (const PartitionParseError& e) {
        CHECK(e.position() == 2);
        CHECK(std::string(e.what()).find("position 2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_partition("1/2/2"), PartitionParseError);
    CHECK_THROWS_AS(parse_partition("1/3"), PartitionParseError);
    CHECK_THROWS_AS(parse_partition("0/1"), PartitionParseError);
    CHECK_THROWS_AS(parse_partition("a/b"), PartitionParseError);
    CHECK_THROWS_AS(parse_partition("/1"), PartitionParseError);
    CHECK_THROWS_AS(parse_partition("1/"), PartitionParseError);
}

TEST_CASE("round trip through text for every small partition") {
    for (int n = 0; n <= 7; ++n) {
        PartitionStream stream(n);
        while (auto p = stream.next()) {
            CHECK(parse_partition(to_string(*p)) == *p);
        }
    }
}

TEST_CASE("ordering matches enumeration order") {
    CHECK(parse_partition("123") < parse_partition("12/3"));
    CHECK(parse_partition("12/3") < parse_partition("13/2"));
    CHECK(parse_partition("13/2") < parse_partition("1/23"));
    CHECK(parse_partition("1/23") < parse_partition("1/2/3"));
}

TEST_CASE("blocks view agrees with the reference enumerator") {
    auto expected = oracle::all_partitions(5);
    std::vector<oracle::Blocks> got;
    PartitionStream stream(5);
    while (auto p = stream.next()) got.push_back(p->blocks());
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
}
