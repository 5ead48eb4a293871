#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "partpat/formulas.hpp"
#include "partpat/json_io.hpp"

using namespace partpat;
using partpat::io::json;

TEST_CASE("partitions round trip") {
    for (const char* text : {"14/2/356", "1/2/3", "123", "1,10,11/2/3,4,5,6,7,8,9"}) {
        SetPartition pi = parse_partition(text);
        json j = io::partition_to_json(pi);
        CHECK(j.is_string());
        CHECK(io::partition_from_json(j) == pi);
    }
    SetPartition empty;
    CHECK(io::partition_from_json(io::partition_to_json(empty)) == empty);
}

TEST_CASE("sequences round trip through decimal strings") {
    std::vector<mpz_class> values{0, -7, mpz_class("123456789012345678901234567890"),
                                  factorial(40)};
    json j = io::sequence_to_json(values);
    REQUIRE(j.is_array());
    CHECK(j[2].is_string());
    CHECK(j[2].get<std::string>() == "123456789012345678901234567890");
    CHECK(io::sequence_from_json(j) == values);
    CHECK(io::sequence_from_json(io::sequence_to_json({})).empty());
}

TEST_CASE("profiles round trip") {
    AvoidanceProfile profile = avoidance_profile(
        {parse_partition("13/2"), parse_partition("123")}, Notion::subpartition, 8);
    json j = io::profile_to_json(profile);
    CHECK(j.contains("patterns"));
    CHECK(j.contains("notion"));
    CHECK(j.contains("counts"));
    CHECK(j["notion"] == "sub");
    AvoidanceProfile back = io::profile_from_json(j);
    CHECK(back.patterns == profile.patterns);
    CHECK(back.notion == profile.notion);
    CHECK(back.counts == profile.counts);

    AvoidanceProfile rprofile = avoidance_profile({parse_partition("1/23")}, Notion::rgf, 5);
    json rj = io::profile_to_json(rprofile);
    CHECK(rj["notion"] == "rgf");
    CHECK(io::profile_from_json(rj).notion == Notion::rgf);
}

TEST_CASE("recurrences round trip") {
    PRecurrence rec({IntPoly({mpz_class(-1), mpz_class(-1)}), IntPoly({mpz_class(1)})});
    json j = io::recurrence_to_json(rec);
    CHECK(j["order"] == 1);
    CHECK(j["degree"] == 1);
    CHECK(io::recurrence_from_json(j) == rec);

    PRecurrence gap({IntPoly(), IntPoly({mpz_class(0), mpz_class(3)})});
    CHECK(io::recurrence_from_json(io::recurrence_to_json(gap)) == gap);
}

TEST_CASE("envelope carries the fixed field set") {
    json e = io::envelope("count", json{{"n", 4}}, json::array({1, 2}));
    REQUIRE(e.is_object());
    CHECK(e.size() == 4);
    CHECK(e["command"] == "count");
    CHECK(e["params"]["n"] == 4);
    CHECK(e["result"] == json::array({1, 2}));
    CHECK(e["version"] == "1");
}
