#include <catch2/catch_amalgamated.hpp>

#include <polygram/combinatorics.hpp>
#include <polygram/polycube.hpp>
#include <polygram/polyomino.hpp>
#include <polygram/table_io.hpp>

using namespace polygram;

TEST_CASE("csv emission is byte-exact for a small table") {
    CountTable t("demo", 2, 3);
    int v = 0;
    for (int k = 1; k <= 2; ++k)
        for (int n = 1; n <= 3; ++n) t.at(k, n) = ++v;
    t.notes.push_back("footnote one");
    CHECK(to_csv(t) ==
          "k,n=1,n=2,n=3\n"
          "1,1,2,3\n"
          "2,4,5,6\n"
          "# footnote one\n");
}

TEST_CASE("csv round trip preserves entries and notes") {
    CountTable t = width_area_table(6, 9);
    t.notes.push_back("alpha");
    t.notes.push_back("beta");
    CountTable back = parse_csv_table(to_csv(t));
    REQUIRE(back.max_k == 6);
    REQUIRE(back.max_n == 9);
    for (int k = 1; k <= 6; ++k)
        for (int n = 1; n <= 9; ++n) CHECK(back.at(k, n) == t.at(k, n));
    REQUIRE(back.notes.size() == 2);
    CHECK(back.notes[0] == "alpha");
    CHECK(back.notes[1] == "beta");
}

TEST_CASE("3d csv round trip") {
    CountTable3 t("whd", 3, 3, 4);
    for (int k = 1; k <= 3; ++k)
        for (int n = 1; n <= 3; ++n)
            for (int m = 1; m <= 4; ++m) t.at(k, n, m) = count_width_height_depth(k, n, m);
    t.notes.push_back("note");
    CountTable3 back = parse_csv_table3(to_csv(t));
    REQUIRE(back.max_k == 3);
    REQUIRE(back.max_n == 3);
    REQUIRE(back.max_m == 4);
    for (int k = 1; k <= 3; ++k)
        for (int n = 1; n <= 3; ++n)
            for (int m = 1; m <= 4; ++m) CHECK(back.at(k, n, m) == t.at(k, n, m));
    REQUIRE(back.notes.size() == 1);
    CHECK(back.notes[0] == "note");
}

TEST_CASE("json round trip keeps params, notes and big values") {
    CountTable t("big", 2, 2);
    t.at(1, 1) = binomial(100, 50);
    t.at(1, 2) = 0;
    t.at(2, 1) = BigInt("-7");
    t.at(2, 2) = 42;
    t.notes.push_back("huge entries survive");
    nlohmann::ordered_json params{{"k", 2}, {"n", 2}};
    nlohmann::ordered_json j = polygram::to_json(t, params);
    CHECK(j["table"] == "big");
    CHECK(j["params"]["k"] == 2);
    // counts are serialised as decimal strings, not JSON numbers
    CHECK(j["entries"][0][0].is_string());
    CHECK(j["entries"][0][0].get<std::string>() == "100891344545564193334812497256");

    CountTable back = parse_json_table(nlohmann::json::parse(j.dump()));
    CHECK(back.name == "big");
    CHECK(back.at(1, 1) == binomial(100, 50));
    CHECK(back.at(2, 1) == -7);
    REQUIRE(back.notes.size() == 1);
}

TEST_CASE("3d json round trip") {
    CountTable3 t("s", 2, 2, 3);
    for (int k = 1; k <= 2; ++k)
        for (int n = 1; n <= 2; ++n)
            for (int m = 1; m <= 3; ++m) t.at(k, n, m) = count_width_height_depth(k, n, m);
    nlohmann::ordered_json j = polygram::to_json(t, nlohmann::ordered_json::object());
    CountTable3 back = parse_json_table3(nlohmann::json::parse(j.dump()));
    for (int k = 1; k <= 2; ++k)
        for (int n = 1; n <= 2; ++n)
            for (int m = 1; m <= 3; ++m) CHECK(back.at(k, n, m) == t.at(k, n, m));
}

TEST_CASE("csv parse errors") {
    CHECK_THROWS_AS(parse_csv_table(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_csv_table("x,n=1\n1,2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_csv_table("k,n=1,n=2\n1,2\n"), std::invalid_argument);   // ragged row
    CHECK_THROWS_AS(parse_csv_table("k,n=1\n1,2z\n"), std::invalid_argument);      // bad number
    CHECK_THROWS_AS(parse_csv_table("k,n=1\n2,5\n"), std::invalid_argument);       // label gap
    CHECK_THROWS_AS(parse_csv_table("k,n=1\n"), std::invalid_argument);            // no rows
    CHECK_THROWS_AS(parse_csv_table3("k,n=1\n1,2\n"), std::invalid_argument);      // wrong header
}

TEST_CASE("json parse errors") {
    CHECK_THROWS_AS(parse_json_table(nlohmann::json::object()), std::invalid_argument);
    nlohmann::json ragged = {{"entries", {{"1", "2"}, {"3"}}}};
    CHECK_THROWS_AS(parse_json_table(ragged), std::invalid_argument);
    nlohmann::json bad = {{"entries", {{"1", "x"}}}};
    CHECK_THROWS_AS(parse_json_table(bad), std::invalid_argument);
}
