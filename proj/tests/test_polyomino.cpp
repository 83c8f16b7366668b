#include <catch2/catch_amalgamated.hpp>

#include <polygram/polyomino.hpp>
#include <polygram/reference_data.hpp>

using namespace polygram;

TEST_CASE("count_fixed_columns examples") {
    CHECK(count_fixed_columns({5}) == 1);
    CHECK(count_fixed_columns({3, 4}) == 3);
    CHECK(count_fixed_columns({2, 3, 2}) == 4);
    CHECK(count_fixed_columns({1, 1, 1, 1}) == 1);
    CHECK(count_fixed_columns({4, 4, 4}) == 16);
}

TEST_CASE("count_fixed_columns rejects bad input") {
    CHECK_THROWS_AS(count_fixed_columns({}), std::invalid_argument);
    CHECK_THROWS_AS(count_fixed_columns({2, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(count_fixed_columns({-3}), std::invalid_argument);
}

TEST_CASE("width/area counts: basics and known cells") {
    CHECK(count_width_area(1, 7) == 1);
    CHECK(count_width_area(7, 7) == 1);
    CHECK(count_width_area(8, 7) == 0);
    CHECK(count_width_area(3, 8) == 55);  // the published tabulation misprints this cell as 551
    for (int n = 1; n <= 16; ++n)
        CHECK(count_width_area(2, n) == (n >= 2 ? BigInt(n) * n / 4 : 0));
}

TEST_CASE("width/area table matches the published tabulation except its known erratum") {
    CountTable t = width_area_table(10, 10);
    int diffs = 0;
    for (int k = 1; k <= 10; ++k)
        for (int n = 1; n <= 10; ++n)
            if (t.at(k, n) != reference::published_width_area_entry(k, n)) ++diffs;
    CHECK(diffs == 1);
    CHECK(t.at(3, 8) == 55);
    CHECK(reference::published_width_area_entry(3, 8) == 551);
}

TEST_CASE("width/area column totals reproduce the held area totals") {
    CountTable t = width_area_table(10, 10);
    for (int n = 1; n <= 10; ++n)
        CHECK(t.column_total(n) ==
              reference::area_totals_prefix[static_cast<std::size_t>(n) - 1]);
}

TEST_CASE("width/area table equals the explicit composition sum") {
    CountTable t = width_area_table(12, 12);
    for (int n = 1; n <= 12; ++n)
        for (int k = 1; k <= n; ++k) {
            BigInt direct = 0;
            for_each_composition(
                n, k, [&](const std::vector<int>& parts) { direct += count_fixed_columns(parts); });
            CHECK(t.at(k, n) == direct);
        }
}

TEST_CASE("width/area argument validation") {
    CHECK_THROWS_AS(count_width_area(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(count_width_area(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(width_area_table(0, 3), std::invalid_argument);
}

TEST_CASE("width/height counts: known values and symmetry") {
    CHECK(count_width_height(1, 1) == 1);
    CHECK(count_width_height(2, 2) == 3);
    CHECK(count_width_height(3, 3) == 20);
    CHECK(count_width_height(4, 3) == 50);
    CHECK(count_width_height(4, 4) == 175);
    for (int n = 1; n <= 12; ++n)
        CHECK(count_width_height(2, n) == BigInt(n) * (n + 1) / 2);
    for (int k = 1; k <= 10; ++k)
        for (int n = 1; n <= 10; ++n) CHECK(count_width_height(k, n) == count_width_height(n, k));
    CHECK_THROWS_AS(count_width_height(0, 1), std::invalid_argument);
}

TEST_CASE("height series carries the width/height counts") {
    Series g3 = height_series(3, 6);
    CHECK(g3[0] == 0);
    for (int n = 1; n <= 6; ++n) CHECK(g3[n] == count_width_height(3, n));
}

TEST_CASE("numerator polynomials are the expected second-order rows") {
    // width 1: x / (1 - x) has numerator x
    Series b1 = height_numerator(1);
    CHECK(b1.degree() == 1);
    CHECK(b1[0] == 0);
    CHECK(b1[1] == 1);

    // width 4: x + 3x^2 + x^3
    Series b4 = height_numerator(4);
    REQUIRE(b4.degree() == 3);
    CHECK(b4[1] == 1);
    CHECK(b4[2] == 3);
    CHECK(b4[3] == 1);

    for (int k = 2; k <= 8; ++k) {
        Series b = height_numerator(k);
        REQUIRE(b.degree() == k - 1);
        CHECK(b[0] == 0);
        for (int i = 1; i <= k - 1; ++i) {
            CHECK(b[i] > 0);
            CHECK(b[i] == b[k - i]);                      // palindromic
            CHECK(b[i] == count_width_height(i, k - i));  // Narayana row
        }
    }
}
