#include <catch2/catch_amalgamated.hpp>

#include <polygram/polycube.hpp>
#include <polygram/reference_data.hpp>

using namespace polygram;

TEST_CASE("plateau shapes are a divisor sieve") {
    std::vector<PlateauShape> shapes = plateau_shapes(6);
    // tau(1) + ... + tau(6) = 1 + 2 + 2 + 3 + 2 + 4
    CHECK(shapes.size() == 14);
    CHECK(shapes[0] == PlateauShape{1, 1});
    CHECK(shapes[1] == PlateauShape{1, 2});
    CHECK(shapes[2] == PlateauShape{2, 1});
    for (std::size_t i = 1; i < shapes.size(); ++i) {
        CHECK(shapes[i].volume() <= 6);
        bool ordered = shapes[i - 1].volume() < shapes[i].volume() ||
                       (shapes[i - 1].volume() == shapes[i].volume() &&
                        shapes[i - 1].height < shapes[i].height);
        CHECK(ordered);
    }
    CHECK_THROWS_AS(plateau_shapes(0), std::invalid_argument);
}

TEST_CASE("count_fixed_plateaus examples") {
    CHECK(count_fixed_plateaus({1}) == 1);
    CHECK(count_fixed_plateaus({4}) == 3);    // tau(4)
    CHECK(count_fixed_plateaus({12}) == 6);   // tau(12)
    CHECK(count_fixed_plateaus({2, 2}) == 6);
    CHECK(count_fixed_plateaus({2, 3}) == 6);
    CHECK(count_fixed_plateaus({1, 1, 1}) == 1);
}

TEST_CASE("count_fixed_plateaus rejects bad input") {
    CHECK_THROWS_AS(count_fixed_plateaus({}), std::invalid_argument);
    CHECK_THROWS_AS(count_fixed_plateaus({2, 0}), std::invalid_argument);
}

TEST_CASE("single-plateau volume counts are divisor counts") {
    for (int n = 1; n <= 30; ++n) CHECK(count_fixed_plateaus({n}) == divisor_count(n));
}

TEST_CASE("width/volume counts: known cells") {
    for (int n = 1; n <= 16; ++n) CHECK(count_width_volume(1, n) == divisor_count(n));
    CHECK(count_width_volume(2, 4) == 10);
    CHECK(count_width_volume(2, 5) == 18);
    CHECK(count_width_volume(2, 6) == 32);
    CHECK(count_width_volume(3, 6) == 59);
    CHECK(count_width_volume(7, 6) == 0);
}

TEST_CASE("width/volume table matches the published tabulation in all 100 cells") {
    CountTable t = width_volume_table(10, 10);
    for (int k = 1; k <= 10; ++k)
        for (int n = 1; n <= 10; ++n)
            CHECK(t.at(k, n) == reference::published_width_volume_entry(k, n));
}

TEST_CASE("width/volume table equals the explicit composition sum") {
    CountTable t = width_volume_table(10, 10);
    for (int n = 1; n <= 10; ++n)
        for (int k = 1; k <= n; ++k) {
            BigInt direct = 0;
            for_each_composition(
                n, k, [&](const std::vector<int>& parts) { direct += count_fixed_plateaus(parts); });
            CHECK(t.at(k, n) == direct);
        }
}

TEST_CASE("width/height/depth counts: known values and factorization") {
    CHECK(count_width_height_depth(1, 1, 1) == 1);
    CHECK(count_width_height_depth(2, 2, 2) == 9);
    CHECK(count_width_height_depth(2, 2, 3) == 18);
    CHECK(count_width_height_depth(3, 3, 3) == 400);
    for (int k = 1; k <= 8; ++k)
        for (int n = 1; n <= 8; ++n) {
            CHECK(count_width_height_depth(k, n, 1) == count_width_height(k, n));
            for (int m = 1; m <= 8; ++m)
                CHECK(count_width_height_depth(k, n, m) ==
                      count_width_height(k, n) * count_width_height(k, m));
        }
    CHECK_THROWS_AS(count_width_height_depth(0, 1, 1), std::invalid_argument);
}

TEST_CASE("bivariate series carries the width/height/depth counts") {
    BivariateSeries s = height_depth_series(2, 5, 5);
    for (int n = 1; n <= 5; ++n) {
        CHECK(s.at(n, 0) == 0);
        CHECK(s.at(0, n) == 0);
        for (int m = 1; m <= 5; ++m) CHECK(s.at(n, m) == count_width_height_depth(2, n, m));
    }
}
