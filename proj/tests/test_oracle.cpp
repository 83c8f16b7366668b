#include <catch2/catch_amalgamated.hpp>

#include <polygram/oracle.hpp>
#include <polygram/polycube.hpp>
#include <polygram/polyomino.hpp>
#include <polygram/reference_data.hpp>

#include <map>

using namespace polygram;
using oracle::ColumnProfile;
using oracle::PlateauProfile;

TEST_CASE("column profile helpers") {
    ColumnProfile p{{{0, 1}, {0, 2}, {1, 2}}};
    CHECK(p.valid());
    CHECK(p.width() == 3);
    CHECK(p.area() == 7);
    CHECK(p.height() == 3);
    CHECK(p.column_heights() == std::vector<int>({2, 3, 2}));
    CHECK(oracle::render_grid(p) == " ##\n###\n##\n");
}

TEST_CASE("column profile validity rules") {
    CHECK_FALSE(ColumnProfile{}.valid());
    CHECK_FALSE(ColumnProfile{{{1, 2}}}.valid());            // first bottom must be 0
    CHECK_FALSE(ColumnProfile{{{0, -1}}}.valid());           // top below bottom
    CHECK_FALSE(ColumnProfile{{{0, 1}, {0, 0}}}.valid());    // tops must not descend
    CHECK_FALSE(ColumnProfile{{{0, 3}, {1, 3}, {0, 3}}}.valid());  // bottoms must not descend
    CHECK_FALSE(ColumnProfile{{{0, 1}, {2, 3}}}.valid());    // columns must share a row
    CHECK(ColumnProfile{{{0, 0}, {0, 0}}}.valid());
}

TEST_CASE("polyomino stream: validity, order, and totals by area") {
    std::map<long long, long> by_area;
    ColumnProfile prev;
    long total = 0;
    oracle::enumerate_polyominoes(10, [&](const ColumnProfile& p) {
        REQUIRE(p.valid());
        REQUIRE(p.area() <= 10);
        if (total > 0) REQUIRE(prev < p);  // strictly increasing: duplicate-free
        prev = p;
        ++total;
        by_area[p.area()] += 1;
    });
    CHECK(total == 2271);
    for (int n = 1; n <= 10; ++n)
        CHECK(by_area[n] == reference::area_totals_prefix[static_cast<std::size_t>(n) - 1]);
}

TEST_CASE("polyomino stream bounds are enforced") {
    CHECK_THROWS_AS(oracle::enumerate_polyominoes(0, [](const ColumnProfile&) {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(oracle::enumerate_polyominoes(15, [](const ColumnProfile&) {}),
                    std::invalid_argument);
}

TEST_CASE("polyomino tallies match the counting formulas") {
    auto by_width_area = oracle::tally_polyominoes(9, oracle::Classifier::width_area);
    CountTable t = width_area_table(9, 9);
    for (int n = 1; n <= 9; ++n)
        for (int k = 1; k <= n; ++k) {
            BigInt seen = 0;
            if (auto it = by_width_area.find({k, n}); it != by_width_area.end()) seen = it->second;
            CHECK(t.at(k, n) == seen);
        }

    auto by_heights = oracle::tally_polyominoes(9, oracle::Classifier::column_heights);
    CHECK(by_heights.at({2, 3, 2}) == 4);
    CHECK(by_heights.at({3, 4}) == 3);
    for (const auto& [heights, seen] : by_heights) CHECK(count_fixed_columns(heights) == seen);

    CHECK_THROWS_AS(oracle::tally_polyominoes(5, oracle::Classifier::width_volume),
                    std::invalid_argument);
}

TEST_CASE("box-profile polyomino counts equal the width/height formula") {
    CHECK(oracle::count_box_polyominoes(2, 2) == 3);
    CHECK(oracle::count_box_polyominoes(1, 5) == 1);
    CHECK(oracle::count_box_polyominoes(5, 1) == 1);
    for (int k = 1; k <= 7; ++k)
        for (int n = 1; k + n <= 8; ++n)
            CHECK(oracle::count_box_polyominoes(k, n) == count_width_height(k, n));
}

TEST_CASE("plateau profile helpers") {
    PlateauProfile p{{{0, 1, 0, 1}, {0, 1, 1, 2}}};
    CHECK(p.valid());
    CHECK(p.width() == 2);
    CHECK(p.volume() == 8);
    CHECK(p.height() == 2);
    CHECK(p.depth() == 3);
    CHECK(p.plateau_volumes() == std::vector<int>({4, 4}));

    PlateauProfile single{{{0, 1, 0, 1}}};
    CHECK(oracle::render_layers(single) == "z=0:\n#\n#\nz=1:\n#\n#\n");
}

TEST_CASE("plateau profile validity rules") {
    CHECK_FALSE(PlateauProfile{}.valid());
    CHECK_FALSE(PlateauProfile{{{0, 0, 1, 1}}}.valid());  // first front must be 0
    CHECK_FALSE(PlateauProfile{{{0, 0, 0, 0}, {0, 0, 1, 0}}}.valid());
    CHECK_FALSE(PlateauProfile{{{0, 0, 0, 0}, {1, 1, 0, 0}}}.valid());  // no shared row
    CHECK(PlateauProfile{{{0, 0, 0, 0}, {0, 1, 0, 2}}}.valid());
}

TEST_CASE("polycube stream: validity, order, and totals by volume") {
    std::map<long long, long> by_volume;
    PlateauProfile prev;
    long total = 0;
    oracle::enumerate_polycubes(8, [&](const PlateauProfile& p) {
        REQUIRE(p.valid());
        REQUIRE(p.volume() <= 8);
        if (total > 0) REQUIRE(prev < p);
        prev = p;
        ++total;
        by_volume[p.volume()] += 1;
    });
    CHECK(total == 1661);
    // column totals of the published width/volume tabulation
    const long expected[] = {1, 3, 7, 20, 51, 144, 381, 1054};
    for (int n = 1; n <= 8; ++n) CHECK(by_volume[n] == expected[n - 1]);

    CHECK_THROWS_AS(oracle::enumerate_polycubes(11, [](const PlateauProfile&) {}),
                    std::invalid_argument);
}

TEST_CASE("polycube tallies match the counting formulas") {
    auto by_volumes = oracle::tally_polycubes(8, oracle::Classifier::plateau_volumes);
    CHECK(by_volumes.at({2, 2}) == 6);
    CHECK(by_volumes.at({4}) == 3);
    for (const auto& [volumes, seen] : by_volumes) CHECK(count_fixed_plateaus(volumes) == seen);

    auto by_width_volume = oracle::tally_polycubes(8, oracle::Classifier::width_volume);
    CountTable t = width_volume_table(8, 8);
    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= n; ++k) {
            BigInt seen = 0;
            if (auto it = by_width_volume.find({k, n}); it != by_width_volume.end())
                seen = it->second;
            CHECK(t.at(k, n) == seen);
        }

    CHECK_THROWS_AS(oracle::tally_polycubes(5, oracle::Classifier::width_area),
                    std::invalid_argument);
}

TEST_CASE("box-profile polycube counts equal the width/height/depth formula") {
    CHECK(oracle::count_box_polycubes(2, 2, 2) == 9);
    for (int k = 1; k <= 5; ++k)
        for (int n = 1; n <= 3; ++n)
            for (int m = 1; k + n + m <= 8; ++m)
                CHECK(oracle::count_box_polycubes(k, n, m) == count_width_height_depth(k, n, m));
}
