#pragma once

#include <array>
#include <string>

// Previously published tabulations of the width/area and width/volume
// counts, kept verbatim for cross-checking. Layout follows the published
// presentation: rows indexed by n = 1..10, columns by k = 1..10.
namespace polygram::reference {

// Published width/area counts b(k, n) for parallelogram polyominoes. The
// cell at (k = 3, n = 8) is reproduced verbatim as 551; the correct value
// is 55 (see width_area_erratum_note), which also follows from the area-8
// total 242.
inline constexpr std::array<std::array<long long, 10>, 10> published_width_area_rows = {{
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 2, 1, 0, 0, 0, 0, 0, 0, 0},
    {1, 4, 3, 1, 0, 0, 0, 0, 0, 0},
    {1, 6, 8, 4, 1, 0, 0, 0, 0, 0},
    {1, 9, 17, 13, 5, 1, 0, 0, 0, 0},
    {1, 12, 32, 34, 19, 6, 1, 0, 0, 0},
    {1, 16, 551, 78, 58, 26, 7, 1, 0, 0},
    {1, 20, 89, 160, 154, 90, 34, 8, 1, 0},
    {1, 25, 136, 305, 365, 269, 131, 43, 9, 1},
}};

// Published width/volume counts c(k, n) for parallelogram polycubes.
inline constexpr std::array<std::array<long long, 10>, 10> published_width_volume_rows = {{
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {2, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {2, 4, 1, 0, 0, 0, 0, 0, 0, 0},
    {3, 10, 6, 1, 0, 0, 0, 0, 0, 0},
    {2, 18, 22, 8, 1, 0, 0, 0, 0, 0},
    {4, 32, 59, 38, 10, 1, 0, 0, 0, 0},
    {2, 44, 132, 132, 58, 12, 1, 0, 0, 0},
    {4, 70, 264, 374, 245, 82, 14, 1, 0, 0},
    {3, 84, 469, 916, 836, 406, 110, 16, 1, 0},
    {4, 126, 808, 2015, 2438, 1614, 623, 142, 18, 1},
}};

inline constexpr long long published_width_area_entry(int k, int n) {
    return published_width_area_rows[static_cast<std::size_t>(n) - 1]
                                    [static_cast<std::size_t>(k) - 1];
}

inline constexpr long long published_width_volume_entry(int k, int n) {
    return published_width_volume_rows[static_cast<std::size_t>(n) - 1]
                                      [static_cast<std::size_t>(k) - 1];
}

// Total parallelogram polyominoes by area (OEIS A006958), n = 1..10.
inline constexpr std::array<long long, 10> area_totals_prefix = {1,   2,   4,   9,   20,
                                                                 46, 105, 242, 557, 1285};

// Footnote attached to any width/area table that covers the cell (3, 8).
inline std::string width_area_erratum_note() {
    return "cell (k=3, n=8) = 55; a previously published tabulation prints 551 there, "
           "which is inconsistent with the area-8 total 242 (OEIS A006958)";
}

}  // namespace polygram::reference
