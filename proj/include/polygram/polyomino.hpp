#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "bignum.hpp"
#include "combinatorics.hpp"
#include "series.hpp"
#include "table.hpp"

namespace polygram {

inline void validate_heights(const std::vector<int>& heights) {
    if (heights.empty()) throw std::invalid_argument("column heights: empty sequence");
    for (int h : heights)
        if (h < 1) throw std::invalid_argument("column heights: entries must be >= 1");
}

// Number of parallelogram polyominoes whose column heights are exactly the
// given sequence m_1, ..., m_k: the product over adjacent pairs of
// min(m_j, m_{j+1}), and 1 for a single column. Each factor counts the
// admissible vertical offsets between consecutive columns.
inline BigCount count_fixed_columns(const std::vector<int>& heights) {
    validate_heights(heights);
    BigInt total = 1;
    for (std::size_t j = 0; j + 1 < heights.size(); ++j)
        total *= std::min(heights[j], heights[j + 1]);
    return total;
}

// Full table of b(k, n) = number of parallelogram polyominoes with exactly
// k columns and area n, for 1 <= k <= max_width and 1 <= n <= max_area.
//
// Dynamic programming over columns: the layer for width i maps (area so far,
// height of the last column) to a count, and appending a column of height h
// weights each transfer by min(h', h), the number of ways to attach it.
// Summing the layer for width k over last heights at area n gives b(k, n),
// which equals the sum of count_fixed_columns over all compositions of n
// into k parts without ever materialising the compositions.
inline CountTable width_area_table(int max_width, int max_area) {
    if (max_width < 1 || max_area < 1)
        throw std::invalid_argument("width_area_table: limits must be >= 1");
    CountTable t("b", max_width, max_area);
    const int N = max_area;
    // layer[a][h]: partial profiles with current width, area a, last height h
    std::vector<std::vector<BigInt>> layer(
        static_cast<std::size_t>(N) + 1, std::vector<BigInt>(static_cast<std::size_t>(N) + 1));
    for (int h = 1; h <= N; ++h) layer[static_cast<std::size_t>(h)][static_cast<std::size_t>(h)] = 1;
    for (int k = 1; k <= max_width; ++k) {
        if (k > 1) {
            std::vector<std::vector<BigInt>> next(
                static_cast<std::size_t>(N) + 1,
                std::vector<BigInt>(static_cast<std::size_t>(N) + 1));
            for (int a = k; a <= N; ++a)
                for (int h = 1; h <= a - (k - 1); ++h) {
                    BigInt acc = 0;
                    for (int hp = 1; hp <= a - h; ++hp) {
                        const BigInt& src =
                            layer[static_cast<std::size_t>(a - h)][static_cast<std::size_t>(hp)];
                        if (src != 0) acc += BigInt(std::min(h, hp)) * src;
                    }
                    next[static_cast<std::size_t>(a)][static_cast<std::size_t>(h)] = acc;
                }
            layer = std::move(next);
        }
        for (int n = 1; n <= N; ++n) {
            BigInt total = 0;
            for (int h = 1; h <= n; ++h) total += layer[static_cast<std::size_t>(n)][static_cast<std::size_t>(h)];
            t.at(k, n) = total;
        }
    }
    return t;
}

// b(k, n) for a single pair.
inline BigCount count_width_area(int k, int n) {
    if (k < 1 || n < 1) throw std::invalid_argument("count_width_area: k, n must be >= 1");
    if (k > n) return 0;
    return width_area_table(k, n).at(k, n);
}

// g(k, n) = number of parallelogram polyominoes with k columns and height n:
// C(k+n-1, k) * C(k+n-1, n) / (k+n-1), the Narayana number N(k+n-1, k).
// The division is checked to be exact.
inline BigCount count_width_height(int k, int n) {
    if (k < 1 || n < 1) throw std::invalid_argument("count_width_height: k, n must be >= 1");
    const std::int64_t m = static_cast<std::int64_t>(k) + n - 1;
    BigInt num = binomial(m, k) * binomial(m, n);
    BigInt q = num / m;
    if (q * m != num) throw std::logic_error("count_width_height: inexact division");
    return q;
}

// Ordinary generating function of k-column counts by height, truncated at
// x^order: G_k(x) = sum_{n>=1} g(k, n) x^n.
inline Series height_series(int k, int order) {
    if (k < 1) throw std::invalid_argument("height_series: k must be >= 1");
    Series s(order);
    for (int n = 1; n <= order; ++n) s[n] = count_width_height(k, n);
    return s;
}

// Numerator polynomial of the closed form G_k(x) = B(x) / (1-x)^(2k-1),
// recovered by multiplying the truncated series by (1-x)^(2k-1) and
// certifying that every coefficient beyond the expected degree vanishes up
// to order 3k. For k >= 2 the result has degree exactly k - 1 with
// coefficients given by a row of the Narayana triangle; for k = 1 it is x.
inline Series height_numerator(int k) {
    if (k < 1) throw std::invalid_argument("height_numerator: k must be >= 1");
    const int order = 3 * k;
    Series product = mul(height_series(k, order), one_minus_x_pow(2 * k - 1, order), order);
    const int expected_degree = std::max(k - 1, 1);
    for (int i = expected_degree + 1; i <= order; ++i)
        if (product[i] != 0)
            throw std::logic_error("height_numerator: series tail does not vanish");
    if (k >= 2 && product[expected_degree] == 0)
        throw std::logic_error("height_numerator: degree below k - 1");
    Series out(expected_degree);
    for (int i = 0; i <= expected_degree; ++i) out[i] = product[i];
    return out;
}

}  // namespace polygram
