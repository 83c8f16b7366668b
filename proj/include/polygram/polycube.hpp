#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bignum.hpp"
#include "combinatorics.hpp"
#include "polyomino.hpp"
#include "series.hpp"
#include "table.hpp"

namespace polygram {

// The cross-section of one plateau of a parallelogram polycube: an h x w
// rectangle of cells at a fixed x.
struct PlateauShape {
    int height = 0;
    int depth = 0;
    int volume() const { return height * depth; }
};

inline bool operator==(const PlateauShape& a, const PlateauShape& b) {
    return a.height == b.height && a.depth == b.depth;
}

// All rectangle shapes with volume <= max_volume, collected sieve-style
// (every height, paired with every depth the budget allows) and sorted by
// (volume, height). The number of shapes with volume exactly n is tau(n).
inline std::vector<PlateauShape> plateau_shapes(int max_volume) {
    if (max_volume < 1) throw std::invalid_argument("plateau_shapes: max_volume must be >= 1");
    std::vector<PlateauShape> shapes;
    for (int h = 1; h <= max_volume; ++h)
        for (int w = 1; h * w <= max_volume; ++w) shapes.push_back({h, w});
    std::sort(shapes.begin(), shapes.end(), [](const PlateauShape& a, const PlateauShape& b) {
        if (a.volume() != b.volume()) return a.volume() < b.volume();
        return a.height < b.height;
    });
    return shapes;
}

// Number of parallelogram polycubes whose plateau volumes are exactly the
// given sequence n_1, ..., n_k: each plateau independently factors as
// height x depth, and adjacent plateaus contribute the product of the
// admissible offsets in the two transverse directions,
// min(h_i, h_{i+1}) * min(w_i, w_{i+1}). For a single plateau this reduces
// to tau(n_1).
inline BigCount count_fixed_plateaus(const std::vector<int>& volumes) {
    validate_heights(volumes);  // same domain: nonempty, all entries >= 1
    const std::size_t k = volumes.size();
    auto rec = [&](auto&& self, std::size_t i, int ph, int pw) -> BigInt {
        if (i == k) return 1;
        BigInt total = 0;
        for (std::int64_t h : divisors(volumes[i])) {
            const int hh = static_cast<int>(h);
            const int ww = volumes[i] / hh;
            BigInt weight = BigInt(std::min(ph, hh)) * std::min(pw, ww);
            if (weight != 0) total += weight * self(self, i + 1, hh, ww);
        }
        return total;
    };
    BigInt total = 0;
    for (std::int64_t h : divisors(volumes[0])) {
        const int hh = static_cast<int>(h);
        total += rec(rec, 1, hh, volumes[0] / hh);
    }
    return total;
}

// Full table of c(k, n) = number of parallelogram polycubes with exactly k
// plateaus and volume n, for 1 <= k <= max_width, 1 <= n <= max_volume.
//
// Same layered dynamic programming as the polyomino area table, except the
// state keeps the full shape (height, depth) of the last plateau rather than
// a single height, and the attachment weight is the product of the two
// transverse min factors.
inline CountTable width_volume_table(int max_width, int max_volume) {
    if (max_width < 1 || max_volume < 1)
        throw std::invalid_argument("width_volume_table: limits must be >= 1");
    CountTable t("c", max_width, max_volume);
    const std::vector<PlateauShape> shapes = plateau_shapes(max_volume);
    const std::size_t S = shapes.size();
    const int N = max_volume;
    // layer[a][s]: partial profiles with volume a whose last plateau has shape s
    std::vector<std::vector<BigInt>> layer(static_cast<std::size_t>(N) + 1,
                                           std::vector<BigInt>(S));
    for (std::size_t s = 0; s < S; ++s) layer[static_cast<std::size_t>(shapes[s].volume())][s] = 1;
    for (int k = 1; k <= max_width; ++k) {
        if (k > 1) {
            std::vector<std::vector<BigInt>> next(static_cast<std::size_t>(N) + 1,
                                                  std::vector<BigInt>(S));
            for (std::size_t s = 0; s < S; ++s) {
                const int vol = shapes[s].volume();
                for (int a = vol + 1; a <= N; ++a) {
                    BigInt acc = 0;
                    for (std::size_t sp = 0; sp < S; ++sp) {
                        const BigInt& src = layer[static_cast<std::size_t>(a - vol)][sp];
                        if (src == 0) continue;
                        acc += BigInt(std::min(shapes[sp].height, shapes[s].height) *
                                      std::min(shapes[sp].depth, shapes[s].depth)) *
                               src;
                    }
                    next[static_cast<std::size_t>(a)][s] = acc;
                }
            }
            layer = std::move(next);
        }
        for (int n = 1; n <= N; ++n) {
            BigInt total = 0;
            for (std::size_t s = 0; s < S; ++s) total += layer[static_cast<std::size_t>(n)][s];
            t.at(k, n) = total;
        }
    }
    return t;
}

// c(k, n) for a single pair.
inline BigCount count_width_volume(int k, int n) {
    if (k < 1 || n < 1) throw std::invalid_argument("count_width_volume: k, n must be >= 1");
    if (k > n) return 0;
    return width_volume_table(k, n).at(k, n);
}

// s(k, n, m) = number of parallelogram polycubes with k plateaus, height n
// and depth m:
//
//   n * m / (k^2 (n+k-1) (m+k-1)) * C(n+k-1, k-1)^2 * C(m+k-1, k-1)^2
//
// evaluated as one exact division of the integer numerator by the integer
// denominator, with the divisibility asserted. Equals
// count_width_height(k, n) * count_width_height(k, m), which is how the
// height and depth directions decouple.
inline BigCount count_width_height_depth(int k, int n, int m) {
    if (k < 1 || n < 1 || m < 1)
        throw std::invalid_argument("count_width_height_depth: k, n, m must be >= 1");
    const std::int64_t nk = static_cast<std::int64_t>(n) + k - 1;
    const std::int64_t mk = static_cast<std::int64_t>(m) + k - 1;
    BigInt bn = binomial(nk, k - 1);
    BigInt bm = binomial(mk, k - 1);
    BigInt num = BigInt(n) * m * bn * bn * bm * bm;
    BigInt den = BigInt(k) * k * nk * mk;
    BigInt q = num / den;
    if (q * den != num) throw std::logic_error("count_width_height_depth: inexact division");
    return q;
}

// Bivariate generating function of k-plateau counts by (height, depth),
// truncated at x^order_x y^order_y:
// S_k(x, y) = sum_{n,m>=1} s(k, n, m) x^n y^m = G_k(x) G_k(y).
inline BivariateSeries height_depth_series(int k, int order_x, int order_y) {
    if (k < 1) throw std::invalid_argument("height_depth_series: k must be >= 1");
    return BivariateSeries::outer(height_series(k, order_x), height_series(k, order_y));
}

}  // namespace polygram
