#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bignum.hpp"
#include "combinatorics.hpp"
#include "dirichlet.hpp"
#include "polyomino.hpp"

namespace polygram {

// A d-dimensional box profile for parallelogram polyhypercubes: width k
// along the distinguished axis and one bounding height per remaining axis.
struct HyperBoxSpec {
    int dimension = 0;            // d >= 2
    int width = 0;                // k >= 1
    std::vector<int> heights;     // d - 1 entries, all >= 1
};

inline void validate(const HyperBoxSpec& spec, int cap = kDefaultDimensionCap) {
    if (spec.dimension < 2) throw std::invalid_argument("hyper box: dimension must be >= 2");
    if (spec.dimension > cap)
        throw std::invalid_argument("hyper box: dimension " + std::to_string(spec.dimension) +
                                    " exceeds the cap of " + std::to_string(cap));
    if (spec.width < 1) throw std::invalid_argument("hyper box: width must be >= 1");
    if (static_cast<int>(spec.heights.size()) != spec.dimension - 1)
        throw std::invalid_argument("hyper box: expected dimension - 1 heights");
    for (int h : spec.heights)
        if (h < 1) throw std::invalid_argument("hyper box: heights must be >= 1");
}

// Number of d-dimensional parallelogram polyhypercubes with k hyperplateaus
// and the given per-axis heights: the transverse axes decouple, so the count
// is the product over axes of the width-k height-n polyomino count.
inline BigCount count_hyper(const HyperBoxSpec& spec, int cap = kDefaultDimensionCap) {
    validate(spec, cap);
    BigInt total = 1;
    for (int n : spec.heights) total *= count_width_height(spec.width, n);
    return total;
}

// The same count evaluated as a single closed form,
//
//   (1 / k^(d-1)) * prod_i [ n_i / (n_i + k - 1) * C(n_i + k - 1, k - 1)^2 ],
//
// as one exact division of an integer numerator by an integer denominator,
// with the divisibility asserted. Used to cross-check count_hyper.
inline BigCount count_hyper_closed_form(const HyperBoxSpec& spec, int cap = kDefaultDimensionCap) {
    validate(spec, cap);
    const int k = spec.width;
    BigInt num = 1;
    BigInt den = int_pow(BigInt(k), static_cast<unsigned>(spec.dimension - 1));
    for (int n : spec.heights) {
        const std::int64_t nk = static_cast<std::int64_t>(n) + k - 1;
        BigInt b = binomial(nk, k - 1);
        num *= BigInt(n) * b * b;
        den *= nk;
    }
    BigInt q = num / den;
    if (q * den != num) throw std::logic_error("count_hyper_closed_form: inexact division");
    return q;
}

// Number of d-dimensional parallelogram polyhypercubes whose hyperplateau
// volumes are exactly the given tuple: the (d-1)-st Dirichlet power
// coefficient of the fixed-column-height counts.
inline BigCount count_hyper_fixed_volumes(int dimension, const std::vector<int>& volumes,
                                          int cap = kDefaultDimensionCap) {
    return dirichlet_power_coefficient(volumes, dimension, cap);
}

}  // namespace polygram
