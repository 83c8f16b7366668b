#pragma once

#include <stdexcept>
#include <vector>

#include "bignum.hpp"
#include "combinatorics.hpp"

namespace polygram {

// Formal power series in one variable, truncated at a fixed order, with
// exact integer coefficients. coeff[i] is the coefficient of x^i.
struct Series {
    std::vector<BigInt> coeff;

    Series() : coeff(1) {}
    explicit Series(int order) {
        if (order < 0) throw std::invalid_argument("Series: negative order");
        coeff.assign(static_cast<std::size_t>(order) + 1, BigInt(0));
    }

    int order() const { return static_cast<int>(coeff.size()) - 1; }

    const BigInt& operator[](int i) const { return coeff.at(static_cast<std::size_t>(i)); }
    BigInt& operator[](int i) { return coeff.at(static_cast<std::size_t>(i)); }

    // Largest index with a nonzero coefficient, or -1 for the zero series.
    int degree() const {
        for (int i = order(); i >= 0; --i)
            if (coeff[static_cast<std::size_t>(i)] != 0) return i;
        return -1;
    }
};

inline bool operator==(const Series& a, const Series& b) { return a.coeff == b.coeff; }

// Product of two truncated series, itself truncated at `order`.
inline Series mul(const Series& a, const Series& b, int order) {
    Series out(order);
    for (int i = 0; i <= a.order() && i <= order; ++i) {
        if (a[i] == 0) continue;
        const int jmax = std::min(b.order(), order - i);
        for (int j = 0; j <= jmax; ++j) {
            if (b[j] == 0) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// (1 - x)^e truncated at `order`, for e >= 0.
inline Series one_minus_x_pow(int e, int order) {
    if (e < 0) throw std::invalid_argument("one_minus_x_pow: negative exponent");
    Series out(order);
    for (int i = 0; i <= std::min(e, order); ++i) {
        BigInt c = binomial(e, i);
        out[i] = (i % 2 == 0) ? c : -c;
    }
    return out;
}

// Formal power series in two variables, truncated independently in each,
// with exact integer coefficients. coeff[i][j] is the coefficient of
// x^i y^j.
struct BivariateSeries {
    std::vector<std::vector<BigInt>> coeff;

    BivariateSeries() : coeff(1, std::vector<BigInt>(1)) {}
    BivariateSeries(int order_x, int order_y) {
        if (order_x < 0 || order_y < 0)
            throw std::invalid_argument("BivariateSeries: negative order");
        coeff.assign(static_cast<std::size_t>(order_x) + 1,
                     std::vector<BigInt>(static_cast<std::size_t>(order_y) + 1, BigInt(0)));
    }

    int order_x() const { return static_cast<int>(coeff.size()) - 1; }
    int order_y() const { return static_cast<int>(coeff.front().size()) - 1; }

    const BigInt& at(int i, int j) const {
        return coeff.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j));
    }
    BigInt& at(int i, int j) {
        return coeff.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j));
    }

    // The product a(x) * b(y) of two univariate series read in distinct
    // variables.
    static BivariateSeries outer(const Series& a, const Series& b) {
        BivariateSeries out(a.order(), b.order());
        for (int i = 0; i <= a.order(); ++i)
            for (int j = 0; j <= b.order(); ++j) out.at(i, j) = a[i] * b[j];
        return out;
    }
};

inline bool operator==(const BivariateSeries& a, const BivariateSeries& b) {
    return a.coeff == b.coeff;
}

}  // namespace polygram
