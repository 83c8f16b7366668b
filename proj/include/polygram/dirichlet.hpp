#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "bignum.hpp"
#include "combinatorics.hpp"
#include "polyomino.hpp"

namespace polygram {

// One argument of a multiple zeta function: the linear form
// sum of x_v over `variables` minus `offset`. Variables are 1-based and
// stored in ascending order; the offset is a nonnegative integer.
struct LinearExponent {
    std::vector<int> variables;
    int offset = 0;
};

inline bool operator==(const LinearExponent& a, const LinearExponent& b) {
    return a.variables == b.variables && a.offset == b.offset;
}

// One multiple zeta term zeta_l(e_1, ..., e_l), the sum over strictly
// decreasing positive integer tuples m_1 > m_2 > ... > m_l >= 1 of
// prod_i m_i^{-e_i}. The first argument pairs with the largest summation
// index.
struct ZetaTerm {
    std::vector<LinearExponent> arguments;
    int depth() const { return static_cast<int>(arguments.size()); }
};

inline bool operator==(const ZetaTerm& a, const ZetaTerm& b) {
    return a.arguments == b.arguments;
}

// The Dirichlet generating function of width-k column-height tuples,
// expanded as a finite sum of multiple zeta terms, one per ordered set
// partition of {1, ..., k}, in the canonical partition order.
struct ZetaExpansion {
    int width = 0;
    std::vector<ZetaTerm> terms;
};

// Builds the zeta term attached to one ordered set partition S of
// {1, ..., k}. Block i of S collects the positions holding the i-th
// largest value in a monotone-pattern tuple; its argument is the sum of
// x_j over the block minus an offset counting, for each position in the
// block, whether its left neighbour sits in a strictly earlier block and
// whether its right neighbour sits in an earlier-or-same block. Across the
// whole partition each adjacent pair of positions fires exactly one of the
// two rules, so the offsets always total k - 1.
inline ZetaTerm zeta_term_from_partition(const OrderedSetPartition& S, int k) {
    if (S.ground_size != k)
        throw std::invalid_argument("zeta_term_from_partition: ground size mismatch");
    const std::vector<int> block_of = S.block_index();  // validates coverage
    ZetaTerm term;
    term.arguments.reserve(S.blocks.size());
    int total_offset = 0;
    for (std::size_t bi = 0; bi < S.blocks.size(); ++bi) {
        LinearExponent arg;
        arg.variables = S.blocks[bi];
        std::sort(arg.variables.begin(), arg.variables.end());
        int off = 0;
        for (int e : arg.variables) {
            if (e > 1 && block_of[static_cast<std::size_t>(e - 1)] < static_cast<int>(bi)) ++off;
            if (e < k && block_of[static_cast<std::size_t>(e + 1)] <= static_cast<int>(bi)) ++off;
        }
        arg.offset = off;
        total_offset += off;
        term.arguments.push_back(std::move(arg));
    }
    if (total_offset != k - 1)
        throw std::logic_error("zeta_term_from_partition: offsets do not total k - 1");
    return term;
}

inline constexpr int kDefaultExpansionCap = 8;

// Expands the width-k Dirichlet generating function into its multiple zeta
// terms: one term per ordered set partition of {1, ..., k}, so the term
// count is the Fubini number of k. Terms appear in the canonical order of
// for_each_ordered_set_partition. The width is capped because the term
// count grows like the Fubini numbers.
inline ZetaExpansion dgf_expansion(int k, int cap = kDefaultExpansionCap) {
    if (k < 1) throw std::invalid_argument("dgf_expansion: k must be >= 1");
    if (k > cap)
        throw std::invalid_argument("dgf_expansion: width " + std::to_string(k) +
                                    " exceeds the cap of " + std::to_string(cap) +
                                    " (the term count is the Fubini number of the width)");
    ZetaExpansion exp;
    exp.width = k;
    for_each_ordered_set_partition(
        k, [&](const OrderedSetPartition& p) { exp.terms.push_back(zeta_term_from_partition(p, k)); });
    return exp;
}

// "x1+x3-2" style rendering of a linear form.
inline std::string render(const LinearExponent& e) {
    std::string out;
    for (std::size_t i = 0; i < e.variables.size(); ++i) {
        if (i > 0) out += '+';
        out += 'x';
        out += std::to_string(e.variables[i]);
    }
    if (e.offset != 0) {
        out += '-';
        out += std::to_string(e.offset);
    }
    return out;
}

// "zeta(x1, x2-1)" style rendering of one term.
inline std::string render(const ZetaTerm& t) {
    std::string out = "zeta(";
    for (std::size_t i = 0; i < t.arguments.size(); ++i) {
        if (i > 0) out += ", ";
        out += render(t.arguments[i]);
    }
    out += ')';
    return out;
}

// Terms joined with " + ".
inline std::string render(const ZetaExpansion& e) {
    std::string out;
    for (std::size_t i = 0; i < e.terms.size(); ++i) {
        if (i > 0) out += " + ";
        out += render(e.terms[i]);
    }
    return out;
}

namespace detail {

// base^(-e) as an exact rational, for base >= 1.
inline Rational reciprocal_power(std::int64_t base, std::int64_t e) {
    if (base < 1) throw std::invalid_argument("reciprocal_power: base must be >= 1");
    if (base == 1 || e == 0) return Rational(1);
    BigInt p = int_pow(BigInt(base), static_cast<unsigned>(e >= 0 ? e : -e));
    return e >= 0 ? Rational(BigInt(1), p) : Rational(p);
}

}  // namespace detail

// Truncation of the width-k Dirichlet generating function at summation
// limit N: the sum over all tuples (n_1, ..., n_k) in {1..N}^k of
// prod_j min(n_j, n_{j+1}) / prod_j n_j^{x_j}, evaluated exactly.
inline Rational truncated_dgf(int k, const std::vector<std::int64_t>& exponents, int limit) {
    if (k < 1) throw std::invalid_argument("truncated_dgf: k must be >= 1");
    if (limit < 1) throw std::invalid_argument("truncated_dgf: limit must be >= 1");
    if (static_cast<int>(exponents.size()) != k)
        throw std::invalid_argument("truncated_dgf: exponent count must equal the width");
    Rational sum = 0;
    auto rec = [&](auto&& self, int pos, int prev, const Rational& running) -> void {
        if (pos == k) {
            sum += running;
            return;
        }
        for (int v = 1; v <= limit; ++v) {
            Rational r = running * detail::reciprocal_power(v, exponents[static_cast<std::size_t>(pos)]);
            if (pos > 0) r *= std::min(prev, v);
            self(self, pos + 1, v, r);
        }
    };
    rec(rec, 0, 0, Rational(1));
    return sum;
}

// Truncation of one multiple zeta term at summation limit N: the sum over
// strictly decreasing tuples N >= m_1 > ... > m_l >= 1 of
// prod_i m_i^{-c_i}, where c_i is the term's i-th linear form evaluated at
// the given exponents. Empty when the depth exceeds N.
inline Rational truncated_zeta_term(const ZetaTerm& term, const std::vector<std::int64_t>& exponents,
                                    int limit) {
    if (limit < 1) throw std::invalid_argument("truncated_zeta_term: limit must be >= 1");
    const int l = term.depth();
    std::vector<std::int64_t> c(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) {
        const LinearExponent& arg = term.arguments[static_cast<std::size_t>(i)];
        std::int64_t e = -static_cast<std::int64_t>(arg.offset);
        for (int v : arg.variables) {
            if (v < 1 || v > static_cast<int>(exponents.size()))
                throw std::invalid_argument("truncated_zeta_term: variable out of range");
            e += exponents[static_cast<std::size_t>(v - 1)];
        }
        c[static_cast<std::size_t>(i)] = e;
    }
    Rational sum = 0;
    auto rec = [&](auto&& self, int pos, int upper, const Rational& running) -> void {
        if (pos == l) {
            sum += running;
            return;
        }
        for (int v = upper; v >= l - pos; --v)
            self(self, pos + 1, v - 1, running * detail::reciprocal_power(v, c[static_cast<std::size_t>(pos)]));
    };
    rec(rec, 0, limit, Rational(1));
    return sum;
}

// Exact comparison of the truncated Dirichlet generating function against
// the truncated sum of its zeta terms, at one exponent vector and one
// summation limit. The two truncations agree exactly for every limit
// because the ordered set partitions tile {1..N}^k by monotone pattern.
struct ExpansionCheck {
    bool ok = false;
    Rational direct;
    Rational expanded_total;
    std::vector<Rational> term_values;  // parallel to the expansion's terms
};

inline ExpansionCheck verify_expansion(int k, const std::vector<std::int64_t>& exponents, int limit,
                                       int cap = kDefaultExpansionCap) {
    const ZetaExpansion exp = dgf_expansion(k, cap);
    ExpansionCheck check;
    check.direct = truncated_dgf(k, exponents, limit);
    check.expanded_total = 0;
    check.term_values.reserve(exp.terms.size());
    for (const ZetaTerm& t : exp.terms) {
        Rational v = truncated_zeta_term(t, exponents, limit);
        check.expanded_total += v;
        check.term_values.push_back(std::move(v));
    }
    check.ok = (check.direct == check.expanded_total);
    return check;
}

inline constexpr int kDefaultDimensionCap = 6;

// Coefficient of the (d-1)-st Dirichlet power: the number of
// d-dimensional parallelogram polyhypercubes whose hyperplateau volumes are
// exactly the given tuple. Computed as the (d-1)-fold coordinatewise
// Dirichlet self-convolution of the fixed-column-height counts; d = 2
// recovers count_fixed_columns itself.
inline BigCount dirichlet_power_coefficient(const std::vector<int>& volumes, int dimension,
                                            int cap = kDefaultDimensionCap) {
    validate_heights(volumes);
    if (dimension < 2)
        throw std::invalid_argument("dirichlet_power_coefficient: dimension must be >= 2");
    if (dimension > cap)
        throw std::invalid_argument("dirichlet_power_coefficient: dimension " +
                                    std::to_string(dimension) + " exceeds the cap of " +
                                    std::to_string(cap));
    auto conv = [](auto&& self, const std::vector<int>& tuple, int e) -> BigInt {
        if (e == 1) return count_fixed_columns(tuple);
        const std::size_t k = tuple.size();
        std::vector<std::vector<std::int64_t>> divs(k);
        for (std::size_t i = 0; i < k; ++i) divs[i] = divisors(tuple[i]);
        std::vector<int> v(k), rest(k);
        BigInt total = 0;
        auto odometer = [&](auto&& inner, std::size_t pos) -> void {
            if (pos == k) {
                total += count_fixed_columns(v) * self(self, rest, e - 1);
                return;
            }
            for (std::int64_t d : divs[pos]) {
                v[pos] = static_cast<int>(d);
                rest[pos] = tuple[pos] / static_cast<int>(d);
                inner(inner, pos + 1);
            }
        };
        odometer(odometer, 0);
        return total;
    };
    return conv(conv, volumes, dimension - 1);
}

}  // namespace polygram
