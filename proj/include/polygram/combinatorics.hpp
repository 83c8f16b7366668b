#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bignum.hpp"

namespace polygram {

// Binomial coefficient C(n, k), exact. Returns 0 for k > n; rejects negative
// arguments. Computed by the multiplicative ladder, where every intermediate
// division is exact because the running value is itself a binomial
// coefficient.
inline BigCount binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0) throw std::invalid_argument("binomial: negative argument");
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

// All divisors of n in ascending order (trial division up to sqrt(n)).
// The returned length is tau(n). Rejects n < 1.
inline std::vector<std::int64_t> divisors(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("divisors: n must be >= 1");
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline std::int64_t divisor_count(std::int64_t n) {
    return static_cast<std::int64_t>(divisors(n).size());
}

// Visits every composition of n into exactly k positive parts, in
// lexicographic order on the part vector. Visits nothing when k > n,
// k < 1, or n < 1. The visitor receives a const reference to a scratch
// vector that is reused between visits.
template <class Visitor>
void for_each_composition(int n, int k, Visitor&& visit) {
    if (n < 1 || k < 1 || k > n) return;
    std::vector<int> parts(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == k - 1) {
            parts[static_cast<std::size_t>(pos)] = remaining;
            visit(static_cast<const std::vector<int>&>(parts));
            return;
        }
        const int slack = remaining - (k - 1 - pos);
        for (int v = 1; v <= slack; ++v) {
            parts[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, n);
}

inline std::vector<std::vector<int>> compositions(int n, int k) {
    std::vector<std::vector<int>> out;
    for_each_composition(n, k, [&](const std::vector<int>& parts) { out.push_back(parts); });
    return out;
}

// An ordered set partition of {1, ..., ground_size}: a sequence of disjoint
// nonempty blocks whose union is the whole ground set. Blocks are stored as
// ascending element lists; the sequence order of blocks is significant.
struct OrderedSetPartition {
    std::vector<std::vector<int>> blocks;
    int ground_size = 0;

    int block_count() const { return static_cast<int>(blocks.size()); }

    // Index of the block containing each element (slot 0 unused).
    // Throws if the blocks do not exactly cover {1, ..., ground_size}.
    std::vector<int> block_index() const {
        std::vector<int> idx(static_cast<std::size_t>(ground_size) + 1, -1);
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            if (blocks[b].empty()) throw std::invalid_argument("ordered set partition: empty block");
            for (int e : blocks[b]) {
                if (e < 1 || e > ground_size)
                    throw std::invalid_argument("ordered set partition: element out of range");
                if (idx[static_cast<std::size_t>(e)] != -1)
                    throw std::invalid_argument("ordered set partition: duplicate element");
                idx[static_cast<std::size_t>(e)] = static_cast<int>(b);
            }
        }
        for (int e = 1; e <= ground_size; ++e)
            if (idx[static_cast<std::size_t>(e)] == -1)
                throw std::invalid_argument("ordered set partition: element missing");
        return idx;
    }
};

inline bool operator==(const OrderedSetPartition& a, const OrderedSetPartition& b) {
    return a.ground_size == b.ground_size && a.blocks == b.blocks;
}

namespace detail {

template <class Visitor>
void osp_blocks(const std::vector<int>& remaining, int blocks_left,
                OrderedSetPartition& partial, Visitor& visit) {
    if (blocks_left == 1) {
        partial.blocks.push_back(remaining);
        visit(static_cast<const OrderedSetPartition&>(partial));
        partial.blocks.pop_back();
        return;
    }
    // Choose the next block as a nonempty subset of `remaining` in subset-lex
    // order ({1} before {1,2} before {1,3} before {2}), leaving at least
    // blocks_left - 1 elements for the blocks after it.
    std::vector<int> chosen;
    std::vector<char> used(remaining.size(), 0);
    auto rec = [&](auto&& self, std::size_t start) -> void {
        for (std::size_t i = start; i < remaining.size(); ++i) {
            chosen.push_back(remaining[i]);
            used[i] = 1;
            if (remaining.size() - chosen.size() >= static_cast<std::size_t>(blocks_left - 1)) {
                partial.blocks.push_back(chosen);
                std::vector<int> rest;
                rest.reserve(remaining.size() - chosen.size());
                for (std::size_t j = 0; j < remaining.size(); ++j)
                    if (!used[j]) rest.push_back(remaining[j]);
                osp_blocks(rest, blocks_left - 1, partial, visit);
                partial.blocks.pop_back();
            }
            self(self, i + 1);
            chosen.pop_back();
            used[i] = 0;
        }
    };
    rec(rec, 0);
}

}  // namespace detail

// Visits every ordered set partition of {1, ..., k} exactly once, in the
// canonical order used throughout this library: partitions with more blocks
// first (so the all-singletons partitions lead and the single-block partition
// comes last), and among partitions with the same number of blocks,
// lexicographic on the block sequence with each block read as its ascending
// element list. The order is total, stable, and documented here once; the
// symbolic expansion layer relies on it. The visitor receives a const
// reference to a scratch partition that is reused between visits.
template <class Visitor>
void for_each_ordered_set_partition(int k, Visitor&& visit) {
    if (k < 1) throw std::invalid_argument("ordered set partitions: k must be >= 1");
    std::vector<int> ground(static_cast<std::size_t>(k));
    std::iota(ground.begin(), ground.end(), 1);
    OrderedSetPartition partial;
    partial.ground_size = k;
    for (int blocks = k; blocks >= 1; --blocks)
        detail::osp_blocks(ground, blocks, partial, visit);
}

inline std::vector<OrderedSetPartition> ordered_set_partitions(int k) {
    std::vector<OrderedSetPartition> out;
    for_each_ordered_set_partition(k, [&](const OrderedSetPartition& p) { out.push_back(p); });
    return out;
}

// Fubini number (ordered Bell number): the number of ordered set partitions
// of a k-element set. F(0) = 1; F(k) = sum_{j=1}^{k} C(k, j) F(k - j).
inline BigCount fubini(int k) {
    if (k < 0) throw std::invalid_argument("fubini: k must be >= 0");
    std::vector<BigInt> f(static_cast<std::size_t>(k) + 1);
    f[0] = 1;
    for (int m = 1; m <= k; ++m) {
        BigInt total = 0;
        for (int j = 1; j <= m; ++j) total += binomial(m, j) * f[static_cast<std::size_t>(m - j)];
        f[static_cast<std::size_t>(m)] = total;
    }
    return f[static_cast<std::size_t>(k)];
}

}  // namespace polygram
