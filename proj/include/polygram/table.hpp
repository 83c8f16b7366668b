#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bignum.hpp"

namespace polygram {

// A rectangular table of exact counts indexed (k, n), both 1-based: k is the
// width, n the second parameter of whichever family the table holds. Row
// sums follow the published layout (fixed n, summed over all k), since the
// tables of interest are lower-triangular in that orientation.
struct CountTable {
    std::string name;  // "b", "c", "g", ...
    int max_k = 0;
    int max_n = 0;
    std::vector<std::vector<BigInt>> cells;  // cells[k-1][n-1]
    std::vector<std::string> notes;

    CountTable() = default;
    CountTable(std::string table_name, int k_limit, int n_limit)
        : name(std::move(table_name)), max_k(k_limit), max_n(n_limit) {
        if (k_limit < 1 || n_limit < 1)
            throw std::invalid_argument("CountTable: limits must be >= 1");
        cells.assign(static_cast<std::size_t>(k_limit),
                     std::vector<BigInt>(static_cast<std::size_t>(n_limit), BigInt(0)));
    }

    const BigInt& at(int k, int n) const {
        return cells.at(static_cast<std::size_t>(k) - 1).at(static_cast<std::size_t>(n) - 1);
    }
    BigInt& at(int k, int n) {
        return cells.at(static_cast<std::size_t>(k) - 1).at(static_cast<std::size_t>(n) - 1);
    }

    // Sum over k of the entries at a fixed n.
    BigInt column_total(int n) const {
        BigInt s = 0;
        for (int k = 1; k <= max_k; ++k) s += at(k, n);
        return s;
    }
};

inline bool operator==(const CountTable& a, const CountTable& b) {
    return a.name == b.name && a.max_k == b.max_k && a.max_n == b.max_n &&
           a.cells == b.cells && a.notes == b.notes;
}

// A three-parameter table of exact counts indexed (k, n, m), all 1-based.
struct CountTable3 {
    std::string name;  // "s"
    int max_k = 0;
    int max_n = 0;
    int max_m = 0;
    std::vector<std::vector<std::vector<BigInt>>> cells;  // cells[k-1][n-1][m-1]
    std::vector<std::string> notes;

    CountTable3() = default;
    CountTable3(std::string table_name, int k_limit, int n_limit, int m_limit)
        : name(std::move(table_name)), max_k(k_limit), max_n(n_limit), max_m(m_limit) {
        if (k_limit < 1 || n_limit < 1 || m_limit < 1)
            throw std::invalid_argument("CountTable3: limits must be >= 1");
        cells.assign(
            static_cast<std::size_t>(k_limit),
            std::vector<std::vector<BigInt>>(
                static_cast<std::size_t>(n_limit),
                std::vector<BigInt>(static_cast<std::size_t>(m_limit), BigInt(0))));
    }

    const BigInt& at(int k, int n, int m) const {
        return cells.at(static_cast<std::size_t>(k) - 1)
            .at(static_cast<std::size_t>(n) - 1)
            .at(static_cast<std::size_t>(m) - 1);
    }
    BigInt& at(int k, int n, int m) {
        return cells.at(static_cast<std::size_t>(k) - 1)
            .at(static_cast<std::size_t>(n) - 1)
            .at(static_cast<std::size_t>(m) - 1);
    }
};

inline bool operator==(const CountTable3& a, const CountTable3& b) {
    return a.name == b.name && a.max_k == b.max_k && a.max_n == b.max_n &&
           a.max_m == b.max_m && a.cells == b.cells && a.notes == b.notes;
}

}  // namespace polygram
