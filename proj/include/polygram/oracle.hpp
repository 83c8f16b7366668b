#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bignum.hpp"

// Geometric brute-force enumeration of the objects the counting formulas
// describe, used as an independent cross-check. Everything here works on
// explicit cell profiles and shares no code with the formula layer: validity
// is checked against the geometric definition, and enumeration is a plain
// depth-first search over profiles in increasing size.
namespace polygram::oracle {

inline constexpr int kMaxPolyominoArea = 14;
inline constexpr int kMaxPolycubeVolume = 10;

// A parallelogram polyomino as a column profile: column i occupies cells
// (i, y) for bottom[i] <= y <= top[i]. Normalised so the first column starts
// at y = 0. Both the bottom and the top boundary are nondecreasing left to
// right, and consecutive columns overlap in at least one row, which is
// exactly the staircase condition bottom[i+1] <= top[i].
struct ColumnProfile {
    struct Column {
        int bottom = 0;
        int top = 0;
    };
    std::vector<Column> columns;

    int width() const { return static_cast<int>(columns.size()); }

    long long area() const {
        long long a = 0;
        for (const Column& c : columns) a += c.top - c.bottom + 1;
        return a;
    }

    // Overall height of the bounding box.
    int height() const {
        int top = 0;
        for (const Column& c : columns) top = std::max(top, c.top);
        return top + 1;
    }

    std::vector<int> column_heights() const {
        std::vector<int> h;
        h.reserve(columns.size());
        for (const Column& c : columns) h.push_back(c.top - c.bottom + 1);
        return h;
    }

    bool valid() const {
        if (columns.empty()) return false;
        if (columns.front().bottom != 0) return false;
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (columns[i].top < columns[i].bottom) return false;
            if (i > 0) {
                if (columns[i].bottom < columns[i - 1].bottom) return false;
                if (columns[i].top < columns[i - 1].top) return false;
                if (columns[i].bottom > columns[i - 1].top) return false;  // must share a row
            }
        }
        return true;
    }
};

inline bool operator<(const ColumnProfile::Column& a, const ColumnProfile::Column& b) {
    if (a.bottom != b.bottom) return a.bottom < b.bottom;
    return a.top < b.top;
}
inline bool operator==(const ColumnProfile::Column& a, const ColumnProfile::Column& b) {
    return a.bottom == b.bottom && a.top == b.top;
}
inline bool operator<(const ColumnProfile& a, const ColumnProfile& b) {
    return a.columns < b.columns;
}
inline bool operator==(const ColumnProfile& a, const ColumnProfile& b) {
    return a.columns == b.columns;
}

// Enumerates every parallelogram polyomino of area <= max_area exactly once,
// in increasing lexicographic order of the column list (each column compared
// by (bottom, top)). Depth-first search: each profile is emitted before any
// of its extensions by a further column. The visitor receives a const
// reference to a scratch profile reused between visits.
template <class Visitor>
void enumerate_polyominoes(int max_area, Visitor&& visit, int cap = kMaxPolyominoArea) {
    if (max_area < 1) throw std::invalid_argument("enumerate_polyominoes: max_area must be >= 1");
    if (max_area > cap)
        throw std::invalid_argument("enumerate_polyominoes: max_area exceeds the safety cap");
    ColumnProfile p;
    auto extend = [&](auto&& self, long long area) -> void {
        visit(static_cast<const ColumnProfile&>(p));
        const ColumnProfile::Column last = p.columns.back();
        const long long budget = max_area - area;
        if (budget < 1) return;
        for (int b = last.bottom; b <= last.top; ++b) {
            // top >= last.top keeps the top boundary nondecreasing
            for (int t = std::max(b, last.top); t - b + 1 <= budget; ++t) {
                p.columns.push_back({b, t});
                self(self, area + (t - b + 1));
                p.columns.pop_back();
            }
        }
    };
    for (int t = 0; t < max_area; ++t) {
        p.columns.push_back({0, t});
        extend(extend, t + 1);
        p.columns.pop_back();
    }
}

// A parallelogram polycube as a plateau profile: plateau i occupies cells
// (i, y, z) for bottom[i] <= y <= top[i], front[i] <= z <= back[i].
// Normalised so the first plateau starts at y = 0, z = 0. All four boundary
// sequences are nondecreasing and consecutive plateaus overlap in both the
// y and the z direction.
struct PlateauProfile {
    struct Plateau {
        int bottom = 0;
        int top = 0;
        int front = 0;
        int back = 0;
    };
    std::vector<Plateau> plateaus;

    int width() const { return static_cast<int>(plateaus.size()); }

    long long volume() const {
        long long v = 0;
        for (const Plateau& p : plateaus)
            v += static_cast<long long>(p.top - p.bottom + 1) * (p.back - p.front + 1);
        return v;
    }

    int height() const {
        int top = 0;
        for (const Plateau& p : plateaus) top = std::max(top, p.top);
        return top + 1;
    }

    int depth() const {
        int back = 0;
        for (const Plateau& p : plateaus) back = std::max(back, p.back);
        return back + 1;
    }

    std::vector<int> plateau_volumes() const {
        std::vector<int> v;
        v.reserve(plateaus.size());
        for (const Plateau& p : plateaus) v.push_back((p.top - p.bottom + 1) * (p.back - p.front + 1));
        return v;
    }

    bool valid() const {
        if (plateaus.empty()) return false;
        if (plateaus.front().bottom != 0 || plateaus.front().front != 0) return false;
        for (std::size_t i = 0; i < plateaus.size(); ++i) {
            const Plateau& p = plateaus[i];
            if (p.top < p.bottom || p.back < p.front) return false;
            if (i > 0) {
                const Plateau& q = plateaus[i - 1];
                if (p.bottom < q.bottom || p.top < q.top) return false;
                if (p.front < q.front || p.back < q.back) return false;
                if (p.bottom > q.top || p.front > q.back) return false;  // overlap in y and z
            }
        }
        return true;
    }
};

inline bool operator<(const PlateauProfile::Plateau& a, const PlateauProfile::Plateau& b) {
    if (a.bottom != b.bottom) return a.bottom < b.bottom;
    if (a.top != b.top) return a.top < b.top;
    if (a.front != b.front) return a.front < b.front;
    return a.back < b.back;
}
inline bool operator==(const PlateauProfile::Plateau& a, const PlateauProfile::Plateau& b) {
    return a.bottom == b.bottom && a.top == b.top && a.front == b.front && a.back == b.back;
}
inline bool operator<(const PlateauProfile& a, const PlateauProfile& b) {
    return a.plateaus < b.plateaus;
}
inline bool operator==(const PlateauProfile& a, const PlateauProfile& b) {
    return a.plateaus == b.plateaus;
}

// Enumerates every parallelogram polycube of volume <= max_volume exactly
// once, in increasing lexicographic order of the plateau list (each plateau
// compared by (bottom, top, front, back)), emitting each profile before its
// extensions.
template <class Visitor>
void enumerate_polycubes(int max_volume, Visitor&& visit, int cap = kMaxPolycubeVolume) {
    if (max_volume < 1) throw std::invalid_argument("enumerate_polycubes: max_volume must be >= 1");
    if (max_volume > cap)
        throw std::invalid_argument("enumerate_polycubes: max_volume exceeds the safety cap");
    PlateauProfile p;
    auto extend = [&](auto&& self, long long volume) -> void {
        visit(static_cast<const PlateauProfile&>(p));
        const PlateauProfile::Plateau last = p.plateaus.back();
        const long long budget = max_volume - volume;
        if (budget < 1) return;
        for (int b = last.bottom; b <= last.top; ++b)
            for (int t = std::max(b, last.top); t - b + 1 <= budget; ++t) {
                const long long rows = t - b + 1;
                for (int f = last.front; f <= last.back; ++f)
                    for (int g = std::max(f, last.back); rows * (g - f + 1) <= budget; ++g) {
                        p.plateaus.push_back({b, t, f, g});
                        self(self, volume + rows * (g - f + 1));
                        p.plateaus.pop_back();
                    }
            }
    };
    for (int t = 0; t < max_volume; ++t)
        for (int g = 0; static_cast<long long>(t + 1) * (g + 1) <= max_volume; ++g) {
            p.plateaus.push_back({0, t, 0, g});
            extend(extend, static_cast<long long>(t + 1) * (g + 1));
            p.plateaus.pop_back();
        }
}

// Number of parallelogram polyominoes with exactly k columns that fit a
// k x n bounding box with full height n (top boundary reaches row n - 1,
// bottom starts at row 0). Counts profiles directly, with no area bound, so
// it stays exact where the area-bounded stream would be truncated.
inline BigCount count_box_polyominoes(int k, int n) {
    if (k < 1 || n < 1) throw std::invalid_argument("count_box_polyominoes: k, n must be >= 1");
    auto rec = [&](auto&& self, int col, int b, int t) -> BigInt {
        if (col == k) return (t == n - 1) ? BigInt(1) : BigInt(0);
        BigInt total = 0;
        for (int b2 = b; b2 <= t; ++b2)
            for (int t2 = t; t2 <= n - 1; ++t2) total += self(self, col + 1, b2, t2);
        return total;
    };
    BigInt total = 0;
    for (int t = 0; t <= n - 1; ++t) total += rec(rec, 1, 0, t);
    return total;
}

// Number of parallelogram polycubes with exactly k plateaus that fit a
// k x n x m box with full height n and full depth m.
inline BigCount count_box_polycubes(int k, int n, int m) {
    if (k < 1 || n < 1 || m < 1)
        throw std::invalid_argument("count_box_polycubes: k, n, m must be >= 1");
    auto rec = [&](auto&& self, int col, int b, int t, int f, int g) -> BigInt {
        if (col == k) return (t == n - 1 && g == m - 1) ? BigInt(1) : BigInt(0);
        BigInt total = 0;
        for (int b2 = b; b2 <= t; ++b2)
            for (int t2 = t; t2 <= n - 1; ++t2)
                for (int f2 = f; f2 <= g; ++f2)
                    for (int g2 = g; g2 <= m - 1; ++g2)
                        total += self(self, col + 1, b2, t2, f2, g2);
        return total;
    };
    BigInt total = 0;
    for (int t = 0; t <= n - 1; ++t)
        for (int g = 0; g <= m - 1; ++g) total += rec(rec, 1, 0, t, 0, g);
    return total;
}

// What to key a tally of enumerated profiles by.
enum class Classifier {
    width_area,          // polyominoes: key {k, n}
    width_height,        // polyominoes: key {k, height}
    column_heights,      // polyominoes: key {m_1, ..., m_k}
    width_volume,        // polycubes:   key {k, n}
    width_height_depth,  // polycubes:   key {k, height, depth}
    plateau_volumes,     // polycubes:   key {n_1, ..., n_k}
};

// Tally of all parallelogram polyominoes of area <= max_area under one of
// the polyomino classifiers. Note that keys ignoring the area (width_height,
// column_heights) are only complete where every matching profile fits the
// area bound.
inline std::map<std::vector<int>, BigCount> tally_polyominoes(int max_area, Classifier c,
                                                              int cap = kMaxPolyominoArea) {
    if (c != Classifier::width_area && c != Classifier::width_height &&
        c != Classifier::column_heights)
        throw std::invalid_argument("tally_polyominoes: classifier does not apply to polyominoes");
    std::map<std::vector<int>, BigCount> tally;
    enumerate_polyominoes(
        max_area,
        [&](const ColumnProfile& p) {
            std::vector<int> key;
            switch (c) {
                case Classifier::width_area:
                    key = {p.width(), static_cast<int>(p.area())};
                    break;
                case Classifier::width_height:
                    key = {p.width(), p.height()};
                    break;
                default:
                    key = p.column_heights();
                    break;
            }
            tally[key] += 1;
        },
        cap);
    return tally;
}

// Tally of all parallelogram polycubes of volume <= max_volume under one of
// the polycube classifiers; the same completeness caveat applies to
// width_height_depth and plateau_volumes keys.
inline std::map<std::vector<int>, BigCount> tally_polycubes(int max_volume, Classifier c,
                                                            int cap = kMaxPolycubeVolume) {
    if (c != Classifier::width_volume && c != Classifier::width_height_depth &&
        c != Classifier::plateau_volumes)
        throw std::invalid_argument("tally_polycubes: classifier does not apply to polycubes");
    std::map<std::vector<int>, BigCount> tally;
    enumerate_polycubes(
        max_volume,
        [&](const PlateauProfile& p) {
            std::vector<int> key;
            switch (c) {
                case Classifier::width_volume:
                    key = {p.width(), static_cast<int>(p.volume())};
                    break;
                case Classifier::width_height_depth:
                    key = {p.width(), p.height(), p.depth()};
                    break;
                default:
                    key = p.plateau_volumes();
                    break;
            }
            tally[key] += 1;
        },
        cap);
    return tally;
}

// ASCII rendering of a column profile, rows printed top to bottom, for
// debugging and examples.
inline std::string render_grid(const ColumnProfile& p) {
    if (!p.valid()) throw std::invalid_argument("render_grid: invalid profile");
    std::string out;
    for (int y = p.height() - 1; y >= 0; --y) {
        std::string row;
        for (const ColumnProfile::Column& c : p.columns)
            row += (c.bottom <= y && y <= c.top) ? '#' : ' ';
        while (!row.empty() && row.back() == ' ') row.pop_back();
        out += row;
        out += '\n';
    }
    return out;
}

// ASCII rendering of a plateau profile as one grid per depth slice.
inline std::string render_layers(const PlateauProfile& p) {
    if (!p.valid()) throw std::invalid_argument("render_layers: invalid profile");
    std::string out;
    for (int z = 0; z < p.depth(); ++z) {
        out += "z=" + std::to_string(z) + ":\n";
        for (int y = p.height() - 1; y >= 0; --y) {
            std::string row;
            for (const PlateauProfile::Plateau& q : p.plateaus)
                row += (q.bottom <= y && y <= q.top && q.front <= z && z <= q.back) ? '#' : ' ';
            while (!row.empty() && row.back() == ' ') row.pop_back();
            out += row;
            out += '\n';
        }
    }
    return out;
}

}  // namespace polygram::oracle
