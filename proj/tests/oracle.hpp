// Brute-force reference computations for the test suites.
//
// Nothing here calls the library's diagram calculus or the restriction
// dynamic program: diagrams are explicit cell sets, validity is checked
// cell by cell, and torus restrictions enumerate every position subset of
// the reduced word.
#pragma once

#include "ogmirror/polynomial.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using Cell = std::pair<int, int>;  // (row, col), 1-based
using CellSet = std::set<Cell>;

inline int cell_label(int n, int r, int c) {
    if (c < r) return n - r + c;
    return (r % 2 == 1) ? n + 1 : n;
}

inline std::vector<Cell> staircase_cells(int n) {
    std::vector<Cell> cells;
    for (int r = 1; r <= n; ++r) {
        for (int c = 1; c <= r; ++c) cells.emplace_back(r, c);
    }
    return cells;
}

// No empty cell of the staircase directly above or to the left of any box.
inline bool valid_cells(int n, const CellSet& s) {
    for (auto [r, c] : s) {
        if (c > 1 && !s.count({r, c - 1})) return false;
        if (r > 1 && c <= r - 1 && !s.count({r - 1, c})) return false;
        if (c > r || r > n) return false;
    }
    return true;
}

inline std::vector<int> rows_of(int n, const CellSet& s) {
    std::vector<int> rows(static_cast<std::size_t>(n), 0);
    for (auto [r, c] : s) rows[r - 1] = std::max(rows[r - 1], c);
    return rows;
}

// Every subset of the staircase that passes the validity test.
inline std::vector<std::vector<int>> all_valid_row_vectors(int n) {
    const auto cells = staircase_cells(n);
    std::vector<std::vector<int>> out;
    const std::size_t total = std::size_t{1} << cells.size();
    for (std::size_t mask = 0; mask < total; ++mask) {
        CellSet s;
        for (std::size_t k = 0; k < cells.size(); ++k) {
            if (mask >> k & 1) s.insert(cells[k]);
        }
        if (valid_cells(n, s)) out.push_back(rows_of(n, s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct Edge {
    std::vector<int> from;
    std::vector<int> to;
    int label;
    auto operator<=>(const Edge&) const = default;
};

// Pairs of valid cell sets differing by exactly one cell.
inline std::vector<Edge> all_cover_edges(int n) {
    const auto cells = staircase_cells(n);
    std::vector<Edge> out;
    const std::size_t total = std::size_t{1} << cells.size();
    for (std::size_t mask = 0; mask < total; ++mask) {
        CellSet s;
        for (std::size_t k = 0; k < cells.size(); ++k) {
            if (mask >> k & 1) s.insert(cells[k]);
        }
        if (!valid_cells(n, s)) continue;
        for (const auto& cell : cells) {
            if (s.count(cell)) continue;
            CellSet t = s;
            t.insert(cell);
            if (valid_cells(n, t)) {
                out.push_back({rows_of(n, s), rows_of(n, t), cell_label(n, cell.first, cell.second)});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Reading order of the staircase: (label, column) per step.
inline std::vector<std::pair<int, int>> word(int n) {
    std::vector<std::pair<int, int>> w;
    for (auto [r, c] : staircase_cells(n)) w.emplace_back(cell_label(n, r, c), c);
    return w;
}

// Restrictions of every p_tau at once by enumerating every position subset
// of the reduced word whose labels, added one at a time from the empty
// diagram, stay valid. Each subset lands on the diagram it builds.
inline std::map<std::vector<int>, ogmirror::Polynomial> restrictions_by_subsets(int n) {
    const auto w = word(n);
    const auto cells = staircase_cells(n);
    std::map<std::vector<int>, ogmirror::Polynomial> out;
    const std::size_t total = std::size_t{1} << w.size();
    for (std::size_t mask = 0; mask < total; ++mask) {
        CellSet s;
        bool ok = true;
        ogmirror::Monomial m;
        for (std::size_t t = 0; t < w.size(); ++t) {
            if (!(mask >> t & 1)) continue;
            const int lab = w[t].first;
            std::vector<Cell> options;
            for (const auto& cell : cells) {
                if (s.count(cell) || cell_label(n, cell.first, cell.second) != lab) continue;
                CellSet bigger = s;
                bigger.insert(cell);
                if (valid_cells(n, bigger)) options.push_back(cell);
            }
            if (options.empty()) {
                ok = false;
                break;
            }
            if (options.size() > 1) throw std::logic_error("ambiguous addition in oracle");
            s.insert(options.front());
            m = m * ogmirror::Monomial(ogmirror::Variable::torus(w[t].first, w[t].second));
        }
        if (ok) out[rows_of(n, s)].add_term(m, 1);
    }
    return out;
}

}  // namespace oracle
