/**
 * @file diagram.hpp
 * @brief Young diagrams for the spin representation of type D_{n+1}.
 *
 * A diagram is a subset of the flipped staircase mu_n = (1, 2, ..., n),
 * stored as the vector of row lengths (c_1, ..., c_n), top row first.
 * A diagram is valid when no box has an empty cell of mu_n above it or to
 * its left; these are exactly the order filters of the minuscule poset, so
 * there are 2^n of them.
 *
 * Every cell of mu_n carries a label in 1..n+1: the cell (r, c) with c < r
 * gets n - r + c, and the diagonal cells (r, r) alternate n+1 (odd r) and
 * n (even r). Boxes are added and removed one label at a time.
 */
#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ogmirror {

/// Raised when a uniqueness property of the minuscule calculus fails.
/// Seeing one means either a bug or a counterexample to a theorem.
class StructuralFault : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Raised for text that cannot be read as a diagram at all.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised for row vectors that parse but violate the validity rule.
class InvalidDiagram : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The rank parameter n of OG(n+1, 2n+2).
class Rank {
public:
    explicit Rank(int n) : n_(n) {
        if (n < 2) {
            throw std::out_of_range("rank must satisfy n >= 2, got " + std::to_string(n));
        }
    }

    [[nodiscard]] int value() const noexcept { return n_; }
    /// Number of boxes of the staircase mu_n.
    [[nodiscard]] int staircase_size() const noexcept { return n_ * (n_ + 1) / 2; }
    [[nodiscard]] int max_label() const noexcept { return n_ + 1; }

    friend bool operator==(Rank, Rank) = default;

private:
    int n_;
};

/// Total validity check on a (possibly truncated) row-length vector.
[[nodiscard]] inline bool is_valid(std::span<const int> rows, Rank rank) {
    const int n = rank.value();
    if (rows.size() > static_cast<std::size_t>(n)) {
        return false;
    }
    int prev = 0;
    for (int r = 1; r <= n; ++r) {
        const int c = r <= static_cast<int>(rows.size()) ? rows[r - 1] : 0;
        if (c < 0 || c > r) {
            return false;
        }
        if (r >= 2 && prev < std::min(c, r - 1)) {
            return false;
        }
        prev = c;
    }
    return true;
}

class Diagram {
public:
    /// The empty diagram for the given rank.
    explicit Diagram(Rank rank) : rows_(static_cast<std::size_t>(rank.value()), 0) {}

    /// Zero-pads a truncated vector; throws InvalidDiagram on invalid input.
    static Diagram from_rows(std::span<const int> rows, Rank rank) {
        if (!is_valid(rows, rank)) {
            std::ostringstream os;
            os << "invalid diagram (";
            for (std::size_t k = 0; k < rows.size(); ++k) {
                os << (k ? "," : "") << rows[k];
            }
            os << ") for n=" << rank.value();
            throw InvalidDiagram(os.str());
        }
        Diagram d(rank);
        std::copy(rows.begin(), rows.end(), d.rows_.begin());
        return d;
    }

    static Diagram from_rows(std::initializer_list<int> rows, Rank rank) {
        return from_rows(std::span<const int>(rows.begin(), rows.size()), rank);
    }

    [[nodiscard]] Rank rank() const { return Rank(static_cast<int>(rows_.size())); }
    [[nodiscard]] std::span<const int> rows() const noexcept { return rows_; }
    /// Length of row r (1-based).
    [[nodiscard]] int row(int r) const { return rows_.at(static_cast<std::size_t>(r - 1)); }
    [[nodiscard]] bool contains(int r, int c) const { return c >= 1 && c <= row(r); }

    /// Number of boxes.
    [[nodiscard]] int size() const noexcept {
        int s = 0;
        for (int c : rows_) s += c;
        return s;
    }
    [[nodiscard]] bool empty() const noexcept { return size() == 0; }

    /// Full-length comma-separated form, e.g. "1,2,1,0".
    [[nodiscard]] std::string to_string() const {
        std::string s;
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            if (k) s += ',';
            s += std::to_string(rows_[k]);
        }
        return s;
    }

    /// Row tuple with trailing zero rows dropped, e.g. "(1,2,1)"; empty is "()".
    [[nodiscard]] std::string to_tuple() const {
        std::size_t len = rows_.size();
        while (len > 0 && rows_[len - 1] == 0) --len;
        std::string s = "(";
        for (std::size_t k = 0; k < len; ++k) {
            if (k) s += ',';
            s += std::to_string(rows_[k]);
        }
        return s + ")";
    }

    // Lexicographic on the row vector.
    friend auto operator<=>(const Diagram&, const Diagram&) = default;
    friend bool operator==(const Diagram&, const Diagram&) = default;

private:
    friend std::optional<Diagram> with_row_changed(const Diagram&, int, int);
    std::vector<int> rows_;
};

struct LabeledBox {
    int row;
    int col;
    int label;

    friend auto operator<=>(const LabeledBox&, const LabeledBox&) = default;
};

struct DiagramPair {
    Diagram first;
    Diagram second;

    friend auto operator<=>(const DiagramPair&, const DiagramPair&) = default;
    friend bool operator==(const DiagramPair&, const DiagramPair&) = default;
};

/// Label of the cell (r, c) of mu_n.
[[nodiscard]] inline int label(Rank rank, int r, int c) {
    const int n = rank.value();
    if (r < 1 || r > n || c < 1 || c > r) {
        throw std::out_of_range("cell (" + std::to_string(r) + "," + std::to_string(c) +
                                ") lies outside the staircase for n=" + std::to_string(n));
    }
    if (c < r) {
        return n - r + c;
    }
    return r % 2 == 1 ? n + 1 : n;
}

inline std::optional<Diagram> with_row_changed(const Diagram& d, int r, int delta) {
    Diagram e = d;
    e.rows_[static_cast<std::size_t>(r - 1)] += delta;
    if (!is_valid(e.rows_, d.rank())) {
        return std::nullopt;
    }
    return e;
}

[[nodiscard]] inline Diagram staircase(Rank rank) {
    std::vector<int> rows(static_cast<std::size_t>(rank.value()));
    for (int r = 1; r <= rank.value(); ++r) rows[r - 1] = r;
    return Diagram::from_rows(rows, rank);
}

/// mu_i: the first i rows of the staircase, 0 <= i <= n.
[[nodiscard]] inline Diagram mu(Rank rank, int i) {
    if (i < 0 || i > rank.value()) {
        throw std::out_of_range("mu index " + std::to_string(i) + " outside [0, n]");
    }
    std::vector<int> rows(static_cast<std::size_t>(rank.value()), 0);
    for (int r = 1; r <= i; ++r) rows[r - 1] = r;
    return Diagram::from_rows(rows, rank);
}

/// lambda_i: i columns of maximal length, 1 <= i <= n.
[[nodiscard]] inline Diagram lambda(Rank rank, int i) {
    if (i < 1 || i > rank.value()) {
        throw std::out_of_range("lambda index " + std::to_string(i) + " outside [1, n]");
    }
    std::vector<int> rows(static_cast<std::size_t>(rank.value()));
    for (int r = 1; r <= rank.value(); ++r) rows[r - 1] = std::min(r, i);
    return Diagram::from_rows(rows, rank);
}

namespace detail {
inline void check_label(Rank rank, int lab) {
    if (lab < 1 || lab > rank.max_label()) {
        throw std::out_of_range("label " + std::to_string(lab) + " outside [1, n+1]");
    }
}
}  // namespace detail

/// Empty cells with the given label whose addition keeps the diagram valid.
[[nodiscard]] inline std::vector<LabeledBox> addable_positions(const Diagram& d, int lab) {
    const Rank rank = d.rank();
    detail::check_label(rank, lab);
    std::vector<LabeledBox> out;
    for (int r = 1; r <= rank.value(); ++r) {
        const int c = d.row(r) + 1;
        if (c > r || label(rank, r, c) != lab) continue;
        if (with_row_changed(d, r, +1)) {
            out.push_back({r, c, lab});
        }
    }
    return out;
}

/// Boxes with the given label that have nothing to their right or below.
[[nodiscard]] inline std::vector<LabeledBox> removable_positions(const Diagram& d, int lab) {
    const Rank rank = d.rank();
    detail::check_label(rank, lab);
    const int n = rank.value();
    std::vector<LabeledBox> out;
    for (int r = 1; r <= n; ++r) {
        const int c = d.row(r);
        if (c == 0 || label(rank, r, c) != lab) continue;
        const bool below = r < n && d.contains(r + 1, c);
        if (!below) {
            out.push_back({r, c, lab});
        }
    }
    return out;
}

[[nodiscard]] inline std::optional<Diagram> add_box(const Diagram& d, int lab) {
    const auto pos = addable_positions(d, lab);
    if (pos.empty()) return std::nullopt;
    if (pos.size() > 1) {
        throw StructuralFault("label " + std::to_string(lab) + " addable at " +
                              std::to_string(pos.size()) + " positions of " + d.to_string());
    }
    return with_row_changed(d, pos.front().row, +1);
}

[[nodiscard]] inline std::optional<Diagram> remove_box(const Diagram& d, int lab) {
    const auto pos = removable_positions(d, lab);
    if (pos.empty()) return std::nullopt;
    if (pos.size() > 1) {
        throw StructuralFault("label " + std::to_string(lab) + " removable at " +
                              std::to_string(pos.size()) + " positions of " + d.to_string());
    }
    auto e = with_row_changed(d, pos.front().row, -1);
    if (!e) {
        throw StructuralFault("removing label " + std::to_string(lab) + " from " +
                              d.to_string() + " broke validity");
    }
    return e;
}

/// All pairs reachable by moving one box from the first diagram to the second.
[[nodiscard]] inline std::set<DiagramPair> moves(const DiagramPair& p) {
    std::set<DiagramPair> out;
    for (int lab = 1; lab <= p.first.rank().max_label(); ++lab) {
        auto from = remove_box(p.first, lab);
        if (!from) continue;
        auto to = add_box(p.second, lab);
        if (!to) continue;
        out.insert({std::move(*from), std::move(*to)});
    }
    return out;
}

/// All 2^n valid diagrams in lexicographic order.
[[nodiscard]] inline std::vector<Diagram> enumerate_diagrams(Rank rank) {
    const int n = rank.value();
    std::vector<Diagram> out;
    std::vector<int> rows(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int r) -> void {
        if (r > n) {
            out.push_back(Diagram::from_rows(rows, rank));
            return;
        }
        for (int c = 0; c <= r; ++c) {
            if (r >= 2 && rows[r - 2] < std::min(c, r - 1)) continue;
            rows[r - 1] = c;
            self(self, r + 1);
        }
        rows[r - 1] = 0;
    };
    rec(rec, 1);
    return out;
}

struct HasseEdge {
    Diagram from;
    Diagram to;
    int label;

    friend auto operator<=>(const HasseEdge&, const HasseEdge&) = default;
    friend bool operator==(const HasseEdge&, const HasseEdge&) = default;
};

/// Covering relations of the weight poset, ordered by (from, label).
[[nodiscard]] inline std::vector<HasseEdge> hasse_edges(Rank rank) {
    std::vector<HasseEdge> out;
    for (const auto& d : enumerate_diagrams(rank)) {
        for (int lab = 1; lab <= rank.max_label(); ++lab) {
            if (auto e = add_box(d, lab)) {
                out.push_back({d, std::move(*e), lab});
            }
        }
    }
    return out;
}

/// The one-box extension of a diagram that admits exactly one addable label.
/// Realizes lambda_i^+ and mu_i^+.
[[nodiscard]] inline Diagram unique_plus(const Diagram& d) {
    std::vector<Diagram> found;
    for (int lab = 1; lab <= d.rank().max_label(); ++lab) {
        if (auto e = add_box(d, lab)) found.push_back(std::move(*e));
    }
    if (found.size() != 1) {
        throw StructuralFault(d.to_string() + " admits " + std::to_string(found.size()) +
                              " addable labels, expected exactly one");
    }
    return found.front();
}

/// Reads "1,2,1" (zero-padded to length n) or the token "empty".
[[nodiscard]] inline Diagram parse_diagram(std::string_view text, Rank rank) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text == "empty") {
        return Diagram(rank);
    }
    if (text.empty()) {
        throw ParseError("empty diagram text");
    }
    std::vector<int> rows;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const auto field = trim(text.substr(start, comma == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : comma - start));
        if (field.empty() || field.size() > 9 ||
            !std::all_of(field.begin(), field.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
            throw ParseError("cannot parse diagram '" + std::string(text) + "'");
        }
        rows.push_back(std::stoi(std::string(field)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (rows.size() > static_cast<std::size_t>(rank.value())) {
        throw InvalidDiagram("diagram '" + std::string(text) + "' has more than n=" +
                             std::to_string(rank.value()) + " rows");
    }
    return Diagram::from_rows(rows, rank);
}

}  // namespace ogmirror
