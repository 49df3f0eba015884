/**
 * @file torus.hpp
 * @brief Restriction of Pluecker polynomials to the torus X° with
 * coordinates a[i_t, j_t], one per box of the staircase.
 *
 * The restriction of p_tau is a path sum over the weight poset: scanning the
 * reduced word t = 1..l, a path either skips step t or adds the box labeled
 * i_t (picking up the factor a[i_t, j_t]); p_tau collects every path from the
 * empty diagram that ends at tau.
 */
#pragma once

#include "ogmirror/diagram.hpp"
#include "ogmirror/polynomial.hpp"
#include "ogmirror/potential.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ogmirror {

struct WordLetter {
    int label;
    int column;

    friend auto operator<=>(const WordLetter&, const WordLetter&) = default;
};

/// Labels of mu_n read left to right, top to bottom, with their columns.
class ReducedWord {
public:
    explicit ReducedWord(Rank rank) {
        for (int r = 1; r <= rank.value(); ++r) {
            for (int c = 1; c <= r; ++c) letters_.push_back({label(rank, r, c), c});
        }
    }

    [[nodiscard]] const std::vector<WordLetter>& letters() const noexcept { return letters_; }
    [[nodiscard]] std::size_t length() const noexcept { return letters_.size(); }
    [[nodiscard]] const WordLetter& operator[](std::size_t t) const { return letters_.at(t); }

    /// Torus coordinate a[i_t, j_t] for 0-based step t.
    [[nodiscard]] Variable coordinate(std::size_t t) const {
        return Variable::torus(letters_.at(t).label, letters_.at(t).column);
    }

private:
    std::vector<WordLetter> letters_;
};

/// Restrictions of every Pluecker coordinate of one rank, computed by a single
/// forward pass over the reduced word.
class TorusRestriction {
public:
    explicit TorusRestriction(Rank rank) : rank_(rank), word_(rank) {
        table_.emplace(Diagram(rank), Polynomial::one());
        for (std::size_t t = 0; t < word_.length(); ++t) {
            const Monomial step(word_.coordinate(t));
            const int lab = word_[t].label;
            std::vector<std::pair<Diagram, Polynomial>> updates;
            for (const auto& [d, poly] : table_) {
                if (auto e = add_box(d, lab)) updates.emplace_back(std::move(*e), poly.times(step));
            }
            for (auto& [e, poly] : updates) table_[e] += poly;
        }
    }

    [[nodiscard]] Rank rank() const noexcept { return rank_; }
    [[nodiscard]] const ReducedWord& word() const noexcept { return word_; }

    /// p_tau restricted to X°.
    [[nodiscard]] const Polynomial& of(const Diagram& d) const {
        if (d.rank() != rank_) {
            throw std::invalid_argument("diagram " + d.to_string() + " has the wrong rank");
        }
        static const Polynomial zero;
        auto it = table_.find(d);
        return it == table_.end() ? zero : it->second;
    }

    /// Substitutes every Pluecker variable; q passes through.
    [[nodiscard]] Polynomial of(const Polynomial& p) const {
        if (p.contains_kind(VarKind::Torus)) {
            throw std::invalid_argument("polynomial already contains torus variables");
        }
        return p.substitute([this](const Variable& v) -> Polynomial {
            if (v.kind() == VarKind::Plucker) return of(v.diagram());
            return v;
        });
    }

private:
    Rank rank_;
    ReducedWord word_;
    std::map<Diagram, Polynomial> table_;
};

[[nodiscard]] inline Polynomial restrict_plucker(Rank rank, const Diagram& d) {
    return TorusRestriction(rank).of(d);
}

[[nodiscard]] inline Polynomial restrict_polynomial(Rank rank, const Polynomial& p) {
    return TorusRestriction(rank).of(p);
}

namespace detail {
inline Monomial word_product(const ReducedWord& w, auto&& keep) {
    Monomial m;
    for (std::size_t t = 0; t < w.length(); ++t) {
        if (keep(t, w[t])) m = m * Monomial(w.coordinate(t));
    }
    return m;
}
}  // namespace detail

/// Closed-form monomial for the restricted denominator phi_i, 0 <= i <= n+1.
[[nodiscard]] inline Polynomial expected_phi_restriction(Rank rank, int i) {
    const int n = rank.value();
    if (i < 0 || i > n + 1) {
        throw std::out_of_range("phi index " + std::to_string(i) + " outside [0, n+1]");
    }
    const ReducedWord w(rank);
    auto prefix = [](int len) {
        return [len](std::size_t t, const WordLetter&) { return static_cast<int>(t) < len; };
    };
    if (i == 0) return Polynomial::one();
    if (i == 1) {
        return detail::word_product(w, [](std::size_t, const WordLetter& x) { return x.column == 1; });
    }
    if (i == n) return detail::word_product(w, prefix((n - 1) * n / 2));
    if (i == n + 1) return detail::word_product(w, prefix(static_cast<int>(w.length())));
    const Monomial head = detail::word_product(w, prefix(i * (i - 1) / 2));
    const Monomial cols = detail::word_product(w, [i](std::size_t, const WordLetter& x) { return x.column <= i; });
    return head * cols;
}

/// Sum of a[n+1-i, j] over the distinct columns j holding label n+1-i.
[[nodiscard]] inline Polynomial label_column_sum(Rank rank, int i) {
    const int lab = rank.value() + 1 - i;
    std::set<int> columns;
    const ReducedWord word(rank);
    for (const auto& x : word.letters()) {
        if (x.label == lab) columns.insert(x.column);
    }
    Polynomial out;
    for (int c : columns) out += Polynomial::torus(lab, c);
    return out;
}

struct TermRestrictionCheck {
    bool passed;
    Polynomial factor;
    /// restricted numerator minus restricted denominator times factor
    Polynomial residual;
};

[[nodiscard]] inline TermRestrictionCheck verify_term_restriction(const TorusRestriction& tr, int i) {
    const Rank rank = tr.rank();
    if (i < 0 || i > rank.value()) {
        throw std::out_of_range("term restriction index " + std::to_string(i) + " outside [0, n]");
    }
    const auto t = term(rank, i);
    Polynomial factor = label_column_sum(rank, i);
    Polynomial residual = tr.of(t.expression.numerator) - tr.of(t.expression.denominator) * factor;
    const bool ok = residual.is_zero();
    return {ok, std::move(factor), std::move(residual)};
}

[[nodiscard]] inline TermRestrictionCheck verify_term_restriction(Rank rank, int i) {
    return verify_term_restriction(TorusRestriction(rank), i);
}

/// Sum of all torus coordinates plus q * p_{mu_{n-2}} / p_{mu_n}, restricted.
[[nodiscard]] inline RationalExpression laurent_potential(const TorusRestriction& tr) {
    const Rank rank = tr.rank();
    const int n = rank.value();
    Polynomial linear;
    for (std::size_t t = 0; t < tr.word().length(); ++t) linear += Polynomial(tr.word().coordinate(t));
    const Polynomial& den = tr.of(mu(rank, n));
    return {linear * den + Polynomial::quantum() * tr.of(mu(rank, n - 2)), den};
}

[[nodiscard]] inline RationalExpression laurent_potential(Rank rank) {
    return laurent_potential(TorusRestriction(rank));
}

/// Sum over all n+2 terms of their restrictions, as one unreduced quotient.
[[nodiscard]] inline RationalExpression restricted_superpotential(const TorusRestriction& tr) {
    std::optional<RationalExpression> sum;
    for (const auto& t : superpotential(tr.rank())) {
        RationalExpression r(tr.of(t.expression.numerator), tr.of(t.expression.denominator));
        sum = sum ? *sum + r : r;
    }
    return *sum;
}

}  // namespace ogmirror
