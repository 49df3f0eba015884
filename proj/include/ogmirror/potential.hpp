/**
 * @file potential.hpp
 * @brief The canonical superpotential W_can = W_0 + ... + W_{n+1} for
 * OG(n+1, 2n+2), built as unreduced quotients of Pluecker polynomials.
 *
 * The middle terms 2 <= i <= n-1 come from the pair recursion: M_{i,0} holds
 * (mu_{i-1}, lambda_i), M_{i,j} holds every pair reached from M_{i,j-1} by
 * moving one box from the first diagram to the second, and N_{i,j} adds a box
 * labeled n+1-i to whichever component accepts it. Level j carries sign (-1)^j.
 */
#pragma once

#include "ogmirror/diagram.hpp"
#include "ogmirror/polynomial.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ogmirror {

struct PairLevel {
    int i;
    int j;
    std::set<DiagramPair> pairs;
};

/// A signed product of Pluecker variables, kept for presentation.
struct SignedProduct {
    int sign;
    std::vector<Diagram> factors;

    friend bool operator==(const SignedProduct&, const SignedProduct&) = default;
};

struct SuperpotentialTerm {
    int index;
    RationalExpression expression;
    bool quantum;
    /// Numerator and denominator as written, in level order.
    std::vector<SignedProduct> numerator_products;
    std::vector<SignedProduct> denominator_products;
};

namespace detail {
inline void check_middle_index(Rank rank, int i) {
    if (i < 2 || i > rank.value() - 1) {
        throw std::out_of_range("middle term index " + std::to_string(i) + " outside [2, n-1] for n=" +
                                std::to_string(rank.value()));
    }
}
}  // namespace detail

/// The levels M_{i,0}, M_{i,1}, ... up to the last nonempty one.
[[nodiscard]] inline std::vector<PairLevel> m_sets(Rank rank, int i) {
    detail::check_middle_index(rank, i);
    std::vector<PairLevel> levels;
    levels.push_back({i, 0, {{mu(rank, i - 1), lambda(rank, i)}}});
    // mu_{i-1} has binom(i,2) boxes, each move removes one of them.
    const int bound = i * (i - 1) / 2;
    while (true) {
        std::set<DiagramPair> next;
        for (const auto& p : levels.back().pairs) {
            next.merge(moves(p));
        }
        if (next.empty()) break;
        const int j = levels.back().j + 1;
        if (j > bound) {
            throw StructuralFault("move recursion for i=" + std::to_string(i) + " did not terminate");
        }
        levels.push_back({i, j, std::move(next)});
    }
    return levels;
}

/// Adds a box labeled n+1-i to each pair of each M level. Levels with no
/// surviving pairs are kept (empty) so that indices line up with m.
[[nodiscard]] inline std::vector<PairLevel> n_sets(Rank rank, int i, const std::vector<PairLevel>& m) {
    detail::check_middle_index(rank, i);
    const int lab = rank.value() + 1 - i;
    std::vector<PairLevel> out;
    out.reserve(m.size());
    for (const auto& level : m) {
        PairLevel n_level{i, level.j, {}};
        for (const auto& [a, b] : level.pairs) {
            auto a_plus = add_box(a, lab);
            auto b_plus = add_box(b, lab);
            if (a_plus && b_plus) {
                throw StructuralFault("label " + std::to_string(lab) + " addable to both " + a.to_string() +
                                      " and " + b.to_string());
            }
            if (a_plus) n_level.pairs.insert({std::move(*a_plus), b});
            if (b_plus) n_level.pairs.insert({a, std::move(*b_plus)});
        }
        out.push_back(std::move(n_level));
    }
    return out;
}

/// Sum over levels of (-1)^j p_tau p_tau'.
[[nodiscard]] inline Polynomial signed_pair_sum(const std::vector<PairLevel>& levels) {
    Polynomial out;
    for (const auto& level : levels) {
        const Integer sign = level.j % 2 == 0 ? 1 : -1;
        for (const auto& [a, b] : level.pairs) {
            Monomial m = Monomial(Variable::plucker(a)) * Monomial(Variable::plucker(b));
            out.add_term(m, sign);
        }
    }
    return out;
}

/// The derivation delta_i: p_tau maps to p_{tau + box labeled n+1-i}, or 0,
/// extended by the Leibniz rule and linearity.
[[nodiscard]] inline Polynomial delta(Rank rank, int i, const Polynomial& p) {
    if (i < 0 || i > rank.value()) {
        throw std::out_of_range("delta index " + std::to_string(i) + " outside [0, n]");
    }
    const int lab = rank.value() + 1 - i;
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        const auto& fs = m.factors();
        for (std::size_t k = 0; k < fs.size(); ++k) {
            const auto& [v, e] = fs[k];
            if (v.kind() != VarKind::Plucker) {
                throw std::invalid_argument("delta applies to Pluecker polynomials only, found " + v.name());
            }
            const Diagram d = v.diagram();
            if (d.rank() != rank) {
                throw std::invalid_argument("Pluecker variable " + v.name() + " has the wrong rank");
            }
            auto d_plus = add_box(d, lab);
            if (!d_plus) continue;
            // c * e * v^(e-1) * p_{d+} * (other factors)
            Monomial rest;
            for (std::size_t l = 0; l < fs.size(); ++l) {
                if (l != k) rest = rest * Monomial(fs[l].first, fs[l].second);
            }
            rest = rest * Monomial(v, e - 1) * Monomial(Variable::plucker(*d_plus));
            out.add_term(rest, c * e);
        }
    }
    return out;
}

namespace detail {

inline SignedProduct single(const Diagram& d) { return {1, {d}}; }

inline std::vector<SignedProduct> products_of(const std::vector<PairLevel>& levels) {
    std::vector<SignedProduct> out;
    for (const auto& level : levels) {
        for (const auto& [a, b] : level.pairs) {
            out.push_back({level.j % 2 == 0 ? 1 : -1, {a, b}});
        }
    }
    return out;
}

}  // namespace detail

/// W_i for 0 <= i <= n+1.
[[nodiscard]] inline SuperpotentialTerm term(Rank rank, int i) {
    const int n = rank.value();
    if (i < 0 || i > n + 1) {
        throw std::out_of_range("term index " + std::to_string(i) + " outside [0, n+1]");
    }
    auto simple = [&](const Diagram& num, const Diagram& den, bool quantum) {
        Polynomial numerator = Polynomial::plucker(num);
        if (quantum) numerator *= Polynomial::quantum();
        return SuperpotentialTerm{i,
                                  RationalExpression(std::move(numerator), Polynomial::plucker(den)),
                                  quantum,
                                  {detail::single(num)},
                                  {detail::single(den)}};
    };
    if (i == 0) return simple(mu(rank, 1), Diagram(rank), false);
    if (i == 1) return simple(unique_plus(lambda(rank, 1)), lambda(rank, 1), false);
    if (i == n) return simple(unique_plus(mu(rank, n - 1)), mu(rank, n - 1), false);
    if (i == n + 1) return simple(mu(rank, n - 2), mu(rank, n), true);

    const auto m = m_sets(rank, i);
    const auto nn = n_sets(rank, i, m);
    return SuperpotentialTerm{i,
                              RationalExpression(signed_pair_sum(nn), signed_pair_sum(m)),
                              false,
                              detail::products_of(nn),
                              detail::products_of(m)};
}

/// The n+2 terms in index order.
[[nodiscard]] inline std::vector<SuperpotentialTerm> superpotential(Rank rank) {
    std::vector<SuperpotentialTerm> out;
    for (int i = 0; i <= rank.value() + 1; ++i) out.push_back(term(rank, i));
    return out;
}

// Serialization.

inline std::string products_latex(const std::vector<SignedProduct>& prods) {
    std::string s;
    for (std::size_t k = 0; k < prods.size(); ++k) {
        if (k == 0) {
            if (prods[k].sign < 0) s += "-";
        } else {
            s += prods[k].sign < 0 ? " - " : " + ";
        }
        for (const auto& d : prods[k].factors) s += Variable::plucker(d).latex();
    }
    return s.empty() ? "0" : s;
}

/// LaTeX for one term; the quantum term is written q\frac{...}{...}.
inline std::string term_latex(const SuperpotentialTerm& t) {
    const std::string frac = "\\frac{" + products_latex(t.numerator_products) + "}{" +
                             products_latex(t.denominator_products) + "}";
    return t.quantum ? "q" + frac : frac;
}

inline std::string superpotential_latex(const std::vector<SuperpotentialTerm>& terms) {
    std::string s = "\\mathcal{W}_{\\text{can}} = ";
    for (std::size_t k = 0; k < terms.size(); ++k) {
        if (k) s += " + ";
        s += term_latex(terms[k]);
    }
    return s;
}

/// One line per term: `W_i = (numerator) / (denominator)`.
inline std::string superpotential_text(const std::vector<SuperpotentialTerm>& terms) {
    std::string s;
    for (const auto& t : terms) {
        s += "W_" + std::to_string(t.index) + " = (" + t.expression.numerator.to_text() + ") / (" +
             t.expression.denominator.to_text() + ")\n";
    }
    return s;
}

inline nlohmann::ordered_json superpotential_json(const std::vector<SuperpotentialTerm>& terms) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& t : terms) {
        nlohmann::ordered_json rec;
        rec["index"] = t.index;
        rec["quantum"] = t.quantum;
        rec["numerator"] = t.expression.numerator.to_json();
        rec["denominator"] = t.expression.denominator.to_json();
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace ogmirror
