#include "ogmirror/potential.hpp"

#include <gtest/gtest.h>

#include <set>
#include <vector>

using namespace ogmirror;

namespace {

const Rank kFour(4);

Diagram D4(std::initializer_list<int> rows) { return Diagram::from_rows(rows, kFour); }
Polynomial P4(std::initializer_list<int> rows) { return Polynomial::plucker(D4(rows)); }

std::vector<std::set<DiagramPair>> pairs_of(const std::vector<PairLevel>& levels) {
    std::vector<std::set<DiagramPair>> out;
    for (const auto& l : levels) out.push_back(l.pairs);
    return out;
}

}  // namespace

TEST(MSets, FourThree) {
    const auto m = m_sets(kFour, 3);
    ASSERT_EQ(m.size(), 2u);
    EXPECT_EQ(m[0].j, 0);
    EXPECT_EQ(m[1].j, 1);
    EXPECT_EQ(pairs_of(m), (std::vector<std::set<DiagramPair>>{{{D4({1, 2, 0, 0}), D4({1, 2, 3, 3})}},
                                                               {{D4({1, 1, 0, 0}), D4({1, 2, 3, 4})}}}));
}

TEST(MSets, FourTwo) {
    EXPECT_EQ(pairs_of(m_sets(kFour, 2)),
              (std::vector<std::set<DiagramPair>>{{{D4({1, 0, 0, 0}), D4({1, 2, 2, 2})}},
                                                  {{D4({0, 0, 0, 0}), D4({1, 2, 3, 2})}}}));
}

TEST(MSets, FirstLevelIsMuLambda) {
    for (int n = 3; n <= 8; ++n) {
        const Rank r(n);
        const auto m = m_sets(r, 2);
        const std::set<DiagramPair> expected{{mu(r, 1), lambda(r, 2)}};
        EXPECT_EQ(m.front().pairs, expected);
        EXPECT_EQ(mu(r, 1).size(), 1);
    }
}

TEST(MSets, LevelsAreGradedAndTerminate) {
    for (int n = 3; n <= 8; ++n) {
        const Rank r(n);
        for (int i = 2; i <= n - 1; ++i) {
            const auto m = m_sets(r, i);
            EXPECT_LE(static_cast<int>(m.size()), i * (i - 1) / 2 + 1);
            std::set<DiagramPair> seen;
            for (const auto& level : m) {
                EXPECT_FALSE(level.pairs.empty());
                for (const auto& p : level.pairs) {
                    EXPECT_EQ(p.first.size(), mu(r, i - 1).size() - level.j);
                    EXPECT_EQ(p.second.size(), lambda(r, i).size() + level.j);
                    EXPECT_TRUE(seen.insert(p).second) << "pair repeated across levels";
                }
            }
        }
    }
}

TEST(MSets, IndexRange) {
    EXPECT_THROW((void)m_sets(kFour, 1), std::out_of_range);
    EXPECT_THROW((void)m_sets(kFour, 4), std::out_of_range);
    EXPECT_THROW((void)m_sets(Rank(2), 2), std::out_of_range);
}

TEST(NSets, FourThree) {
    const auto m = m_sets(kFour, 3);
    EXPECT_EQ(pairs_of(n_sets(kFour, 3, m)),
              (std::vector<std::set<DiagramPair>>{{{D4({1, 2, 1, 0}), D4({1, 2, 3, 3})}},
                                                  {{D4({1, 1, 1, 0}), D4({1, 2, 3, 4})}}}));
}

TEST(NSets, FourTwo) {
    const auto m = m_sets(kFour, 2);
    EXPECT_EQ(pairs_of(n_sets(kFour, 2, m)),
              (std::vector<std::set<DiagramPair>>{{{D4({1, 1, 0, 0}), D4({1, 2, 2, 2})}},
                                                  {{D4({0, 0, 0, 0}), D4({1, 2, 3, 3})}}}));
}

TEST(NSets, FirstLevelIsMuPlusLambda) {
    for (int n = 3; n <= 8; ++n) {
        const Rank r(n);
        for (int i = 2; i <= n - 1; ++i) {
            const auto nn = n_sets(r, i, m_sets(r, i));
            const std::set<DiagramPair> expected{{unique_plus(mu(r, i - 1)), lambda(r, i)}};
            EXPECT_EQ(nn.front().pairs, expected) << "n=" << n << " i=" << i;
        }
    }
}

TEST(NSets, DoubleAdditionIsAFault) {
    // Label 3 fits on (1,0,0,0) and on (1,2,1,0); n_sets must refuse.
    const std::vector<PairLevel> fake{{2, 0, {{D4({1, 0, 0, 0}), D4({1, 2, 1, 0})}}}};
    EXPECT_THROW((void)n_sets(kFour, 2, fake), StructuralFault);
}

TEST(Delta, PhiThree) {
    const Polynomial phi3 = P4({1, 2, 0, 0}) * P4({1, 2, 3, 3}) - P4({1, 1, 0, 0}) * P4({1, 2, 3, 4});
    const Polynomial expected = P4({1, 2, 1, 0}) * P4({1, 2, 3, 3}) - P4({1, 1, 1, 0}) * P4({1, 2, 3, 4});
    EXPECT_EQ(delta(kFour, 3, phi3), expected);
}

TEST(Delta, SimpleCases) {
    EXPECT_EQ(delta(kFour, 0, P4({0, 0, 0, 0})), P4({1, 0, 0, 0}));
    EXPECT_TRUE(delta(kFour, 2, Polynomial()).is_zero());
    EXPECT_TRUE(delta(kFour, 0, P4({1, 0, 0, 0})).is_zero());
}

TEST(Delta, LeibnizOnSquares) {
    // delta(p^2) = 2 p delta(p), and constants vanish.
    const Polynomial x = P4({0, 0, 0, 0}).pow(2) * Polynomial::constant(3) + Polynomial::constant(4);
    EXPECT_EQ(delta(kFour, 0, x), Polynomial::constant(6) * P4({0, 0, 0, 0}) * P4({1, 0, 0, 0}));
}

TEST(Delta, RejectsNonPluckerVariables) {
    EXPECT_THROW((void)delta(kFour, 1, Polynomial::torus(1, 1)), std::invalid_argument);
    EXPECT_THROW((void)delta(kFour, 1, Polynomial::quantum() * P4({1, 0, 0, 0})), std::invalid_argument);
    EXPECT_THROW((void)delta(kFour, 5, P4({1, 0, 0, 0})), std::out_of_range);
}

TEST(Term, BoundaryTerms) {
    const auto w5 = term(kFour, 5);
    EXPECT_TRUE(w5.quantum);
    EXPECT_EQ(w5.expression.numerator, Polynomial::quantum() * P4({1, 2, 0, 0}));
    EXPECT_EQ(w5.expression.denominator, P4({1, 2, 3, 4}));

    const auto w1 = term(kFour, 1);
    EXPECT_FALSE(w1.quantum);
    EXPECT_EQ(w1.expression.numerator, P4({1, 2, 1, 1}));
    EXPECT_EQ(w1.expression.denominator, P4({1, 1, 1, 1}));

    const auto w4 = term(kFour, 4);
    EXPECT_EQ(w4.expression.numerator, P4({1, 2, 3, 1}));
    EXPECT_EQ(w4.expression.denominator, P4({1, 2, 3, 0}));

    EXPECT_THROW((void)term(kFour, 6), std::out_of_range);
    EXPECT_THROW((void)term(kFour, -1), std::out_of_range);
}

TEST(Superpotential, FourIsTheDisplayedPotential) {
    const auto terms = superpotential(kFour);
    ASSERT_EQ(terms.size(), 6u);
    const std::vector<RationalExpression> expected{
        {P4({1, 0, 0, 0}), P4({0, 0, 0, 0})},
        {P4({1, 2, 1, 1}), P4({1, 1, 1, 1})},
        {P4({1, 1, 0, 0}) * P4({1, 2, 2, 2}) - P4({0, 0, 0, 0}) * P4({1, 2, 3, 3}),
         P4({1, 0, 0, 0}) * P4({1, 2, 2, 2}) - P4({0, 0, 0, 0}) * P4({1, 2, 3, 2})},
        {P4({1, 2, 1, 0}) * P4({1, 2, 3, 3}) - P4({1, 1, 1, 0}) * P4({1, 2, 3, 4}),
         P4({1, 2, 0, 0}) * P4({1, 2, 3, 3}) - P4({1, 1, 0, 0}) * P4({1, 2, 3, 4})},
        {P4({1, 2, 3, 1}), P4({1, 2, 3, 0})},
        {Polynomial::quantum() * P4({1, 2, 0, 0}), P4({1, 2, 3, 4})},
    };
    for (std::size_t k = 0; k < terms.size(); ++k) {
        EXPECT_EQ(terms[k].index, static_cast<int>(k));
        EXPECT_EQ(terms[k].expression.numerator, expected[k].numerator) << "term " << k;
        EXPECT_EQ(terms[k].expression.denominator, expected[k].denominator) << "term " << k;
    }
}

TEST(Superpotential, TwoHasFourDegreeOneTerms) {
    const Rank r(2);
    const auto terms = superpotential(r);
    ASSERT_EQ(terms.size(), 4u);
    int sum = 0;
    for (const auto& t : terms) {
        EXPECT_EQ(degree_in_pluckers(t.expression.numerator), 1);
        EXPECT_EQ(degree_in_pluckers(t.expression.denominator), 1);
        sum += degree_in_pluckers(t.expression.denominator);
    }
    EXPECT_EQ(sum, 4);
}

TEST(Superpotential, ThreeDegrees) {
    const auto terms = superpotential(Rank(3));
    ASSERT_EQ(terms.size(), 5u);
    std::vector<int> degs;
    for (const auto& t : terms) degs.push_back(degree_in_pluckers(t.expression.denominator));
    EXPECT_EQ(degs, (std::vector<int>{1, 1, 2, 1, 1}));
}

TEST(Superpotential, NumeratorIsDeltaOfDenominator) {
    for (int n = 2; n <= 8; ++n) {
        const Rank r(n);
        const auto terms = superpotential(r);
        int sum = 0;
        for (int i = 0; i <= n; ++i) {
            EXPECT_EQ(terms[i].expression.numerator, delta(r, i, terms[i].expression.denominator))
                << "n=" << n << " i=" << i;
        }
        for (const auto& t : terms) {
            const int expected = (t.index >= 2 && t.index <= n - 1) ? 2 : 1;
            EXPECT_EQ(degree_in_pluckers(t.expression.numerator), expected);
            EXPECT_EQ(degree_in_pluckers(t.expression.denominator), expected);
            sum += degree_in_pluckers(t.expression.denominator);
        }
        EXPECT_EQ(sum, 2 * n);
    }
}

TEST(Serialization, FourLatex) {
    EXPECT_EQ(superpotential_latex(superpotential(kFour)),
              "\\mathcal{W}_{\\text{can}} = \\frac{p_{(1)}}{p_{\\varnothing}}"
              " + \\frac{p_{(1,2,1,1)}}{p_{(1,1,1,1)}}"
              " + \\frac{p_{(1,1)}p_{(1,2,2,2)} - p_{\\varnothing}p_{(1,2,3,3)}}"
              "{p_{(1)}p_{(1,2,2,2)} - p_{\\varnothing}p_{(1,2,3,2)}}"
              " + \\frac{p_{(1,2,1)}p_{(1,2,3,3)} - p_{(1,1,1)}p_{(1,2,3,4)}}"
              "{p_{(1,2)}p_{(1,2,3,3)} - p_{(1,1)}p_{(1,2,3,4)}}"
              " + \\frac{p_{(1,2,3,1)}}{p_{(1,2,3)}}"
              " + q\\frac{p_{(1,2)}}{p_{(1,2,3,4)}}");
}

TEST(Serialization, TwoText) {
    EXPECT_EQ(superpotential_text(superpotential(Rank(2))),
              "W_0 = (p[1,0]) / (p[0,0])\n"
              "W_1 = (p[1,2]) / (p[1,1])\n"
              "W_2 = (p[1,1]) / (p[1,0])\n"
              "W_3 = (q*p[0,0]) / (p[1,2])\n");
}

TEST(Serialization, JsonShape) {
    const auto doc = superpotential_json(superpotential(kFour));
    ASSERT_EQ(doc.size(), 6u);
    EXPECT_EQ(doc[5]["index"], 5);
    EXPECT_EQ(doc[5]["quantum"], true);
    EXPECT_EQ(doc[0]["quantum"], false);
    EXPECT_EQ(doc[3]["denominator"].size(), 2u);
    EXPECT_EQ(doc[0]["numerator"].dump(), R"([{"coefficient":1,"exponents":{"p[1,0,0,0]":1}}])");
}
