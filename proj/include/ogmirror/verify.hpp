/**
 * @file verify.hpp
 * @brief The invariant suite run by `ogmirror verify`.
 *
 * Each check yields one record; the text report prints
 * `CHECK <name> n=<n> i=<i> PASS|FAIL` per record (i is `-` for checks that
 * are not indexed by a term) followed by `VERIFIED n=<n>` or `FAILED k checks`.
 */
#pragma once

#include "ogmirror/diagram.hpp"
#include "ogmirror/polynomial.hpp"
#include "ogmirror/potential.hpp"
#include "ogmirror/torus.hpp"

#include <future>
#include <optional>
#include <queue>
#include <string>
#include <vector>

namespace ogmirror {

struct CheckRecord {
    std::string name;
    int n;
    std::optional<int> i;
    bool passed;
    std::string detail;
};

namespace detail {

class CheckLog {
public:
    explicit CheckLog(int n) : n_(n) {}

    void record(std::string name, std::optional<int> i, bool ok, std::string detail = {}) {
        records_.push_back({std::move(name), n_, i, ok, std::move(detail)});
    }

    /// Runs body; a thrown exception counts as a failure with its message.
    template <class F>
    void run(std::string name, std::optional<int> i, F&& body) {
        try {
            std::string detail;
            const bool ok = body(detail);
            record(std::move(name), i, ok, std::move(detail));
        } catch (const std::exception& e) {
            record(std::move(name), i, false, std::string("exception: ") + e.what());
        }
    }

    std::vector<CheckRecord> take() { return std::move(records_); }

private:
    int n_;
    std::vector<CheckRecord> records_;
};

}  // namespace detail

/// Largest n accepted by the front end.
inline constexpr int kMaxRank = 10;

[[nodiscard]] inline std::vector<CheckRecord> run_verification(Rank rank) {
    const int n = rank.value();
    detail::CheckLog log(n);
    const auto diagrams = enumerate_diagrams(rank);

    log.run("diagram_count", std::nullopt, [&](std::string& why) {
        why = std::to_string(diagrams.size()) + " diagrams";
        return diagrams.size() == (std::size_t{1} << n);
    });

    log.run("unique_positions", std::nullopt, [&](std::string& why) {
        for (const auto& d : diagrams) {
            for (int lab = 1; lab <= n + 1; ++lab) {
                if (addable_positions(d, lab).size() > 1 || removable_positions(d, lab).size() > 1) {
                    why = d.to_string() + " label " + std::to_string(lab);
                    return false;
                }
            }
        }
        return true;
    });

    log.run("add_remove_inverse", std::nullopt, [&](std::string& why) {
        for (const auto& d : diagrams) {
            for (int lab = 1; lab <= n + 1; ++lab) {
                if (auto up = add_box(d, lab); up && remove_box(*up, lab) != d) {
                    why = "add then remove " + std::to_string(lab) + " on " + d.to_string();
                    return false;
                }
                if (auto down = remove_box(d, lab); down && add_box(*down, lab) != d) {
                    why = "remove then add " + std::to_string(lab) + " on " + d.to_string();
                    return false;
                }
            }
        }
        return true;
    });

    log.run("hasse_graded_connected", std::nullopt, [&](std::string& why) {
        const auto edges = hasse_edges(rank);
        std::set<Diagram> seen{Diagram(rank)};
        std::queue<Diagram> todo;
        todo.push(Diagram(rank));
        std::map<Diagram, std::vector<Diagram>> up;
        for (const auto& e : edges) {
            if (e.to.size() != e.from.size() + 1) {
                why = "edge " + e.from.to_string() + " -> " + e.to.to_string() + " is not a cover";
                return false;
            }
            up[e.from].push_back(e.to);
        }
        while (!todo.empty()) {
            const Diagram d = todo.front();
            todo.pop();
            for (const auto& e : up[d]) {
                if (seen.insert(e).second) todo.push(e);
            }
        }
        why = std::to_string(seen.size()) + " reachable";
        return seen.size() == diagrams.size();
    });

    log.run("plus_unique", std::nullopt, [&](std::string& why) {
        for (int i = 1; i < n; ++i) {
            why = "i=" + std::to_string(i);
            (void)unique_plus(lambda(rank, i));
            (void)unique_plus(mu(rank, i));
        }
        why.clear();
        return true;
    });

    const auto terms = superpotential(rank);

    for (int i = 2; i <= n - 1; ++i) {
        const auto m = m_sets(rank, i);
        log.run("m_termination", i, [&](std::string& why) {
            why = std::to_string(m.size()) + " levels";
            return static_cast<int>(m.size()) <= i * (i - 1) / 2 + 1;
        });
        log.run("n_level_zero", i, [&](std::string&) {
            const auto nn = n_sets(rank, i, m);
            const std::set<DiagramPair> expected{{unique_plus(mu(rank, i - 1)), lambda(rank, i)}};
            return !nn.empty() && nn.front().pairs == expected;
        });
        if (n <= 6) {
            // Once delta_i kills p_tau p_tau', it kills every move-descendant.
            log.run("delta_zero_propagates", i, [&](std::string& why) {
                for (std::size_t j = 0; j < m.size(); ++j) {
                    for (const auto& p : m[j].pairs) {
                        const Polynomial prod = Polynomial::plucker(p.first) * Polynomial::plucker(p.second);
                        if (!delta(rank, i, prod).is_zero()) continue;
                        std::set<DiagramPair> frontier{p};
                        while (!frontier.empty()) {
                            std::set<DiagramPair> next;
                            for (const auto& q : frontier) next.merge(moves(q));
                            for (const auto& q : next) {
                                const Polynomial pq = Polynomial::plucker(q.first) * Polynomial::plucker(q.second);
                                if (!delta(rank, i, pq).is_zero()) {
                                    why = p.first.to_string() + " | " + p.second.to_string();
                                    return false;
                                }
                            }
                            frontier = std::move(next);
                        }
                    }
                }
                return true;
            });
        }
    }

    for (int i = 0; i <= n; ++i) {
        log.run("delta_identity", i, [&](std::string& why) {
            const auto& ex = terms[i].expression;
            const Polynomial diff = ex.numerator - delta(rank, i, ex.denominator);
            if (!diff.is_zero()) why = "residual " + diff.to_text();
            return diff.is_zero();
        });
    }

    log.run("degree_homogeneity", std::nullopt, [&](std::string& why) {
        for (const auto& t : terms) {
            const int expected = (t.index >= 2 && t.index <= n - 1) ? 2 : 1;
            if (degree_in_pluckers(t.expression.numerator) != expected ||
                degree_in_pluckers(t.expression.denominator) != expected) {
                why = "term " + std::to_string(t.index);
                return false;
            }
        }
        return true;
    });

    log.run("degree_sum", std::nullopt, [&](std::string& why) {
        int sum = 0;
        for (const auto& t : terms) sum += degree_in_pluckers(t.expression.denominator);
        why = "sum " + std::to_string(sum);
        return sum == 2 * n;
    });

    const TorusRestriction tr(rank);

    log.run("restriction_shape", std::nullopt, [&](std::string& why) {
        for (const auto& d : diagrams) {
            const auto& r = tr.of(d);
            if (r.is_zero()) {
                why = d.to_string() + " restricts to 0";
                return false;
            }
            for (const auto& [mono, c] : r.terms()) {
                if (c < 1 || mono.degree(VarKind::Torus) != d.size() || mono.total_degree() != d.size()) {
                    why = d.to_string() + " has a bad monomial";
                    return false;
                }
            }
        }
        const auto& top = tr.of(staircase(rank));
        return top == expected_phi_restriction(rank, n + 1) && tr.of(Diagram(rank)) == Polynomial::one();
    });

    for (int i = 0; i <= n + 1; ++i) {
        log.run("phi_restriction", i, [&](std::string& why) {
            const Polynomial got = tr.of(terms[i].expression.denominator);
            const bool ok = got == expected_phi_restriction(rank, i);
            if (!ok) why = "got " + got.to_text();
            return ok;
        });
    }

    for (int i = 0; i <= n; ++i) {
        log.run("term_restriction", i, [&](std::string& why) {
            auto check = verify_term_restriction(tr, i);
            if (!check.passed) why = "residual " + check.residual.to_text();
            return check.passed;
        });
    }

    log.run("laurent_assembly", std::nullopt, [&](std::string&) {
        return rational_equals(restricted_superpotential(tr), laurent_potential(tr));
    });

    return log.take();
}

/// Verifies every n in [from, to]; ranks run concurrently, output order is by n.
[[nodiscard]] inline std::vector<std::vector<CheckRecord>> run_verification_range(int from, int to) {
    std::vector<std::future<std::vector<CheckRecord>>> jobs;
    for (int n = from; n <= to; ++n) {
        jobs.push_back(std::async(std::launch::async, [n] { return run_verification(Rank(n)); }));
    }
    std::vector<std::vector<CheckRecord>> out;
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

[[nodiscard]] inline std::size_t failure_count(const std::vector<CheckRecord>& records) {
    std::size_t k = 0;
    for (const auto& r : records) k += r.passed ? 0 : 1;
    return k;
}

inline std::string verification_text(const std::vector<CheckRecord>& records, int n) {
    std::string s;
    for (const auto& r : records) {
        s += "CHECK " + r.name + " n=" + std::to_string(r.n) + " i=" + (r.i ? std::to_string(*r.i) : "-") +
             (r.passed ? " PASS" : " FAIL") + "\n";
    }
    const auto failed = failure_count(records);
    s += failed == 0 ? "VERIFIED n=" + std::to_string(n) + "\n" : "FAILED " + std::to_string(failed) + " checks\n";
    return s;
}

inline nlohmann::ordered_json verification_json(const std::vector<CheckRecord>& records, int n) {
    nlohmann::ordered_json out;
    out["n"] = n;
    auto checks = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json rec;
        rec["name"] = r.name;
        rec["n"] = r.n;
        rec["i"] = r.i ? nlohmann::ordered_json(*r.i) : nlohmann::ordered_json(nullptr);
        rec["status"] = r.passed ? "PASS" : "FAIL";
        if (!r.detail.empty()) rec["detail"] = r.detail;
        checks.push_back(std::move(rec));
    }
    out["checks"] = std::move(checks);
    const auto failed = failure_count(records);
    out["verified"] = failed == 0;
    out["failed"] = failed;
    return out;
}

}  // namespace ogmirror
