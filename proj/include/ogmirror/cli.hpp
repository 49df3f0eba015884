/**
 * @file cli.hpp
 * @brief Front end behind the `ogmirror` executable.
 *
 * Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
 */
#pragma once

#include "ogmirror/diagram.hpp"
#include "ogmirror/dot.hpp"
#include "ogmirror/potential.hpp"
#include "ogmirror/torus.hpp"
#include "ogmirror/verify.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace ogmirror {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

inline bool format_allowed(const std::string& fmt, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed) {
        if (fmt == a) return true;
    }
    return false;
}

inline std::string diagram_list_json(const std::vector<Diagram>& ds) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& d : ds) {
        auto rows = d.rows();
        arr.push_back(std::vector<int>(rows.begin(), rows.end()));
    }
    return arr.dump(2) + "\n";
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Canonical mirror superpotentials for maximal orthogonal Grassmannians", "ogmirror"};
    app.require_subcommand(1);

    int n = 0;
    int from = 0;
    int to = 0;
    std::string format;
    std::string diagram_text;

    const auto rank_check = CLI::Range(2, kMaxRank);
    const auto fmt_check = CLI::IsMember({"text", "json", "latex", "dot"});

    auto* diagrams = app.add_subcommand("diagrams", "list every valid diagram in lexicographic order");
    diagrams->add_option("--n", n, "rank parameter")->required()->check(rank_check);
    diagrams->add_option("--format", format, "text|json")->check(fmt_check);

    auto* potential = app.add_subcommand("potential", "print the canonical superpotential");
    potential->add_option("--n", n, "rank parameter")->required()->check(rank_check);
    potential->add_option("--format", format, "text|json|latex")->check(fmt_check);

    auto* restrict = app.add_subcommand("restrict", "restrict a Pluecker coordinate to the torus");
    restrict->add_option("--n", n, "rank parameter")->required()->check(rank_check);
    restrict->add_option("--diagram", diagram_text, "row lengths, e.g. 1,2,1 or 'empty'")->required();
    restrict->add_option("--format", format, "text|json|latex")->check(fmt_check);

    auto* verify = app.add_subcommand("verify", "run the invariant suite");
    auto* verify_n = verify->add_option("--n", n, "rank parameter")->check(rank_check);
    auto* verify_from = verify->add_option("--from", from, "first rank of a sweep")->check(rank_check);
    auto* verify_to = verify->add_option("--to", to, "last rank of a sweep")->check(rank_check);
    verify_from->needs(verify_to);
    verify_to->needs(verify_from);
    verify_n->excludes(verify_from);
    verify_n->excludes(verify_to);
    verify->add_option("--format", format, "text|json")->check(fmt_check);

    auto* hasse = app.add_subcommand("hasse", "emit the Hasse diagram of the weight poset");
    hasse->add_option("--n", n, "rank parameter")->required()->check(rank_check);
    hasse->add_option("--format", format, "dot|text|json")->check(fmt_check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    auto reject_format = [&](const char* cmd) {
        err << "error: format '" << format << "' is not available for " << cmd << "\n";
        return kExitUsage;
    };

    try {
        if (diagrams->parsed()) {
            if (format.empty()) format = "text";
            if (!detail::format_allowed(format, {"text", "json"})) return reject_format("diagrams");
            const auto ds = enumerate_diagrams(Rank(n));
            if (format == "json") {
                out << detail::diagram_list_json(ds);
            } else {
                for (const auto& d : ds) out << d.to_string() << "\n";
            }
            return kExitOk;
        }

        if (potential->parsed()) {
            if (format.empty()) format = "text";
            if (!detail::format_allowed(format, {"text", "json", "latex"})) return reject_format("potential");
            const auto terms = superpotential(Rank(n));
            if (format == "json") {
                out << superpotential_json(terms).dump(2) << "\n";
            } else if (format == "latex") {
                out << superpotential_latex(terms) << "\n";
            } else {
                out << superpotential_text(terms);
            }
            return kExitOk;
        }

        if (restrict->parsed()) {
            if (format.empty()) format = "text";
            if (!detail::format_allowed(format, {"text", "json", "latex"})) return reject_format("restrict");
            const Rank rank(n);
            Diagram d(rank);
            try {
                d = parse_diagram(diagram_text, rank);
            } catch (const ParseError& e) {
                err << "error: " << e.what() << "\n";
                return kExitUsage;
            } catch (const InvalidDiagram& e) {
                err << "error: invalid diagram: " << e.what() << "\n";
                return kExitUsage;
            }
            const Polynomial r = restrict_plucker(rank, d);
            if (format == "json") {
                nlohmann::ordered_json doc;
                doc["n"] = n;
                doc["diagram"] = d.to_string();
                doc["restriction"] = r.to_json();
                out << doc.dump(2) << "\n";
            } else if (format == "latex") {
                out << Variable::plucker(d).latex() << "|_{X^\\circ} = " << r.to_latex() << "\n";
            } else {
                out << r.to_text() << "\n";
            }
            return kExitOk;
        }

        if (verify->parsed()) {
            if (format.empty()) format = "text";
            if (!detail::format_allowed(format, {"text", "json"})) return reject_format("verify");
            if (verify_n->count() == 0 && verify_from->count() == 0) {
                err << "error: verify needs --n or --from/--to\n";
                return kExitUsage;
            }
            if (verify_n->count()) {
                from = to = n;
            } else if (from > to) {
                err << "error: --from must not exceed --to\n";
                return kExitUsage;
            }
            const auto results = run_verification_range(from, to);
            std::size_t failed = 0;
            if (format == "json") {
                auto arr = nlohmann::ordered_json::array();
                for (std::size_t k = 0; k < results.size(); ++k) {
                    arr.push_back(verification_json(results[k], from + static_cast<int>(k)));
                    failed += failure_count(results[k]);
                }
                out << arr.dump(2) << "\n";
            } else {
                for (std::size_t k = 0; k < results.size(); ++k) {
                    out << verification_text(results[k], from + static_cast<int>(k));
                    failed += failure_count(results[k]);
                }
            }
            return failed == 0 ? kExitOk : kExitFailed;
        }

        if (hasse->parsed()) {
            if (format.empty()) format = "dot";
            if (!detail::format_allowed(format, {"dot", "text", "json"})) return reject_format("hasse");
            const Rank rank(n);
            if (format == "dot") {
                out << hasse_dot(rank);
            } else if (format == "json") {
                out << hasse_json(rank).dump(2) << "\n";
            } else {
                for (const auto& e : hasse_edges(rank)) {
                    out << e.from.to_string() << " -> " << e.to.to_string() << " " << e.label << "\n";
                }
            }
            return kExitOk;
        }
    } catch (const StructuralFault& e) {
        err << "structural fault: " << e.what() << "\n";
        return kExitFailed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace ogmirror
