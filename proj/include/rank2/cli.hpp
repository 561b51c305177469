#pragma once

// Command-line front end: sequence values, matching polynomials, graph
// export and identity verification. run() is the whole program minus
// argv packaging so the tests can drive it in-process.
//
// Exit codes: 0 success (and all checks passed), 1 verification failure,
// 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "rank2/closed_forms.hpp"
#include "rank2/families.hpp"
#include "rank2/graph_io.hpp"
#include "rank2/matching.hpp"
#include "rank2/recurrence.hpp"
#include "rank2/report_io.hpp"
#include "rank2/verify.hpp"

namespace rank2::cli {

// Renders a cluster variable the way the tables print it: expanded
// numerator over a monomial denominator, with a pure-x2 block collapsed to
// (x2+1)^k when it is exactly that power. Terms are ordered by ascending
// x1 then x2 exponent.
inline std::string table_form(const Laurent& x) {
    if (x.is_zero()) return "0";
    const std::int64_t d1 = std::max<std::int64_t>(0, -*x.min_e1());
    const std::int64_t d2 = std::max<std::int64_t>(0, -*x.min_e2());
    const Laurent num = x.shifted(d1, d2);

    std::vector<Exponents> order;
    for (const auto& [e, c] : num.terms()) order.push_back(e);
    std::sort(order.begin(), order.end(), [](const Exponents& a, const Exponents& b) {
        if (a.e1 != b.e1) return a.e1 < b.e1;
        return a.e2 < b.e2;
    });

    Laurent block;  // the x1-free part
    for (const auto& e : order)
        if (e.e1 == 0) block.add_term(e, num.coeff(e.e1, e.e2));
    std::int64_t block_pow = 0;
    if (!block.is_zero()) {
        const std::int64_t k = order.front().e1 == 0 ? [&] {
            std::int64_t top = 0;
            for (const auto& [e, c] : block.terms()) top = std::max(top, e.e2);
            return top;
        }()
                                                     : 0;
        if (k >= 1 && block == pow(Laurent::x2() + 1, static_cast<std::uint64_t>(k)))
            block_pow = k;
    }

    std::ostringstream os;
    bool first = true;
    int pieces = 0;
    auto emit = [&](const std::string& term, bool negative) {
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        os << term;
        ++pieces;
    };
    if (block_pow > 0) {
        std::string t = "(x2+1)";
        if (block_pow > 1) t += "^" + std::to_string(block_pow);
        emit(t, false);
    }
    for (const auto& e : order) {
        if (block_pow > 0 && e.e1 == 0) continue;
        const Int c = num.coeff(e.e1, e.e2);
        const Int mag = c < 0 ? Int(-c) : c;
        std::ostringstream term;
        bool printed = false;
        if (mag != 1 || (e.e1 == 0 && e.e2 == 0)) {
            term << mag;
            printed = true;
        }
        auto var = [&](const char* name, std::int64_t exp) {
            if (exp == 0) return;
            if (printed) term << "*";
            term << name;
            if (exp != 1) term << "^" << exp;
            printed = true;
        };
        var("x1", e.e1);
        var("x2", e.e2);
        emit(term.str(), c < 0);
    }

    if (d1 == 0 && d2 == 0) return os.str();
    std::ostringstream den;
    bool dprinted = false;
    auto dvar = [&](const char* name, std::int64_t exp) {
        if (exp == 0) return;
        if (dprinted) den << "*";
        den << name;
        if (exp != 1) den << "^" << exp;
        dprinted = true;
    };
    dvar("x1", d1);
    dvar("x2", d2);
    const std::string num_str = pieces == 1 ? os.str() : "(" + os.str() + ")";
    return num_str + " / (" + den.str() + ")";
}

namespace detail {

inline nlohmann::ordered_json terms_json(const Laurent& p) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [e1, e2, c] : json_terms(p)) arr.push_back({e1, e2, c});
    return arr;
}

inline nlohmann::ordered_json xn_json(int b, int c, std::int64_t n, const Laurent& x) {
    const std::int64_t d1 = x.is_zero() ? 0 : std::max<std::int64_t>(0, -*x.min_e1());
    const std::int64_t d2 = x.is_zero() ? 0 : std::max<std::int64_t>(0, -*x.min_e2());
    nlohmann::ordered_json j;
    j["b"] = b;
    j["c"] = c;
    j["n"] = n;
    j["laurent"] = terms_json(x);
    j["numerator"] = terms_json(x.shifted(d1, d2));
    j["denominator"] = {d1, d2};
    return j;
}

// The (1,4) and (2,2) graph families keyed by the exchange exponents.
inline WeightedGraph family_graph(int b, int c, std::int64_t n) {
    if (b == 2 && c == 2) return build_G22(n);
    if (b == 1 && c == 4) return build_G14(n);
    throw CLI::ValidationError("graphs exist for (b,c) = (2,2) or (1,4) only");
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"rank-two cluster variables, matching polynomials and identity checks"};
    app.require_subcommand(1);

    int b = 1, c = 4;
    std::int64_t n = 0, from = 0, to = 0;
    bool at_ones = false, as_json = false, expanded = false, suite = false;
    int max_index = 10;
    std::string format = "json", identity_name_arg;

    auto add_case = [&](CLI::App* cmd) {
        cmd->add_option("--b", b, "odd-index exchange exponent")->required();
        cmd->add_option("--c", c, "even-index exchange exponent")->required();
    };

    CLI::App* cmd_xn = app.add_subcommand("xn", "print one cluster variable");
    add_case(cmd_xn);
    cmd_xn->add_option("--n", n, "sequence index")->required();
    cmd_xn->add_flag("--expanded", expanded, "flat Laurent form instead of numerator/denominator");
    cmd_xn->add_flag("--json", as_json);

    CLI::App* cmd_seq = app.add_subcommand("sequence", "print a range of cluster variables");
    add_case(cmd_seq);
    cmd_seq->add_option("--from", from)->required();
    cmd_seq->add_option("--to", to)->required();
    cmd_seq->add_flag("--at-ones", at_ones, "evaluate at x1 = x2 = 1");
    cmd_seq->add_flag("--expanded", expanded);
    cmd_seq->add_flag("--json", as_json);

    CLI::App* cmd_table = app.add_subcommand("table", "numerator/denominator table of x_n");
    add_case(cmd_table);
    cmd_table->add_option("--from", from)->required();
    cmd_table->add_option("--to", to)->required();
    cmd_table->add_flag("--json", as_json);

    CLI::App* cmd_match = app.add_subcommand("matchpoly", "matching polynomial of G_n");
    add_case(cmd_match);
    cmd_match->add_option("--n", n, "family index")->required();
    cmd_match->add_flag("--json", as_json);

    CLI::App* cmd_graph = app.add_subcommand("graph", "export G_n");
    add_case(cmd_graph);
    cmd_graph->add_option("--n", n, "family index")->required();
    cmd_graph->add_option("--format", format, "dot or json")->capture_default_str();
    cmd_graph->add_flag("--json", as_json, "same as --format json");

    CLI::App* cmd_verify = app.add_subcommand("verify", "check the cluster-variable identities exactly");
    cmd_verify->add_flag("--suite", suite, "run every identity");
    cmd_verify->add_option("--max", max_index, "index bound for --suite")->capture_default_str();
    cmd_verify->add_option("--identity", identity_name_arg, "single identity name");
    cmd_verify->add_option("--from", from, "range start for --identity");
    cmd_verify->add_option("--to", to, "range end for --identity");
    cmd_verify->add_flag("--json", as_json);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_xn->parsed()) {
            SequenceCache cache(CaseParams{b, c});
            const Laurent& x = cache.x_at(n);
            if (as_json) out << detail::xn_json(b, c, n, x).dump(2) << "\n";
            else out << (expanded ? x.to_string() : table_form(x)) << "\n";
            return 0;
        }
        if (cmd_seq->parsed() || cmd_table->parsed()) {
            if (to < from) throw CLI::ValidationError("--to must be at least --from");
            SequenceCache cache(CaseParams{b, c});
            if (cmd_seq->parsed() && at_ones) {
                if (as_json) {
                    auto arr = nlohmann::ordered_json::array();
                    for (std::int64_t i = from; i <= to; ++i) arr.push_back(cache.eval_at_ones(i).str());
                    out << arr.dump(2) << "\n";
                } else {
                    for (std::int64_t i = from; i <= to; ++i)
                        out << (i == from ? "" : " ") << cache.eval_at_ones(i).str();
                    out << "\n";
                }
                return 0;
            }
            if (as_json) {
                auto arr = nlohmann::ordered_json::array();
                for (std::int64_t i = from; i <= to; ++i)
                    arr.push_back(detail::xn_json(b, c, i, cache.x_at(i)));
                out << arr.dump(2) << "\n";
            } else {
                for (std::int64_t i = from; i <= to; ++i) {
                    const Laurent& x = cache.x_at(i);
                    out << "x_" << i << " = "
                        << (cmd_seq->parsed() && expanded ? x.to_string() : table_form(x)) << "\n";
                }
            }
            return 0;
        }
        if (cmd_match->parsed()) {
            const WeightedGraph g = detail::family_graph(b, c, n);
            const Laurent p = match_polynomial(g);
            if (as_json) {
                nlohmann::ordered_json j;
                j["tag"] = g.tag;
                j["polynomial"] = detail::terms_json(p);
                j["count"] = match_count(g).str();
                out << j.dump(2) << "\n";
            } else {
                out << p.to_string() << "\n";
            }
            return 0;
        }
        if (cmd_graph->parsed()) {
            out << export_graph(detail::family_graph(b, c, n), as_json ? "json" : format);
            return 0;
        }
        if (cmd_verify->parsed()) {
            Verifier verifier;
            std::vector<VerificationReport> reports;
            if (suite) {
                reports = verifier.run_full_suite(max_index);
            } else if (!identity_name_arg.empty()) {
                if (cmd_verify->count("--from") == 0 || cmd_verify->count("--to") == 0)
                    throw CLI::ValidationError("--identity needs --from and --to");
                reports.push_back(
                    verifier.verify_identity(identity_from_name(identity_name_arg), from, to));
            } else {
                throw CLI::ValidationError("verify needs --suite or --identity");
            }
            bool all_passed = true;
            for (const auto& r : reports) all_passed = all_passed && r.passed;
            if (as_json) {
                out << reports_to_json(reports).dump(2) << "\n";
            } else {
                for (const auto& r : reports) {
                    out << r.identity << " [" << r.lo << "," << r.hi << "] "
                        << (r.passed ? "PASS" : "FAIL (" + std::to_string(r.failures.size()) +
                                                    " failures)")
                        << "\n";
                    for (const auto& f : r.failures)
                        out << "  n=" << f.n << "\n    left:  " << f.left
                            << "\n    right: " << f.right << "\n";
                }
            }
            return all_passed ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const UnknownIdentity& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const UnknownFormat& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const IndexOutOfFamily& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace rank2::cli
