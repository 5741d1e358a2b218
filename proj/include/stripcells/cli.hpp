#pragma once

// Command-line surface.  Every subcommand is a thin wrapper over the library
// so the whole surface stays unit-testable in process.
//
// Exit codes: 0 success, 1 bad input or unsupported request, 2 mathematical
// certification failure (a witness vanished or critical counts missed the
// Betti numbers).

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stripcells/homology.hpp"
#include "stripcells/morse.hpp"
#include "stripcells/ring.hpp"
#include "stripcells/symbol.hpp"
#include "stripcells/tc.hpp"
#include "stripcells/verify.hpp"

namespace stripcells::cli {

using nlohmann::json;

namespace detail {

inline WheelOrder parse_order(const std::string& text) {
    if (text == "size-axle") return WheelOrder::size_then_axle;
    if (text == "axle") return WheelOrder::axle_only;
    throw std::invalid_argument("unknown wheel order \"" + text + "\" (size-axle|axle)");
}

inline std::vector<Generator> parse_factors(const std::string& text, const StripParams& p,
                                            WheelOrder order) {
    std::vector<Generator> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        std::istringstream pair(item);
        int i = 0, j = 0;
        if (!(pair >> i >> j))
            throw std::invalid_argument("malformed factor \"" + item +
                                        "\"; expected \"i j\" with i > j");
        std::string rest;
        if (pair >> rest)
            throw std::invalid_argument("malformed factor \"" + item + "\": trailing \"" +
                                        rest + "\"");
        out.push_back(generator(i, j, p, order));
    }
    if (out.empty()) throw std::invalid_argument("empty factor list");
    return out;
}

inline json witness_json(const std::vector<BasisPair>& witness) {
    json arr = json::array();
    for (const BasisPair& bp : witness)
        arr.push_back(json::array({format_symbol(bp.left), format_symbol(bp.right)}));
    return arr;
}

inline json report_json(const TCReport& rep) {
    json j;
    j["n"] = rep.n;
    j["w"] = rep.w;
    j["m"] = rep.m;
    j["dim"] = rep.dim;
    j["zdcl"] = rep.zdcl ? json(*rep.zdcl) : json(nullptr);
    j["tc_lower"] = rep.lower;
    j["tc_upper"] = rep.upper;
    j["tc"] = rep.value ? json(*rep.value) : json(nullptr);
    j["branch"] = to_string(rep.branch);
    j["certified"] = rep.certified;
    j["witness"] = witness_json(rep.witness);
    return j;
}

inline std::string instance_line(const InstanceResult& r) {
    auto counts = [](const std::vector<std::size_t>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(v[i]);
        }
        return s;
    };
    std::string line = "(n=" + std::to_string(r.n) + ",w=" + std::to_string(r.w) + ")";
    line += " cells=" + std::to_string(r.total_cells);
    line += std::string(" dd=") + (r.boundary_square_zero ? "ok" : "FAIL");
    line += std::string(" euler=") + (r.euler_consistent ? "ok" : "FAIL");
    line += " betti=[" + counts(r.betti) + "]";
    line += std::string(" crit[size-axle]=") + (r.size_axle_matches ? "ok" : "mismatch");
    line += std::string(" crit[axle]=") + (r.axle_only_matches ? "ok" : "mismatch");
    if (r.zdcl_ok) line += std::string(" zdcl=") + (*r.zdcl_ok ? "ok" : "FAIL");
    line += " tc=" + (r.tc_value ? std::to_string(*r.tc_value) : std::string("?")) +
            (r.tc_formula_ok ? " ok" : " FAIL");
    return line;
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact invariants of disk configurations in an infinite strip"};
    app.require_subcommand(1);

    int n = 0, w = 0;
    int dim_flag = -1;
    std::string format = "table";
    std::string order_text = "size-axle";
    std::string factors_text;
    std::string symbol_text;
    std::string suite = "quick";
    long budget = 200000;
    int dump_dim = -1;
    bool explain = false;
    bool do_search = false;
    bool mutate_follower_rule = false;

    auto add_nw = [&](CLI::App* cmd) {
        cmd->add_option("-n", n, "number of disks")->required()->check(CLI::PositiveNumber);
        cmd->add_option("-w", w, "strip width (>= 2)")->required()->check(CLI::PositiveNumber);
    };
    auto add_order = [&](CLI::App* cmd) {
        cmd->add_option("--wheel-order", order_text, "wheel order (size-axle|axle)")
            ->check(CLI::IsMember({"size-axle", "axle"}));
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format (table|json|csv)")
            ->check(CLI::IsMember({"table", "json", "csv"}));
    };

    CLI::App* cells_cmd = app.add_subcommand("cells", "list the cells of the complex");
    add_nw(cells_cmd);
    add_format(cells_cmd);
    cells_cmd->add_option("--dim", dim_flag, "restrict to one dimension");

    CLI::App* dim_cmd = app.add_subcommand("dim", "dimension of the complex");
    add_nw(dim_cmd);
    add_format(dim_cmd);

    CLI::App* faces_cmd = app.add_subcommand("faces", "codimension-1 faces of a symbol");
    faces_cmd->add_option("--symbol", symbol_text, "symbol text, e.g. \"3 1|2\"")->required();
    add_format(faces_cmd);

    CLI::App* betti_cmd = app.add_subcommand("betti", "Betti numbers over GF(2)");
    add_nw(betti_cmd);
    add_format(betti_cmd);
    betti_cmd->add_option("--dump-boundary", dump_dim,
                          "print the boundary matrix of this dimension instead");

    CLI::App* critical_cmd = app.add_subcommand("critical", "critical cells");
    add_nw(critical_cmd);
    add_format(critical_cmd);
    add_order(critical_cmd);
    critical_cmd->add_option("--dim", dim_flag, "restrict to one dimension");
    critical_cmd->add_flag("--explain", explain, "explain the per-block classification");

    CLI::App* cup_cmd = app.add_subcommand("cup", "cup product of degree-1 generators");
    add_nw(cup_cmd);
    add_format(cup_cmd);
    add_order(cup_cmd);
    cup_cmd->add_option("--factors", factors_text, "factors \"i j;i j;...\"")->required();

    CLI::App* zdcl_cmd = app.add_subcommand("zdcl", "zero-divisor-cup-length certificate");
    add_nw(zdcl_cmd);
    add_format(zdcl_cmd);
    add_order(zdcl_cmd);
    zdcl_cmd->add_flag("--search", do_search, "also run the depth-first search");
    zdcl_cmd->add_option("--budget", budget, "search budget (extensions evaluated)");

    CLI::App* tc_cmd = app.add_subcommand("tc", "topological complexity report");
    add_nw(tc_cmd);
    add_format(tc_cmd);
    add_order(tc_cmd);

    CLI::App* verify_cmd = app.add_subcommand("verify", "cross-validate a suite of instances");
    add_format(verify_cmd);
    add_order(verify_cmd);
    verify_cmd->add_option("--suite", suite, "quick|full");
    verify_cmd->add_flag("--mutate-follower-rule", mutate_follower_rule,
                         "negative control: weaken the follower size rule to w");

    std::vector<const char*> argv;
    argv.push_back("stripcells");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        err << app.help();
        return 1;
    }

    try {
        WheelOrder order = detail::parse_order(order_text);

        if (*cells_cmd) {
            StripParams p(n, w);
            std::optional<int> dim;
            if (cells_cmd->count("--dim")) dim = dim_flag;
            std::vector<Symbol> cells = enumerate_cells(p, dim);
            if (format == "json") {
                json arr = json::array();
                for (const Symbol& s : cells) arr.push_back(format_symbol(s));
                out << arr.dump() << "\n";
            } else {
                if (format == "csv") out << "symbol\n";
                for (const Symbol& s : cells) out << format_symbol(s) << "\n";
            }
            return 0;
        }

        if (*dim_cmd) {
            StripParams p(n, w);
            if (format == "json")
                out << json{{"n", n}, {"w", w}, {"dim", dimension(p)}}.dump() << "\n";
            else
                out << dimension(p) << "\n";
            return 0;
        }

        if (*faces_cmd) {
            Symbol s = parse_symbol(symbol_text);
            auto fs = faces(s);
            if (format == "json") {
                json arr = json::array();
                for (const auto& [f, mult] : fs)
                    arr.push_back({{"face", format_symbol(f)}, {"multiplicity", mult}});
                out << arr.dump() << "\n";
            } else {
                if (format == "csv") out << "face,multiplicity\n";
                for (const auto& [f, mult] : fs)
                    out << format_symbol(f) << (format == "csv" ? "," : "\t")
                        << mult << "\n";
            }
            return 0;
        }

        if (*betti_cmd) {
            StripParams p(n, w);
            if (betti_cmd->count("--dump-boundary")) {
                out << dump_matrix(boundary_matrix(p, dump_dim));
                return 0;
            }
            BettiVector b = betti(p);
            if (format == "json") {
                out << json{{"n", n}, {"w", w}, {"betti", b.betti},
                            {"euler", euler_characteristic(p)}}.dump() << "\n";
            } else if (format == "csv") {
                out << "dim,betti\n";
                for (std::size_t j = 0; j < b.betti.size(); ++j)
                    out << j << "," << b.betti[j] << "\n";
            } else {
                for (std::size_t j = 0; j < b.betti.size(); ++j)
                    out << (j ? " " : "") << b.betti[j];
                out << "\n";
            }
            return 0;
        }

        if (*critical_cmd) {
            StripParams p(n, w);
            std::optional<int> dim;
            if (critical_cmd->count("--dim")) dim = dim_flag;
            auto cells = critical_cells(p, dim, order);
            if (format == "json") {
                json arr = json::array();
                for (const CriticalCell& c : cells) {
                    json item = {{"symbol", format_symbol(c.symbol)},
                                 {"follower_free", c.follower_free}};
                    if (explain) item["classification"] =
                        explain_classification(c.symbol, p.w, order);
                    arr.push_back(std::move(item));
                }
                out << arr.dump() << "\n";
            } else if (format == "csv") {
                out << "symbol,follower_free\n";
                for (const CriticalCell& c : cells)
                    out << format_symbol(c.symbol) << ","
                        << (c.follower_free ? "true" : "false") << "\n";
            } else {
                for (const CriticalCell& c : cells) {
                    out << format_symbol(c.symbol) << "\n";
                    if (explain)
                        for (const std::string& line :
                             explain_classification(c.symbol, p.w, order))
                            out << "    " << line << "\n";
                }
            }
            return 0;
        }

        if (*cup_cmd) {
            StripParams p(n, w);
            std::vector<Generator> gens = detail::parse_factors(factors_text, p, order);
            CohClass c = multiply_generators(gens, p, order);
            if (format == "json") {
                json terms = json::array();
                for (const Symbol& t : c.terms) terms.push_back(format_symbol(t));
                out << json{{"degree", c.degree}, {"terms", terms}}.dump() << "\n";
            } else {
                if (c.is_zero()) {
                    out << "0\n";
                } else {
                    for (std::size_t i = 0; i < c.terms.size(); ++i)
                        out << (i ? " + " : "") << format_symbol(c.terms[i]);
                    out << "\n";
                }
            }
            return 0;
        }

        if (*zdcl_cmd) {
            StripParams p(n, w);
            ZdclCertificate cert = zdcl_certificate(p, order);
            std::optional<ZdclSearchResult> search;
            if (do_search) search = zdcl_search(p, order, budget);
            if (format == "json") {
                json j = {{"n", n}, {"w", w}, {"zdcl", cert.length},
                          {"witness", detail::witness_json(cert.witness)}};
                if (search)
                    j["search"] = {{"length", search->length}, {"complete", search->complete}};
                out << j.dump() << "\n";
            } else {
                out << "zdcl " << cert.length << "\n";
                for (const BasisPair& bp : cert.witness)
                    out << "  " << format_symbol(bp.left) << "  (x)  "
                        << format_symbol(bp.right) << "\n";
                if (search)
                    out << "search best " << search->length
                        << (search->complete ? " (complete)" : " (budget exhausted)") << "\n";
            }
            return 0;
        }

        if (*tc_cmd) {
            StripParams p(n, w);
            TCReport rep = tc_report(p, order);
            if (format == "json") {
                out << detail::report_json(rep).dump() << "\n";
            } else if (format == "csv") {
                out << "n,w,m,dim,zdcl,tc_lower,tc_upper,tc,branch,certified\n"
                    << rep.n << "," << rep.w << "," << rep.m << "," << rep.dim << ","
                    << (rep.zdcl ? std::to_string(*rep.zdcl) : "") << ","
                    << rep.lower << "," << rep.upper << ","
                    << (rep.value ? std::to_string(*rep.value) : "") << ","
                    << to_string(rep.branch) << ","
                    << (rep.certified ? "true" : "false") << "\n";
            } else {
                out << "TC(conf(" << rep.n << "," << rep.w << ")) = "
                    << (rep.value ? std::to_string(*rep.value) : "?")
                    << "  [lower " << rep.lower << ", upper " << rep.upper << ", "
                    << to_string(rep.branch)
                    << (rep.certified ? ", certified]" : ", cited]") << "\n";
            }
            return 0;
        }

        if (*verify_cmd) {
            SuiteResult suite_result = verify_suite(suite, order, mutate_follower_rule);
            if (format == "json") {
                json arr = json::array();
                for (const InstanceResult& r : suite_result.instances) {
                    arr.push_back({{"n", r.n},
                                   {"w", r.w},
                                   {"cells", r.total_cells},
                                   {"boundary_square_zero", r.boundary_square_zero},
                                   {"euler_consistent", r.euler_consistent},
                                   {"betti", r.betti},
                                   {"critical_size_axle", r.critical_size_axle},
                                   {"critical_axle_only", r.critical_axle_only},
                                   {"zdcl_ok", r.zdcl_ok ? json(*r.zdcl_ok) : json(nullptr)},
                                   {"tc", r.tc_value ? json(*r.tc_value) : json(nullptr)},
                                   {"ok", r.ok()}});
                }
                json j = {{"suite", suite},
                          {"instances", arr},
                          {"all_ok", suite_result.all_ok},
                          {"validated_wheel_order",
                           suite_result.validated_order
                               ? json(to_string(*suite_result.validated_order))
                               : json(nullptr)}};
                out << j.dump() << "\n";
            } else {
                for (const InstanceResult& r : suite_result.instances)
                    out << detail::instance_line(r) << "\n";
                out << "validated wheel order: "
                    << (suite_result.validated_order
                            ? to_string(*suite_result.validated_order)
                            : std::string("none"))
                    << "\n";
                std::size_t ok_count = 0;
                for (const InstanceResult& r : suite_result.instances)
                    if (r.ok()) ++ok_count;
                out << "instances ok: " << ok_count << "/" << suite_result.instances.size()
                    << "\n";
            }
            return suite_result.all_ok ? 0 : 2;
        }
    } catch (const certification_error& e) {
        err << "certification failure: " << e.what() << "\n";
        return 2;
    } catch (const unsupported_product& e) {
        err << "unsupported product: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}

} // namespace stripcells::cli
