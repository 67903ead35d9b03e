#pragma once

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hgr/diagram_json.hpp"
#include "hgr/invariants.hpp"
#include "hgr/layout.hpp"
#include "hgr/svg.hpp"

namespace hgr::cli {

// Exit codes, fixed by the interface contract.
enum ExitCode {
    kOk = 0,
    kInvalidLayout = 1,
    kNotQSphere = 2,
    kParseError = 3,
    kMatchingMismatch = 4,
    kCapExceeded = 5,
    kIoError = 6,
    kUsage = 64,
    kInternal = 70,
};

struct Input {
    std::optional<RectLayout> layout;      // geometric input
    DerivedDiagram derived;                // diagram + matching (derived or parsed)
    std::string path;
};

// Thrown after a validation report has already been printed.
struct ValidationFailed {};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (!in.good() && !in.eof()) throw IoError("cannot read " + path);
    return ss.str();
}

// Load either a rectangular layout (.hgr) or a combinatorial diagram document;
// the two are distinguished by the presence of "alpha_orders".
inline Input load_input(const std::string& path, bool validate, std::ostream& err) {
    Input in;
    in.path = path;
    std::string text = read_file(path);
    JValue doc = parse_exact_json(text);
    if (looks_like_combinatorial(doc)) {
        ParsedDiagram pd = parse_diagram_json(doc);
        ValidationReport rep = validate_diagram(pd.diagram);
        if (validate && !rep.pass()) {
            for (const auto& v : rep.violations)
                err << "invalid: [" << v.rule << "] " << v.entity << ": " << v.message << "\n";
            throw ValidationFailed{};
        }
        in.derived.diagram = std::move(pd.diagram);
        in.derived.matching = std::move(pd.matching);
        return in;
    }
    RectLayout l = parse_layout(text);
    if (validate) {
        ValidationReport rep = validate_layout(l);
        if (!rep.pass()) {
            for (const auto& v : rep.violations)
                err << "invalid: [" << v.rule << "] " << v.entity << ": " << v.message << "\n";
            throw ValidationFailed{};
        }
    }
    in.derived = derive_combinatorics(l);
    in.layout = std::move(l);
    return in;
}


inline std::string matching_ids(const CombinatorialDiagram& d, const Matching& m) {
    std::string s;
    for (int k : m.crossings) {
        if (!s.empty()) s += ",";
        s += d.crossings[k].id;
    }
    return s;
}

inline std::optional<Matching> parse_matching_flag(const CombinatorialDiagram& d,
                                                   const std::string& flag) {
    if (flag.empty()) return std::nullopt;
    std::vector<int> ids;
    std::stringstream ss(flag);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        ids.push_back(d.require(tok));
    }
    return make_matching(d, std::move(ids));
}

inline std::optional<BasepointChoice> parse_basepoints_flag(const CombinatorialDiagram& d,
                                                            const Matching& m,
                                                            const std::string& flag) {
    if (flag.empty()) return std::nullopt;
    BasepointChoice bp = default_basepoints(d, m);
    std::stringstream ss(flag);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw ParseError("--basepoints entries look like alpha1=c or b2=e");
        std::string curve = tok.substr(0, eq);
        int k = d.require(tok.substr(eq + 1));
        bool alpha;
        std::size_t digits;
        if (curve.rfind("alpha", 0) == 0) {
            alpha = true;
            digits = 5;
        } else if (curve.rfind("beta", 0) == 0) {
            alpha = false;
            digits = 4;
        } else if (curve.rfind("a", 0) == 0) {
            alpha = true;
            digits = 1;
        } else if (curve.rfind("b", 0) == 0) {
            alpha = false;
            digits = 1;
        } else {
            throw ParseError("--basepoints curve must start with alpha/beta/a/b");
        }
        std::string idx_str = curve.substr(digits);
        if (idx_str.empty() || idx_str.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("--basepoints curve index must be a number");
        int idx = std::stoi(idx_str);
        if (idx < 1 || idx > d.genus) throw ParseError("--basepoints curve index out of range");
        (alpha ? bp.alpha : bp.beta)[static_cast<std::size_t>(idx) - 1] = k;
    }
    return bp;
}

inline nlohmann::json report_to_json(const Input& in, const ThetaReport& rep) {
    nlohmann::json j;
    j["file"] = in.path;
    j["diagram_hash"] = rep.diagram_hash;
    const CombinatorialDiagram& d = in.derived.diagram;
    nlohmann::json m = nlohmann::json::array();
    for (int k : rep.matching.crossings) m.push_back(d.crossings[k].id);
    j["matching"] = m;
    nlohmann::json bp;
    for (int i = 1; i <= d.genus; ++i)
        bp["alpha" + std::to_string(i)] = d.crossings[rep.basepoints.alpha[i - 1]].id;
    for (int jj = 1; jj <= d.genus; ++jj)
        bp["beta" + std::to_string(jj)] = d.crossings[rep.basepoints.beta[jj - 1]].id;
    j["basepoints"] = bp;
    j["ell2"] = rep.ell2.str();
    j["lk"] = rep.lk.str();
    j["euler"] = rep.euler ? nlohmann::json(rep.euler->str()) : nlohmann::json();
    j["theta"] = rep.theta ? nlohmann::json(rep.theta->str()) : nlohmann::json();
    if (rep.p1) j["p1"] = rep.p1->str();
    return j;
}

struct Flags {
    std::string matching;
    std::string basepoints;
    std::string lambda;
    std::string format = "table";
    std::string output;
    bool decimal = false;
    bool no_labels = false;
    std::size_t cap = 4096;
};

inline void print_rational_row(std::ostream& out, const std::string& name, const Rational& v,
                               bool decimal) {
    out << "  " << name;
    for (std::size_t p = name.size(); p < 16; ++p) out << ' ';
    out << ": " << v.str();
    if (decimal) out << "  (~" << v.to_decimal_string(6) << ")";
    out << "\n";
}

inline int cmd_validate(const std::string& path, const Flags& flags, std::ostream& out,
                        std::ostream& err) {
    Input in = [&] {
        Input i;
        i.path = path;
        std::string text = read_file(path);
        JValue doc = parse_exact_json(text);
        if (looks_like_combinatorial(doc)) {
            ParsedDiagram pd = parse_diagram_json(doc);
            i.derived.diagram = std::move(pd.diagram);
        } else {
            i.layout = parse_layout(text);
        }
        return i;
    }();
    ValidationReport rep =
        in.layout ? validate_layout(*in.layout) : validate_diagram(in.derived.diagram);
    if (flags.format == "json") {
        nlohmann::json j;
        j["file"] = path;
        j["pass"] = rep.pass();
        nlohmann::json vs = nlohmann::json::array();
        for (const auto& v : rep.violations)
            vs.push_back({{"rule", v.rule}, {"entity", v.entity}, {"message", v.message}});
        j["violations"] = vs;
        out << j.dump(2) << "\n";
    } else {
        if (rep.pass()) {
            out << path << ": valid\n";
        } else {
            out << path << ": INVALID (" << rep.violations.size() << " violations)\n";
            for (const auto& v : rep.violations)
                out << "  [" << v.rule << "] " << v.entity << ": " << v.message << "\n";
        }
    }
    (void)err;
    return rep.pass() ? kOk : kInvalidLayout;
}

inline int cmd_compute(const std::string& path, const Flags& flags, std::ostream& out,
                       std::ostream& err) {
    Input in = load_input(path, /*validate=*/true, err);
    const CombinatorialDiagram& d = in.derived.diagram;

    std::optional<Matching> override_m = parse_matching_flag(d, flags.matching);
    std::optional<Matching> use;
    if (override_m)
        use = override_m;
    else if (in.derived.matching)
        use = in.derived.matching;
    if (!use)
        throw MatchingMismatch("no matching: the input carries none and --matching was not given");

    std::optional<BasepointChoice> bp = parse_basepoints_flag(d, *use, flags.basepoints);
    std::optional<Rational> lambda;
    if (!flags.lambda.empty()) lambda = Rational::parse(flags.lambda);

    ThetaReport rep = compute_theta(d, *use, in.derived.matching, bp, lambda);

    if (flags.format == "json") {
        out << report_to_json(in, rep).dump(2) << "\n";
    } else {
        out << "theta report for " << path << "\n";
        out << "  diagram hash    : " << rep.diagram_hash << "\n";
        out << "  matching        : " << matching_ids(d, rep.matching) << "\n";
        std::string bps;
        for (int i = 1; i <= d.genus; ++i)
            bps += (bps.empty() ? "" : " ") + ("alpha" + std::to_string(i)) + "=" +
                   d.crossings[rep.basepoints.alpha[i - 1]].id;
        for (int j = 1; j <= d.genus; ++j)
            bps += (bps.empty() ? "" : " ") + ("beta" + std::to_string(j)) + "=" +
                   d.crossings[rep.basepoints.beta[j - 1]].id;
        out << "  basepoints      : " << bps << "\n";
        print_rational_row(out, "ell2", rep.ell2, flags.decimal);
        print_rational_row(out, "lk", rep.lk, flags.decimal);
        if (rep.euler) {
            print_rational_row(out, "e", *rep.euler, flags.decimal);
            print_rational_row(out, "theta", *rep.theta, flags.decimal);
        } else {
            out << "  e               : unavailable (matching differs from the layout's)\n";
            out << "  theta           : unavailable\n";
        }
        if (rep.p1) print_rational_row(out, "p1", *rep.p1, flags.decimal);
    }
    if (!rep.theta) {
        err << "theta and e were not computed: the requested matching is not the one realized by "
               "the layout\n";
        return kMatchingMismatch;
    }
    return kOk;
}

inline int cmd_matchings(const std::string& path, const Flags& flags, std::ostream& out,
                         std::ostream& err) {
    Input in = load_input(path, /*validate=*/true, err);
    const CombinatorialDiagram& d = in.derived.diagram;
    std::vector<Matching> all = enumerate_matchings(d, flags.cap);

    RatMatrix J = j_matrix(d);
    nlohmann::json items = nlohmann::json::array();
    if (flags.format != "json") out << "matchings for " << path << " (" << all.size() << " found)\n";
    for (const Matching& m : all) {
        BasepointChoice bp = default_basepoints(d, m);
        EllTable table(d, J, bp);
        Rational lk = lk_parallel(d, J, table, m);
        bool layout_m = in.derived.matching && in.derived.matching->crossings == m.crossings;
        if (flags.format == "json") {
            nlohmann::json jm;
            nlohmann::json ids = nlohmann::json::array();
            for (int k : m.crossings) ids.push_back(d.crossings[k].id);
            jm["crossings"] = ids;
            jm["lk"] = lk.str();
            jm["theta_capable"] = layout_m;
            items.push_back(jm);
        } else {
            out << "  " << matching_ids(d, m) << "  lk = " << lk.str()
                << (layout_m ? "  [layout matching: theta-capable]" : "") << "\n";
        }
    }
    if (flags.format == "json") {
        nlohmann::json j;
        j["file"] = path;
        j["matchings"] = items;
        out << j.dump(2) << "\n";
    }
    return kOk;
}

inline int cmd_render(const std::string& path, const Flags& flags, std::ostream& out,
                      std::ostream& err) {
    Input in;
    in.path = path;
    std::string text = read_file(path);
    JValue doc = parse_exact_json(text);
    if (looks_like_combinatorial(doc))
        throw IoError("render needs a rectangular layout, not a combinatorial document");
    RectLayout l = parse_layout(text);
    RenderOptions opts;
    opts.labels = !flags.no_labels;
    std::string svg = render_svg(l, opts);
    if (flags.output.empty()) {
        out << svg;
    } else {
        std::ofstream f(flags.output, std::ios::binary);
        if (!f) throw IoError("cannot open " + flags.output + " for writing");
        f << svg;
        if (!f.good()) throw IoError("cannot write " + flags.output);
    }
    (void)err;
    return kOk;
}

inline int cmd_explain(const std::string& path, const Flags& flags, std::ostream& out,
                       std::ostream& err) {
    Input in = load_input(path, /*validate=*/true, err);
    const CombinatorialDiagram& d = in.derived.diagram;
    const int g = d.genus;
    RatMatrix J = j_matrix(d);

    std::optional<Matching> override_m = parse_matching_flag(d, flags.matching);
    std::optional<Matching> use = override_m ? override_m : in.derived.matching;
    if (!use)
        throw MatchingMismatch("no matching: the input carries none and --matching was not given");
    BasepointChoice bp = default_basepoints(d, *use);
    if (auto over = parse_basepoints_flag(d, *use, flags.basepoints)) bp = *over;
    EllTable table(d, J, bp);

    // Crossings in id order everywhere.
    std::vector<int> by_id(d.crossings.size());
    for (std::size_t k = 0; k < by_id.size(); ++k) by_id[k] = static_cast<int>(k);
    std::sort(by_id.begin(), by_id.end(),
              [&](int a, int b) { return d.crossings[a].id < d.crossings[b].id; });

    out << "explain " << path << "\n";
    out << "intersection matrix <alpha_i, beta_k>:\n";
    RatMatrix A = intersection_matrix(d);
    for (int i = 0; i < g; ++i) {
        out << " ";
        for (int k = 0; k < g; ++k) out << " " << A.at(i, k).str();
        out << "\n";
    }
    for (int j = 1; j <= g; ++j)
        for (int i = 1; i <= g; ++i)
            out << "J[" << j << "][" << i << "] = " << J.at(j - 1, i - 1).str() << "\n";

    for (int a : by_id)
        for (int b : by_id)
            out << "ell(" << d.crossings[a].id << "," << d.crossings[b].id
                << ") = " << table.ell(a, b).str() << "\n";

    bool have_degrees = d.arc_half_turns.has_value();
    bool matching_is_layouts =
        in.derived.matching && in.derived.matching->crossings == use->crossings;
    if (have_degrees) {
        for (int j = 1; j <= g; ++j) {
            const auto& ord = d.beta_orders[j - 1];
            const auto& ht = beta_arc_half_turns(d, j);
            for (std::size_t p = 0; p < ord.size(); ++p) {
                int from = ord[p];
                int to = ord[(p + 1) % ord.size()];
                out << "d_e(arc beta_" << j << ": " << d.crossings[from].id << " -> "
                    << d.crossings[to].id << ") = " << ht[p].value().str() << "\n";
            }
        }
        for (int j = 1; j <= g; ++j)
            out << "d_e(beta_" << j << ") = " << beta_degree(d, j).value().str() << "\n";
    }

    Rational ell2 = ell_two(d, J, table);
    std::vector<Rational> t = l_cycle_coefficients(d, J, *use);
    Rational lk = lk_parallel(d, J, table, *use);
    for (int a : by_id)
        out << "L coefficient t(" << d.crossings[a].id << ") = " << t[a].str() << "\n";

    CoeffMatrix gc = g_cycle_coefficients(d, J);
    for (int a : by_id)
        for (int b : by_id)
            if (!gc[a][b].is_zero())
                out << "ell2 term (" << d.crossings[a].id << "," << d.crossings[b].id
                    << ") = " << (gc[a][b] * table.ell(a, b)).str() << "\n";
    out << "ell2 = " << ell2.str() << "\n";
    for (int a : by_id)
        for (int b : by_id) {
            Rational term = t[a] * t[b] * table.ell(a, b);
            if (!term.is_zero())
                out << "lk term (" << d.crossings[a].id << "," << d.crossings[b].id
                    << ") = " << term.str() << "\n";
        }
    out << "lk = " << lk.str() << "\n";

    if (have_degrees && matching_is_layouts) {
        for (int a : by_id) {
            Rational de = de_crossing(d, J, *use, a);
            out << "d_e(" << d.crossings[a].id << ") = " << de.str() << "\n";
        }
        for (int a : by_id) {
            const Crossing& cr = d.crossings[a];
            Rational term = J.at(cr.beta - 1, cr.alpha - 1) * Rational(cr.sign) *
                            de_crossing(d, J, *use, a);
            if (!term.is_zero())
                out << "e term (" << cr.id << ") = " << term.str() << "\n";
        }
        Rational e = euler_term(d, J, *use);
        out << "e = " << e.str() << "\n";
        out << "theta = " << (ell2 + lk - e).str() << "\n";
    } else {
        out << "e = unavailable\n";
        out << "theta = unavailable\n";
    }
    return kOk;
}

// Entry point shared by the binary and the tests.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Theta-invariant calculator for Heegaard diagrams in rectangular form"};
    app.require_subcommand(1);

    std::string path;
    Flags flags;

    auto add_common = [&](CLI::App* cmd, bool with_compute_flags) {
        cmd->add_option("input", path, "input .hgr layout or combinatorial JSON")->required();
        cmd->add_option("--format", flags.format, "output format")
            ->check(CLI::IsMember({"table", "json"}));
        if (with_compute_flags) {
            cmd->add_option("--matching", flags.matching, "comma-separated crossing ids");
            cmd->add_option("--basepoints", flags.basepoints,
                            "comma-separated curve=crossing overrides (alpha1=c,b2=e)");
            cmd->add_flag("--decimal", flags.decimal, "add approximate decimal column");
        }
    };

    CLI::App* validate = app.add_subcommand("validate", "check drawing conventions");
    add_common(validate, false);

    CLI::App* compute = app.add_subcommand("compute", "compute ell2, lk, e and theta");
    add_common(compute, true);
    compute->add_option("--lambda", flags.lambda,
                        "Casson-Walker invariant of the manifold; adds p1 = 4*theta - 24*lambda");

    CLI::App* matchings = app.add_subcommand("matchings", "enumerate matchings with lk values");
    add_common(matchings, false);
    matchings->add_option("--cap", flags.cap, "maximum number of matchings to enumerate");

    CLI::App* render = app.add_subcommand("render", "render the layout as SVG");
    render->add_option("input", path, "input .hgr layout")->required();
    render->add_option("--output", flags.output, "write SVG here instead of stdout");
    render->add_flag("--no-labels", flags.no_labels, "omit text labels");

    CLI::App* explain = app.add_subcommand("explain", "print every intermediate quantity");
    add_common(explain, true);

    try {
        std::vector<const char*> argv;
        argv.push_back("hgr");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << e.what() << "\n";
        return kUsage;
    }

    try {
        if (app.got_subcommand(validate)) return cmd_validate(path, flags, out, err);
        if (app.got_subcommand(compute)) return cmd_compute(path, flags, out, err);
        if (app.got_subcommand(matchings)) return cmd_matchings(path, flags, out, err);
        if (app.got_subcommand(render)) return cmd_render(path, flags, out, err);
        if (app.got_subcommand(explain)) return cmd_explain(path, flags, out, err);
        err << "no command\n";
        return kUsage;
    } catch (const ValidationFailed&) {
        return kInvalidLayout;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const NotQSphere& e) {
        err << "not a rational homology sphere: " << e.what() << "\n";
        return kNotQSphere;
    } catch (const CapExceeded& e) {
        err << e.what() << "\n";
        return kCapExceeded;
    } catch (const MatchingMismatch& e) {
        err << "matching mismatch: " << e.what() << "\n";
        return kMatchingMismatch;
    } catch (const InvalidMatching& e) {
        err << "matching mismatch: " << e.what() << "\n";
        return kMatchingMismatch;
    } catch (const IoError& e) {
        err << "io error: " << e.what() << "\n";
        return kIoError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInternal;
    }
}

}  // namespace hgr::cli
