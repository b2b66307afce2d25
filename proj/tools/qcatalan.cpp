// qcatalan - command line front end: closed-form tables, identity
// verification suites, family enumeration, bijection application with
// traces, and SVG pictures of paths.
//
// Exit codes: 0 = success and no failed check; 1 = at least one verify
// check failed; 2 = usage, parse, or domain error.

#include "qcatalan/bijections.hpp"
#include "qcatalan/identities.hpp"
#include "qcatalan/paths.hpp"
#include "qcatalan/qpoly.hpp"
#include "qcatalan/serialize.hpp"
#include "qcatalan/svg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace {

using namespace qcatalan;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw UsageError("cannot open output file '" + out_path + "'");
    f << text;
    if (!f) throw UsageError("failed writing output file '" + out_path + "'");
}

// ---- table ----------------------------------------------------------------

struct Range {
    int lo = 0;
    int hi = 0;
};

Range parse_range(const std::string& tok, int default_lo) {
    std::string body = tok;
    size_t dots = body.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(body);
            return {v, v};
        }
        int lo = body.substr(0, dots).empty() ? default_lo : std::stoi(body.substr(0, dots));
        int hi = std::stoi(body.substr(dots + 2));
        return {lo, hi};
    } catch (const std::exception&) {
        throw UsageError("bad range '" + tok + "' (expected N or LO..HI)");
    }
}

struct TableCell {
    int m, n;
    std::string value;
    const QPoly* poly = nullptr;
};

int cmd_table(const std::string& kind, std::vector<std::string> range_args,
              std::optional<int> m_max, std::optional<int> n_max, const std::string& format,
              const std::string& out_path) {
    static const std::set<std::string> kinds = {"S", "T", "Sq", "Tq", "Bq"};
    if (!kinds.count(kind)) throw UsageError("unknown table kind '" + kind + "'");
    const bool is_t = (kind == "T" || kind == "Tq");
    const bool is_ballot = (kind == "Bq");

    Range m_range{0, 6};
    Range n_range{is_t || is_ballot ? 1 : 0, 6};
    int positional = 0;
    for (const auto& tok : range_args) {
        if (tok.rfind("m=", 0) == 0)
            m_range = parse_range(tok.substr(2), 0);
        else if (tok.rfind("n=", 0) == 0)
            n_range = parse_range(tok.substr(2), is_t || is_ballot ? 1 : 0);
        else if (positional == 0 && !is_ballot)
            m_range = parse_range(tok, 0), ++positional;
        else
            n_range = parse_range(tok, is_t || is_ballot ? 1 : 0), ++positional;
    }
    if (m_max) m_range.hi = *m_max;
    if (n_max) n_range.hi = *n_max;
    if (m_range.lo > m_range.hi || n_range.lo > n_range.hi)
        throw UsageError("empty parameter range");
    if (is_t && n_range.lo < 1) throw UsageError(kind + " requires n >= 1");
    if (is_ballot && n_range.lo < 1) throw UsageError("Bq requires n >= 1");
    if (m_range.lo < 0 || n_range.lo < 0) throw UsageError("parameters must be nonnegative");

    std::vector<std::pair<std::pair<int, int>, QPoly>> cells;
    if (is_ballot) {
        for (int n = n_range.lo; n <= n_range.hi; ++n)
            for (int r = 1; r <= n; ++r) cells.push_back({{n, r}, ballot_q(n, r)});
    } else {
        detail::QFactorials fact(2 * std::max(m_range.hi, n_range.hi));
        for (int m = m_range.lo; m <= m_range.hi; ++m)
            for (int n = n_range.lo; n <= n_range.hi; ++n) {
                QPoly v = (kind == "S" || kind == "Sq")
                              ? detail::super_catalan_q_impl(m, n, fact)
                              : detail::super_catalan_t_q_impl(m, n, fact);
                cells.push_back({{m, n}, std::move(v)});
            }
    }
    const bool integer_kind = (kind == "S" || kind == "T");
    auto cell_text = [&](const QPoly& p) {
        return integer_kind ? eval_at_one(p).str() : to_string(p);
    };
    const char* row_label = is_ballot ? "n" : "m";
    const char* col_label = is_ballot ? "r" : "n";

    if (format == "json") {
        Json rows = Json::array();
        for (const auto& [mn, p] : cells) {
            Json row{{row_label, mn.first}, {col_label, mn.second}, {"value", cell_text(p)}};
            if (!integer_kind) row["poly"] = to_json(p);
            rows.push_back(std::move(row));
        }
        write_output(Json{{"kind", kind}, {"cells", rows}}.dump(2) + "\n", out_path);
    } else if (format == "csv") {
        std::string out = std::string("kind,") + row_label + "," + col_label + ",value\n";
        for (const auto& [mn, p] : cells)
            out += kind + "," + std::to_string(mn.first) + "," + std::to_string(mn.second) + "," +
                   detail::csv_escape(cell_text(p)) + "\n";
        write_output(out, out_path);
    } else {
        std::ostringstream out;
        bool first_row = true;
        int prev = 0;
        for (const auto& [mn, p] : cells) {
            if (first_row || mn.first != prev) {
                if (!first_row) out << "\n";
                out << row_label << "=" << mn.first << ":";
                prev = mn.first;
                first_row = false;
            }
            out << "  [" << col_label << "=" << mn.second << "] " << cell_text(p);
        }
        if (!first_row) out << "\n";
        write_output(out.str(), out_path);
    }
    return kExitOk;
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const std::string& suite, const VerifyOptions& options, const std::string& format,
               const std::string& out_path) {
    std::vector<std::string> names;
    if (suite == "all") {
        for (const auto& s : all_suites()) names.push_back(s.name);
    } else {
        names.push_back(suite);
    }
    std::vector<VerificationReport> reports;
    std::ostringstream text;
    for (const auto& name : names) {
        auto rows = run_suite(name, options);  // throws DomainError on unknown suite
        for (const auto& r : rows) {
            if (format == "text") {
                text << r.identity << " " << detail::params_text(r.params) << " "
                     << to_string(r.status);
                if (r.witness && !r.witness->note.empty()) text << " [" << r.witness->note << "]";
                text << "\n";
                std::cout << text.str();  // stream as produced
                text.str("");
            }
            reports.push_back(r);
        }
    }
    int pass = 0, fail = 0, reported = 0;
    for (const auto& r : reports) {
        pass += r.status == Status::Pass;
        fail += r.status == Status::Fail;
        reported += r.status == Status::Reported;
    }
    if (format == "json") {
        write_output(to_json(reports).dump(2) + "\n", out_path);
    } else if (format == "csv") {
        write_output(reports_csv(reports), out_path);
    } else {
        std::ostringstream summary;
        summary << "checks: " << reports.size() << "  pass: " << pass << "  fail: " << fail
                << "  reported: " << reported << "\n";
        write_output(summary.str(), out_path);
    }
    return exit_code_for(reports);
}

// ---- enumerate ---------------------------------------------------------------

int cmd_enumerate(const std::string& family_text, bool with_stats,
                  const std::string& genfun_stat, unsigned shards, const std::string& format,
                  const std::string& out_path) {
    FamilySpec spec = parse_family(family_text);
    if (!genfun_stat.empty()) {
        PathStat stat_kind;
        if (genfun_stat == "maj")
            stat_kind = PathStat::Maj;
        else if (genfun_stat == "maj-des" || genfun_stat == "maj_minus_des")
            stat_kind = PathStat::MajMinusDes;
        else
            throw UsageError("unknown statistic '" + genfun_stat + "' (use maj or maj-des)");
        QPoly p = gen_fun_sharded(spec, stat_kind, shards);
        if (format == "json")
            write_output(Json{{"family", to_string(spec)},
                              {"stat", genfun_stat},
                              {"genfun", to_json(p)},
                              {"rendered", to_string(p)}}
                                 .dump(2) +
                             "\n",
                         out_path);
        else
            write_output(to_string(p) + "\n", out_path);
        return kExitOk;
    }
    auto paths = all_paths_in(spec);
    if (format == "json") {
        write_output(path_listing_json(paths, with_stats).dump(2) + "\n", out_path);
        return kExitOk;
    }
    std::ostringstream out;
    for (const auto& p : paths) {
        out << p.to_string();
        if (with_stats) {
            PathStats st = stats(p);
            out << "  maj=" << st.maj << " des=" << st.des << " height=" << st.height
                << " end=" << st.end_level << " min=" << st.min_level;
            if (st.h_minus) out << " h-=" << *st.h_minus << " h+=" << *st.h_plus;
        }
        out << "\n";
    }
    write_output(out.str(), out_path);
    return kExitOk;
}

// ---- biject ----------------------------------------------------------------

int cmd_biject(const std::string& name, const std::string& path_text, bool with_trace,
               const std::string& out_path) {
    LatticePath p = parse_path(path_text);
    BijectionTrace t = trace(name, p);
    if (with_trace)
        write_output(to_json(t).dump(2) + "\n", out_path);
    else
        write_output(t.output.to_string() + "\n", out_path);
    return kExitOk;
}

// ---- render ----------------------------------------------------------------

int cmd_render(const std::string& arg, const std::string& trace_name,
               const std::string& out_path) {
    if (out_path.empty()) throw UsageError("render requires --out FILE");
    std::string svg;
    if (arg.find(':') != std::string::npos) {
        svg = render_family_svg(parse_family(arg));
    } else {
        LatticePath p = parse_path(arg);
        svg = trace_name.empty() ? render_path_svg(p) : render_trace_svg(trace(trace_name, p));
    }
    write_output(svg, out_path);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-analog toolkit: super Catalan polynomials, q-Ballot numbers, "
                 "lattice-path statistics, bijections, and identity verification"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string out_path;
    std::optional<int> m_max, n_max;
    unsigned shards = 1;

    auto add_common = [&](CLI::App* cmd, bool with_bounds) {
        cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
        cmd->add_option("--out", out_path, "write output to FILE instead of stdout");
        if (with_bounds) {
            cmd->add_option("--m-max", m_max);
            cmd->add_option("--n-max", n_max);
        }
    };

    auto* table = app.add_subcommand("table", "tabulate S, T, Sq, Tq, or Bq");
    std::string table_kind;
    std::vector<std::string> table_ranges;
    table->add_option("kind", table_kind, "S | T | Sq | Tq | Bq")->required();
    table->add_option("ranges", table_ranges, "parameter ranges, e.g. 0..4 or m=1..3 n=2..5");
    add_common(table, true);

    auto* verify = app.add_subcommand("verify", "run identity verification suites");
    std::string suite;
    verify->add_option("suite", suite, "suite name or 'all'")->required();
    verify->add_option("--shards", shards, "worker threads for enumeration")
        ->check(CLI::Range(1u, 64u));
    add_common(verify, true);

    auto* enumerate = app.add_subcommand("enumerate", "list the members of a path family");
    std::string family_text, genfun_stat;
    bool with_stats = false;
    enumerate->add_option("family", family_text, "e.g. catalan:5, ballot:6,2, omega:7")
        ->required();
    enumerate->add_flag("--stats", with_stats, "include maj/des/height columns");
    enumerate->add_option("--genfun", genfun_stat,
                          "print the generating polynomial of maj or maj-des instead");
    enumerate->add_option("--shards", shards)->check(CLI::Range(1u, 64u));
    add_common(enumerate, false);

    auto* biject = app.add_subcommand("biject", "apply a bijection to a path");
    std::string bij_name, bij_path;
    bool with_trace = false;
    biject->add_option("name", bij_name, "psi, psi_inv, phi, phi_inv, f, f_inv, g, g_inv")
        ->required();
    biject->add_option("path", bij_path, "path word over 0/1 or u/d")->required();
    biject->add_flag("--trace", with_trace, "emit the full trace as JSON");
    biject->add_option("--out", out_path);

    auto* render = app.add_subcommand("render", "draw a path or a small family as SVG");
    std::string render_arg, render_trace;
    render->add_option("target", render_arg, "path word, or family spec like catalan:3")
        ->required();
    render->add_option("--trace", render_trace, "bijection name; draws input and image "
                                                "with landmark labels");
    render->add_option("--out", out_path, "output SVG file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        VerifyOptions options{n_max, m_max, shards};
        if (table->parsed())
            return cmd_table(table_kind, table_ranges, m_max, n_max, format, out_path);
        if (verify->parsed()) return cmd_verify(suite, options, format, out_path);
        if (enumerate->parsed())
            return cmd_enumerate(family_text, with_stats, genfun_stat, shards, format, out_path);
        if (biject->parsed()) return cmd_biject(bij_name, bij_path, with_trace, out_path);
        if (render->parsed()) return cmd_render(render_arg, render_trace, out_path);
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
