#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "seqcolor/chromatic_sum.hpp"
#include "seqcolor/errors.hpp"
#include "seqcolor/oracle.hpp"
#include "seqcolor/report.hpp"
#include "seqcolor/sequentializer.hpp"

namespace seqcolor::cli {

namespace {

class IoFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class OutputMode { report, table };

struct RunConfig {
    std::vector<std::string> inputs;
    OutputMode output = OutputMode::report;
    std::string format = "edges";
    bool oracle = false;
    std::optional<std::uint64_t> seed;
    std::optional<int> cap;
    bool override_size = false;

    // generate
    std::string family;
    std::vector<int> params;
    bool complete = false;

    // color
    std::string method = "auto";

    // sequentialize
    std::string coloring_path;

    // bound
    std::int64_t n = 0;
    std::int64_t n_r = 0;
    std::int64_t r = 0;

    // verify
    std::string graph_path;
    std::string vertex_set_path;
};

std::string read_source(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path.empty() || path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw IoFailure("cannot read " + path);
    buf << file.rdbuf();
    return buf.str();
}

std::vector<Vertex> parse_vertex_set(std::string_view text) {
    std::istringstream lines{std::string(text)};
    std::vector<Vertex> out;
    for (std::string line; std::getline(lines, line);) {
        line = line.substr(0, line.find('#'));
        std::istringstream fields(line);
        for (std::string tok; fields >> tok;) {
            std::size_t used = 0;
            int v = -1;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size()) throw ParseError("vertex set: bad vertex id '" + tok + "'");
            out.push_back(v);
        }
    }
    return out;
}

const char* dash_or(std::optional<std::int64_t> v, std::string& storage) {
    storage = v ? std::to_string(*v) : "-";
    return storage.c_str();
}

int cmd_generate(const RunConfig& cfg, std::ostream& out) {
    Graph g;
    auto need = [&](std::size_t k) {
        if (cfg.params.size() != k) {
            throw PreconditionError({"family '" + cfg.family + "' takes " + std::to_string(k) +
                                     " integer parameter(s)"});
        }
    };
    if (cfg.family == "complete-bipartite") {
        need(2);
        g = generate_complete_bipartite(cfg.params[0], cfg.params[1]);
    } else if (cfg.family == "biregular") {
        need(2);
        if (!cfg.seed) throw PreconditionError({"biregular generation requires --seed"});
        g = generate_random_biregular(cfg.params[0], cfg.params[1], *cfg.seed);
    } else if (cfg.family == "regular-class1") {
        need(1);
        g = generate_regular_class1(cfg.params[0], cfg.complete ? RegularFamily::complete
                                                                 : RegularFamily::complete_bipartite);
    } else {
        throw PreconditionError({"unknown family '" + cfg.family +
                                 "' (expected complete-bipartite, biregular, regular-class1)"});
    }
    out << (cfg.format == "graph6" ? emit_graph6(g) + "\n" : emit_edge_list(g));
    return kOk;
}

int cmd_color(const RunConfig& cfg, std::istream& in, std::ostream& out) {
    Graph g = parse_graph_auto(read_source(cfg.inputs.empty() ? "-" : cfg.inputs.front(), in));
    EdgeColoring c;
    std::string method = cfg.method;
    if (method == "auto") {
        auto acquired = obtain_r_coloring(g);
        c = std::move(acquired.coloring);
        method = to_string(acquired.source);
    } else if (method == "konig") {
        c = konig_color_bipartite(g);
    } else if (method == "misra-gries") {
        c = misra_gries(g);
    } else {
        c = cfg.cap ? exact_chromatic_index(g, *cfg.cap).witness : exact_chromatic_index(g).witness;
    }
    out << "# method=" << method << "\n" << emit_coloring(g, c);
    return kOk;
}

struct InstanceResult {
    std::string name;
    SequentialCertificate cert;
    SumReport sums;
    std::optional<OracleResult> max_sequential;
};

int sequentialize_one(const RunConfig& cfg, const std::string& path, std::istream& in,
                      std::ostream& out, std::ostream& err, std::vector<InstanceResult>& rows) {
    Graph g = parse_graph_auto(read_source(path, in));
    std::optional<EdgeColoring> alpha;
    if (!cfg.coloring_path.empty()) alpha = parse_coloring(g, read_source(cfg.coloring_path, in));

    InstanceResult row;
    row.name = path.empty() ? "-" : path;
    row.cert = sequentialize(g, alpha);

    const bool oracle_allowed = cfg.override_size || g.edge_count() <= kOracleEdgeLimit;
    if (cfg.oracle && !oracle_allowed) {
        err << row.name << ": oracle skipped, " << g.edge_count() << " edges exceed "
            << kOracleEdgeLimit << " (use --override-size)\n";
    }
    const bool with_oracle = cfg.oracle && oracle_allowed;
    row.sums = sum_report(g, row.cert, false);
    if (with_oracle) {
        OracleOptions opts{cfg.override_size};
        row.sums.oracle = exact_edge_chromatic_sum(g, opts);
        row.sums.exact_sum = row.sums.oracle->value;
        row.sums.chain_holds = row.sums.chain_holds && *row.sums.exact_sum <= row.sums.actual_sum;
        row.max_sequential = exact_max_sequential_set(g, row.cert.r, opts);
    }

    if (cfg.output == OutputMode::report) {
        out << report::line(report::certificate(g, row.cert));
        out << report::line(report::sums(row.sums));
        if (row.sums.oracle) out << report::line(report::sum_oracle(*row.sums.oracle));
        if (row.max_sequential) out << report::line(report::sequential_oracle(g, *row.max_sequential));
    }
    const bool ok = row.cert.verified && row.cert.bound_met() && row.sums.chain_holds &&
                    (!row.max_sequential || row.max_sequential->value >= row.cert.bound);
    rows.push_back(std::move(row));
    return ok ? kOk : kCheckFailed;
}

void print_table(const std::vector<InstanceResult>& rows, std::ostream& out) {
    out << std::left << std::setw(20) << "instance" << std::right << std::setw(4) << "n" << std::setw(5)
        << "n_r" << std::setw(3) << "r" << std::setw(6) << "swap" << std::setw(5) << "|R|" << std::setw(7)
        << "bound" << std::setw(6) << "maxR" << std::setw(9) << "verified" << std::setw(8) << "sum"
        << std::setw(8) << "exact" << std::setw(8) << "cor2" << "\n";
    std::string a, b;
    for (const auto& row : rows) {
        std::optional<std::int64_t> max_r;
        if (row.max_sequential) max_r = row.max_sequential->value;
        std::optional<std::int64_t> swap;
        if (row.cert.swap_color) swap = *row.cert.swap_color;
        std::string s;
        out << std::left << std::setw(20) << row.name << std::right << std::setw(4) << row.cert.n
            << std::setw(5) << row.cert.n_r << std::setw(3) << row.cert.r << std::setw(6) << dash_or(swap, s)
            << std::setw(5) << row.cert.R.size() << std::setw(7) << row.cert.bound << std::setw(6)
            << dash_or(max_r, a) << std::setw(9) << (row.cert.verified ? "yes" : "NO") << std::setw(8)
            << row.sums.actual_sum << std::setw(8) << dash_or(row.sums.exact_sum, b) << std::setw(8)
            << row.sums.bound << "\n";
    }
}

int classify(const std::exception_ptr& ep, const std::string& context, std::ostream& err) {
    const std::string prefix = context.empty() ? "" : context + ": ";
    try {
        std::rethrow_exception(ep);
    } catch (const ClassTwoError& e) {
        err << prefix << "class 2: " << e.what() << "\n";
        return kClassTwo;
    } catch (const UnknownClassError& e) {
        err << prefix << "unknown class: " << e.what() << "\n";
        return kUnknownClass;
    } catch (const IoFailure& e) {
        err << prefix << "i/o error: " << e.what() << "\n";
        return kIoError;
    } catch (const Error& e) {
        err << prefix << "error: " << e.what() << "\n";
        return kPrecondition;
    } catch (const std::exception& e) {
        err << prefix << "internal error: " << e.what() << "\n";
        return kCheckFailed;
    }
}

int cmd_sequentialize(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    std::vector<std::string> inputs = cfg.inputs.empty() ? std::vector<std::string>{"-"} : cfg.inputs;
    std::vector<InstanceResult> rows;
    int worst = kOk;
    for (const auto& path : inputs) {
        int code;
        try {
            code = sequentialize_one(cfg, path, in, out, err, rows);
        } catch (...) {
            code = classify(std::current_exception(), path, err);
        }
        worst = std::max(worst, code);
    }
    if (cfg.output == OutputMode::table) print_table(rows, out);
    return worst;
}

int cmd_bound(const RunConfig& cfg, std::ostream& out) {
    std::vector<std::string> bad;
    if (cfg.r < 3) bad.push_back("r must be at least 3");
    if (cfg.n < 0) bad.push_back("n must be non-negative");
    if (cfg.n_r < 0 || cfg.n_r > cfg.n) bad.push_back("n_r must lie in [0, n]");
    if (!bad.empty()) throw PreconditionError(std::move(bad));

    auto rec = report::bounds(cfg.n, cfg.n_r, cfg.r);
    if (cfg.output == OutputMode::report) {
        out << report::line(rec);
    } else {
        auto show = [](const report::Record& v) { return v.is_null() ? std::string("-") : v.dump(); };
        out << "theorem3 / corollary1 / corollary2\n"
            << show(rec["theorem3"]) << " / " << show(rec["corollary1"]) << " / "
            << show(rec["corollary2"]) << "\n";
    }
    return kOk;
}

int cmd_verify(const RunConfig& cfg, std::istream& in, std::ostream& out) {
    Graph g = parse_graph_auto(read_source(cfg.graph_path, in));
    const std::string coloring_text = read_source(cfg.coloring_path, in);

    EdgeColoring c;
    std::vector<Vertex> R;
    auto first = coloring_text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && coloring_text[first] == '{') {
        // A certificate record from `sequentialize`: its coloring and R.
        report::Record cert;
        try {
            cert = report::Record::parse(coloring_text.substr(first, coloring_text.find('\n', first) - first));
            std::string lines = "t=" + std::to_string(cert.at("r").get<int>()) + "\n";
            for (const auto& l : cert.at("coloring")) lines += l.get<std::string>() + "\n";
            c = parse_coloring(g, lines);
            R = cert.at("R").get<std::vector<Vertex>>();
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("certificate: ") + e.what());
        }
    } else {
        c = parse_coloring(g, coloring_text);
    }
    if (!cfg.vertex_set_path.empty()) R = parse_vertex_set(read_source(cfg.vertex_set_path, in));

    auto proper = verify_proper(g, c);
    auto sequential = verify_sequential(g, c, R);

    report::Record rec;
    rec["kind"] = "verify";
    rec["proper"] = proper.proper;
    rec["violations"] = report::Record::array();
    for (const auto& clash : proper.violations) {
        rec["violations"].push_back({{"vertex", clash.vertex}, {"color", clash.color}});
    }
    rec["R_size"] = R.size();
    rec["sequential"] = sequential.sequential;
    rec["failing"] = sequential.failing;
    out << report::line(rec);
    return proper.proper && sequential.sequential ? kOk : kCheckFailed;
}

int cmd_oracle(const RunConfig& cfg, std::istream& in, std::ostream& out) {
    Graph g = parse_graph_auto(read_source(cfg.inputs.empty() ? "-" : cfg.inputs.front(), in));
    OracleOptions opts{cfg.override_size};
    auto sum = exact_edge_chromatic_sum(g, opts);
    const auto profile = degree_profile(g);
    const int r = cfg.cap.value_or(profile.max_degree);
    if (cfg.output == OutputMode::report) out << report::line(report::sum_oracle(sum));
    auto seq = exact_max_sequential_set(g, r, opts);
    if (cfg.output == OutputMode::report) {
        out << report::line(report::sequential_oracle(g, seq));
    } else {
        out << "sigma' = " << sum.value << (sum.cap_stable ? "" : " (cap unstable)") << "\n"
            << "max sequential set (r=" << r << ") = " << seq.value << "\n";
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Sequential edge colorings of near-regular Class 1 graphs"};
    app.require_subcommand(1);

    const std::map<std::string, OutputMode> outputs{{"report", OutputMode::report},
                                                    {"table", OutputMode::table}};
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--output", cfg.output, "report (JSON lines) or table")
            ->transform(CLI::CheckedTransformer(outputs));
    };

    auto* generate = app.add_subcommand("generate", "Write a graph from a named family");
    generate->add_option("family", cfg.family, "complete-bipartite | biregular | regular-class1")->required();
    generate->add_option("params", cfg.params, "family parameters: a b | r k | r")->required();
    generate->add_option("--seed", cfg.seed, "seed for random families");
    generate->add_flag("--complete", cfg.complete, "regular-class1: emit K_{r+1} instead of K_{r,r}");
    generate->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"graph6", "edges"}));

    auto* color = app.add_subcommand("color", "Print a proper edge coloring");
    color->add_option("input", cfg.inputs, "graph file (edge list or graph6), '-' for stdin");
    color->add_option("--method", cfg.method)
        ->check(CLI::IsMember({"auto", "konig", "misra-gries", "exact"}));
    color->add_option("--cap", cfg.cap, "color cap for the exact solver");

    auto* seq = app.add_subcommand("sequentialize", "Build and certify an R-sequential r-coloring");
    seq->add_option("inputs", cfg.inputs, "graph files (edge list or graph6), '-' for stdin");
    seq->add_option("--coloring", cfg.coloring_path, "use this proper r-coloring instead of acquiring one");
    seq->add_flag("--oracle", cfg.oracle, "attach exact oracle results");
    seq->add_flag("--override-size", cfg.override_size, "run the oracle above the size guard");
    add_output(seq);

    auto* bound = app.add_subcommand("bound", "Evaluate the closed-form bounds");
    bound->add_option("n", cfg.n)->required();
    bound->add_option("n_r", cfg.n_r)->required();
    bound->add_option("r", cfg.r)->required();
    add_output(bound);

    auto* verify = app.add_subcommand("verify", "Check a coloring (and optional vertex set)");
    verify->add_option("graph", cfg.graph_path)->required();
    verify->add_option("coloring", cfg.coloring_path, "'t=' coloring file or certificate record")->required();
    verify->add_option("vertex_set", cfg.vertex_set_path, "whitespace-separated vertex ids");

    auto* oracle = app.add_subcommand("oracle", "Exact edge-chromatic sum and maximum sequential set");
    oracle->add_option("input", cfg.inputs);
    oracle->add_option("--cap", cfg.cap, "color count r for the sequential-set search (default Δ)");
    oracle->add_flag("--override-size", cfg.override_size, "run above the size guard");
    add_output(oracle);

    std::vector<const char*> argv{"seqcolor"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kPrecondition;
    }

    try {
        if (generate->parsed()) return cmd_generate(cfg, out);
        if (color->parsed()) return cmd_color(cfg, in, out);
        if (seq->parsed()) return cmd_sequentialize(cfg, in, out, err);
        if (bound->parsed()) return cmd_bound(cfg, out);
        if (verify->parsed()) return cmd_verify(cfg, in, out);
        if (oracle->parsed()) return cmd_oracle(cfg, in, out);
    } catch (...) {
        return classify(std::current_exception(), "", err);
    }
    return kPrecondition;
}

}  // namespace seqcolor::cli
