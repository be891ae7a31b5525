#include "decycle/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "decycle/bounds.hpp"
#include "decycle/certificate_io.hpp"
#include "decycle/constructions.hpp"
#include "decycle/dot.hpp"
#include "decycle/errors.hpp"
#include "decycle/oracle.hpp"
#include "decycle/verifier.hpp"

namespace decycle {

namespace {

/// Raised for unreadable or unwritable files.
class IoError : public Error {
public:
    using Error::Error;
};

/// Carries a non-zero exit code out of a command after its output has been written.
struct CommandFailed {
    int code;
};

int parse_int(const std::string& s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw InvalidInput("expected an integer, got '" + s + "'");
    return value;
}

FamilySpec family_from_args(const std::vector<std::string>& args) {
    if (args.empty())
        throw InvalidInput("missing family (e.g. 'pow3 9')");
    std::vector<int> params;
    for (std::size_t i = 1; i < args.size(); ++i)
        params.push_back(parse_int(args[i]));
    return parse_family(args[0], params);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << content) || !out.flush())
        throw IoError("cannot write " + path);
}

std::string join(const std::vector<Vertex>& vs, const char* sep = " ") {
    std::ostringstream os;
    for (std::size_t i = 0; i < vs.size(); ++i)
        os << (i ? sep : "") << vs[i];
    return os.str();
}

/// Edge-list file: first line n, then one "u v" pair per line, 0-indexed.
Graph read_edge_list(const std::string& path) {
    std::istringstream in(read_file(path));
    int n = 0;
    if (!(in >> n) || n < 0)
        throw InvalidInput(path + ": first line must be the vertex count");
    std::vector<Edge> edges;
    int u = 0, v = 0;
    while (in >> u) {
        if (!(in >> v))
            throw InvalidInput(path + ": dangling endpoint");
        edges.emplace_back(u, v);
    }
    if (!in.eof())
        throw InvalidInput(path + ": unparseable edge line");
    return Graph(n, edges);
}

std::pair<int, int> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos)
        throw InvalidInput("range must look like LO..HI, got '" + s + "'");
    int lo = parse_int(s.substr(0, dots));
    int hi = parse_int(s.substr(dots + 2));
    if (lo > hi)
        throw InvalidInput("empty range " + s);
    return {lo, hi};
}

struct SolverFlags {
    std::uint64_t node_budget = 0;
    int vertex_budget = 0;
    std::string mode = "id";
    bool no_reductions = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--node-budget", node_budget, "Search node budget (default DECYCLE_NODE_BUDGET or 50000000)");
        cmd->add_option("--vertex-budget", vertex_budget, "Largest graph accepted (default DECYCLE_VERTEX_BUDGET or 64)");
        cmd->add_option("--mode", mode, "id (iterative deepening) or bnb (branch and bound)")
            ->check(CLI::IsMember({"id", "bnb"}));
        cmd->add_flag("--no-reductions", no_reductions, "Disable the reduction rules");
    }

    SolverConfig config() const {
        SolverConfig cfg = SolverConfig::from_environment();
        if (node_budget)
            cfg.node_budget = node_budget;
        if (vertex_budget)
            cfg.vertex_budget = vertex_budget;
        cfg.mode = mode == "bnb" ? SearchMode::branch_and_bound : SearchMode::iterative_deepening;
        cfg.use_reductions = !no_reductions;
        return cfg;
    }
};

void cmd_nabla(const std::vector<std::string>& fam, std::ostream& out) {
    auto spec = family_from_args(fam);
    out << nabla_formula(spec) << " (" << nabla_source(spec) << ")\n";
}

void cmd_construct(const std::vector<std::string>& fam, const std::string& out_path, std::ostream& out,
                   std::ostream& err) {
    auto spec = family_from_args(fam);
    auto outcome = verify_certificate(construct_candidate(spec));
    const auto& cert = outcome.certificate;
    const auto doc = serialize_certificate(cert);
    std::ostream& summary = out_path.empty() ? err : out;
    if (out_path.empty())
        out << doc;
    else
        write_file(out_path, doc);
    summary << spec.to_string() << ": cardinality " << cert.cardinality << ", lower bound " << cert.lower_bound
            << ", " << to_string(cert.status) << "\n";
    for (const auto& f : outcome.failures)
        summary << "  " << f << "\n";
    if (cert.status != CertificateStatus::verified)
        throw CommandFailed{kExitRefuted};
}

void cmd_verify(const std::string& path, std::ostream& out) {
    auto cert = parse_certificate(read_file(path));
    auto outcome = verify_certificate(cert);
    out << to_string(outcome.certificate.status) << "\n";
    if (outcome.certificate.status == CertificateStatus::verified) {
        out << cert.family.to_string() << ": " << cert.cardinality << " vertices"
            << (outcome.certificate.is_tight() ? ", matches lower bound" : "") << "\n";
        return;
    }
    for (const auto& f : outcome.failures)
        out << "  " << f << "\n";
    if (outcome.residual.witness_cycle)
        out << "witness cycle: " << join(*outcome.residual.witness_cycle) << "\n";
    throw CommandFailed{kExitRefuted};
}

void cmd_oracle(const std::vector<std::string>& fam, const std::string& edges_path, const SolverFlags& flags,
                std::ostream& out) {
    const auto cfg = flags.config();
    SolverResult result;
    std::optional<FamilySpec> spec;
    if (!edges_path.empty()) {
        if (!fam.empty())
            throw InvalidInput("give either a family or --edges, not both");
        result = min_fvs_exact(read_edge_list(edges_path), cfg);
    } else {
        spec = family_from_args(fam);
        result = min_fvs_exact(*spec, cfg);
    }
    out << result.minimum << "\n";
    out << "witness: " << join(result.witness.members()) << "\n";
    out << "nodes: " << result.nodes_explored << ", elapsed: " << std::fixed << std::setprecision(3)
        << std::chrono::duration<double, std::milli>(result.elapsed).count() << " ms\n";
    if (spec && !std::holds_alternative<CnPowM>(spec->value())) {
        const int formula = nabla_formula(*spec);
        if (formula != result.minimum) {
            out << "refutes closed form " << formula << " (" << nabla_source(*spec) << ")\n";
            throw CommandFailed{kExitRefuted};
        }
    }
}

struct TableRow {
    int n = 0;
    std::optional<int> formula;
    BoundReport bounds;
    std::optional<SolverResult> oracle;
};

void cmd_table(const std::string& tag, const std::string& range, bool with_oracle, int jobs,
               const SolverFlags& flags, std::ostream& out) {
    auto [lo, hi] = parse_range(range);
    std::vector<FamilySpec> specs;
    for (int n = lo; n <= hi; ++n)
        specs.push_back(parse_family(tag, std::vector<int>{n}));
    const auto cfg = flags.config();

    auto compute = [&](const FamilySpec& spec) {
        TableRow row{spec.n(), std::nullopt, bound_report(spec), std::nullopt};
        row.formula = nabla_formula(spec);
        if (with_oracle)
            row.oracle = min_fvs_exact(spec, cfg);
        return row;
    };

    std::vector<TableRow> rows;
    if (jobs > 1) {
        std::vector<std::future<TableRow>> pending;
        std::size_t next = 0;
        while (next < specs.size() || !pending.empty()) {
            while (next < specs.size() && pending.size() < static_cast<std::size_t>(jobs))
                pending.push_back(std::async(std::launch::async, compute, specs[next++]));
            rows.push_back(pending.front().get());
            pending.erase(pending.begin());
        }
    } else {
        for (const auto& s : specs)
            rows.push_back(compute(s));
    }

    out << std::setw(5) << "n" << std::setw(9) << "formula" << std::setw(8) << "bv" << std::setw(8) << "best";
    if (with_oracle)
        out << std::setw(8) << "oracle" << std::setw(12) << "ms";
    out << "\n";
    bool mismatch = false;
    for (const auto& row : rows) {
        out << std::setw(5) << row.n << std::setw(9) << *row.formula << std::setw(8) << row.bounds.beineke_vandell
            << std::setw(8) << row.bounds.best;
        if (row.oracle) {
            out << std::setw(8) << row.oracle->minimum << std::setw(12) << std::fixed << std::setprecision(3)
                << std::chrono::duration<double, std::milli>(row.oracle->elapsed).count();
            if (row.oracle->minimum != *row.formula) {
                out << "  MISMATCH";
                mismatch = true;
            }
        }
        out << "\n";
    }
    if (mismatch)
        throw CommandFailed{kExitRefuted};
}

void cmd_export(const std::vector<std::string>& fam, const std::string& cert_path, const std::string& out_path,
                std::ostream& out) {
    auto spec = family_from_args(fam);
    const Graph g = realize(spec);
    DotOptions opts;
    if (spec.is_torus())
        opts.torus_cols = spec.n();
    if (!cert_path.empty()) {
        auto cert = parse_certificate(read_file(cert_path));
        if (cert.family != spec)
            throw InvalidInput("certificate is for " + cert.family.to_string() + ", not " + spec.to_string());
        opts.highlight = cert.set;
    }
    if (out_path.empty()) {
        write_dot(out, g, opts);
    } else {
        std::ostringstream ss;
        write_dot(ss, g, opts);
        write_file(out_path, ss.str());
    }
}

void cmd_adjacency(const std::vector<std::string>& fam, std::ostream& out) {
    write_adjacency(out, realize(family_from_args(fam)));
}

void cmd_gadget(const SolverFlags& flags, std::ostream& out) {
    auto derived = derive_c4_construction(flags.config());
    auto show = [&](const char* name, const DecyclingCertificate& c) {
        out << name << ":";
        for (Vertex v : c.set.members()) {
            auto rc = torus_coord(v, c.family.n());
            out << " (" << rc.row << "," << rc.col << ")";
        }
        out << "\n";
    };
    show("base C4 x C4", derived.base_even);
    show("base C4 x C5", derived.base_odd);
    out << "gadget:";
    for (auto c : derived.gadget.pattern)
        out << " (" << c.row << "," << c.col << ")";
    out << "\n";

    bool same = derived.gadget == stored_gadget();
    for (auto [cert, cols] : {std::pair{&derived.base_even, 4}, std::pair{&derived.base_odd, 5}}) {
        std::vector<TorusCoord> cells;
        for (Vertex v : cert->set.members())
            cells.push_back(torus_coord(v, cols));
        same = same && cells == stored_c4_base(cols);
    }
    out << (same ? "matches stored construction" : "DIFFERS from stored construction") << "\n";
    if (!same)
        throw CommandFailed{kExitRefuted};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Decycling sets of C3 x Cn, C4 x Cn, Cn^2 and Cn^3"};
    app.name("decycle");
    app.require_subcommand(1);

    std::vector<std::string> fam;
    std::string out_path, cert_path, edges_path, tag, range;
    bool with_oracle = false;
    int jobs = 1;
    SolverFlags flags;
    std::function<void()> action;

    auto add_family = [&](CLI::App* cmd, bool required) {
        auto* opt = cmd->add_option("family", fam, "Family tag and parameters: c3xc N | c4xc N | pow2 N | pow3 N | powm N M");
        if (required)
            opt->required();
    };

    auto* nabla = app.add_subcommand("nabla", "Closed-form decycling number and its source");
    add_family(nabla, true);
    nabla->callback([&] { action = [&] { cmd_nabla(fam, out); }; });

    auto* construct_cmd = app.add_subcommand("construct", "Build, verify and write a certificate");
    add_family(construct_cmd, true);
    construct_cmd->add_option("-o,--out", out_path, "Output JSON path (stdout if omitted)");
    construct_cmd->callback([&] { action = [&] { cmd_construct(fam, out_path, out, err); }; });

    auto* verify = app.add_subcommand("verify", "Verify a certificate file");
    verify->add_option("certificate", cert_path, "Certificate JSON")->required();
    verify->callback([&] { action = [&] { cmd_verify(cert_path, out); }; });

    auto* oracle = app.add_subcommand("oracle", "Exact decycling number by search");
    add_family(oracle, false);
    oracle->add_option("--edges", edges_path, "Edge-list file: first line n, then 'u v' per line");
    flags.attach(oracle);
    oracle->callback([&] { action = [&] { cmd_oracle(fam, edges_path, flags, out); }; });

    auto* table = app.add_subcommand("table", "Closed form against bounds (and optionally the exact solver)");
    table->add_option("family", tag, "c3xc | c4xc | pow2 | pow3")->required();
    table->add_option("range", range, "LO..HI")->required();
    table->add_flag("--oracle", with_oracle, "Add exact solver column (exponential time)");
    table->add_option("-j,--jobs", jobs, "Rows solved concurrently")->check(CLI::PositiveNumber);
    flags.attach(table);
    table->callback([&] { action = [&] { cmd_table(tag, range, with_oracle, jobs, flags, out); }; });

    auto* export_cmd = app.add_subcommand("export", "Graphviz DOT with an optional certificate highlighted");
    add_family(export_cmd, true);
    export_cmd->add_option("--cert", cert_path, "Certificate whose set is highlighted");
    export_cmd->add_option("-o,--out", out_path, "Output DOT path (stdout if omitted)");
    export_cmd->callback([&] { action = [&] { cmd_export(fam, cert_path, out_path, out); }; });

    auto* adjacency = app.add_subcommand("adjacency", "Plain-text adjacency dump");
    add_family(adjacency, true);
    adjacency->callback([&] { action = [&] { cmd_adjacency(fam, out); }; });

    auto* gadget = app.add_subcommand("gadget", "Re-derive the C4 x Cn bases and gadget and compare with the stored ones");
    flags.attach(gadget);
    gadget->callback([&] { action = [&] { cmd_gadget(flags, out); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        action();
        return kExitOk;
    } catch (const CommandFailed& f) {
        return f.code;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidParameter& e) {
        err << "error: " << e.what() << "\n";
        return kExitOutOfRange;
    } catch (const NotCovered& e) {
        err << "error: " << e.what() << "\n";
        return kExitOutOfRange;
    } catch (const ResourceLimit& e) {
        err << "error: " << e.what() << " (best known upper bound " << e.best_upper_bound() << ")\n";
        return kExitResourceLimit;
    } catch (const ConstructionInvariantViolated& e) {
        err << "error: " << e.what() << "\n";
        return kExitRefuted;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace decycle
