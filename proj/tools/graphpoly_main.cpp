// graphpoly: batch front end for exact chromatic / flow polynomial
// computation and the bundled identity verifiers.
//
// Exit codes: 0 success or all checks passed, 1 at least one verification
// failed, 2 usage or input error. stdout is byte-deterministic for fixed
// inputs and flags; timings go to stderr.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphpoly/chromatic.hpp"
#include "graphpoly/flows.hpp"
#include "graphpoly/graph_io.hpp"
#include "graphpoly/identity.hpp"
#include "graphpoly/planar.hpp"
#include "graphpoly/polynomial.hpp"
#include "graphpoly/random.hpp"

namespace gp = graphpoly;

namespace {

int edge_cap_from_env() {
    if (const char* raw = std::getenv("GRAPHPOLY_EDGE_CAP")) {
        try {
            int cap = std::stoi(raw);
            if (cap > 0) return cap;
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring invalid GRAPHPOLY_EDGE_CAP='" << raw << "'\n";
    }
    return gp::kDefaultEdgeCap;
}

std::string render_poly(const gp::IntPoly& p, const std::string& format) {
    return format == "coeffs" ? gp::to_coeff_list(p) : gp::to_pretty(p);
}

std::string graph_descriptor(const gp::Multigraph& g) {
    std::ostringstream out;
    out << "n=" << g.n() << " m=" << g.m();
    return out.str();
}

struct VerificationReport {
    std::string identity;
    std::string graph_desc;
    std::string verdict; // PASS / FAIL / SKIP
    std::vector<std::pair<std::string, std::string>> payload; // both sides on failure
    double duration_ms = 0.0;
};

class Reporter {
public:
    Reporter(bool jsonl) : jsonl_(jsonl) {}

    void emit(const VerificationReport& r) {
        if (r.verdict == "FAIL") failed_ = true;
        if (r.verdict != "SKIP") ++checks_;
        if (jsonl_) {
            nlohmann::ordered_json record;
            record["identity"] = r.identity;
            record["graph"] = r.graph_desc;
            record["verdict"] = r.verdict;
            for (const auto& [key, value] : r.payload) record[key] = value;
            std::cout << record.dump() << "\n";
        } else {
            std::cout << r.graph_desc << " " << r.identity << " " << r.verdict;
            if (r.verdict != "FAIL") {
                for (const auto& [key, value] : r.payload)
                    std::cout << " " << key << "=" << value;
            }
            std::cout << "\n";
            if (r.verdict == "FAIL")
                for (const auto& [key, value] : r.payload)
                    std::cout << "  " << key << " = " << value << "\n";
        }
        // Wall-clock timing is kept off stdout so runs stay byte-identical.
        std::cerr << "# timing " << r.identity << " " << r.duration_ms << "ms\n";
    }

    bool any_failed() const { return failed_; }
    int checks() const { return checks_; }

private:
    bool jsonl_;
    bool failed_ = false;
    int checks_ = 0;
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

VerificationReport report_identity(const std::string& name, const std::string& desc,
                                   const gp::IdentityVerdict& v, double ms) {
    VerificationReport r{name, desc, v.pass ? "PASS" : "FAIL", {}, ms};
    if (!v.pass) {
        r.payload.emplace_back("lhs", gp::to_pretty(v.lhs));
        r.payload.emplace_back("rhs", gp::to_pretty(v.rhs));
    }
    return r;
}

// Runs one identity on one graph; `all` mode passes require_plane=false so
// planar identities are skipped (not errors) on files without an embedding.
VerificationReport run_identity(const std::string& identity, const gp::GraphFile& gf,
                                const std::string& desc, int k, int edge_cap,
                                bool require_plane) {
    const gp::Multigraph& g = gf.graph;
    Stopwatch timer;
    if (identity == "eq1")
        return report_identity("eq1", desc, gp::verify_theorem(g, edge_cap), timer.ms());
    if (identity == "eq10") {
        gp::IntegerVerdict v = gp::verify_eq10(g, k);
        VerificationReport r{"eq10", desc, v.pass ? "PASS" : "FAIL", {}, timer.ms()};
        r.payload.emplace_back("k", std::to_string(k));
        if (!v.pass) {
            r.payload.emplace_back("lhs", v.lhs.str());
            r.payload.emplace_back("rhs", v.rhs.str());
        }
        return r;
    }

    if (!gf.plane) {
        if (require_plane)
            throw gp::input_error("identity " + identity +
                                  " needs an embedding section in the graph file");
        return VerificationReport{identity, desc, "SKIP", {{"reason", "no-embedding"}}, timer.ms()};
    }
    const gp::PlaneGraph& pg = *gf.plane;

    if (identity == "eq4") return report_identity("eq4", desc, gp::verify_eq4(pg), timer.ms());
    if (identity == "eq5")
        return report_identity("eq5", desc, gp::verify_eq5(pg, edge_cap), timer.ms());
    if (identity == "eq6")
        return report_identity("eq6", desc, gp::verify_eq6(pg, edge_cap), timer.ms());
    if (identity == "cor2") {
        if (g.m() <= 1 && !require_plane)
            return VerificationReport{"cor2", desc, "SKIP", {{"reason", "m<=1"}}, timer.ms()};
        gp::Cor2Verdict v = gp::verify_cor2(pg); // throws input_error when m <= 1
        VerificationReport r{"cor2", desc, v.pass ? "PASS" : "FAIL", {}, timer.ms()};
        if (!v.pass) {
            r.payload.emplace_back("difference", gp::to_pretty(v.difference));
            r.payload.emplace_back("remainder", gp::to_pretty(v.remainder));
        }
        return r;
    }
    if (identity == "cor3") {
        gp::Cor3Report report = gp::check_cor3(pg);
        VerificationReport r{"cor3", desc, report.pass ? "PASS" : "FAIL", {}, timer.ms()};
        r.payload.emplace_back("hypothesis", report.hypothesis_holds ? "true" : "false");
        r.payload.emplace_back("colorings3", report.colorings3.str());
        if (report.hypothesis_holds)
            r.payload.emplace_back("dual_colorings3", report.dual_colorings3.str());
        return r;
    }
    throw gp::input_error("unknown identity: " + identity);
}

const std::vector<std::string> kAllIdentities = {"eq1", "eq10", "eq4", "eq5",
                                                 "eq6", "cor2", "cor3"};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact chromatic and flow polynomials of multigraphs, "
                 "with planar-duality verifiers"};
    app.require_subcommand(1);
    const int edge_cap = edge_cap_from_env();

    std::string file;
    std::string format = "pretty";
    std::string identity = "all";
    int k = 2;
    bool jsonl = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "polynomial output: pretty or coeffs")
            ->check(CLI::IsMember({"pretty", "coeffs"}));
    };

    CLI::App* cmd_chromatic = app.add_subcommand("chromatic", "chromatic polynomial of FILE");
    cmd_chromatic->add_option("file", file, "graph file")->required();
    add_format(cmd_chromatic);

    CLI::App* cmd_flow = app.add_subcommand("flow", "flow polynomial of FILE");
    cmd_flow->add_option("file", file, "graph file")->required();
    add_format(cmd_flow);

    CLI::App* cmd_dual = app.add_subcommand("dual", "geometric dual of an embedded FILE");
    cmd_dual->add_option("file", file, "graph file with embedding")->required();

    CLI::App* cmd_w = app.add_subcommand("w", "weight function of FILE: flow polynomial and k shift");
    cmd_w->add_option("file", file, "graph file")->required();
    add_format(cmd_w);

    CLI::App* cmd_verify = app.add_subcommand("verify", "run identity verifiers on FILE");
    cmd_verify->add_option("file", file, "graph file")->required();
    cmd_verify->add_option("--identity", identity, "eq1|eq4|eq5|eq6|eq10|cor2|cor3|all")
        ->check(CLI::IsMember({"eq1", "eq4", "eq5", "eq6", "eq10", "cor2", "cor3", "all"}));
    cmd_verify->add_option("--k", k, "modulus for eq10 (default 2)")->check(CLI::PositiveNumber);
    cmd_verify->add_flag("--report", jsonl, "machine-readable JSONL records on stdout");

    int max_edges = 8;
    int trials = 50;
    std::uint64_t seed = 0;
    CLI::App* cmd_fuzz = app.add_subcommand("fuzz", "verify identities on seeded random multigraphs");
    cmd_fuzz->add_option("--max-edges", max_edges, "edge bound per graph")->check(CLI::PositiveNumber);
    cmd_fuzz->add_option("--trials", trials, "number of random graphs")
        ->check(CLI::NonNegativeNumber);
    cmd_fuzz->add_option("--seed", seed, "splitmix64 seed");
    cmd_fuzz->add_option("--identity", identity, "eq1|eq10|all")
        ->check(CLI::IsMember({"eq1", "eq10", "all"}));
    cmd_fuzz->add_option("--k", k, "modulus for eq10 (default 2)")->check(CLI::PositiveNumber);
    cmd_fuzz->add_flag("--report", jsonl, "machine-readable JSONL records on stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_chromatic->parsed()) {
            gp::GraphFile gf = gp::load_graph_file(file);
            std::cout << render_poly(gp::chromatic_polynomial(gf.graph), format) << "\n";
            return 0;
        }
        if (cmd_flow->parsed()) {
            gp::GraphFile gf = gp::load_graph_file(file);
            std::cout << render_poly(gp::flow_polynomial(gf.graph), format) << "\n";
            return 0;
        }
        if (cmd_dual->parsed()) {
            gp::GraphFile gf = gp::load_graph_file(file);
            if (!gf.plane)
                throw gp::input_error("dual needs an embedding section in the graph file");
            std::cout << gp::render_graph_file(gp::geometric_dual(*gf.plane));
            return 0;
        }
        if (cmd_w->parsed()) {
            gp::GraphFile gf = gp::load_graph_file(file);
            gp::WFunctionValue w = gp::w_function(gf.graph);
            std::cout << "f = " << render_poly(w.flow_poly, format) << "\n";
            std::cout << "k_shift = " << w.k_shift << "\n";
            return 0;
        }
        if (cmd_verify->parsed()) {
            gp::GraphFile gf = gp::load_graph_file(file);
            const std::string desc = graph_descriptor(gf.graph);
            Reporter reporter(jsonl);
            if (identity == "all") {
                for (const std::string& id : kAllIdentities)
                    reporter.emit(run_identity(id, gf, desc, k, edge_cap, false));
            } else {
                reporter.emit(run_identity(identity, gf, desc, k, edge_cap, true));
            }
            if (!jsonl)
                std::cout << "verify: " << (reporter.any_failed() ? "FAIL" : "PASS") << " ("
                          << reporter.checks() << " checks)\n";
            return reporter.any_failed() ? 1 : 0;
        }
        if (cmd_fuzz->parsed()) {
            if (max_edges > edge_cap)
                throw gp::input_error("--max-edges " + std::to_string(max_edges) +
                                      " exceeds the enumeration cap of " +
                                      std::to_string(edge_cap));
            std::vector<std::string> identities =
                identity == "all" ? std::vector<std::string>{"eq1", "eq10"}
                                  : std::vector<std::string>{identity};
            gp::SplitMix64 rng(seed);
            Reporter reporter(jsonl);
            for (int trial = 0; trial < trials; ++trial) {
                gp::Multigraph g = gp::random_multigraph(rng, max_edges);
                gp::GraphFile gf{g, std::nullopt};
                std::ostringstream desc;
                desc << "trial=" << trial << " " << graph_descriptor(g);
                for (const std::string& id : identities)
                    reporter.emit(run_identity(id, gf, desc.str(), k, edge_cap, true));
            }
            if (!jsonl)
                std::cout << "fuzz: " << (reporter.any_failed() ? "FAIL" : "PASS") << " ("
                          << reporter.checks() << " checks, seed " << seed << ")\n";
            return reporter.any_failed() ? 1 : 0;
        }
    } catch (const gp::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
