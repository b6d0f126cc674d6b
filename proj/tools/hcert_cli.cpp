// hcert: sample hypergraphs, certify clique-number bounds, run the exact oracle
// and the statistical experiments.
//
// Exit codes: 0 ok, 2 usage/input, 3 refused certificate, 4 inconclusive oracle.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "hcert/errors.hpp"
#include "hcert/harness.hpp"
#include "hcert/hypergraph.hpp"
#include "hcert/reductions.hpp"
#include "hcert/report_json.hpp"
#include "hcert/rng.hpp"
#include "hcert/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitRefused = 3;
constexpr int kExitInconclusive = 4;

struct Globals {
    std::uint64_t seed = 0;
    int threads = 0;
    bool quiet = false;
};

void note(const Globals& g, const std::string& msg) {
    if (!g.quiet) std::cerr << msg << '\n';
}

std::vector<std::uint32_t> parse_n_list(const std::string& text) {
    std::vector<std::uint32_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        const unsigned long value = std::stoul(item, &used);
        if (used != item.size()) throw hcert::InputError("bad --n-list entry '" + item + "'");
        out.push_back(static_cast<std::uint32_t>(value));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral clique-number certificates for k-uniform hypergraphs"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--seed", g.seed, "Seed for sampling and experiments")->capture_default_str();
    app.add_option("--threads", g.threads, "Worker threads (0 = OpenMP default)")->check(CLI::NonNegativeNumber);
    app.add_flag("--quiet", g.quiet, "Suppress progress messages on stderr");

    // sample
    auto* sample_cmd = app.add_subcommand("sample", "Draw a hypergraph from H(k,n,p), optionally with a planted clique");
    sample_cmd->fallthrough();
    hcert::SampleParams sp;
    std::string sample_out;
    sample_cmd->add_option("--k", sp.k, "Uniformity")->required()->check(CLI::Range(1U, 64U));
    sample_cmd->add_option("--n", sp.n, "Vertex count")->required();
    sample_cmd->add_option("--p", sp.p, "Edge probability")->required()->check(CLI::Range(0.0, 1.0));
    sample_cmd->add_option("--planted", sp.planted_size, "Force a clique on vertices 0..s-1");
    sample_cmd->add_option("--out", sample_out, "Output path (default: stdout)");

    // certify
    auto* certify_cmd = app.add_subcommand("certify", "Certify an upper bound on the clique number");
    certify_cmd->fallthrough();
    std::string input;
    hcert::CertificateParams cp;
    std::string formula = "paper";
    std::string method = "lanczos";
    double budget = 1e12;
    std::uint64_t max_iters = 0;
    certify_cmd->add_option("--input", input, "Hypergraph JSON file")->required();
    certify_cmd->add_option("--p", cp.p, "Edge probability parameter, 0 <= p < 1")->required();
    certify_cmd->add_option("--d", cp.d, "Reduction depth (0 = basic algorithm)")->required();
    certify_cmd->add_option("--formula", formula, "paper | tight")->check(CLI::IsMember({"paper", "tight"}));
    certify_cmd->add_option("--tol", cp.spectral.rel_tol, "Relative eigensolver tolerance")->check(CLI::PositiveNumber);
    certify_cmd->add_option("--budget", budget, "Refuse if the estimated work exceeds this many flops")
        ->capture_default_str();
    certify_cmd->add_option("--method", method, "Iterative eigensolver: lanczos | power")
        ->check(CLI::IsMember({"lanczos", "power"}));
    certify_cmd->add_option("--dense-threshold", cp.spectral.dense_threshold, "Dense eigensolve up to this dimension");
    certify_cmd->add_option("--max-iters", max_iters, "Iteration cap (default 10*D+1000)");
    certify_cmd->add_option("--constant", cp.theorem_constant, "Constant used in the reported theorem_bound");

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "Exact clique number by branch-and-bound");
    oracle_cmd->fallthrough();
    std::uint64_t node_budget = hcert::kDefaultOracleBudget;
    oracle_cmd->add_option("--input", input, "Hypergraph JSON file")->required();
    oracle_cmd->add_option("--budget", node_budget, "Search node limit")->capture_default_str();

    // experiment
    auto* exp_cmd = app.add_subcommand("experiment", "Run a seeded experiment and write CSV");
    exp_cmd->fallthrough();
    hcert::ExperimentSpec spec;
    std::string kind = "scaling";
    std::string instance = "random";
    std::string n_list;
    std::string exp_out;
    bool no_timing = false;
    exp_cmd->add_option("--kind", kind, "scaling | completeness | concentration | distribution")
        ->check(CLI::IsMember({"scaling", "completeness", "concentration", "distribution"}));
    exp_cmd->add_option("--k", spec.k, "Uniformity")->required();
    exp_cmd->add_option("--p", spec.p, "Edge probability")->required();
    exp_cmd->add_option("--d", spec.d, "Reduction depth (distribution: |J|)");
    exp_cmd->add_option("--n-list", n_list, "Comma-separated ascending sizes")->required();
    exp_cmd->add_option("--trials", spec.trials, "Seeds per size")->check(CLI::PositiveNumber);
    exp_cmd->add_option("--instance", instance, "random | complete | empty | planted")
        ->check(CLI::IsMember({"random", "complete", "empty", "planted"}));
    exp_cmd->add_option("--planted", spec.planted_size, "Planted clique size (0 = n/2)");
    exp_cmd->add_option("--formula", formula, "paper | tight")->check(CLI::IsMember({"paper", "tight"}));
    exp_cmd->add_option("--out", exp_out, "CSV output path")->required();
    exp_cmd->add_flag("--no-timing", no_timing, "Leave wall_ms empty (byte-reproducible output)");

    // version
    auto* version_cmd = app.add_subcommand("version", "Print version and RNG identifier");
    bool version_json = false;
    version_cmd->add_flag("--json", version_json, "Emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*sample_cmd) {
            sp.seed = g.seed;
            const std::string text = hcert::to_json(hcert::sample(sp));
            if (sample_out.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(sample_out, std::ios::binary);
                if (!out) throw hcert::InputError("cannot write '" + sample_out + "'");
                out << text;
            }
            return kExitOk;
        }
        if (*certify_cmd) {
            cp.formula = hcert::parse_formula(formula);
            cp.spectral.method = hcert::parse_spectral_method(method);
            if (max_iters > 0) cp.spectral.max_iters = max_iters;
            cp.work_budget = budget;
            cp.threads = g.threads;
            const hcert::Hypergraph h = hcert::load(input);
            try {
                const auto report = hcert::certify(h, cp);
                std::cout << hcert::to_json(report, cp);
            } catch (const hcert::CertificateRefused& e) {
                std::cerr << "certificate refused: " << e.what() << '\n';
                return kExitRefused;
            }
            return kExitOk;
        }
        if (*oracle_cmd) {
            const hcert::Hypergraph h = hcert::load(input);
            const auto result = hcert::max_clique_oracle(h, node_budget);
            nlohmann::ordered_json doc;
            doc["status"] = result.conclusive ? "exact" : "inconclusive";
            doc[result.conclusive ? "omega" : "best_lower_bound"] = result.omega;
            doc["witness"] = result.witness;
            doc["nodes"] = result.nodes;
            std::cout << doc.dump() << '\n';
            return result.conclusive ? kExitOk : kExitInconclusive;
        }
        if (*exp_cmd) {
            spec.kind = hcert::parse_experiment_kind(kind);
            spec.instance = hcert::parse_instance_kind(instance);
            spec.formula = hcert::parse_formula(formula);
            spec.n_list = parse_n_list(n_list);
            spec.base_seed = g.seed;
            spec.threads = g.threads;
            spec.record_timing = !no_timing;
            note(g, "running " + kind + " experiment over " + std::to_string(spec.n_list.size()) + " sizes x " +
                        std::to_string(spec.trials) + " trials");
            const auto result = hcert::run_experiment(spec);
            std::ofstream out(exp_out, std::ios::binary);
            if (!out) throw hcert::InputError("cannot write '" + exp_out + "'");
            out << result.to_csv();
            note(g, result.summary().back());
            if (spec.kind == hcert::ExperimentKind::completeness &&
                (result.total_violations() > 0 || result.total_identity_violations() > 0)) {
                std::cerr << "completeness violations detected\n";
                return 1;
            }
            return result.success_rate() >= 0.9 ? kExitOk : 1;
        }
        if (*version_cmd) {
            if (version_json) {
                nlohmann::ordered_json doc;
                doc["version"] = std::string(hcert::kVersion);
                doc["rng"] = std::string(hcert::kRngId);
                std::cout << doc.dump() << '\n';
            } else {
                std::cout << "hcert " << hcert::kVersion << " (rng " << hcert::kRngId << ")\n";
            }
            return kExitOk;
        }
    } catch (const hcert::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const hcert::SizingError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kExitOk;
}
