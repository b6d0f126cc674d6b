#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hcert/hypergraph.hpp"
#include "hcert/reductions.hpp"

namespace hcert {

enum class ExperimentKind { scaling, completeness, concentration, distribution };
enum class InstanceKind { random, complete, empty, planted };

std::string_view to_string(ExperimentKind kind);
ExperimentKind parse_experiment_kind(std::string_view name);
std::string_view to_string(InstanceKind kind);
InstanceKind parse_instance_kind(std::string_view name);

struct ExperimentSpec {
    ExperimentKind kind = ExperimentKind::scaling;
    std::uint32_t k = 4;
    double p = 0.5;
    std::uint32_t d = 0;
    std::vector<std::uint32_t> n_list;
    std::uint32_t trials = 1;
    std::uint64_t base_seed = 0;
    InstanceKind instance = InstanceKind::random;
    std::uint32_t planted_size = 0;  // planted instances; 0 picks n/2
    Formula formula = Formula::paper;
    SpectralConfig spectral;
    std::optional<std::uint32_t> oracle_ceiling;  // default per k, see default_oracle_ceiling()
    std::uint64_t oracle_budget = kDefaultOracleBudget;
    bool record_timing = true;  // false leaves wall_ms empty so reruns are byte-identical
    int threads = 0;

    /// Throws InputError unless trials >= 1 and n_list is nonempty and ascending.
    void validate() const;
};

/// Largest n at which the completeness experiment runs the exact oracle.
std::uint32_t default_oracle_ceiling(std::uint32_t k);

/// One CSV row. Optional fields print as empty cells.
struct RunRecord {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    double p = 0.0;
    std::uint32_t d = 0;
    std::uint64_t seed = 0;
    std::optional<double> omega_alg;
    std::optional<std::uint32_t> oracle_omega;
    std::string status = "ok";
    std::optional<double> wall_ms;
    InstanceKind instance = InstanceKind::random;
    std::optional<double> metric;  // kind-specific: max spectral norm, or |V_J|
    std::uint32_t violations = 0;           // oracle omega > omega_alg
    std::uint32_t identity_violations = 0;  // reduction inequalities failing on oracle values

    bool ok() const { return status == "ok"; }
};

inline constexpr std::string_view kCsvHeader =
    "n,k,p,d,seed,omega_alg,oracle_omega,status,wall_ms,instance,metric,violations,identity_violations";

struct ExperimentResult {
    ExperimentSpec spec;
    std::vector<RunRecord> records;  // ordered by (n, trial)

    double success_rate() const;
    std::uint64_t total_violations() const;
    std::uint64_t total_identity_violations() const;
    /// '#'-prefixed summary lines, one per n plus a global line.
    std::vector<std::string> summary() const;
    std::string to_csv() const;
};

/// Instance for trial `trial` at size n, from split_seed(base_seed, n, trial).
Hypergraph make_instance(const ExperimentSpec& spec, std::uint32_t n, std::uint64_t seed);

RunRecord run_trial(const ExperimentSpec& spec, std::uint32_t n, std::uint64_t seed);

ExperimentResult run_experiment(const ExperimentSpec& spec);

/// Number of (reduction, oracle) inequality failures on h, given its exact clique number:
/// omega <= d + max_J omega(H_J) when d >= max(k-1, 1), and omega <= 1 + max_i omega(H_i) for odd k.
std::uint32_t reduction_identity_violations(const Hypergraph& h, std::uint32_t omega, std::uint32_t d,
                                            std::uint64_t oracle_budget);

double median(std::vector<double> values);

}  // namespace hcert
