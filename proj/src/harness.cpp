#include "hcert/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <string>

#include <omp.h>

#include "hcert/errors.hpp"
#include "hcert/rng.hpp"

namespace hcert {

std::string_view to_string(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::scaling: return "scaling";
        case ExperimentKind::completeness: return "completeness";
        case ExperimentKind::concentration: return "concentration";
        case ExperimentKind::distribution: return "distribution";
    }
    return "?";
}

ExperimentKind parse_experiment_kind(std::string_view name) {
    for (auto kind : {ExperimentKind::scaling, ExperimentKind::completeness, ExperimentKind::concentration,
                      ExperimentKind::distribution}) {
        if (to_string(kind) == name) return kind;
    }
    throw InputError("unknown experiment kind '" + std::string(name) + "'");
}

std::string_view to_string(InstanceKind kind) {
    switch (kind) {
        case InstanceKind::random: return "random";
        case InstanceKind::complete: return "complete";
        case InstanceKind::empty: return "empty";
        case InstanceKind::planted: return "planted";
    }
    return "?";
}

InstanceKind parse_instance_kind(std::string_view name) {
    for (auto kind : {InstanceKind::random, InstanceKind::complete, InstanceKind::empty, InstanceKind::planted}) {
        if (to_string(kind) == name) return kind;
    }
    throw InputError("unknown instance kind '" + std::string(name) + "'");
}

void ExperimentSpec::validate() const {
    if (trials < 1) throw InputError("trials must be at least 1");
    if (n_list.empty()) throw InputError("n_list must be nonempty");
    if (!std::is_sorted(n_list.begin(), n_list.end()) ||
        std::adjacent_find(n_list.begin(), n_list.end()) != n_list.end()) {
        throw InputError("n_list must be strictly ascending");
    }
    if (k < 2) throw InputError("k must be at least 2");
    if (n_list.front() < k) throw InputError("every n must be at least k");
    if (!(p >= 0.0 && p < 1.0)) throw InputError("p must satisfy 0 <= p < 1");
    if ((kind == ExperimentKind::concentration) && k % 2 != 0) {
        throw InputError("concentration experiments need even k");
    }
}

std::uint32_t default_oracle_ceiling(std::uint32_t k) {
    if (k <= 2) return 24;
    if (k == 3) return 14;
    if (k == 4) return 16;
    return 12;
}

Hypergraph make_instance(const ExperimentSpec& spec, std::uint32_t n, std::uint64_t seed) {
    SampleParams params{.k = spec.k, .n = n, .p = spec.p, .seed = seed, .planted_size = 0};
    switch (spec.instance) {
        case InstanceKind::random: break;
        case InstanceKind::complete: params.p = 1.0; break;
        case InstanceKind::empty: params.p = 0.0; break;
        case InstanceKind::planted:
            params.planted_size = spec.planted_size > 0 ? std::min(spec.planted_size, n) : n / 2;
            break;
    }
    return sample(params);
}

std::uint32_t reduction_identity_violations(const Hypergraph& h, std::uint32_t omega, std::uint32_t d,
                                            std::uint64_t oracle_budget) {
    std::uint32_t violations = 0;
    const std::uint32_t k = h.k();
    if (d >= 1 && d + 1 >= k && d <= h.n()) {
        std::uint32_t best = 0;
        bool conclusive = true;
        for (const auto& j : enumerate_subsets(h.n(), d)) {
            const auto sub = max_clique_oracle(filter_and_induce(h, j).induced, oracle_budget);
            conclusive = conclusive && sub.conclusive;
            best = std::max(best, sub.omega);
        }
        if (conclusive && omega > d + best) ++violations;
    }
    if (k % 2 == 1 && k >= 3 && h.n() >= 1) {
        std::uint32_t best = 0;
        bool conclusive = true;
        for (Vertex i = 0; i < h.n(); ++i) {
            const auto sub = max_clique_oracle(link(h, i), oracle_budget);
            conclusive = conclusive && sub.conclusive;
            best = std::max(best, sub.omega);
        }
        if (conclusive && omega > 1 + best) ++violations;
    }
    return violations;
}

RunRecord run_trial(const ExperimentSpec& spec, std::uint32_t n, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    RunRecord row;
    row.n = n;
    row.k = spec.k;
    row.p = spec.p;
    row.d = spec.d;
    row.seed = seed;
    row.instance = spec.instance;

    CertificateParams params;
    params.p = spec.p;
    params.d = spec.d;
    params.formula = spec.formula;
    params.spectral = spec.spectral;
    params.threads = 1;

    try {
        const Hypergraph h = make_instance(spec, n, seed);
        switch (spec.kind) {
            case ExperimentKind::scaling: {
                const auto report = certify(h, params);
                row.omega_alg = report.omega_alg;
                row.metric = report.max_spectral_norm();
                break;
            }
            case ExperimentKind::concentration: {
                const auto base = base_certificate(h, spec.p, spec.spectral, spec.formula);
                row.omega_alg = base.omega_alg;
                row.metric = base.spectral_norm;
                break;
            }
            case ExperimentKind::distribution: {
                Subset j(std::min(spec.d, n));
                std::iota(j.begin(), j.end(), Vertex{0});
                row.metric = static_cast<double>(filter_and_induce(h, j).common.size());
                break;
            }
            case ExperimentKind::completeness: {
                const auto report = certify(h, params);
                row.omega_alg = report.omega_alg;
                row.metric = report.max_spectral_norm();
                if (n <= spec.oracle_ceiling.value_or(default_oracle_ceiling(spec.k))) {
                    const auto oracle = max_clique_oracle(h, spec.oracle_budget);
                    if (oracle.conclusive) {
                        row.oracle_omega = oracle.omega;
                        if (static_cast<double>(oracle.omega) > report.omega_alg) row.violations = 1;
                        row.identity_violations =
                            reduction_identity_violations(h, oracle.omega, spec.d, spec.oracle_budget);
                    }
                }
                break;
            }
        }
    } catch (const CertificateRefused&) {
        row.status = "refused";
    } catch (const std::exception&) {
        row.status = "error";
    }
    if (spec.record_timing) {
        row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    return row;
}

ExperimentResult run_experiment(const ExperimentSpec& spec) {
    spec.validate();
    ExperimentResult result;
    result.spec = spec;
    struct Slot {
        std::uint32_t n;
        std::uint64_t seed;
    };
    std::vector<Slot> slots;
    for (std::uint32_t n : spec.n_list) {
        for (std::uint32_t t = 0; t < spec.trials; ++t) slots.push_back({n, split_seed(spec.base_seed, n, t)});
    }
    result.records.resize(slots.size());
    const int nthreads = spec.threads > 0 ? spec.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(slots.size()); ++i) {
        const auto& slot = slots[static_cast<std::size_t>(i)];
        result.records[static_cast<std::size_t>(i)] = run_trial(spec, slot.n, slot.seed);
    }
    return result;
}

double ExperimentResult::success_rate() const {
    if (records.empty()) return 0.0;
    const auto ok = std::count_if(records.begin(), records.end(), [](const RunRecord& r) { return r.ok(); });
    return static_cast<double>(ok) / static_cast<double>(records.size());
}

std::uint64_t ExperimentResult::total_violations() const {
    std::uint64_t total = 0;
    for (const auto& r : records) total += r.violations;
    return total;
}

std::uint64_t ExperimentResult::total_identity_violations() const {
    std::uint64_t total = 0;
    for (const auto& r : records) total += r.identity_violations;
    return total;
}

double median(std::vector<double> values) {
    if (values.empty()) return std::nan("");
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

namespace {

std::string fmt_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

}  // namespace

std::vector<std::string> ExperimentResult::summary() const {
    std::vector<std::string> lines;
    lines.push_back("# kind=" + std::string(to_string(spec.kind)) + " k=" + std::to_string(spec.k) + " p=" +
                    fmt_real(spec.p) + " d=" + std::to_string(spec.d) + " trials=" + std::to_string(spec.trials) +
                    " instance=" + std::string(to_string(spec.instance)) + " formula=" +
                    std::string(to_string(spec.formula)));
    std::map<std::uint32_t, std::vector<const RunRecord*>> by_n;
    for (const auto& r : records) by_n[r.n].push_back(&r);
    for (const auto& [n, rows] : by_n) {
        std::vector<double> omegas;
        std::vector<double> metrics;
        std::size_t ok = 0;
        std::uint64_t viol = 0;
        std::uint64_t ident = 0;
        for (const RunRecord* r : rows) {
            if (!r->ok()) continue;
            ++ok;
            if (r->omega_alg) omegas.push_back(*r->omega_alg);
            if (r->metric) metrics.push_back(*r->metric);
            viol += r->violations;
            ident += r->identity_violations;
        }
        double mean = std::nan("");
        double var = std::nan("");
        if (!metrics.empty()) {
            mean = std::accumulate(metrics.begin(), metrics.end(), 0.0) / static_cast<double>(metrics.size());
            if (metrics.size() > 1) {
                double ss = 0.0;
                for (double m : metrics) ss += (m - mean) * (m - mean);
                var = ss / static_cast<double>(metrics.size() - 1);
            }
        }
        lines.push_back("# n=" + std::to_string(n) + " rows=" + std::to_string(rows.size()) + " ok=" +
                        std::to_string(ok) + " median_omega_alg=" + fmt_real(median(omegas)) +
                        " median_metric=" + fmt_real(median(metrics)) + " mean_metric=" + fmt_real(mean) +
                        " var_metric=" + fmt_real(var) + " violations=" + std::to_string(viol) +
                        " identity_violations=" + std::to_string(ident));
    }
    lines.push_back("# success_rate=" + fmt_real(success_rate()) + " violations=" + std::to_string(total_violations()) +
                    " identity_violations=" + std::to_string(total_identity_violations()));
    return lines;
}

std::string ExperimentResult::to_csv() const {
    std::string out(kCsvHeader);
    out += '\n';
    for (const auto& r : records) {
        out += std::to_string(r.n) + ',' + std::to_string(r.k) + ',' + fmt_real(r.p) + ',' + std::to_string(r.d) + ',' +
               std::to_string(r.seed) + ',' + (r.omega_alg ? fmt_real(*r.omega_alg) : "") + ',' +
               (r.oracle_omega ? std::to_string(*r.oracle_omega) : "") + ',' + r.status + ',' +
               (r.wall_ms ? fmt_real(*r.wall_ms) : "") + ',' + std::string(to_string(r.instance)) + ',' +
               (r.metric ? fmt_real(*r.metric) : "") + ',' + std::to_string(r.violations) + ',' +
               std::to_string(r.identity_violations) + '\n';
    }
    for (const auto& line : summary()) out += line + '\n';
    return out;
}

}  // namespace hcert
