// Command-line front end: single runs with JSONL result records, a
// benchmark harness over a manifest of configurations, and the fixture
// generators.

#include <sys/resource.h>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "aldente/exactflow.hpp"
#include "aldente/gen.hpp"
#include "aldente/oracle.hpp"
#include "aldente/peel.hpp"
#include "aldente/randpeel.hpp"

namespace {

using nlohmann::json;
using namespace aldente;

constexpr const char* kResultSchema = "aldente-result-v1";
constexpr const char* kBenchSchema = "aldente-bench-v1";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

long peak_rss_kb() {
    rusage usage{};
    if (getrusage(RUSAGE_SELF, &usage) != 0) return -1;
    return usage.ru_maxrss;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// One fully resolved algorithm invocation.
struct RunSpec {
    std::string input;
    std::string motif_path;
    std::string algorithm;
    double delta = 0.0;
    std::string weight = "const";
    std::optional<double> lambda;
    double xi = 0.1;
    double epsilon = 0.1;
    double eta = 0.1;
    double q = 1.25;
    std::optional<std::uint64_t> samples;
    std::optional<std::uint64_t> max_samples;
    std::optional<unsigned> J;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::optional<double> time_limit;
};

struct RunOutcome {
    DensityResult result;
    bool timed_out = false;
    std::string error;
    double wall_time_s = 0.0;
};

const std::vector<std::string>& known_algorithms() {
    static const std::vector<std::string> algorithms{"exact",    "greedy",     "batch",
                                                     "probpeel", "hybridpeel", "oracle"};
    return algorithms;
}

bool uses_sampling(const std::string& algorithm) {
    return algorithm == "probpeel" || algorithm == "hybridpeel";
}

bool uses_slack(const std::string& algorithm) {
    return algorithm == "batch" || uses_sampling(algorithm);
}

WeightFunction resolve_weight(const RunSpec& spec, const TemporalNetwork& t, double* lambda_out) {
    if (spec.weight == "const") {
        *lambda_out = 0.0;
        return WeightFunction::constant();
    }
    const double lambda = spec.lambda ? *spec.lambda : default_decay_lambda(t);
    if (lambda < 0.0) throw UsageError("--lambda must be non-negative");
    *lambda_out = lambda;
    return WeightFunction::decay(lambda);
}

RandPeelConfig rand_config(const RunSpec& spec) {
    RandPeelConfig config;
    config.xi = spec.xi;
    config.sample.q = spec.q;
    config.sample.epsilon = spec.epsilon;
    config.sample.eta = spec.eta;
    config.sample.samples = spec.samples;
    config.sample.max_samples = spec.max_samples;
    config.sample.seed = spec.seed;
    config.sample.threads = spec.threads;
    config.J = spec.J;
    return config;
}

RunOutcome run_algorithm(const RunSpec& spec, const TemporalNetwork& t, const TemporalMotif& motif,
                         const WeightFunction& tau) {
    RunOutcome outcome;
    if (spec.time_limit) {
        set_deadline(std::chrono::steady_clock::now() +
                     std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                         std::chrono::duration<double>(*spec.time_limit)));
    } else {
        set_deadline(std::nullopt);
    }
    const auto start = std::chrono::steady_clock::now();
    try {
        if (spec.algorithm == "exact") {
            outcome.result = solve_exact(t, motif, spec.delta, tau);
        } else if (spec.algorithm == "greedy") {
            outcome.result = greedy_peel(t, motif, spec.delta, tau).result;
        } else if (spec.algorithm == "batch") {
            outcome.result = batch_peel(t, motif, spec.delta, tau, spec.xi).result;
        } else if (spec.algorithm == "probpeel") {
            outcome.result = prob_peel(t, motif, spec.delta, tau, rand_config(spec)).result;
        } else if (spec.algorithm == "hybridpeel") {
            outcome.result = hybrid_peel(t, motif, spec.delta, tau, rand_config(spec)).result;
        } else if (spec.algorithm == "oracle") {
            outcome.result = oracle::brute_force_opt(t, motif, spec.delta, tau);
        } else {
            throw UsageError("unknown algorithm: " + spec.algorithm);
        }
    } catch (const TimeoutExceeded&) {
        outcome.timed_out = true;
    } catch (const UsageError&) {
        set_deadline(std::nullopt);
        throw;
    } catch (const std::exception& e) {
        outcome.error = e.what();
    }
    outcome.wall_time_s = seconds_since(start);
    set_deadline(std::nullopt);
    return outcome;
}

json config_echo(const RunSpec& spec, double lambda_effective) {
    json config;
    config["delta"] = spec.delta;
    config["weight"] = spec.weight;
    config["lambda"] = spec.weight == "decay" ? json(lambda_effective) : json(nullptr);
    config["xi"] = uses_slack(spec.algorithm) ? json(spec.xi) : json(nullptr);
    config["epsilon"] = uses_sampling(spec.algorithm) ? json(spec.epsilon) : json(nullptr);
    config["eta"] = uses_sampling(spec.algorithm) ? json(spec.eta) : json(nullptr);
    config["q"] = uses_sampling(spec.algorithm) ? json(spec.q) : json(nullptr);
    config["samples"] =
        spec.samples && uses_sampling(spec.algorithm) ? json(*spec.samples) : json(nullptr);
    config["max_samples"] =
        spec.max_samples && uses_sampling(spec.algorithm) ? json(*spec.max_samples) : json(nullptr);
    config["J"] = spec.J && spec.algorithm == "hybridpeel" ? json(*spec.J) : json(nullptr);
    config["threads"] = spec.threads;
    config["time_limit_s"] = spec.time_limit ? json(*spec.time_limit) : json(nullptr);
    return config;
}

json run_record(const RunSpec& spec, const TemporalNetwork& t, const TemporalMotif& motif,
                const WeightFunction& tau, double lambda_effective, std::uint64_t repeat,
                std::uint64_t effective_seed, const RunOutcome& outcome) {
    json record;
    record["schema"] = kResultSchema;
    record["record"] = "run";
    record["algorithm"] = spec.algorithm;
    record["input"] = spec.input;
    record["motif"] = spec.motif_path;
    record["config"] = config_echo(spec, lambda_effective);
    record["seed"] = effective_seed;
    record["repeat"] = repeat;
    record["timeout"] = outcome.timed_out;
    if (!outcome.error.empty()) record["error"] = outcome.error;
    if (outcome.timed_out || !outcome.error.empty()) {
        record["solution"] = nullptr;
        record["size"] = nullptr;
        record["tau"] = nullptr;
        record["density"] = nullptr;
        record["estimated_density"] = nullptr;
        record["iterations"] = nullptr;
        record["best_effort"] = false;
    } else {
        std::vector<std::string> labels;
        labels.reserve(outcome.result.vertices.size());
        for (VertexId v : outcome.result.vertices) labels.push_back(t.labels[v]);
        record["solution"] = labels;
        record["size"] = outcome.result.vertices.size();
        record["tau"] = outcome.result.tau;
        // Re-evaluated from scratch rather than trusting the algorithm's
        // own accounting.
        record["density"] = density(t, outcome.result.vertices, motif, spec.delta, tau);
        record["estimated_density"] = std::isnan(outcome.result.estimated_density)
                                          ? json(nullptr)
                                          : json(outcome.result.estimated_density);
        record["iterations"] = outcome.result.iterations;
        record["best_effort"] = outcome.result.best_effort;
    }
    record["wall_time_s"] = outcome.wall_time_s;
    record["peak_rss_kb"] = peak_rss_kb();
    return record;
}

int cmd_run(const RunSpec& spec, std::uint64_t repeats, const std::string& output_path) {
    const TemporalNetwork t = load_edge_list(spec.input);
    const TemporalMotif motif = parse_motif_file(spec.motif_path);
    double lambda_effective = 0.0;
    const WeightFunction tau = resolve_weight(spec, t, &lambda_effective);

    std::ofstream file;
    if (!output_path.empty()) {
        file.open(output_path);
        if (!file) throw std::runtime_error("cannot open output file: " + output_path);
    }
    std::ostream& records = output_path.empty() ? std::cout : file;

    bool timed_out = false;
    std::vector<double> densities;
    std::vector<double> times;
    for (std::uint64_t repeat = 0; repeat < repeats; ++repeat) {
        RunSpec repeat_spec = spec;
        repeat_spec.seed = spec.seed + repeat;
        const RunOutcome outcome = run_algorithm(repeat_spec, t, motif, tau);
        if (!outcome.error.empty()) throw std::runtime_error(outcome.error);
        const json record = run_record(spec, t, motif, tau, lambda_effective, repeat,
                                       repeat_spec.seed, outcome);
        records << record.dump() << "\n";
        if (outcome.timed_out) {
            std::cout << spec.algorithm << " on " << spec.input << ": timed out after "
                      << outcome.wall_time_s << " s (repeat " << repeat << ")\n";
            timed_out = true;
            break;
        }
        const double exact_density = record["density"].get<double>();
        densities.push_back(exact_density);
        times.push_back(outcome.wall_time_s);
        std::cout << spec.algorithm << " on " << spec.input << ": density " << exact_density
                  << " over " << outcome.result.vertices.size() << " vertices (tau "
                  << outcome.result.tau << ", " << outcome.result.iterations << " iterations, "
                  << outcome.wall_time_s << " s)\n";
    }

    if (!densities.empty()) {
        double mean = 0.0;
        for (double d : densities) mean += d;
        mean /= static_cast<double>(densities.size());
        double var = 0.0;
        for (double d : densities) var += (d - mean) * (d - mean);
        var /= static_cast<double>(densities.size());
        double mean_time = 0.0;
        for (double s : times) mean_time += s;
        mean_time /= static_cast<double>(times.size());

        json aggregate;
        aggregate["schema"] = kResultSchema;
        aggregate["record"] = "aggregate";
        aggregate["algorithm"] = spec.algorithm;
        aggregate["input"] = spec.input;
        aggregate["motif"] = spec.motif_path;
        aggregate["repeats"] = densities.size();
        aggregate["density_mean"] = mean;
        aggregate["density_std"] = std::sqrt(var);
        aggregate["wall_time_mean_s"] = mean_time;
        records << aggregate.dump() << "\n";
        std::cout << "aggregate over " << densities.size() << " repeat(s): mean density " << mean
                  << ", std " << std::sqrt(var) << ", mean runtime " << mean_time << " s\n";
    }
    return timed_out ? 2 : 0;
}

// One manifest entry expanded into per-algorithm rows.
struct BenchRow {
    std::string config_name;
    std::string algorithm;
    std::string status;  // ok, timeout, or error
    std::string message;
    double density = 0.0;
    double ratio = 0.0;
    double wall_time_s = 0.0;
    std::size_t iterations = 0;
};

std::string resolve_against(const std::filesystem::path& base, const std::string& path) {
    const std::filesystem::path p(path);
    if (p.is_absolute()) return path;
    return (base / p).string();
}

int cmd_bench(const std::string& manifest_path, const std::string& csv_path,
              const std::string& plot_path, unsigned threads,
              std::optional<double> time_limit_override) {
    std::ifstream in(manifest_path);
    if (!in) throw std::runtime_error("cannot open manifest: " + manifest_path);
    json manifest;
    try {
        in >> manifest;
    } catch (const json::parse_error& e) {
        throw std::runtime_error("manifest parse error: " + std::string(e.what()));
    }
    if (!manifest.contains("configs") || !manifest["configs"].is_array()) {
        throw std::runtime_error("manifest needs a top-level \"configs\" array");
    }
    const std::filesystem::path base = std::filesystem::path(manifest_path).parent_path();

    json plot;
    plot["schema"] = kBenchSchema;
    plot["configs"] = json::array();
    std::vector<BenchRow> rows;

    std::size_t config_index = 0;
    for (const json& entry : manifest["configs"]) {
        RunSpec spec;
        spec.input = resolve_against(base, entry.at("input").get<std::string>());
        spec.motif_path = resolve_against(base, entry.at("motif").get<std::string>());
        spec.delta = entry.at("delta").get<double>();
        spec.weight = entry.value("weight", "const");
        if (entry.contains("lambda") && !entry["lambda"].is_null()) {
            spec.lambda = entry["lambda"].get<double>();
        }
        spec.xi = entry.value("xi", 0.1);
        spec.epsilon = entry.value("epsilon", 0.1);
        spec.eta = entry.value("eta", 0.1);
        spec.q = entry.value("q", 1.25);
        if (entry.contains("samples") && !entry["samples"].is_null()) {
            spec.samples = entry["samples"].get<std::uint64_t>();
        }
        if (entry.contains("max_samples") && !entry["max_samples"].is_null()) {
            spec.max_samples = entry["max_samples"].get<std::uint64_t>();
        }
        if (entry.contains("J") && !entry["J"].is_null()) {
            spec.J = entry["J"].get<unsigned>();
        }
        spec.seed = entry.value("seed", 0);
        spec.threads = threads;
        if (time_limit_override) {
            spec.time_limit = time_limit_override;
        } else if (entry.contains("time_limit") && !entry["time_limit"].is_null()) {
            spec.time_limit = entry["time_limit"].get<double>();
        }
        const std::string config_name =
            entry.value("name", "config" + std::to_string(config_index));

        std::vector<std::string> algorithms;
        if (entry.contains("algorithms")) {
            for (const json& a : entry["algorithms"]) algorithms.push_back(a.get<std::string>());
        } else {
            algorithms = known_algorithms();
            algorithms.erase(std::find(algorithms.begin(), algorithms.end(), "oracle"));
        }

        std::vector<BenchRow> config_rows;
        try {
            const TemporalNetwork t = load_edge_list(spec.input);
            const TemporalMotif motif = parse_motif_file(spec.motif_path);
            double lambda_effective = 0.0;
            const WeightFunction tau = resolve_weight(spec, t, &lambda_effective);
            for (const std::string& algorithm : algorithms) {
                RunSpec algo_spec = spec;
                algo_spec.algorithm = algorithm;
                BenchRow row;
                row.config_name = config_name;
                row.algorithm = algorithm;
                const RunOutcome outcome = run_algorithm(algo_spec, t, motif, tau);
                row.wall_time_s = outcome.wall_time_s;
                if (outcome.timed_out) {
                    row.status = "timeout";
                } else if (!outcome.error.empty()) {
                    row.status = "error";
                    row.message = outcome.error;
                } else {
                    row.status = "ok";
                    row.density = density(t, outcome.result.vertices, motif, spec.delta, tau);
                    row.iterations = outcome.result.iterations;
                }
                config_rows.push_back(std::move(row));
                std::cout << config_name << " " << algorithm << ": "
                          << config_rows.back().status << " density "
                          << config_rows.back().density << " in "
                          << config_rows.back().wall_time_s << " s\n";
            }
        } catch (const std::exception& e) {
            // Dataset or motif level failure: every requested algorithm
            // becomes an error row.
            config_rows.clear();
            for (const std::string& algorithm : algorithms) {
                BenchRow row;
                row.config_name = config_name;
                row.algorithm = algorithm;
                row.status = "error";
                row.message = e.what();
                config_rows.push_back(std::move(row));
            }
            std::cout << config_name << ": error (" << e.what() << ")\n";
        }

        double opt_hat = 0.0;
        bool any_ok = false;
        for (const BenchRow& row : config_rows) {
            if (row.status == "ok") {
                any_ok = true;
                opt_hat = std::max(opt_hat, row.density);
            }
        }
        for (BenchRow& row : config_rows) {
            if (row.status != "ok") {
                row.ratio = 0.0;
            } else if (opt_hat > 0.0) {
                row.ratio = row.density / opt_hat;
            } else {
                row.ratio = 1.0;  // every terminating algorithm matched the best known, zero
            }
        }

        json plot_entry;
        plot_entry["name"] = config_name;
        plot_entry["input"] = spec.input;
        plot_entry["motif"] = spec.motif_path;
        plot_entry["delta"] = spec.delta;
        plot_entry["opt_hat"] = any_ok ? json(opt_hat) : json(nullptr);
        plot_entry["flagged"] = !any_ok;
        plot_entry["algorithms"] = json::array();
        for (const BenchRow& row : config_rows) {
            json algo;
            algo["algorithm"] = row.algorithm;
            algo["status"] = row.status;
            algo["density"] = row.status == "ok" ? json(row.density) : json(nullptr);
            algo["ratio"] = row.ratio;
            algo["wall_time_s"] = row.wall_time_s;
            if (!row.message.empty()) algo["message"] = row.message;
            plot_entry["algorithms"].push_back(std::move(algo));
        }
        plot["configs"].push_back(std::move(plot_entry));
        rows.insert(rows.end(), config_rows.begin(), config_rows.end());
        ++config_index;
    }

    std::ostringstream csv;
    csv << "config,algorithm,status,density,ratio,wall_time_s,iterations\n";
    for (const BenchRow& row : rows) {
        csv << row.config_name << "," << row.algorithm << "," << row.status << ",";
        if (row.status == "ok") csv << row.density;
        csv << "," << row.ratio << "," << row.wall_time_s << "," << row.iterations << "\n";
    }
    if (csv_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(csv_path);
        if (!out) throw std::runtime_error("cannot open output file: " + csv_path);
        out << csv.str();
    }
    if (!plot_path.empty()) {
        std::ofstream out(plot_path);
        if (!out) throw std::runtime_error("cannot open plot file: " + plot_path);
        out << plot.dump(2) << "\n";
    }
    return 0;
}

void write_edges(const TemporalNetwork& t, const std::string& output_path) {
    std::ostringstream text;
    text.precision(17);
    for (const TemporalEdge& e : t.edges) {
        text << t.labels[e.src] << " " << t.labels[e.dst] << " " << e.time << "\n";
    }
    if (output_path.empty()) {
        std::cout << text.str();
    } else {
        std::ofstream out(output_path);
        if (!out) throw std::runtime_error("cannot open output file: " + output_path);
        out << text.str();
    }
}

std::uint64_t env_seed_fallback() {
    const char* env = std::getenv("ALDENTE_SEED");
    if (env == nullptr) return 0;
    try {
        return std::stoull(env);
    } catch (const std::exception&) {
        throw UsageError("ALDENTE_SEED must be a non-negative integer");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Temporal motif densest subnetwork toolkit"};
    app.require_subcommand(1);

    RunSpec spec;
    std::uint64_t repeats = 1;
    std::string output_path;
    double time_limit = 0.0;
    std::uint64_t samples_flag = 0;
    std::uint64_t max_samples_flag = 0;
    unsigned J_flag = 0;
    double lambda_flag = 0.0;

    CLI::App* run = app.add_subcommand("run", "Run one algorithm and write result records");
    run->add_option("--input", spec.input, "temporal edge list file")->required();
    run->add_option("--motif", spec.motif_path, "motif edge list file")->required();
    run->add_option("--delta", spec.delta, "duration bound")
        ->required()
        ->check(CLI::PositiveNumber);
    run->add_option("--algorithm", spec.algorithm, "one of exact|greedy|batch|probpeel|hybridpeel|oracle")
        ->required()
        ->check(CLI::IsMember(known_algorithms()));
    run->add_option("--weight", spec.weight, "instance weighting, const or decay")
        ->check(CLI::IsMember({"const", "decay"}));
    CLI::Option* lambda_opt =
        run->add_option("--lambda", lambda_flag, "decay rate (default: inverse mean gap)");
    CLI::Option* xi_opt = run->add_option("--xi", spec.xi, "batch peeling slack");
    CLI::Option* epsilon_opt = run->add_option("--epsilon", spec.epsilon, "sampling error target");
    CLI::Option* eta_opt = run->add_option("--eta", spec.eta, "sampling failure budget");
    CLI::Option* q_opt = run->add_option("--q", spec.q, "sampling window stretch");
    CLI::Option* samples_opt =
        run->add_option("--samples", samples_flag, "fixed sample count override");
    CLI::Option* max_samples_opt =
        run->add_option("--max-samples", max_samples_flag, "cap on the analytic sample count");
    CLI::Option* J_opt = run->add_option("--J", J_flag, "hybrid sampled iteration count");
    CLI::Option* seed_opt = run->add_option("--seed", spec.seed, "random seed");
    run->add_option("--repeats", repeats, "independent repeats")->check(CLI::PositiveNumber);
    run->add_option("--output", output_path, "result record file (default: stdout)");
    CLI::Option* limit_opt =
        run->add_option("--time-limit", time_limit, "per-repeat wall clock limit, seconds")
            ->check(CLI::PositiveNumber);
    run->add_option("--threads", spec.threads, "sampling worker threads")
        ->check(CLI::PositiveNumber);

    std::string manifest_path;
    std::string csv_path;
    std::string plot_path;
    unsigned bench_threads = 1;
    double bench_limit = 0.0;
    CLI::App* bench = app.add_subcommand("bench", "Run a manifest of configurations");
    bench->add_option("--manifest", manifest_path, "JSON manifest file")->required();
    bench->add_option("--output", csv_path, "CSV output file (default: stdout)");
    bench->add_option("--plot-json", plot_path, "plot data JSON output file");
    bench->add_option("--threads", bench_threads, "sampling worker threads")
        ->check(CLI::PositiveNumber);
    CLI::Option* bench_limit_opt =
        bench->add_option("--time-limit", bench_limit, "per-run wall clock limit override, seconds")
            ->check(CLI::PositiveNumber);

    CLI::App* gen = app.add_subcommand("gen", "Write a generated fixture network");
    gen->require_subcommand(1);
    std::uint64_t layered_n = 12;
    std::string gen_output;
    CLI::App* layered = gen->add_subcommand("layered", "layered static-vs-temporal fixture");
    layered->add_option("--n", layered_n, "vertex count, positive multiple of 12")->required();
    layered->add_option("--output", gen_output, "edge list file (default: stdout)");

    SyntheticConfig synth;
    CLI::App* synthetic = gen->add_subcommand("synthetic", "seeded community burst network");
    synthetic->add_option("--communities", synth.communities, "community count");
    synthetic->add_option("--vertices", synth.vertices_per_community, "vertices per community");
    synthetic->add_option("--edges", synth.edges_per_community, "edges per community");
    synthetic->add_option("--background", synth.background_edges, "cross-community edges");
    synthetic->add_option("--span", synth.span, "timestamp range in seconds");
    synthetic->add_option("--burst-width", synth.burst_width, "burst duration in seconds");
    synthetic->add_option("--seed", synth.seed, "random seed");
    synthetic->add_option("--output", gen_output, "edge list file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Collapse CLI11's assorted exit codes onto the documented usage
        // failure code, keeping --help at zero.
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (run->parsed()) {
            if (lambda_opt->count() > 0 && spec.weight != "decay") {
                throw UsageError("--lambda requires --weight decay");
            }
            if (lambda_opt->count() > 0) spec.lambda = lambda_flag;
            if (J_opt->count() > 0 && spec.algorithm != "hybridpeel") {
                throw UsageError("--J applies only to hybridpeel");
            }
            if (J_opt->count() > 0) {
                if (J_flag == 0) throw UsageError("--J must be positive");
                spec.J = J_flag;
            }
            if (!uses_sampling(spec.algorithm)) {
                for (const CLI::Option* opt : {epsilon_opt, eta_opt, q_opt, samples_opt,
                                              max_samples_opt}) {
                    if (opt->count() > 0) {
                        throw UsageError(opt->get_name() + " applies only to probpeel/hybridpeel");
                    }
                }
            }
            if (xi_opt->count() > 0 && !uses_slack(spec.algorithm)) {
                throw UsageError("--xi applies only to batch/probpeel/hybridpeel");
            }
            if (samples_opt->count() > 0) {
                if (samples_flag == 0) throw UsageError("--samples must be positive");
                spec.samples = samples_flag;
            }
            if (max_samples_opt->count() > 0) {
                if (max_samples_flag == 0) throw UsageError("--max-samples must be positive");
                spec.max_samples = max_samples_flag;
            }
            if (samples_opt->count() > 0 && max_samples_opt->count() > 0) {
                throw UsageError("--samples and --max-samples conflict");
            }
            if (seed_opt->count() == 0) spec.seed = env_seed_fallback();
            if (limit_opt->count() > 0) spec.time_limit = time_limit;
            return cmd_run(spec, repeats, output_path);
        }
        if (bench->parsed()) {
            std::optional<double> limit;
            if (bench_limit_opt->count() > 0) limit = bench_limit;
            return cmd_bench(manifest_path, csv_path, plot_path, bench_threads, limit);
        }
        if (layered->parsed()) {
            write_edges(layered_fixture(layered_n).network, gen_output);
            return 0;
        }
        if (synthetic->parsed()) {
            write_edges(synthetic_network(synth), gen_output);
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
