// Acceptance gate: every check the library must pass before release,
// one verdict line per criterion. Exits nonzero if any criterion fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "aldente/exactflow.hpp"
#include "aldente/gen.hpp"
#include "aldente/oracle.hpp"
#include "aldente/peel.hpp"
#include "aldente/randpeel.hpp"
#include "helpers.hpp"

using namespace aldente;
using testutil::back_forth;
using testutil::id_of;
using testutil::ids_of;
using testutil::labels_of;
using testutil::load_fixture;
using testutil::load_motif;
using testutil::random_network;
using testutil::triangle;
using testutil::two_path;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;

    void fail(const std::string& message) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += message;
    }
};

std::vector<VertexId> all_vertices(const TemporalNetwork& t) {
    std::vector<VertexId> v(t.universe());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<VertexId>(i);
    return v;
}

bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

// Floating-point guard for >= comparisons against analytic bounds.
bool at_least(double value, double bound) {
    return value >= bound - 1e-9 * std::max(1.0, std::abs(bound));
}

struct CorpusCase {
    TemporalNetwork network;
    TemporalMotif motif;
    double delta;
    std::uint64_t seed;
};

// 100 seeded random networks (n <= 8, m <= 12), crossed with three motif
// shapes and two duration bounds.
std::vector<CorpusCase> corpus() {
    std::vector<CorpusCase> cases;
    const std::vector<TemporalMotif> motifs{two_path(), triangle(), back_forth()};
    for (std::uint64_t seed = 1000; seed < 1100; ++seed) {
        const std::size_t n = 4 + seed % 5;
        const std::size_t m = 6 + seed % 7;
        const TemporalNetwork t = random_network(seed, n, m);
        for (const TemporalMotif& motif : motifs) {
            for (double delta : {2.5, 10.0}) {
                cases.push_back({t, motif, delta, seed});
            }
        }
    }
    return cases;
}

std::string set_to_string(const std::vector<std::string>& labels) {
    std::string s = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i > 0) s += ",";
        s += labels[i];
    }
    return s + "}";
}

// Criterion 1: golden values on the hand-transcribed reference network.
Verdict criterion1() {
    Verdict v;
    const TemporalNetwork t = load_fixture("fig1.txt");
    const TemporalMotif m = triangle();
    const WeightFunction tau = WeightFunction::constant();

    const double tau123 = total_weight(t, ids_of(t, {"1", "2", "3"}), m, 20.0, tau);
    if (tau123 != 4.0) v.fail("tau(v1,v2,v3) at delta=20 is " + std::to_string(tau123));

    const DensityResult opt = solve_exact(t, m, 10.0, tau);
    if (opt.density != 6.0 / 5.0) v.fail("optimum density is " + std::to_string(opt.density));
    const std::vector<std::string> expected{"1", "2", "3", "4", "5"};
    if (labels_of(t, opt.vertices) != expected) {
        v.fail("optimum set is " + set_to_string(labels_of(t, opt.vertices)));
    }

    const std::vector<double> degrees = degree_vector(t, all_vertices(t), m, 10.0, tau);
    if (degrees[id_of(t, "4")] != 2.0) {
        v.fail("degree(v4) at delta=10 is " + std::to_string(degrees[id_of(t, "4")]));
    }
    return v;
}

// Criterion 2: exponential-decay weight of an instance at times 1, 4, 10.
Verdict criterion2() {
    Verdict v;
    const TemporalNetwork t =
        make_network(4, {{0, 1, 1.0}, {1, 2, 4.0}, {2, 3, 10.0}});
    const TemporalMotif m = parse_motif("a b\nb c\nc d\n");
    const double got = total_weight(t, all_vertices(t), m, 100.0, WeightFunction::decay(0.1));
    const double want = 0.5 * (std::exp(-0.3) + std::exp(-0.6));
    if (std::abs(got - want) > 1e-9) {
        v.fail("decay weight " + std::to_string(got) + " vs " + std::to_string(want));
    }
    return v;
}

// Criterion 3: enumeration and exact solver agree with brute force on
// the random corpus, for both weightings.
Verdict criterion3(const std::vector<CorpusCase>& cases) {
    Verdict v;
    const WeightFunction wc = WeightFunction::constant();
    const WeightFunction wd = WeightFunction::decay(0.3);
    std::size_t instance_mismatches = 0;
    std::size_t density_mismatches = 0;
    for (const CorpusCase& c : cases) {
        const auto fast = enumerate_instances(c.network, c.motif, c.delta);
        const auto slow = oracle::brute_force_instances(c.network, c.motif, c.delta);
        if (!testutil::same_instances(fast, slow)) ++instance_mismatches;

        const double exact_c = solve_exact(c.network, c.motif, c.delta, wc).density;
        const double brute_c = oracle::brute_force_opt(c.network, c.motif, c.delta, wc).density;
        if (exact_c != brute_c) ++density_mismatches;

        const double exact_d = solve_exact(c.network, c.motif, c.delta, wd).density;
        const double brute_d = oracle::brute_force_opt(c.network, c.motif, c.delta, wd).density;
        if (!close_rel(exact_d, brute_d, 1e-9)) ++density_mismatches;
    }
    if (instance_mismatches > 0) {
        v.fail(std::to_string(instance_mismatches) + " instance set mismatches");
    }
    if (density_mismatches > 0) {
        v.fail(std::to_string(density_mismatches) + " density mismatches");
    }
    return v;
}

// Criterion 4: deterministic approximation guarantees, zero violations.
Verdict criterion4(const std::vector<CorpusCase>& cases) {
    Verdict v;
    const WeightFunction tau = WeightFunction::constant();
    std::size_t greedy_violations = 0;
    std::size_t batch_violations = 0;
    for (const CorpusCase& c : cases) {
        const double opt = solve_exact(c.network, c.motif, c.delta, tau).density;
        const double k = static_cast<double>(c.motif.k);
        const double greedy = greedy_peel(c.network, c.motif, c.delta, tau).result.density;
        if (!at_least(greedy, opt / k)) ++greedy_violations;
        for (double xi : {0.1, 0.3, 1.0}) {
            const double batch = batch_peel(c.network, c.motif, c.delta, tau, xi).result.density;
            if (!at_least(batch, opt / (k * (1.0 + xi)))) ++batch_violations;
        }
    }
    if (greedy_violations > 0) {
        v.fail(std::to_string(greedy_violations) + " greedy bound violations");
    }
    if (batch_violations > 0) {
        v.fail(std::to_string(batch_violations) + " batch bound violations");
    }
    return v;
}

// Criterion 5: iteration counts stay inside the analytic limits.
Verdict criterion5(const std::vector<CorpusCase>& cases) {
    Verdict v;
    const WeightFunction tau = WeightFunction::constant();
    std::size_t violations = 0;
    for (const CorpusCase& c : cases) {
        const double n = static_cast<double>(c.network.universe());
        const std::size_t k = c.motif.k;
        const PeelOutput greedy = greedy_peel(c.network, c.motif, c.delta, tau);
        const std::size_t removal_cap = c.network.universe() > k ? c.network.universe() - k : 0;
        if (greedy.result.iterations > removal_cap) ++violations;
        for (double xi : {0.1, 0.3, 1.0}) {
            const PeelOutput batch = batch_peel(c.network, c.motif, c.delta, tau, xi);
            const std::size_t cap =
                static_cast<std::size_t>(std::ceil(std::log(n) / std::log(1.0 + xi))) + 1;
            if (batch.result.iterations > cap) ++violations;
        }
    }
    if (violations > 0) v.fail(std::to_string(violations) + " iteration bound violations");
    return v;
}

// Criterion 6: vertex degrees always sum to k times the total weight.
Verdict criterion6(const std::vector<CorpusCase>& cases) {
    Verdict v;
    const WeightFunction wc = WeightFunction::constant();
    const WeightFunction wd = WeightFunction::decay(0.3);
    std::size_t violations = 0;
    auto check = [&](const TemporalNetwork& t, const TemporalMotif& m, double delta) {
        const std::vector<VertexId> all = all_vertices(t);
        double sum_c = 0.0;
        for (double d : degree_vector(t, all, m, delta, wc)) sum_c += d;
        if (sum_c != static_cast<double>(m.k) * total_weight(t, all, m, delta, wc)) ++violations;
        double sum_d = 0.0;
        for (double d : degree_vector(t, all, m, delta, wd)) sum_d += d;
        if (!close_rel(sum_d, static_cast<double>(m.k) * total_weight(t, all, m, delta, wd), 1e-9)) {
            ++violations;
        }
    };
    for (const CorpusCase& c : cases) check(c.network, c.motif, c.delta);
    check(load_fixture("toy4.txt"), two_path(), 2.0);
    check(load_fixture("fig1.txt"), triangle(), 10.0);
    check(layered_fixture(12).network, two_path(), 1.0);
    if (violations > 0) v.fail(std::to_string(violations) + " degree identity violations");
    return v;
}

// Criterion 7: the mean of many single-window degree estimates stays
// within three standard errors of the exact degrees.
Verdict criterion7() {
    Verdict v;
    const WeightFunction tau = WeightFunction::constant();
    struct Fixture {
        std::string name;
        TemporalNetwork network;
        TemporalMotif motif;
        double delta;
    };
    const std::vector<Fixture> fixtures{
        {"toy4", load_fixture("toy4.txt"), two_path(), 2.0},
        {"fig1", load_fixture("fig1.txt"), triangle(), 10.0},
        {"layered12", layered_fixture(12).network, two_path(), 1.0},
    };
    constexpr std::size_t kSamples = 10000;
    for (const Fixture& f : fixtures) {
        const std::vector<double> exact =
            degree_vector(f.network, all_vertices(f.network), f.motif, f.delta, tau);
        const std::size_t universe = f.network.universe();
        std::vector<double> sum(universe, 0.0);
        std::vector<double> sumsq(universe, 0.0);
        detail::MatcherScratch scratch;
        std::vector<double> accum;
        for (std::size_t i = 0; i < kSamples; ++i) {
            accum.assign(universe, 0.0);
            detail::sample_window_into(f.network, f.motif, f.delta, tau, 1.25,
                                       mix_seed(7, 0, i), scratch, accum);
            for (std::size_t u = 0; u < universe; ++u) {
                sum[u] += accum[u];
                sumsq[u] += accum[u] * accum[u];
            }
        }
        for (std::size_t u = 0; u < universe; ++u) {
            const double mean = sum[u] / kSamples;
            const double var =
                std::max(0.0, (sumsq[u] / kSamples - mean * mean) * kSamples / (kSamples - 1));
            const double se = std::sqrt(var / kSamples);
            if (std::abs(mean - exact[u]) > 3.0 * se + 1e-12) {
                std::ostringstream message;
                message << f.name << " vertex " << f.network.labels[u] << " mean " << mean
                        << " vs exact " << exact[u] << " (se " << se << ")";
                v.fail(message.str());
            }
        }
    }
    return v;
}

// Criterion 8: with a generous fixed sample count the estimated peeling
// reproduces the exact batch sequence on the small fixtures, and the
// answer density clears the analytic floor.
Verdict criterion8() {
    Verdict v;
    const WeightFunction tau = WeightFunction::constant();
    struct Fixture {
        std::string name;
        TemporalNetwork network;
        TemporalMotif motif;
        double delta;
    };
    const std::vector<Fixture> fixtures{
        {"toy4", load_fixture("toy4.txt"), two_path(), 2.0},
        {"fig1", load_fixture("fig1.txt"), triangle(), 10.0},
    };
    for (const Fixture& f : fixtures) {
        const double opt = solve_exact(f.network, f.motif, f.delta, tau).density;
        const double k = static_cast<double>(f.motif.k);
        const double floor = opt * 0.9 * 0.9 / (k * 1.3 * 1.1 * 1.1);
        const PeelOutput reference = batch_peel(f.network, f.motif, f.delta, tau, 0.3);

        std::size_t sequence_matches = 0;
        std::size_t floor_violations = 0;
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            RandPeelConfig config;
            config.xi = 0.3;
            config.sample.samples = 5000;
            config.sample.seed = seed;
            const RandPeelOutput run = prob_peel(f.network, f.motif, f.delta, tau, config);
            if (run.trace.batches == reference.trace.batches) ++sequence_matches;
            if (!at_least(run.result.density, floor)) ++floor_violations;
        }
        if (sequence_matches < 19) {
            v.fail(f.name + ": only " + std::to_string(sequence_matches) +
                   "/20 batch sequences matched");
        }
        if (floor_violations > 1) {
            v.fail(f.name + ": " + std::to_string(floor_violations) + "/20 below density floor");
        }
    }
    return v;
}

// Criterion 9: the hybrid peeler keeps up with the deterministic batch
// peeler and clears its own analytic floor on the corpus.
Verdict criterion9(const std::vector<CorpusCase>& cases) {
    Verdict v;
    const WeightFunction tau = WeightFunction::constant();
    std::size_t runs = 0;
    std::size_t ge_batch = 0;
    std::size_t ge_floor = 0;
    for (const CorpusCase& c : cases) {
        const double opt = solve_exact(c.network, c.motif, c.delta, tau).density;
        const double k = static_cast<double>(c.motif.k);
        const double floor = opt * 0.9 * 0.9 / (k * 1.1 * 1.1 * 1.1);
        const double batch = batch_peel(c.network, c.motif, c.delta, tau, 0.1).result.density;
        for (unsigned J : {1u, 2u}) {
            RandPeelConfig config;
            config.xi = 0.1;
            config.sample.seed = c.seed;
            config.J = J;
            const double hybrid =
                hybrid_peel(c.network, c.motif, c.delta, tau, config).result.density;
            ++runs;
            if (at_least(hybrid, batch)) ++ge_batch;
            if (at_least(hybrid, floor)) ++ge_floor;
        }
    }
    std::ostringstream stats;
    stats << ge_batch << "/" << runs << " >= batch, " << ge_floor << "/" << runs << " >= floor";
    if (ge_batch * 10 < runs * 9) v.fail("batch dominance too rare: " + stats.str());
    if (ge_floor * 20 < runs * 19) v.fail("floor misses too common: " + stats.str());
    if (v.pass) v.detail = stats.str();
    return v;
}

// Criterion 10: the layered construction separates static 2-path density
// from temporal density.
Verdict criterion10() {
    Verdict v;
    const TemporalMotif m = two_path();
    const WeightFunction tau = WeightFunction::constant();
    for (std::uint64_t n : {12u, 24u, 48u}) {
        const LayeredFixture f = layered_fixture(n);
        const double rho2_static = oracle::static_2path_density(f.network, f.static_block);
        const double rho2_temporal = oracle::static_2path_density(f.network, f.temporal_block);
        if (rho2_static <= rho2_temporal) {
            v.fail("n=" + std::to_string(n) + ": static block does not win the 2-path density");
            continue;
        }
        if (total_weight(f.network, f.static_block, m, 1.0, tau) != 0.0) {
            v.fail("n=" + std::to_string(n) + ": static argmax has temporal instances");
        }
        const DensityResult opt = solve_exact(f.network, m, 1.0, tau);
        const std::set<VertexId> temporal(f.temporal_block.begin(), f.temporal_block.end());
        bool inside = !opt.vertices.empty();
        for (VertexId u : opt.vertices) inside = inside && temporal.count(u) > 0;
        if (!inside) v.fail("n=" + std::to_string(n) + ": temporal optimum leaves the block");
        const std::set<VertexId> chosen(f.static_block.begin(), f.static_block.end());
        for (VertexId u : opt.vertices) {
            if (chosen.count(u) > 0) {
                v.fail("n=" + std::to_string(n) + ": argmax and optimum overlap");
                break;
            }
        }
    }
    return v;
}

// Criterion 11: identical runs produce identical answers, bit for bit.
Verdict criterion11() {
    Verdict v;
    const TemporalNetwork t = load_fixture("fig1.txt");
    const TemporalMotif m = triangle();
    const WeightFunction tau = WeightFunction::constant();
    auto bits = [](double x) { return std::bit_cast<std::uint64_t>(x); };

    auto check_pair = [&](const char* name, const DensityResult& a, const DensityResult& b) {
        if (a.vertices != b.vertices) v.fail(std::string(name) + ": solution sets differ");
        if (bits(a.estimated_density) != bits(b.estimated_density)) {
            v.fail(std::string(name) + ": estimated densities differ");
        }
    };

    check_pair("exact", solve_exact(t, m, 10.0, tau), solve_exact(t, m, 10.0, tau));
    check_pair("greedy", greedy_peel(t, m, 10.0, tau).result, greedy_peel(t, m, 10.0, tau).result);
    check_pair("batch", batch_peel(t, m, 10.0, tau, 0.3).result,
               batch_peel(t, m, 10.0, tau, 0.3).result);

    RandPeelConfig config;
    config.xi = 0.3;
    config.sample.samples = 3000;
    config.sample.seed = 5;
    config.sample.threads = 1;
    check_pair("probpeel", prob_peel(t, m, 10.0, tau, config).result,
               prob_peel(t, m, 10.0, tau, config).result);
    config.J = 2;
    check_pair("hybridpeel", hybrid_peel(t, m, 10.0, tau, config).result,
               hybrid_peel(t, m, 10.0, tau, config).result);
    return v;
}

// Criterion 12: on a 545K-edge synthetic network the sampling peelers
// finish no later than the exact solver and the deterministic greedy.
Verdict criterion12() {
    Verdict v;
    const TemporalNetwork t = synthetic_network(SyntheticConfig{});
    const TemporalMotif m = load_motif("m3.txt");
    const WeightFunction tau = WeightFunction::constant();
    const double delta = 86400.0;

    auto timed = [](auto&& fn) {
        const auto start = std::chrono::steady_clock::now();
        auto result = fn();
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return std::pair<decltype(result), double>(std::move(result), seconds);
    };

    const auto [exact, exact_s] = timed([&] { return solve_exact(t, m, delta, tau); });
    const auto [greedy, greedy_s] = timed([&] { return greedy_peel(t, m, delta, tau); });

    RandPeelConfig config;
    config.xi = 0.3;
    config.sample.samples = 2000;
    config.sample.seed = 1;
    const auto [prob, prob_s] = timed([&] { return prob_peel(t, m, delta, tau, config); });
    const auto [hybrid, hybrid_s] = timed([&] { return hybrid_peel(t, m, delta, tau, config); });

    std::ostringstream stats;
    stats.precision(3);
    stats << "exact " << exact_s << " s (density " << exact.density << "), greedy " << greedy_s
          << " s, probpeel " << prob_s << " s, hybridpeel " << hybrid_s << " s on "
          << t.edge_count() << " edges";
    const double budget = std::min(exact_s, greedy_s);
    if (exact.vertices.empty() || greedy.result.vertices.empty() ||
        prob.result.vertices.empty() || hybrid.result.vertices.empty()) {
        v.fail("an algorithm returned an empty answer; " + stats.str());
    }
    if (prob_s > budget) v.fail("probpeel slower than both baselines; " + stats.str());
    if (hybrid_s > budget) v.fail("hybridpeel slower than both baselines; " + stats.str());
    if (v.pass) v.detail = stats.str();
    return v;
}

struct Criterion {
    int id;
    const char* label;
    double limit_s;  // 0 = no per-criterion runtime requirement
    Verdict (*run)(const std::vector<CorpusCase>&);
};

}  // namespace

int main() {
    const std::vector<CorpusCase> cases = corpus();

    const std::vector<Criterion> criteria{
        {1, "reference network golden values", 1.0,
         [](const std::vector<CorpusCase>&) { return criterion1(); }},
        {2, "exponential decay weighting", 0.0,
         [](const std::vector<CorpusCase>&) { return criterion2(); }},
        {3, "brute force equivalence on the random corpus", 300.0,
         [](const std::vector<CorpusCase>& c) { return criterion3(c); }},
        {4, "deterministic approximation guarantees", 0.0,
         [](const std::vector<CorpusCase>& c) { return criterion4(c); }},
        {5, "iteration bounds", 0.0,
         [](const std::vector<CorpusCase>& c) { return criterion5(c); }},
        {6, "degree identity", 0.0,
         [](const std::vector<CorpusCase>& c) { return criterion6(c); }},
        {7, "window estimator unbiasedness", 60.0,
         [](const std::vector<CorpusCase>&) { return criterion7(); }},
        {8, "estimated peeling matches exact batches", 0.0,
         [](const std::vector<CorpusCase>&) { return criterion8(); }},
        {9, "hybrid peeling dominance", 0.0,
         [](const std::vector<CorpusCase>& c) { return criterion9(c); }},
        {10, "static versus temporal density separation", 0.0,
         [](const std::vector<CorpusCase>&) { return criterion10(); }},
        {11, "bitwise determinism", 0.0,
         [](const std::vector<CorpusCase>&) { return criterion11(); }},
        {12, "desk-scale benchmark", 1800.0,
         [](const std::vector<CorpusCase>&) { return criterion12(); }},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict verdict = c.run(cases);
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_s > 0.0 && seconds > c.limit_s) {
            verdict.fail("exceeded the " + std::to_string(c.limit_s) + " s runtime limit");
        }
        std::printf("%s %2d: %s (%.2f s)%s%s\n", verdict.pass ? "PASS" : "FAIL", c.id, c.label,
                    seconds, verdict.detail.empty() ? "" : " -- ", verdict.detail.c_str());
        std::fflush(stdout);
        if (!verdict.pass) ++failures;
    }
    if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
