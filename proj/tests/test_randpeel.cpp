#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "aldente/exactflow.hpp"
#include "aldente/peel.hpp"
#include "aldente/randpeel.hpp"
#include "helpers.hpp"

using namespace aldente;
using namespace testutil;

namespace {

RandPeelConfig sampled_config(std::uint64_t seed, double xi, std::uint64_t samples) {
    RandPeelConfig config;
    config.xi = xi;
    config.sample.samples = samples;
    config.sample.seed = seed;
    return config;
}

}  // namespace

TEST_CASE("probabilistic peeling mirrors the exact batch schedule at high sample counts") {
    const TemporalNetwork t = load_fixture("toy4.txt");
    const WeightFunction tau = WeightFunction::constant();
    const PeelOutput exact = batch_peel(t, two_path(), 2.0, tau, 0.3);
    const RandPeelOutput sampled =
        prob_peel(t, two_path(), 2.0, tau, sampled_config(5, 0.3, 5000));

    CHECK(sampled.trace.batches == exact.trace.batches);
    CHECK(sampled.result.density == 0.5);
    CHECK(labels_of(t, sampled.result.vertices) ==
          std::vector<std::string>{"1", "2", "3", "4"});
    CHECK(sampled.result.estimated_density == doctest::Approx(0.5).epsilon(0.2));
    CHECK(sampled.iterations == 2);
    CHECK(sampled.total_samples == 2 * 5000);
    CHECK(sampled.result.best_effort);  // the override undercuts the analytic bound
}

TEST_CASE("probabilistic peeling trace reconstructs its answer") {
    const TemporalNetwork t = load_fixture("fig1.txt");
    const RandPeelOutput out =
        prob_peel(t, triangle(), 10.0, WeightFunction::constant(), sampled_config(9, 0.3, 5000));
    CHECK(out.trace.snapshots.size() == out.trace.batches.size() + 1);
    CHECK(out.trace.snapshots.front().size == t.vertex_count());
    CHECK(out.trace.snapshots.back().size == 0);
    CHECK(trace_set_at(t.vertices, out.trace, out.trace.argmax) == out.result.vertices);
    CHECK(out.result.density ==
          density(t, out.result.vertices, triangle(), 10.0, WeightFunction::constant()));
    CHECK(!std::isnan(out.result.estimated_density));
}

TEST_CASE("probabilistic peeling returns the empty answer after one instance-free round") {
    const TemporalNetwork t = parse_edge_list("a b 1\nc d 50\n");
    const RandPeelOutput out =
        prob_peel(t, triangle(), 5.0, WeightFunction::constant(), sampled_config(1, 0.1, 100));
    CHECK(out.iterations == 1);
    CHECK(out.result.vertices.empty());
    CHECK(out.result.density == 0.0);
    CHECK(std::isnan(out.result.estimated_density));
    CHECK(out.trace.argmax == out.trace.snapshots.size() - 1);
}

TEST_CASE("randomized peelers reject non-positive slack") {
    const TemporalNetwork t = load_fixture("toy4.txt");
    CHECK_THROWS_AS(
        prob_peel(t, two_path(), 2.0, WeightFunction::constant(), sampled_config(1, 0.0, 10)),
        std::invalid_argument);
    CHECK_THROWS_AS(
        hybrid_peel(t, two_path(), 2.0, WeightFunction::constant(), sampled_config(1, -1.0, 10)),
        std::invalid_argument);
}

TEST_CASE("randomized peelers are deterministic for a fixed seed") {
    const TemporalNetwork t = load_fixture("fig1.txt");
    const WeightFunction tau = WeightFunction::constant();
    const RandPeelOutput a = prob_peel(t, triangle(), 10.0, tau, sampled_config(77, 0.3, 800));
    const RandPeelOutput b = prob_peel(t, triangle(), 10.0, tau, sampled_config(77, 0.3, 800));
    CHECK(a.result.vertices == b.result.vertices);
    CHECK(a.result.density == b.result.density);
    const bool both_nan =
        std::isnan(a.result.estimated_density) && std::isnan(b.result.estimated_density);
    CHECK((both_nan || a.result.estimated_density == b.result.estimated_density));

    RandPeelConfig hybrid_config = sampled_config(77, 0.3, 800);
    hybrid_config.J = 2;
    const RandPeelOutput ha = hybrid_peel(t, triangle(), 10.0, tau, hybrid_config);
    const RandPeelOutput hb = hybrid_peel(t, triangle(), 10.0, tau, hybrid_config);
    CHECK(ha.result.vertices == hb.result.vertices);
    CHECK(ha.result.density == hb.result.density);
}

TEST_CASE("hybrid peeling with one sampled round still recovers the toy optimum") {
    const TemporalNetwork t = load_fixture("toy4.txt");
    RandPeelConfig config = sampled_config(4, 0.3, 5000);
    config.J = 1;
    const RandPeelOutput out = hybrid_peel(t, two_path(), 2.0, WeightFunction::constant(), config);
    CHECK(out.result.density == 0.5);
    CHECK(labels_of(t, out.result.vertices) == std::vector<std::string>{"1", "2", "3", "4"});
    CHECK(out.iterations == 1);
}

TEST_CASE("hybrid peeling defaults its round count by network size") {
    const TemporalNetwork t = load_fixture("toy4.txt");
    const RandPeelOutput out =
        hybrid_peel(t, two_path(), 2.0, WeightFunction::constant(), sampled_config(4, 0.3, 5000));
    // Small networks default to two sampled rounds; the second one sees
    // an instance-free survivor pair and empties it.
    CHECK(out.iterations == 2);
    CHECK(out.result.density == 0.5);
}

TEST_CASE("hybrid peeling finishes exactly when sampling whiffs") {
    // One lone instance plus noise vertices: estimates on the full set
    // are noisy, but the greedy phase pins the instance exactly.
    const TemporalNetwork t = parse_edge_list("a b 1\nb c 2\nd a 40\ne d 80\n");
    RandPeelConfig config = sampled_config(13, 0.5, 2000);
    config.J = 2;
    const RandPeelOutput out = hybrid_peel(t, two_path(), 2.0, WeightFunction::constant(), config);
    CHECK(out.result.density >= doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(out.result.density ==
          density(t, out.result.vertices, two_path(), 2.0, WeightFunction::constant()));
}

TEST_CASE("hybrid trace always ends on the survivor snapshot") {
    const TemporalNetwork t = load_fixture("fig1.txt");
    RandPeelConfig config = sampled_config(20, 0.3, 3000);
    config.J = 2;
    const RandPeelOutput out = hybrid_peel(t, triangle(), 10.0, WeightFunction::constant(), config);
    REQUIRE(out.trace.snapshots.size() == out.trace.batches.size() + 1);
    const auto survivors = trace_set_at(t.vertices, out.trace, out.trace.batches.size());
    CHECK(survivors.size() == out.trace.snapshots.back().size);
    if (std::isnan(out.result.estimated_density)) {
        // Exact phase won; its answer peels the survivor set further.
        for (VertexId v : out.result.vertices) {
            CHECK(std::binary_search(survivors.begin(), survivors.end(), v));
        }
    } else {
        CHECK(trace_set_at(t.vertices, out.trace, out.trace.argmax) == out.result.vertices);
    }
}

TEST_CASE("sampled answers respect the analytic floor on the fixtures") {
    const TemporalNetwork toy = load_fixture("toy4.txt");
    const TemporalNetwork fig = load_fixture("fig1.txt");
    const WeightFunction tau = WeightFunction::constant();
    const double toy_best = solve_exact(toy, two_path(), 2.0, tau).density;
    const double fig_best = solve_exact(fig, triangle(), 10.0, tau).density;
    // Analytic floor at epsilon=0.1, xi=0.3: (0.9)^2 / (k * 1.3 * (1.1)^2).
    const double toy_floor = toy_best * 0.81 / (3.0 * 1.3 * 1.21);
    const double fig_floor = fig_best * 0.81 / (3.0 * 1.3 * 1.21);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        CAPTURE(seed);
        const RandPeelOutput toy_out =
            prob_peel(toy, two_path(), 2.0, tau, sampled_config(seed, 0.3, 5000));
        CHECK(toy_out.result.density >= toy_floor);
        const RandPeelOutput fig_out =
            prob_peel(fig, triangle(), 10.0, tau, sampled_config(seed, 0.3, 5000));
        CHECK(fig_out.result.density >= fig_floor);
    }
}
