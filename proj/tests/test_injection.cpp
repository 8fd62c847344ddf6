#include <doctest.h>

#include <cmath>
#include <map>

#include "eftvqa/errors.hpp"
#include "eftvqa/injection.hpp"

using namespace eftvqa;

TEST_CASE("appendix closed forms at the published operating point") {
    const InjectionAnalytics a = injection_analytics(1e-3, 11);
    CHECK(a.p_pass == doctest::Approx(0.76024).epsilon(1e-5 / 0.76));
    CHECK(a.n_trials == doctest::Approx(1.959).epsilon(0.001 / 1.959));
    CHECK(a.p_within_n_trials == doctest::Approx(0.9391).epsilon(0.0005 / 0.9391));
    CHECK(a.alpha == doctest::Approx(0.003811).epsilon(2e-4 / 0.0038));
    CHECK(a.beta == doctest::Approx(0.996189).epsilon(2e-4));
    CHECK(a.shuffling_feasible);
    CHECK(a.p_within_window > a.p_within_n_trials);
}

TEST_CASE("identity chain of the geometric statistics") {
    for (double p : {1e-4, 5e-4, 1e-3, 2e-3}) {
        for (int d : {3, 7, 11, 15, 21}) {
            if (2.0 * p * (1.0 - p) * (d * d - 1.0) >= 1.0) continue;
            const InjectionAnalytics a = injection_analytics(p, d);
            CHECK(a.expected_trials == doctest::Approx(1.0 / a.p_pass).epsilon(1e-9));
            CHECK(a.stddev_trials ==
                  doctest::Approx(std::sqrt(1.0 - a.p_pass) / a.p_pass).epsilon(1e-9));
            CHECK(a.n_trials ==
                  doctest::Approx((1.0 + std::sqrt(1.0 - a.p_pass)) / a.p_pass)
                      .epsilon(1e-9));
            CHECK(a.p_within_n_trials ==
                  doctest::Approx(1.0 - std::pow(1.0 - a.p_pass, a.n_trials))
                      .epsilon(1e-9));
        }
    }
}

TEST_CASE("noiseless injection always passes") {
    const InjectionAnalytics a = injection_analytics(0.0, 11);
    CHECK(a.p_pass == 1.0);
    CHECK(a.n_trials == 1.0);
    CHECK(a.p_within_n_trials == 1.0);
}

TEST_CASE("shuffling feasibility equals the quadratic condition") {
    for (int d = 3; d <= 21; d += 2) {
        const double alpha = injection_analytics(1e-6, d).alpha;
        for (double p :
             {alpha / 4, alpha / 2, alpha * 0.99, alpha * 1.01, alpha * 2, alpha * 4}) {
            if (2.0 * p * (1.0 - p) * (d * d - 1.0) >= 1.0) continue;
            const InjectionAnalytics a = injection_analytics(p, d);
            CAPTURE(d);
            CAPTURE(p);
            CHECK(a.shuffling_feasible == (a.n_trials <= 2.0 * d + 1e-9));
        }
    }
}

TEST_CASE("rus attempt telescoping is exact in dyadic angle units") {
    Rng rng(5);
    const CodeParams code{11, 1e-3};
    for (int t = 0; t < 2000; ++t) {
        const RusOutcome out =
            simulate_rus_trial(ShufflePolicy::patch_shuffling(), code, rng);
        REQUIRE(out.attempts >= 1);
        REQUIRE(out.consumed_angle_units.size() ==
                std::min<uint64_t>(out.attempts, 63));
        for (size_t j = 0; j < out.consumed_angle_units.size(); ++j)
            CHECK(out.consumed_angle_units[j] == (1ull << j));
        CHECK(out.net_rotation_units() == 1);
    }
}

TEST_CASE("mean attempts follow the fair-coin geometric law") {
    const PipelineStats stats = simulate_rus(
        0.25, ShufflePolicy::patch_shuffling(), {11, 1e-3}, 100000, 2024);
    CHECK(stats.mean_attempts == doctest::Approx(2.0).epsilon(0.02 / 2.0));
}

TEST_CASE("attempt distribution passes a chi-square test against geometric(1/2)") {
    Rng rng(31);
    const CodeParams code{11, 1e-3};
    const int trials = 100000;
    std::map<uint64_t, int> histogram;
    for (int t = 0; t < trials; ++t) {
        const RusOutcome out =
            simulate_rus_trial(ShufflePolicy::wait_and_inject(), code, rng);
        histogram[std::min<uint64_t>(out.attempts, 11)] += 1;
    }
    double chi2 = 0.0;
    for (uint64_t g = 1; g <= 11; ++g) {
        const double expected =
            trials * (g < 11 ? std::pow(0.5, double(g)) : std::pow(0.5, 10.0));
        const double observed = histogram.count(g) ? histogram[g] : 0.0;
        chi2 += (observed - expected) * (observed - expected) / expected;
    }
    // 10 degrees of freedom; chi2 below the 99th percentile means p > 0.01
    CHECK(chi2 < 23.21);
}

TEST_CASE("naive backup policy eliminates stalls at the advertised rate") {
    const PipelineStats stats =
        simulate_rus(0.5, ShufflePolicy::naive(4), {11, 1e-3}, 100000, 7);
    CHECK(stats.stall_free_fraction == doctest::Approx(0.9375).epsilon(0.005 / 0.9375));
    CHECK(stats.magic_patches == 4);
}

TEST_CASE("patch shuffling re-injects on time essentially always at d=11") {
    const PipelineStats stats = simulate_rus(
        0.5, ShufflePolicy::patch_shuffling(), {11, 1e-3}, 100000, 12);
    CHECK(stats.on_time_injection_fraction >= 0.9391);
    CHECK(stats.magic_patches == 2);
}

TEST_CASE("policy spacetime comparison reproduces the qualitative ordering") {
    const auto all = policy_spacetime({11, 1e-3}, 50000, 99);
    REQUIRE(all.size() == 5);  // naive 1..4 then shuffling
    for (int b = 0; b < 4; ++b) {
        CHECK(all[b].policy == ShufflePolicyKind::naive);
        CHECK(all[b].backups == uint32_t(b + 1));
    }
    CHECK(all[4].policy == ShufflePolicyKind::patch_shuffling);

    // volume strictly increases with the number of backup states
    for (int b = 1; b < 4; ++b) CHECK(all[b].mean_volume > all[b - 1].mean_volume);
    // shuffling undercuts the four-backup variant
    CHECK(all[4].mean_volume < all[3].mean_volume);
    // and still stalls less than the single-backup variant
    CHECK(all[4].mean_stall_cycles < all[0].mean_stall_cycles);
}

TEST_CASE("zero physical error means zero stalls for shuffling") {
    const PipelineStats stats = simulate_rus(
        0.1, ShufflePolicy::patch_shuffling(), CodeParams{11, 0.0}, 20000, 5);
    CHECK(stats.mean_stall_cycles == 0.0);
    CHECK(stats.stall_free_fraction == 1.0);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(injection_analytics(1.2, 11), config_error);
    CHECK_THROWS_AS(injection_analytics(1e-3, 2), config_error);
    CHECK_THROWS_AS(injection_analytics(0.5, 11), config_error);  // p_fail >= 1
    CHECK_THROWS_AS(ShufflePolicy::naive(0), config_error);
    CHECK_THROWS_AS(
        simulate_rus(0.1, ShufflePolicy::naive(2), {11, 1e-3}, 0, 1), config_error);
}
