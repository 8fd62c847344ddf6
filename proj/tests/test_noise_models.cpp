#include <doctest.h>

#include <cmath>

#include "eftvqa/errors.hpp"
#include "eftvqa/noise_models.hpp"

using namespace eftvqa;

TEST_CASE("logical error rate hits the published anchor") {
    CHECK(logical_error_rate({11, 1e-3}) == doctest::Approx(1e-7).epsilon(1e-9));

    // cross-check the calibrated curve at d=3 against an independent
    // evaluation of A*(p/p_th)^((d+1)/2) with the same anchor constants
    const double oracle_d3 = 0.1 * std::pow(1e-3 / 1e-2, 2.0);
    CHECK(logical_error_rate({3, 1e-3}) == doctest::Approx(oracle_d3).epsilon(1e-12));

    // strictly decreasing in d, strictly increasing in p
    for (int d = 3; d <= 19; d += 2)
        CHECK(logical_error_rate({d + 2, 1e-3}) < logical_error_rate({d, 1e-3}));
    for (double p : {1e-4, 3e-4, 1e-3, 3e-3})
        CHECK(logical_error_rate({9, p}) < logical_error_rate({9, p * 2}));

    CHECK_THROWS_AS(logical_error_rate({11, 2e-2}), config_error);  // above threshold
    CHECK_THROWS_AS(logical_error_rate({4, 1e-3}), config_error);   // even distance
}

TEST_CASE("injection error is exactly 23p/30") {
    CHECK(injection_error(1e-3) == doctest::Approx(7.667e-4).epsilon(1e-4));
    CHECK(injection_error(0.0) == 0.0);
    CHECK(injection_error(3e-3) == doctest::Approx(2.3e-3).epsilon(1e-12));
    CHECK_THROWS_AS(injection_error(1.5), config_error);
}

TEST_CASE("patch physical qubits") {
    CHECK(patch_physical_qubits(11) == 241);
    CHECK(patch_physical_qubits(3) == 17);
    CHECK(patch_physical_qubits(7) == 97);
}

TEST_CASE("nisq model rates") {
    const NisqNoiseModel m = NisqNoiseModel::from_physical(1e-3);
    CHECK(m.p_cnot == 1e-3);
    CHECK(m.p_1q == doctest::Approx(1e-4));
    CHECK(m.p_rz == 0.0);
    CHECK(m.p_meas == doctest::Approx(1e-2));
    CHECK_THROWS_AS(NisqNoiseModel::from_physical(0.2), config_error);
}

TEST_CASE("pqec model: injection dominates logical rates by orders of magnitude") {
    const PqecNoiseModel m = PqecNoiseModel::from_code({11, 1e-3});
    CHECK(m.p_logical == doctest::Approx(1e-7).epsilon(1e-9));
    CHECK(m.p_rz_inject == doctest::Approx(23e-4 / 3.0).epsilon(1e-12));
    CHECK(m.p_rz_inject / m.p_logical >= 1e3);
}

TEST_CASE("builtin factories carry the published parameters") {
    const auto factories = builtin_factories();
    REQUIRE(factories.size() == 3);

    const FactorySpec small = factory_by_name("15to1_7_3_3");
    CHECK(small.qubit_footprint == 810);
    CHECK(small.cycles_per_t == 22);
    CHECK(small.t_error == doctest::Approx(5.4e-4));
    CHECK(!small.assumed);

    const FactorySpec large = factory_by_name("15to1_17_7_7");
    CHECK(large.t_error == doctest::Approx(4.5e-8));
    CHECK(large.cycles_per_t == 42);
    CHECK(large.qubit_footprint == doctest::Approx(4600).epsilon(0.01));  // 46% of 1e4
    CHECK(!large.assumed);

    const FactorySpec mid = factory_by_name("15to1_11_5_5");
    CHECK(mid.assumed);
    // geometric interpolation between the outer configurations
    CHECK(double(mid.qubit_footprint) ==
          doctest::Approx(std::sqrt(810.0 * 4600.0)).epsilon(0.01));
    CHECK(double(mid.cycles_per_t) ==
          doctest::Approx(std::sqrt(22.0 * 42.0)).epsilon(0.02));
    CHECK(mid.t_error == doctest::Approx(std::sqrt(5.4e-4 * 4.5e-8)).epsilon(0.01));

    CHECK_THROWS_AS(factory_by_name("nope"), config_error);
}

TEST_CASE("t count per rotation") {
    SynthesisSpec spec;
    spec.epsilon = 1e-6;
    CHECK(t_count_per_rz(spec) == 60);
    spec.epsilon = 0.5;
    const uint64_t one_bit = t_count_per_rz(spec);
    CHECK(one_bit >= 1);
    CHECK(one_bit <= 4);

    // monotone decreasing in epsilon
    uint64_t prev = UINT64_MAX;
    for (double eps : {1e-9, 1e-6, 1e-4, 1e-2, 0.5}) {
        spec.epsilon = eps;
        const uint64_t t = t_count_per_rz(spec);
        CHECK(t <= prev);
        prev = t;
    }
}

TEST_CASE("synthesis calibration reaches the 20x gate and 7x depth blowup") {
    // 20-qubit fully-connected layer: 380 CNOTs + 40 rotations
    const uint64_t non_rz = 380, rz = 40;
    const SynthesisSpec calibrated = calibrate_gate_factor(non_rz, rz, 20.0);
    const SynthesizedCounts counts = synthesize_counts(non_rz, rz, calibrated);
    CHECK(counts.gate_ratio == doctest::Approx(20.0).epsilon(0.2));
    CHECK(counts.depth_ratio == doctest::Approx(7.0).epsilon(0.2));
    CHECK(counts.t_gates == rz * 60);

    // the shipped default matches the same calibration target
    const SynthesizedCounts default_counts = synthesize_counts(non_rz, rz, {});
    CHECK(default_counts.gate_ratio == doctest::Approx(20.0).epsilon(0.02));
}

TEST_CASE("cultivation spec validation") {
    CultivationSpec ok;
    CHECK_NOTHROW(ok.validate());
    CultivationSpec bad = ok;
    bad.footprint_patches = 3;
    CHECK_THROWS_AS(bad.validate(), config_error);
}
