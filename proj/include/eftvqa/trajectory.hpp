#ifndef EFTVQA_TRAJECTORY_HPP
#define EFTVQA_TRAJECTORY_HPP

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "eftvqa/circuit.hpp"
#include "eftvqa/hamiltonian.hpp"
#include "eftvqa/tableau.hpp"

namespace eftvqa {

struct TrajectoryConfig {
    uint64_t shots = 1;
    uint64_t seed = 0;
};

// Thermal relaxation defaults. The paper does not state device T1/T2 or cycle
// times; these are assumptions and are flagged as such when serialized.
struct RelaxationParams {
    double t1_us = 100.0;
    double t2_us = 80.0;     // must satisfy t2 <= 2*t1
    double cycle_us = 1.0;
};

// Pauli twirl of combined amplitude and phase damping over an idle window:
//   px = py = (1 - exp(-t/T1)) / 4
//   pz = (1 - exp(-t/T2)) / 2 - (1 - exp(-t/T1)) / 4
PauliChannel twirled_relaxation_channel(double idle_cycles,
                                        const RelaxationParams& params = {});

enum class RzAttemptsMode : uint8_t {
    fixed_expectation,  // every rotation charged E[attempts] = 2
    sampled,            // attempts drawn geometric(1/2) per rotation
};

// Per-gate-class channel map used by noisy trajectory simulation. Channels
// default to identity (noiseless).
struct NoiseMap {
    PauliChannel after_cx = PauliChannel::identity(2);
    PauliChannel after_1q = PauliChannel::identity(1);
    // charged once per consumption attempt of each Rz
    PauliChannel rz_injection = PauliChannel::identity(1);
    RzAttemptsMode rz_attempts = RzAttemptsMode::fixed_expectation;

    // classical readout twirl applied analytically per measured letter
    double readout_flip_probability = 0.0;

    // idle cycles per qubit, usually the scheduler's idle map; converted to a
    // channel through idle_channel_for and applied at circuit end
    std::vector<std::pair<uint32_t, double>> idle_cycles_per_qubit;
    std::function<PauliChannel(double cycles)> idle_channel_for;
};

struct EnergyEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    uint64_t shots = 0;
};

// Monte Carlo estimate of <H> for a Clifford-canonicalizable circuit under
// the channel map. Deterministic per (circuit, map, cfg.seed) regardless of
// worker thread count.
EnergyEstimate noisy_energy(const Circuit& circuit, const Hamiltonian& hamiltonian,
                            const NoiseMap& map, const TrajectoryConfig& cfg);

// Same, returning the per-shot energies (index = shot).
std::vector<double> noisy_energy_per_shot(const Circuit& circuit,
                                          const Hamiltonian& hamiltonian,
                                          const NoiseMap& map,
                                          const TrajectoryConfig& cfg);

// Single noiseless evaluation (exact, no sampling).
double noiseless_energy(const Circuit& circuit, const Hamiltonian& hamiltonian);

}  // namespace eftvqa

#endif
