#ifndef EFTVQA_VQE_HPP
#define EFTVQA_VQE_HPP

#include <cstdint>
#include <vector>

#include "eftvqa/ansatz.hpp"
#include "eftvqa/hamiltonian.hpp"
#include "eftvqa/noise_models.hpp"
#include "eftvqa/trajectory.hpp"

namespace eftvqa {

// Rotation parameters restricted to quarter turns: values 0..3, meaning
// theta = value * pi/2.
using CliffordParams = std::vector<uint8_t>;

std::vector<double> clifford_params_to_angles(const CliffordParams& params);

enum class VqeRegime : uint8_t { noiseless, nisq, pqec };

const char* regime_name(VqeRegime regime);
VqeRegime regime_from_name(const std::string& name);

struct GaConfig {
    uint32_t population = 64;
    uint32_t generations = 200;
    double mutation_rate = 0.05;
    double elite_fraction = 0.1;
    uint64_t seed = 0;
    uint32_t restarts = 3;
    uint32_t tournament = 3;
    uint64_t fitness_shots = 256;  // noisy regimes
    uint64_t final_shots = 4096;   // champion re-evaluation

    void validate() const;
};

struct RunRecord {
    uint64_t seed = 0;
    VqeRegime regime = VqeRegime::noiseless;
    CliffordParams best_params;
    double best_energy = 0.0;  // champion score (re-evaluated for noisy runs)
    uint64_t evaluation_count = 0;
    std::vector<double> trace;  // best fitness so far, per generation
};

// Minimum eigenvalue by dense Hermitian eigensolve; width capped at 12.
double exact_ground_energy(const Hamiltonian& hamiltonian);

struct BruteForceResult {
    CliffordParams params;
    double energy = 0.0;
};

// Exhaustive 4^k search over quarter-turn assignments; k capped at 8.
BruteForceResult brute_force_clifford(const Hamiltonian& hamiltonian,
                                      const AnsatzSpec& ansatz);

// Best noiseless stabilizer energy found by the GA.
double clifford_reference(const Hamiltonian& hamiltonian, const AnsatzSpec& ansatz,
                          const GaConfig& ga);

// Channel map for a regime; pqec derives idle charges from the deterministic
// schedule of the ansatz.
NoiseMap regime_noise_map(VqeRegime regime, const AnsatzSpec& ansatz,
                          const CodeParams& code, bool stochastic_idle = false,
                          uint64_t idle_seed = 0);

RunRecord optimize(const Hamiltonian& hamiltonian, const AnsatzSpec& ansatz,
                   VqeRegime regime, const GaConfig& ga,
                   const CodeParams& code = CodeParams{});

// gamma = (E0 - E_B) / (E0 - E_A): how much closer regime A gets to the
// reference energy than regime B.
double gamma(double e0, double e_a, double e_b);

struct GammaReport {
    double e0 = 0.0;
    double e_a = 0.0;
    double e_b = 0.0;
    double gamma = 0.0;
    RunRecord run_a;
    RunRecord run_b;
};

// Full A-versus-B experiment (defaults: A = pqec, B = nisq). E0 is the exact
// ground energy up to width 12 and the noiseless Clifford reference above.
GammaReport run_gamma_experiment(const Hamiltonian& hamiltonian,
                                 const AnsatzSpec& ansatz, const GaConfig& ga,
                                 const CodeParams& code,
                                 VqeRegime regime_a = VqeRegime::pqec,
                                 VqeRegime regime_b = VqeRegime::nisq);

}  // namespace eftvqa

#endif
