#ifndef EFTVQA_INJECTION_HPP
#define EFTVQA_INJECTION_HPP

#include <cstdint>
#include <vector>

#include "eftvqa/noise_models.hpp"
#include "eftvqa/rng.hpp"

namespace eftvqa {

// Closed-form statistics of post-selected Rz state injection. One
// post-selection trial is two stabilizer-measurement rounds; all durations
// here are in rounds. A consumption window is 2d rounds.
struct InjectionAnalytics {
    double p_pass = 0.0;            // 1 - 2p(1-p)(d^2-1)
    double expected_trials = 0.0;   // E[X] = 1/p_pass
    double stddev_trials = 0.0;     // sqrt(1-p_pass)/p_pass
    double n_trials = 0.0;          // E[X] + sigma[X]
    double p_within_n_trials = 0.0; // P[X <= n_trials]
    double p_within_window = 0.0;   // P[X <= 2d], trials against the window as written
    double c = 0.0;                 // (2d-1)^2 / (8 d^2 (d^2-1))
    double alpha = 0.0;             // lower root of p^2 - p + c = 0
    double beta = 0.0;              // upper root
    bool shuffling_feasible = false;  // p_phys <= alpha, equivalently n_trials <= 2d
};

InjectionAnalytics injection_analytics(double p_phys, int d);

enum class ShufflePolicyKind : uint8_t { wait_and_inject, naive, patch_shuffling };

const char* policy_name(ShufflePolicyKind kind);

struct ShufflePolicy {
    ShufflePolicyKind kind = ShufflePolicyKind::patch_shuffling;
    uint32_t backups = 1;  // naive only, >= 1

    static ShufflePolicy wait_and_inject() { return {ShufflePolicyKind::wait_and_inject, 1}; }
    static ShufflePolicy naive(uint32_t b);
    static ShufflePolicy patch_shuffling() { return {ShufflePolicyKind::patch_shuffling, 1}; }

    uint32_t magic_patches() const;
};

// One repeat-until-success rotation. Attempt g consumes the angle
// 2^(g-1) * theta; a failure applies the negative rotation, compensated by
// doubling. Angles are tracked as exact dyadic multiples of theta.
struct RusOutcome {
    uint64_t attempts = 1;
    std::vector<uint64_t> consumed_angle_units;  // 1, 2, 4, ...
    double total_cycles = 0.0;  // rounds from first consumption start to success
    double stall_cycles = 0.0;  // rounds the data patch waited on injections

    // Net rotation in units of theta: the consumed sequence telescopes to 1.
    int64_t net_rotation_units() const;
};

RusOutcome simulate_rus_trial(const ShufflePolicy& policy, const CodeParams& code,
                              Rng& rng);

struct PipelineStats {
    ShufflePolicyKind policy = ShufflePolicyKind::patch_shuffling;
    uint32_t backups = 0;
    uint64_t magic_patches = 0;
    uint64_t trials = 0;
    double mean_attempts = 0.0;
    double mean_stall_cycles = 0.0;
    double mean_total_cycles = 0.0;
    // (magic patches held) x (rounds held), averaged over trials
    double mean_volume = 0.0;
    double stall_free_fraction = 0.0;
    // fraction of speculative re-injections finishing within the 2d window
    // (patch shuffling; 1.0 when no re-injection happened)
    double on_time_injection_fraction = 0.0;
};

// Monte Carlo over independent rotations; theta enters only the angle
// bookkeeping. Deterministic per seed, trials evaluated on per-trial streams.
PipelineStats simulate_rus(double theta, const ShufflePolicy& policy,
                           const CodeParams& code, uint64_t trials, uint64_t seed);

// Comparison record across naive(1..4) and patch shuffling.
std::vector<PipelineStats> policy_spacetime(const CodeParams& code, uint64_t trials,
                                            uint64_t seed);

}  // namespace eftvqa

#endif
