#include "eftvqa/injection.hpp"

#include <cmath>

#include "eftvqa/errors.hpp"
#include "eftvqa/parallel.hpp"

namespace eftvqa {

InjectionAnalytics injection_analytics(double p_phys, int d) {
    if (p_phys < 0.0 || p_phys >= 1.0)
        throw config_error("physical error rate out of range");
    if (d < 3) throw config_error("code distance must be >= 3");

    const double dd = static_cast<double>(d);
    const double stabilizers = dd * dd - 1.0;
    const double p_fail = 2.0 * p_phys * (1.0 - p_phys) * stabilizers;
    if (p_fail >= 1.0)
        throw config_error("post-selection never passes at this error rate and distance");

    InjectionAnalytics a;
    a.p_pass = 1.0 - p_fail;
    a.expected_trials = 1.0 / a.p_pass;
    a.stddev_trials = std::sqrt(1.0 - a.p_pass) / a.p_pass;
    a.n_trials = a.expected_trials + a.stddev_trials;
    a.p_within_n_trials = 1.0 - std::pow(1.0 - a.p_pass, a.n_trials);
    a.p_within_window = 1.0 - std::pow(1.0 - a.p_pass, 2.0 * dd);
    a.c = (2.0 * dd - 1.0) * (2.0 * dd - 1.0) / (8.0 * dd * dd * stabilizers);
    const double disc = 1.0 - 4.0 * a.c;  // positive for every d >= 3
    a.alpha = (1.0 - std::sqrt(disc)) / 2.0;
    a.beta = (1.0 + std::sqrt(disc)) / 2.0;
    a.shuffling_feasible = p_phys <= a.alpha;
    return a;
}

const char* policy_name(ShufflePolicyKind kind) {
    switch (kind) {
        case ShufflePolicyKind::wait_and_inject: return "wait_and_inject";
        case ShufflePolicyKind::naive: return "naive";
        case ShufflePolicyKind::patch_shuffling: return "patch_shuffling";
    }
    return "?";
}

ShufflePolicy ShufflePolicy::naive(uint32_t b) {
    if (b < 1) throw config_error("naive policy needs at least one backup state");
    return {ShufflePolicyKind::naive, b};
}

uint32_t ShufflePolicy::magic_patches() const {
    switch (kind) {
        case ShufflePolicyKind::wait_and_inject: return 1;
        case ShufflePolicyKind::naive: return backups;
        case ShufflePolicyKind::patch_shuffling: return 2;
    }
    return 1;
}

int64_t RusOutcome::net_rotation_units() const {
    // failures apply the negative of what was consumed; each compensation
    // doubles, so the sum telescopes
    int64_t net = 0;
    for (size_t j = 0; j < consumed_angle_units.size(); ++j) {
        const bool success = (j + 1 == consumed_angle_units.size());
        const int64_t u = static_cast<int64_t>(consumed_angle_units[j]);
        net += success ? u : -u;
    }
    return net;
}

RusOutcome simulate_rus_trial(const ShufflePolicy& policy, const CodeParams& code,
                              Rng& rng) {
    const InjectionAnalytics an = injection_analytics(code.p_phys, code.d);
    const double window = 2.0 * code.d;  // consumption duration in rounds

    RusOutcome out;
    out.attempts = rng.geometric(0.5);
    out.consumed_angle_units.reserve(out.attempts);
    for (uint64_t g = 0; g < out.attempts && g < 63; ++g)
        out.consumed_angle_units.push_back(1ull << g);

    double t = 0.0;       // state 1 is prepared ahead; consumption 1 starts at 0
    double stall = 0.0;
    for (uint64_t j = 1; j <= out.attempts; ++j) {
        if (j > 1) {
            const double inject = 2.0 * static_cast<double>(rng.geometric(an.p_pass));
            switch (policy.kind) {
                case ShufflePolicyKind::wait_and_inject:
                    stall += inject;
                    t += inject;
                    break;
                case ShufflePolicyKind::naive:
                    if (j > policy.backups) {
                        stall += inject;
                        t += inject;
                    }
                    break;
                case ShufflePolicyKind::patch_shuffling: {
                    // injection ran during the previous consumption window
                    const double late = std::max(0.0, inject - window);
                    stall += late;
                    t += late;
                    break;
                }
            }
        }
        t += window;
    }
    out.total_cycles = t;
    out.stall_cycles = stall;
    return out;
}

PipelineStats simulate_rus(double theta, const ShufflePolicy& policy,
                           const CodeParams& code, uint64_t trials, uint64_t seed) {
    (void)theta;  // angles enter per-trial bookkeeping only
    if (trials < 1) throw config_error("need at least one trial");
    // p_phys = 0 is a meaningful limit here, so skip the sub-threshold check
    const InjectionAnalytics an = injection_analytics(code.p_phys, code.d);
    const double window = 2.0 * code.d;

    struct TrialRow {
        double attempts, stall, total, on_time, injections;
        uint8_t stall_free;
    };
    std::vector<TrialRow> rows(trials);

    parallel_for(trials, [&](size_t i) {
        Rng rng = stream_rng(seed, i);
        // replay the same structure as simulate_rus_trial but also count
        // speculative injections for the shuffling on-time statistic
        const uint64_t attempts = rng.geometric(0.5);
        double t = 0.0, stall = 0.0, on_time = 0.0, injections = 0.0;
        for (uint64_t j = 1; j <= attempts; ++j) {
            if (j > 1) {
                const double inject = 2.0 * static_cast<double>(rng.geometric(an.p_pass));
                switch (policy.kind) {
                    case ShufflePolicyKind::wait_and_inject:
                        stall += inject;
                        t += inject;
                        break;
                    case ShufflePolicyKind::naive:
                        if (j > policy.backups) {
                            stall += inject;
                            t += inject;
                        }
                        break;
                    case ShufflePolicyKind::patch_shuffling: {
                        injections += 1.0;
                        if (inject <= window) on_time += 1.0;
                        const double late = std::max(0.0, inject - window);
                        stall += late;
                        t += late;
                        break;
                    }
                }
            }
            t += window;
        }
        rows[i] = {static_cast<double>(attempts), stall, t, on_time, injections,
                   static_cast<uint8_t>(stall == 0.0 ? 1 : 0)};
    });

    PipelineStats stats;
    stats.policy = policy.kind;
    stats.backups = policy.kind == ShufflePolicyKind::naive ? policy.backups : 0;
    stats.magic_patches = policy.magic_patches();
    stats.trials = trials;
    double attempts_sum = 0, stall_sum = 0, total_sum = 0, vol_sum = 0;
    double on_time_sum = 0, injections_sum = 0, stall_free = 0;
    for (const auto& r : rows) {
        attempts_sum += r.attempts;
        stall_sum += r.stall;
        total_sum += r.total;
        vol_sum += r.total * static_cast<double>(stats.magic_patches);
        on_time_sum += r.on_time;
        injections_sum += r.injections;
        stall_free += r.stall_free;
    }
    const double n = static_cast<double>(trials);
    stats.mean_attempts = attempts_sum / n;
    stats.mean_stall_cycles = stall_sum / n;
    stats.mean_total_cycles = total_sum / n;
    stats.mean_volume = vol_sum / n;
    stats.stall_free_fraction = stall_free / n;
    stats.on_time_injection_fraction =
        injections_sum > 0.0 ? on_time_sum / injections_sum : 1.0;
    return stats;
}

std::vector<PipelineStats> policy_spacetime(const CodeParams& code, uint64_t trials,
                                            uint64_t seed) {
    std::vector<PipelineStats> all;
    for (uint32_t b = 1; b <= 4; ++b)
        all.push_back(simulate_rus(0.0, ShufflePolicy::naive(b), code, trials, seed));
    all.push_back(simulate_rus(0.0, ShufflePolicy::patch_shuffling(), code, trials, seed));
    return all;
}

}  // namespace eftvqa
