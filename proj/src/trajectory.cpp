#include "eftvqa/trajectory.hpp"

#include <cmath>

#include "eftvqa/ansatz.hpp"
#include "eftvqa/errors.hpp"
#include "eftvqa/parallel.hpp"

namespace eftvqa {

PauliChannel twirled_relaxation_channel(double idle_cycles, const RelaxationParams& params) {
    if (idle_cycles < 0.0) throw config_error("idle duration must be nonnegative");
    if (params.t1_us <= 0.0 || params.t2_us <= 0.0)
        throw config_error("relaxation times must be positive");
    if (params.t2_us > 2.0 * params.t1_us + 1e-12)
        throw config_error("relaxation requires T2 <= 2*T1");
    if (idle_cycles == 0.0) return PauliChannel::identity(1);
    const double t = idle_cycles * params.cycle_us;
    const double f1 = 1.0 - std::exp(-t / params.t1_us);
    const double f2 = 1.0 - std::exp(-t / params.t2_us);
    const double px = f1 / 4.0;
    const double pz = f2 / 2.0 - f1 / 4.0;
    return PauliChannel::xyz(px, px, std::max(0.0, pz));
}

namespace {

struct ShotContext {
    const Circuit& circuit;
    const Hamiltonian& hamiltonian;
    const NoiseMap& map;
    std::vector<double> readout_scale;  // per term, (1-2p)^weight
};

double run_shot(const ShotContext& ctx, Rng& rng) {
    Tableau tab(ctx.circuit.width);
    for (const auto& g : ctx.circuit.gates) {
        switch (g.kind) {
            case GateKind::CX:
                tab.apply_cx(g.q0, g.q1);
                ctx.map.after_cx.apply(tab, {g.q0, g.q1}, rng);
                break;
            case GateKind::Rz: {
                tab.apply(g);  // throws on non-canonical angle
                uint64_t attempts = ctx.map.rz_attempts == RzAttemptsMode::sampled
                                        ? rng.geometric(0.5)
                                        : uint64_t(kExpectedRusAttempts);
                for (uint64_t a = 0; a < attempts; ++a)
                    ctx.map.rz_injection.apply(tab, {g.q0}, rng);
                break;
            }
            case GateKind::MeasureZ:
                tab.measure_z(g.q0, rng);
                break;
            default:
                tab.apply(g);
                ctx.map.after_1q.apply(tab, {g.q0}, rng);
                break;
        }
    }
    if (ctx.map.idle_channel_for) {
        for (const auto& [q, cycles] : ctx.map.idle_cycles_per_qubit) {
            if (q < ctx.circuit.width && cycles > 0.0)
                ctx.map.idle_channel_for(cycles).apply(tab, {q}, rng);
        }
    }
    double energy = 0.0;
    for (size_t t = 0; t < ctx.hamiltonian.terms.size(); ++t) {
        const auto& term = ctx.hamiltonian.terms[t];
        energy += term.coeff * ctx.readout_scale[t] * tab.expectation(term.pauli);
    }
    return energy;
}

}  // namespace

std::vector<double> noisy_energy_per_shot(const Circuit& circuit,
                                          const Hamiltonian& hamiltonian,
                                          const NoiseMap& map,
                                          const TrajectoryConfig& cfg) {
    if (cfg.shots < 1) throw config_error("trajectory shots must be >= 1");
    if (circuit.width != hamiltonian.width)
        throw config_error("circuit and Hamiltonian width mismatch");
    circuit.validate();

    ShotContext ctx{circuit, hamiltonian, map, {}};
    ctx.readout_scale.reserve(hamiltonian.terms.size());
    const double ro = map.readout_flip_probability;
    for (const auto& term : hamiltonian.terms)
        ctx.readout_scale.push_back(std::pow(1.0 - 2.0 * ro, term.pauli.weight()));

    std::vector<double> energies(cfg.shots);
    parallel_for(cfg.shots, [&](size_t shot) {
        Rng rng = stream_rng(cfg.seed, shot);
        energies[shot] = run_shot(ctx, rng);
    });
    return energies;
}

EnergyEstimate noisy_energy(const Circuit& circuit, const Hamiltonian& hamiltonian,
                            const NoiseMap& map, const TrajectoryConfig& cfg) {
    const std::vector<double> energies =
        noisy_energy_per_shot(circuit, hamiltonian, map, cfg);
    double sum = 0.0;
    for (double e : energies) sum += e;
    const double mean = sum / static_cast<double>(energies.size());
    double var = 0.0;
    for (double e : energies) var += (e - mean) * (e - mean);
    EnergyEstimate est;
    est.mean = mean;
    est.shots = energies.size();
    est.std_error = energies.size() > 1
                        ? std::sqrt(var / (double(energies.size()) - 1.0) /
                                    double(energies.size()))
                        : 0.0;
    return est;
}

double noiseless_energy(const Circuit& circuit, const Hamiltonian& hamiltonian) {
    if (circuit.width != hamiltonian.width)
        throw config_error("circuit and Hamiltonian width mismatch");
    Tableau tab(circuit.width);
    Rng rng(0);  // measurements in a noiseless ansatz are absent; keep it total
    for (const auto& g : circuit.gates) {
        if (g.kind == GateKind::MeasureZ)
            tab.measure_z(g.q0, rng);
        else
            tab.apply(g);
    }
    double energy = 0.0;
    for (const auto& term : hamiltonian.terms)
        energy += term.coeff * tab.expectation(term.pauli);
    return energy;
}

}  // namespace eftvqa
