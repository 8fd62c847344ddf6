#include "eftvqa/vqe.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>

#include "eftvqa/errors.hpp"
#include "eftvqa/layout.hpp"
#include "eftvqa/parallel.hpp"
#include "eftvqa/schedule.hpp"

namespace eftvqa {

std::vector<double> clifford_params_to_angles(const CliffordParams& params) {
    std::vector<double> angles(params.size());
    for (size_t i = 0; i < params.size(); ++i)
        angles[i] = (params[i] & 3) * (M_PI / 2.0);
    return angles;
}

const char* regime_name(VqeRegime regime) {
    switch (regime) {
        case VqeRegime::noiseless: return "noiseless";
        case VqeRegime::nisq: return "nisq";
        case VqeRegime::pqec: return "pqec";
    }
    return "?";
}

VqeRegime regime_from_name(const std::string& name) {
    if (name == "noiseless") return VqeRegime::noiseless;
    if (name == "nisq") return VqeRegime::nisq;
    if (name == "pqec") return VqeRegime::pqec;
    throw config_error("unknown regime '" + name + "'");
}

void GaConfig::validate() const {
    if (population < 2) throw config_error("population must be >= 2");
    if (generations < 1) throw config_error("need at least one generation");
    if (mutation_rate < 0.0 || mutation_rate > 1.0)
        throw config_error("mutation rate out of [0,1]");
    if (elite_fraction < 0.0 || elite_fraction > 1.0)
        throw config_error("elite fraction out of [0,1]");
    if (restarts < 1) throw config_error("need at least one restart");
    if (tournament < 1) throw config_error("tournament size must be >= 1");
}

namespace {

bool term_is_real(const PauliString& p) {
    uint32_t ys = 0;
    for (uint32_t q = 0; q < p.width(); ++q)
        if (p.letter(q) == PauliLetter::Y) ++ys;
    return ys % 2 == 0;
}

// Adds coeff * P to a dense matrix. Column j maps to row j ^ xmask with a
// phase of i^{#Y} * (-1)^{zbits(j)}.
template <typename Matrix, typename Scalar>
void add_term(Matrix& m, double coeff, const PauliString& p) {
    const uint32_t n = p.width();
    uint64_t xmask = 0, zmask = 0;
    uint32_t ys = 0;
    for (uint32_t q = 0; q < n; ++q) {
        if (p.has_x(q)) xmask |= 1ull << q;
        if (p.has_z(q)) zmask |= 1ull << q;
        if (p.letter(q) == PauliLetter::Y) ++ys;
    }
    const std::complex<double> iy = std::pow(std::complex<double>(0.0, 1.0), ys);
    const uint64_t dim = 1ull << n;
    for (uint64_t j = 0; j < dim; ++j) {
        const uint64_t out = j ^ xmask;
        // Y|b> contributes i(-1)^b alongside the Z sign on set bits
        int sign = (std::popcount(j & zmask) & 1) ? -1 : 1;
        std::complex<double> phase = iy * double(sign);
        if constexpr (std::is_same_v<Scalar, double>)
            m(out, j) += coeff * phase.real();
        else
            m(out, j) += coeff * phase;
    }
}

}  // namespace

double exact_ground_energy(const Hamiltonian& hamiltonian) {
    hamiltonian.validate();
    if (hamiltonian.width > 12)
        throw config_error(
            "dense diagonalization capped at 12 qubits; use clifford_reference");
    const uint64_t dim = 1ull << hamiltonian.width;

    bool all_real = true;
    for (const auto& t : hamiltonian.terms)
        if (!term_is_real(t.pauli)) all_real = false;

    if (all_real) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
        for (const auto& t : hamiltonian.terms)
            add_term<Eigen::MatrixXd, double>(m, t.coeff, t.pauli);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m,
                                                              Eigen::EigenvaluesOnly);
        return solver.eigenvalues().minCoeff();
    }
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& t : hamiltonian.terms)
        add_term<Eigen::MatrixXcd, std::complex<double>>(m, t.coeff, t.pauli);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

BruteForceResult brute_force_clifford(const Hamiltonian& hamiltonian,
                                      const AnsatzSpec& ansatz) {
    ansatz.validate();
    const uint64_t k = ansatz.rz_count();
    if (k > 8) throw config_error("exhaustive search capped at 8 parameters");
    const uint64_t total = 1ull << (2 * k);

    std::vector<double> energies(total);
    parallel_for(total, [&](size_t code) {
        CliffordParams params(k);
        for (uint64_t g = 0; g < k; ++g) params[g] = (code >> (2 * g)) & 3;
        const Circuit circ = build_ansatz(ansatz, clifford_params_to_angles(params));
        energies[code] = noiseless_energy(circ, hamiltonian);
    });

    BruteForceResult best;
    best.energy = energies[0];
    uint64_t best_code = 0;
    for (uint64_t code = 1; code < total; ++code) {
        if (energies[code] < best.energy) {
            best.energy = energies[code];
            best_code = code;
        }
    }
    best.params.resize(k);
    for (uint64_t g = 0; g < k; ++g) best.params[g] = (best_code >> (2 * g)) & 3;
    return best;
}

NoiseMap regime_noise_map(VqeRegime regime, const AnsatzSpec& ansatz,
                          const CodeParams& code, bool stochastic_idle,
                          uint64_t idle_seed) {
    NoiseMap map;
    switch (regime) {
        case VqeRegime::noiseless:
            return map;
        case VqeRegime::nisq: {
            const NisqNoiseModel m = NisqNoiseModel::from_physical(code.p_phys);
            map.after_cx = PauliChannel::depolarizing2(m.p_cnot);
            map.after_1q = PauliChannel::depolarizing1(m.p_1q);
            map.readout_flip_probability = m.p_meas;
            return map;
        }
        case VqeRegime::pqec: {
            const PqecNoiseModel m = PqecNoiseModel::from_code(code);
            map.after_cx = PauliChannel::depolarizing2(m.p_logical);
            map.after_1q = PauliChannel::depolarizing1(m.p_logical);
            map.rz_injection = PauliChannel::depolarizing1(m.p_rz_inject);
            map.rz_attempts = RzAttemptsMode::sampled;
            map.readout_flip_probability = m.p_logical;

            const Circuit circ = build_ansatz_zero(ansatz);
            const Schedule sched =
                schedule(circ, LayoutSpec::proposed_for_width(ansatz.n, code),
                         stochastic_idle ? ScheduleMode::stochastic
                                         : ScheduleMode::deterministic,
                         idle_seed);
            for (uint32_t q = 0; q < ansatz.n; ++q)
                map.idle_cycles_per_qubit.push_back({q, sched.idle_cycles[q]});
            const double p_mem = m.p_logical;
            map.idle_channel_for = [p_mem](double cycles) {
                const double p = 1.0 - std::pow(1.0 - p_mem, cycles);
                return PauliChannel::depolarizing1(p);
            };
            return map;
        }
    }
    return map;
}

namespace {

struct GaRun {
    const Hamiltonian& hamiltonian;
    const AnsatzSpec& ansatz;
    VqeRegime regime;
    const GaConfig& ga;
    const CodeParams& code;
    NoiseMap map;  // regime channels, deterministic idle
    uint64_t evals = 0;

    // called from worker threads; evaluation counting happens at the caller
    double fitness(const CliffordParams& params, uint64_t seed) const {
        const Circuit circ = build_ansatz(ansatz, clifford_params_to_angles(params));
        if (regime == VqeRegime::noiseless) return noiseless_energy(circ, hamiltonian);
        TrajectoryConfig cfg{ga.fitness_shots, seed};
        return noisy_energy(circ, hamiltonian, map, cfg).mean;
    }
};

uint64_t mix(uint64_t a, uint64_t b) {
    uint64_t s = a ^ (b * 0x9E3779B97F4A7C15ull);
    return splitmix64(s);
}

RunRecord ga_single_restart(GaRun& run, uint64_t restart_seed) {
    const GaConfig& ga = run.ga;
    const uint64_t genes = run.ansatz.rz_count();
    Rng rng(restart_seed);

    std::vector<CliffordParams> pop(ga.population, CliffordParams(genes));
    for (auto& cand : pop)
        for (auto& g : cand) g = static_cast<uint8_t>(rng.below(4));

    std::vector<double> fitness(ga.population);
    const uint32_t elites = std::max<uint32_t>(
        1, static_cast<uint32_t>(std::ceil(ga.elite_fraction * ga.population)));

    RunRecord record;
    record.seed = restart_seed;
    record.regime = run.regime;

    std::vector<uint32_t> rank(ga.population);
    auto evaluate = [&](uint32_t generation, uint32_t skip_first) {
        parallel_for(ga.population, [&](size_t i) {
            if (i < skip_first) return;  // elites keep their recorded fitness
            fitness[i] = run.fitness(pop[i], mix(restart_seed, generation * 1000003ull + i));
        });
        run.evals += ga.population - skip_first;
        for (uint32_t i = 0; i < ga.population; ++i) rank[i] = i;
        std::stable_sort(rank.begin(), rank.end(),
                         [&](uint32_t a, uint32_t b) { return fitness[a] < fitness[b]; });
    };

    evaluate(0, 0);
    double best_so_far = fitness[rank[0]];
    CliffordParams best_params = pop[rank[0]];
    record.trace.push_back(best_so_far);

    for (uint32_t gen = 1; gen < ga.generations; ++gen) {
        std::vector<CliffordParams> next;
        std::vector<double> next_fitness(ga.population, 0.0);
        next.reserve(ga.population);
        for (uint32_t e = 0; e < elites && e < ga.population; ++e) {
            next.push_back(pop[rank[e]]);
            next_fitness[e] = fitness[rank[e]];
        }
        auto tournament_pick = [&]() -> const CliffordParams& {
            uint32_t best = static_cast<uint32_t>(rng.below(ga.population));
            for (uint32_t t = 1; t < ga.tournament; ++t) {
                const uint32_t rival = static_cast<uint32_t>(rng.below(ga.population));
                if (fitness[rival] < fitness[best]) best = rival;
            }
            return pop[best];
        };
        while (next.size() < ga.population) {
            const CliffordParams& a = tournament_pick();
            const CliffordParams& b = tournament_pick();
            CliffordParams child(genes);
            const uint64_t cut = genes > 1 ? rng.below(genes) : 0;
            for (uint64_t g = 0; g < genes; ++g) child[g] = g < cut ? a[g] : b[g];
            for (uint64_t g = 0; g < genes; ++g) {
                if (rng.bernoulli(ga.mutation_rate)) {
                    const int step = rng.bit() ? 1 : 3;  // +-1 quarter turn
                    child[g] = static_cast<uint8_t>((child[g] + step) & 3);
                }
            }
            next.push_back(std::move(child));
        }
        pop = std::move(next);
        for (uint32_t e = 0; e < elites; ++e) fitness[e] = next_fitness[e];
        evaluate(gen, elites);
        if (fitness[rank[0]] < best_so_far) {
            best_so_far = fitness[rank[0]];
            best_params = pop[rank[0]];
        }
        record.trace.push_back(best_so_far);
    }

    record.best_params = best_params;
    record.best_energy = best_so_far;
    record.evaluation_count = run.evals;
    return record;
}

}  // namespace

RunRecord optimize(const Hamiltonian& hamiltonian, const AnsatzSpec& ansatz,
                   VqeRegime regime, const GaConfig& ga, const CodeParams& code) {
    ga.validate();
    ansatz.validate();
    if (hamiltonian.width != ansatz.n)
        throw config_error("ansatz width must match the Hamiltonian");

    GaRun run{hamiltonian, ansatz, regime, ga, code,
              regime_noise_map(regime, ansatz, code), 0};

    RunRecord best;
    bool have_best = false;
    for (uint32_t r = 0; r < ga.restarts; ++r) {
        RunRecord rec = ga_single_restart(run, mix(ga.seed, r));
        if (!have_best || rec.best_energy < best.best_energy) {
            best = std::move(rec);
            have_best = true;
        }
    }
    best.seed = ga.seed;
    best.evaluation_count = run.evals;

    if (regime != VqeRegime::noiseless) {
        // champion re-scored at higher shots with stochastic idle charges
        NoiseMap rescore = regime_noise_map(regime, ansatz, code, true, mix(ga.seed, 77));
        const Circuit circ =
            build_ansatz(ansatz, clifford_params_to_angles(best.best_params));
        TrajectoryConfig cfg{ga.final_shots, mix(ga.seed, 999)};
        best.best_energy = noisy_energy(circ, hamiltonian, rescore, cfg).mean;
    }
    return best;
}

double clifford_reference(const Hamiltonian& hamiltonian, const AnsatzSpec& ansatz,
                          const GaConfig& ga) {
    return optimize(hamiltonian, ansatz, VqeRegime::noiseless, ga).best_energy;
}

double gamma(double e0, double e_a, double e_b) {
    if (e_a == e0)
        throw config_error("gamma undefined: regime A reached the reference energy");
    return (e0 - e_b) / (e0 - e_a);
}

GammaReport run_gamma_experiment(const Hamiltonian& hamiltonian,
                                 const AnsatzSpec& ansatz, const GaConfig& ga,
                                 const CodeParams& code, VqeRegime regime_a,
                                 VqeRegime regime_b) {
    GammaReport report;
    report.e0 = hamiltonian.width <= 12
                    ? exact_ground_energy(hamiltonian)
                    : clifford_reference(hamiltonian, ansatz, ga);
    report.run_a = optimize(hamiltonian, ansatz, regime_a, ga, code);
    report.run_b = optimize(hamiltonian, ansatz, regime_b, ga, code);
    report.e_a = report.run_a.best_energy;
    report.e_b = report.run_b.best_energy;
    report.gamma = gamma(report.e0, report.e_a, report.e_b);
    return report;
}

}  // namespace eftvqa
