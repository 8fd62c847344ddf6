#include "eftvqa/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "eftvqa/ansatz.hpp"
#include "eftvqa/errors.hpp"

namespace eftvqa {

const char* strategy_name(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::nisq: return "nisq";
        case StrategyKind::pqec: return "pqec";
        case StrategyKind::conventional: return "conventional";
        case StrategyKind::cultivation: return "cultivation";
    }
    return "?";
}

StrategyKind strategy_kind_from_name(const std::string& name) {
    if (name == "nisq") return StrategyKind::nisq;
    if (name == "pqec") return StrategyKind::pqec;
    if (name == "conventional" || name == "qec-conventional")
        return StrategyKind::conventional;
    if (name == "cultivation" || name == "qec-cultivation")
        return StrategyKind::cultivation;
    throw config_error("unknown strategy '" + name + "'");
}

StrategyConfig StrategyConfig::nisq(double p_phys) {
    StrategyConfig c;
    c.kind = StrategyKind::nisq;
    c.p_phys = p_phys;
    return c;
}

StrategyConfig StrategyConfig::pqec(const CodeParams& code, uint64_t budget) {
    StrategyConfig c;
    c.kind = StrategyKind::pqec;
    c.code = code;
    c.p_phys = code.p_phys;
    c.device_budget = budget;
    return c;
}

StrategyConfig StrategyConfig::conventional(const FactorySpec& factory,
                                            const CodeParams& code, uint64_t budget,
                                            Provisioning provisioning,
                                            SynthesisSpec synthesis) {
    StrategyConfig c;
    c.kind = StrategyKind::conventional;
    c.code = code;
    c.p_phys = code.p_phys;
    c.device_budget = budget;
    c.factory = factory;
    c.provisioning = provisioning;
    c.synthesis = synthesis;
    return c;
}

StrategyConfig StrategyConfig::qec_cultivation(const CultivationSpec& cult,
                                               const CodeParams& code, uint64_t budget,
                                               SynthesisSpec synthesis) {
    StrategyConfig c;
    c.kind = StrategyKind::cultivation;
    c.code = code;
    c.p_phys = code.p_phys;
    c.device_budget = budget;
    c.cultivation = cult;
    c.synthesis = synthesis;
    return c;
}

namespace {

double nll(double p) {
    if (p < 0.0 || p >= 1.0) throw config_error("error rate out of [0,1)");
    return -std::log1p(-p);
}

struct CircuitProfile {
    uint64_t cnot = 0;
    uint64_t clifford_1q = 0;
    uint64_t rz = 0;
    uint64_t measure = 0;  // explicit measure gates + final per-qubit readout
};

CircuitProfile profile(const Circuit& circuit) {
    CircuitProfile p;
    for (const auto& g : circuit.gates) {
        switch (g.kind) {
            case GateKind::CX: p.cnot += 1; break;
            case GateKind::Rz: p.rz += 1; break;
            case GateKind::MeasureZ: p.measure += 1; break;
            default: p.clifford_1q += 1; break;
        }
    }
    p.measure += circuit.width;  // end-of-circuit energy readout
    return p;
}

void finish(FidelityReport& r) {
    double total = 0.0;
    for (const auto& [key, value] : r.breakdown) total += value;
    r.log_error = total;
    r.fidelity = std::exp(-total);
}

FidelityReport estimate_nisq(const Circuit& circuit, const StrategyConfig& cfg) {
    const NisqNoiseModel m = NisqNoiseModel::from_physical(cfg.p_phys);
    const CircuitProfile p = profile(circuit);
    FidelityReport r;
    r.qubits_used = circuit.width;
    r.breakdown["gate"] = double(p.cnot) * nll(m.p_cnot) +
                          double(p.clifford_1q) * nll(m.p_1q);
    r.breakdown["rz_t"] = double(p.rz) * nll(m.p_rz);  // exactly zero
    r.breakdown["measurement"] = double(p.measure) * nll(m.p_meas);
    r.breakdown["memory"] = 0.0;
    finish(r);
    return r;
}

FidelityReport estimate_pqec(const Circuit& circuit, const StrategyConfig& cfg) {
    const PqecNoiseModel m = PqecNoiseModel::from_code(cfg.code);
    const LayoutSpec layout = LayoutSpec::proposed_for_width(circuit.width, cfg.code);
    const Schedule sched = schedule(circuit, layout, ScheduleMode::deterministic);
    const CircuitProfile p = profile(circuit);

    FidelityReport r;
    r.t_circ = sched.t_circ;
    r.qubits_used = sched.physical_qubits;
    r.over_budget = sched.physical_qubits > cfg.device_budget;
    if (cfg.enforce_budget && r.over_budget)
        throw no_fit_error("program does not fit the device budget under pQEC");
    r.breakdown["gate"] = double(p.cnot) * nll(m.p_logical) +
                          double(p.clifford_1q) * nll(m.p_logical);
    r.breakdown["rz_t"] = sched.rz_attempts * nll(m.p_rz_inject);
    r.breakdown["measurement"] = double(p.measure) * nll(m.p_logical);
    r.breakdown["memory"] = sched.total_idle_patch_cycles() * nll(m.p_logical);
    r.stall_cycles = sched.stall_cycles;
    finish(r);
    return r;
}

// Shared supply/demand pipeline for T-state consumers (distillation or
// cultivation). The program holds its data patches for the whole execution;
// execution time is the larger of T supply and the synthesized Clifford
// critical path; the gap is charged as stall.
struct TSupplyInputs {
    uint64_t units = 1;
    double cycles_per_t = 1.0;
    double t_error = 0.0;
    uint64_t unit_footprint = 0;
};

FidelityReport estimate_t_pipeline(const Circuit& circuit, const StrategyConfig& cfg,
                                   const TSupplyInputs& supply) {
    const double p_log = logical_error_rate(cfg.code);
    const CircuitProfile p = profile(circuit);
    const SynthesizedCounts synth = synthesize_counts(p.cnot + p.clifford_1q, p.rz,
                                                      cfg.synthesis);
    const uint64_t per_patch = patch_physical_qubits(cfg.code.d);
    const uint64_t program_qubits = uint64_t(circuit.width) * per_patch;

    FidelityReport r;
    r.factories = supply.units;
    r.qubits_used = program_qubits + supply.units * supply.unit_footprint;
    r.over_budget = r.qubits_used > cfg.device_budget;
    if (cfg.enforce_budget && r.over_budget)
        throw no_fit_error("program plus T supply exceeds the device budget");

    const double t_total = static_cast<double>(synth.t_gates);
    const double supply_cycles = t_total * supply.cycles_per_t /
                                 static_cast<double>(supply.units);
    // Clifford-path execution: the unsynthesized schedule stretched by the
    // synthesis depth factor plus serial T consumption (2 cycles each).
    const LayoutSpec layout = LayoutSpec::proposed_for_width(circuit.width, cfg.code);
    const Schedule sched = schedule(circuit, layout, ScheduleMode::deterministic);
    const double consume_cycles = sched.t_circ * cfg.synthesis.depth_factor +
                                  2.0 * t_total / std::max(1u, circuit.width);
    const double t_exec = std::max(supply_cycles, consume_cycles);
    r.t_circ = t_exec;
    r.stall_cycles = std::max(0.0, supply_cycles - consume_cycles);

    r.breakdown["gate"] = double(synth.clifford_gates) * nll(p_log);
    r.breakdown["rz_t"] = t_total * nll(supply.t_error);
    r.breakdown["measurement"] = double(p.measure) * nll(p_log);
    r.breakdown["memory"] = double(circuit.width) * t_exec * nll(p_log);
    finish(r);
    return r;
}

FidelityReport estimate_conventional(const Circuit& circuit, const StrategyConfig& cfg) {
    cfg.factory.validate();
    const uint64_t per_patch = patch_physical_qubits(cfg.code.d);
    const uint64_t program_qubits = uint64_t(circuit.width) * per_patch;
    const uint64_t residual = cfg.device_budget > program_qubits
                                  ? cfg.device_budget - program_qubits
                                  : 0;
    uint64_t units = 1;
    if (cfg.provisioning == Provisioning::greedy_fill) {
        units = residual / cfg.factory.qubit_footprint;
        if (units == 0)
            throw no_fit_error("no distillation factory fits the residual budget");
    } else if (cfg.enforce_budget && residual < cfg.factory.qubit_footprint) {
        throw no_fit_error("no distillation factory fits the residual budget");
    }
    TSupplyInputs supply;
    supply.units = units;
    supply.cycles_per_t = static_cast<double>(cfg.factory.cycles_per_t);
    supply.t_error = cfg.factory.t_error;
    supply.unit_footprint = cfg.factory.qubit_footprint;
    return estimate_t_pipeline(circuit, cfg, supply);
}

FidelityReport estimate_cultivation(const Circuit& circuit, const StrategyConfig& cfg) {
    cfg.cultivation.validate();
    const uint64_t per_patch = patch_physical_qubits(cfg.code.d);
    const uint64_t unit_qubits = cfg.cultivation.footprint_patches * per_patch;
    const uint64_t program_qubits = uint64_t(circuit.width) * per_patch;
    const uint64_t residual = cfg.device_budget > program_qubits
                                  ? cfg.device_budget - program_qubits
                                  : 0;
    const uint64_t units = std::max<uint64_t>(1, residual / unit_qubits);
    TSupplyInputs supply;
    supply.units = units;
    supply.cycles_per_t = static_cast<double>(cfg.cultivation.expected_cycles_per_t);
    supply.t_error = cfg.cultivation.t_error;
    supply.unit_footprint = unit_qubits;
    return estimate_t_pipeline(circuit, cfg, supply);
}

}  // namespace

FidelityReport estimate(const Circuit& circuit, const StrategyConfig& strategy) {
    circuit.validate();
    switch (strategy.kind) {
        case StrategyKind::nisq: return estimate_nisq(circuit, strategy);
        case StrategyKind::pqec: return estimate_pqec(circuit, strategy);
        case StrategyKind::conventional: return estimate_conventional(circuit, strategy);
        case StrategyKind::cultivation: return estimate_cultivation(circuit, strategy);
    }
    throw config_error("unknown strategy");
}

std::vector<StrategyComparison> compare_strategies(const std::vector<Circuit>& circuits,
                                                   uint64_t budget, const CodeParams& code,
                                                   Provisioning provisioning,
                                                   const SynthesisSpec& synthesis) {
    if (circuits.size() < 1) throw config_error("need at least one circuit");
    std::vector<StrategyComparison> rows;
    for (const auto& circ : circuits) {
        StrategyComparison row;
        row.n = circ.width;
        StrategyConfig pq = StrategyConfig::pqec(code, budget);
        pq.enforce_budget = false;  // over-budget points reported, not rejected
        row.pqec_fidelity = estimate(circ, pq).fidelity;
        for (const auto& factory : builtin_factories()) {
            StrategyConfig conv = StrategyConfig::conventional(factory, code, budget,
                                                               provisioning, synthesis);
            conv.enforce_budget = false;
            const double f = estimate(circ, conv).fidelity;
            row.conventional_fidelity[factory.name] = f;
            row.pqec_over_conventional[factory.name] =
                f > 0.0 ? row.pqec_fidelity / f : std::numeric_limits<double>::infinity();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

WinMatrix win_matrix(const std::vector<uint32_t>& program_sizes,
                     const std::vector<uint64_t>& device_sizes, const CodeParams& code,
                     uint32_t depths, const SynthesisSpec& synthesis) {
    if (program_sizes.empty() || device_sizes.empty())
        throw config_error("win matrix needs non-empty grids");
    WinMatrix m;
    m.program_sizes = program_sizes;
    m.device_sizes = device_sizes;
    m.win_fraction.assign(program_sizes.size(),
                          std::vector<double>(device_sizes.size(), -1.0));

    for (size_t i = 0; i < program_sizes.size(); ++i) {
        const uint32_t n = program_sizes[i];
        std::vector<Circuit> bench;
        for (uint32_t p = 1; p <= depths; ++p) {
            for (AnsatzKind kind : {AnsatzKind::linear, AnsatzKind::fche,
                                    AnsatzKind::blocked_all_to_all}) {
                if (kind == AnsatzKind::blocked_all_to_all && n % 2 != 0) continue;
                bench.push_back(build_ansatz_zero(AnsatzSpec{kind, n, p}));
            }
        }
        for (size_t j = 0; j < device_sizes.size(); ++j) {
            const uint64_t budget = device_sizes[j];
            const LayoutSpec layout = LayoutSpec::proposed_for_width(n, code);
            if (layout_metrics(layout).physical_qubits > budget) continue;  // white square
            uint32_t wins = 0;
            for (const auto& circ : bench) {
                StrategyConfig pq = StrategyConfig::pqec(code, budget);
                const double f_pqec = estimate(circ, pq).fidelity;
                double f_conv = -1.0;
                for (const auto& factory : builtin_factories()) {
                    StrategyConfig conv = StrategyConfig::conventional(
                        factory, code, budget, Provisioning::greedy_fill, synthesis);
                    conv.enforce_budget = false;
                    const FidelityReport rep = estimate(circ, conv);
                    if (!rep.over_budget) f_conv = std::max(f_conv, rep.fidelity);
                }
                if (f_conv < 0.0 || f_pqec > f_conv) ++wins;
            }
            m.win_fraction[i][j] = double(wins) / double(bench.size());
        }
    }
    return m;
}

CrossoverReport crossover_depth_scan(AnsatzKind ansatz,
                                     const std::vector<uint32_t>& n_values,
                                     uint32_t depth_min, uint32_t depth_max,
                                     const CodeParams& code) {
    if (depth_min < 1 || depth_max < depth_min)
        throw config_error("invalid depth range");
    CrossoverReport report;
    report.ansatz = ansatz;

    const NisqNoiseModel nisq = NisqNoiseModel::from_physical(code.p_phys);
    const double p_log = logical_error_rate(code);
    const double p_inj = injection_error(code.p_phys);

    auto cnot_per_layer = [&](double n) {
        switch (ansatz) {
            case AnsatzKind::linear: return n;
            case AnsatzKind::fche: return n * (n - 1.0);
            case AnsatzKind::blocked_all_to_all: return n * n / 2.0 - 5.0 * n + 20.0;
        }
        return 0.0;
    };
    // -log F growth per layer; rotations dominate pQEC, CNOTs dominate NISQ
    auto nisq_slope = [&](double n) { return cnot_per_layer(n) * nll(nisq.p_cnot); };
    auto pqec_slope = [&](double n) {
        return 2.0 * n * kExpectedRusAttempts * nll(p_inj) +
               cnot_per_layer(n) * nll(p_log);
    };

    for (uint32_t n : n_values) {
        CrossoverPoint point;
        point.n = n;
        point.nisq_slope = nisq_slope(n);
        point.pqec_slope = pqec_slope(n);
        for (uint32_t p = depth_min; p <= depth_max; ++p) {
            const Circuit circ = build_ansatz_zero(AnsatzSpec{ansatz, n, p});
            StrategyConfig nq = StrategyConfig::nisq(code.p_phys);
            StrategyConfig pq = StrategyConfig::pqec(code);
            pq.enforce_budget = false;
            point.nisq_log_fidelity.push_back(-estimate(circ, nq).log_error);
            point.pqec_log_fidelity.push_back(-estimate(circ, pq).log_error);
        }
        report.points.push_back(std::move(point));
    }

    // continuous root of nisq_slope(n) - pqec_slope(n) on the rising branch
    double lo = 7.0, hi = 256.0;
    auto gap = [&](double n) { return nisq_slope(n) - pqec_slope(n); };
    if (gap(lo) > 0.0 || gap(hi) < 0.0) {
        report.crossover_n = gap(lo) > 0.0 ? lo : hi;
    } else {
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            (gap(mid) < 0.0 ? lo : hi) = mid;
        }
        report.crossover_n = 0.5 * (lo + hi);
    }
    return report;
}

std::vector<CultivationComparisonPoint> compare_cultivation(
    const std::vector<uint32_t>& n_values, uint64_t budget, const CodeParams& code,
    const CultivationSpec& cultivation, const SynthesisSpec& synthesis) {
    std::vector<CultivationComparisonPoint> points;
    for (uint32_t n : n_values) {
        const Circuit circ = build_ansatz_zero(AnsatzSpec{AnsatzKind::fche, n, 1});
        StrategyConfig pq = StrategyConfig::pqec(code, budget);
        pq.enforce_budget = false;
        StrategyConfig cult = StrategyConfig::qec_cultivation(cultivation, code, budget,
                                                              synthesis);
        cult.enforce_budget = false;
        CultivationComparisonPoint point;
        point.n = n;
        point.pqec_fidelity = estimate(circ, pq).fidelity;
        point.cultivation_fidelity = estimate(circ, cult).fidelity;
        points.push_back(point);
    }
    return points;
}

}  // namespace eftvqa
