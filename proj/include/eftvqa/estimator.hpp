#ifndef EFTVQA_ESTIMATOR_HPP
#define EFTVQA_ESTIMATOR_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "eftvqa/circuit.hpp"
#include "eftvqa/layout.hpp"
#include "eftvqa/noise_models.hpp"
#include "eftvqa/schedule.hpp"

namespace eftvqa {

enum class StrategyKind : uint8_t { nisq, pqec, conventional, cultivation };

const char* strategy_name(StrategyKind kind);
StrategyKind strategy_kind_from_name(const std::string& name);

// Factory provisioning under a device budget. The published comparison
// curves track one factory per configuration; greedy fill packs the residual
// budget with identical factories and is what the scaling study uses.
enum class Provisioning : uint8_t { single_factory, greedy_fill };

struct StrategyConfig {
    StrategyKind kind = StrategyKind::pqec;
    double p_phys = 1e-3;           // NISQ
    CodeParams code;                // error-corrected strategies
    uint64_t device_budget = 10000;
    FactorySpec factory;            // conventional
    SynthesisSpec synthesis;        // conventional & cultivation
    CultivationSpec cultivation;    // cultivation
    Provisioning provisioning = Provisioning::single_factory;
    bool enforce_budget = true;

    static StrategyConfig nisq(double p_phys);
    static StrategyConfig pqec(const CodeParams& code, uint64_t budget = 10000);
    static StrategyConfig conventional(const FactorySpec& factory, const CodeParams& code,
                                       uint64_t budget = 10000,
                                       Provisioning provisioning = Provisioning::single_factory,
                                       SynthesisSpec synthesis = {});
    static StrategyConfig qec_cultivation(const CultivationSpec& cult, const CodeParams& code,
                                          uint64_t budget = 10000,
                                          SynthesisSpec synthesis = {});
};

struct FidelityReport {
    double fidelity = 1.0;
    double log_error = 0.0;  // -log(fidelity), equals the breakdown sum
    std::map<std::string, double> breakdown;  // gate, rz_t, measurement, memory
    double t_circ = 0.0;
    uint64_t qubits_used = 0;
    double stall_cycles = 0.0;
    uint64_t factories = 0;
    bool over_budget = false;
};

// Analytic product-model fidelity of executing `circuit` once under the
// strategy. Deterministic.
FidelityReport estimate(const Circuit& circuit, const StrategyConfig& strategy);

struct StrategyComparison {
    uint32_t n = 0;
    double pqec_fidelity = 0.0;
    std::map<std::string, double> conventional_fidelity;  // by factory name
    std::map<std::string, double> pqec_over_conventional;
};

// pQEC versus distillation-based execution for each circuit, across the
// builtin factory configurations. Over-budget combinations are evaluated and
// flagged through the per-strategy reports rather than rejected.
std::vector<StrategyComparison> compare_strategies(
    const std::vector<Circuit>& circuits, uint64_t budget, const CodeParams& code,
    Provisioning provisioning = Provisioning::single_factory,
    const SynthesisSpec& synthesis = {});

struct WinMatrix {
    std::vector<uint32_t> program_sizes;
    std::vector<uint64_t> device_sizes;
    // win_fraction[i][j]: fraction of benchmark circuits with program size
    // program_sizes[i] on device_sizes[j] where pQEC beats conventional;
    // -1 marks programs that do not fit the device at this code distance.
    std::vector<std::vector<double>> win_fraction;
};

// Benchmark set per cell: {linear, fche, blocked} x depths 1..depths.
// Conventional picks its best builtin factory per cell under greedy fill.
WinMatrix win_matrix(const std::vector<uint32_t>& program_sizes,
                     const std::vector<uint64_t>& device_sizes,
                     const CodeParams& code, uint32_t depths = 3,
                     const SynthesisSpec& synthesis = {});

struct CrossoverPoint {
    uint32_t n = 0;
    double nisq_slope = 0.0;  // d(-log F)/dp per layer
    double pqec_slope = 0.0;
    std::vector<double> nisq_log_fidelity;  // per depth in the scanned range
    std::vector<double> pqec_log_fidelity;
};

struct CrossoverReport {
    AnsatzKind ansatz;
    std::vector<CrossoverPoint> points;
    double crossover_n = 0.0;  // continuous root where the slopes equalize
};

// Log-fidelity decay per depth for NISQ versus pQEC, and the qubit count at
// which the pQEC slope drops below the NISQ slope.
CrossoverReport crossover_depth_scan(AnsatzKind ansatz,
                                     const std::vector<uint32_t>& n_values,
                                     uint32_t depth_min, uint32_t depth_max,
                                     const CodeParams& code);

struct CultivationComparisonPoint {
    uint32_t n = 0;
    double pqec_fidelity = 0.0;
    double cultivation_fidelity = 0.0;
};

std::vector<CultivationComparisonPoint> compare_cultivation(
    const std::vector<uint32_t>& n_values, uint64_t budget, const CodeParams& code,
    const CultivationSpec& cultivation, const SynthesisSpec& synthesis);

}  // namespace eftvqa

#endif
