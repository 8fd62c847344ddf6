#include "eftvqa/noise_models.hpp"

#include <cmath>

#include "eftvqa/errors.hpp"

namespace eftvqa {

namespace {
constexpr double kLogicalRatePrefactor = 0.1;
constexpr double kThreshold = 0.01;
}  // namespace

void CodeParams::validate() const {
    if (d < 3 || d % 2 == 0) throw config_error("code distance must be odd and >= 3");
    if (p_phys <= 0.0) throw config_error("physical error rate must be positive");
    if (p_phys >= kThreshold)
        throw config_error("physical error rate is at or above the code threshold");
}

uint64_t patch_physical_qubits(int d) {
    if (d < 3) throw config_error("code distance must be >= 3");
    const uint64_t dd = static_cast<uint64_t>(d);
    return 2 * dd * dd - 1;
}

double logical_error_rate(const CodeParams& code) {
    code.validate();
    const double exponent = (code.d + 1) / 2;  // d odd, exact integer
    return kLogicalRatePrefactor * std::pow(code.p_phys / kThreshold, exponent);
}

double injection_error(double p_phys) {
    if (p_phys < 0.0 || p_phys >= 1.0)
        throw config_error("physical error rate out of range");
    return 23.0 * p_phys / 30.0;
}

NisqNoiseModel NisqNoiseModel::from_physical(double p_phys) {
    if (p_phys < 0.0 || 10.0 * p_phys > 1.0)
        throw config_error("NISQ rates out of [0,1] for this physical error rate");
    NisqNoiseModel m;
    m.p_cnot = p_phys;
    m.p_1q = p_phys / 10.0;
    m.p_rz = 0.0;
    m.p_meas = 10.0 * p_phys;
    return m;
}

PqecNoiseModel PqecNoiseModel::from_code(const CodeParams& code) {
    PqecNoiseModel m;
    m.code = code;
    m.p_logical = logical_error_rate(code);
    m.p_rz_inject = injection_error(code.p_phys);
    return m;
}

void FactorySpec::validate() const {
    if (qubit_footprint == 0) throw config_error("factory footprint must be positive");
    if (cycles_per_t == 0) throw config_error("factory cycle count must be positive");
    if (t_error < 0.0 || t_error > 1.0) throw config_error("factory T error out of range");
}

std::vector<FactorySpec> builtin_factories() {
    std::vector<FactorySpec> f;
    f.push_back({"15to1_7_3_3", 7, 3, 3, 810, 22, 5.4e-4, false});
    // geometric interpolation of the outer configurations:
    //   qubits  sqrt(810*4600)  ~ 1930
    //   cycles  sqrt(22*42)     ~ 30
    //   t_error sqrt(5.4e-4*4.5e-8) ~ 4.93e-6
    f.push_back({"15to1_11_5_5", 11, 5, 5, 1930, 30, 4.93e-6, true});
    f.push_back({"15to1_17_7_7", 17, 7, 7, 4600, 42, 4.5e-8, false});
    return f;
}

FactorySpec factory_by_name(const std::string& name) {
    for (auto& f : builtin_factories())
        if (f.name == name) return f;
    throw config_error("unknown factory '" + name + "'");
}

void SynthesisSpec::validate() const {
    if (epsilon <= 0.0 || epsilon >= 1.0)
        throw config_error("synthesis precision must be in (0, 1)");
    if (c1 <= 0.0) throw config_error("synthesis slope must be positive");
    if (gate_factor < 1.0) throw config_error("gate factor must be >= 1");
}

uint64_t t_count_per_rz(const SynthesisSpec& spec) {
    spec.validate();
    const double raw = spec.c1 * std::log2(1.0 / spec.epsilon) + spec.c0;
    return static_cast<uint64_t>(std::ceil(raw));
}

SynthesizedCounts synthesize_counts(uint64_t non_rz_gates, uint64_t rz_gates,
                                    const SynthesisSpec& spec) {
    const uint64_t t_per_rz = t_count_per_rz(spec);
    SynthesizedCounts out;
    out.t_gates = rz_gates * t_per_rz;
    const double per_rz_total = double(t_per_rz) * spec.gate_factor;
    out.clifford_gates = non_rz_gates +
        static_cast<uint64_t>(std::llround(double(rz_gates) * (per_rz_total - double(t_per_rz))));
    const double orig = double(non_rz_gates + rz_gates);
    out.gate_ratio = orig > 0.0
        ? (double(non_rz_gates) + double(rz_gates) * per_rz_total) / orig
        : 0.0;
    out.depth_ratio = spec.depth_factor;
    return out;
}

SynthesisSpec calibrate_gate_factor(uint64_t non_rz_gates, uint64_t rz_gates,
                                    double target_gate_ratio, SynthesisSpec spec) {
    if (rz_gates == 0) throw config_error("cannot calibrate with zero rotations");
    const uint64_t t_per_rz = t_count_per_rz(spec);
    const double orig = double(non_rz_gates + rz_gates);
    const double per_rz_total = (target_gate_ratio * orig - double(non_rz_gates)) / double(rz_gates);
    if (per_rz_total < double(t_per_rz))
        throw config_error("gate blowup target below the bare T count");
    spec.gate_factor = per_rz_total / double(t_per_rz);
    return spec;
}

void CultivationSpec::validate() const {
    if (footprint_patches == 0 || footprint_patches > 2)
        throw config_error("cultivation footprint must be 1 or 2 patches");
    if (expected_cycles_per_t == 0)
        throw config_error("cultivation cycle count must be positive");
    if (t_error < 0.0 || t_error > 1.0)
        throw config_error("cultivation T error out of range");
}

}  // namespace eftvqa
