#ifndef EFTVQA_NOISE_MODELS_HPP
#define EFTVQA_NOISE_MODELS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace eftvqa {

struct CodeParams {
    int d = 11;              // code distance, odd and >= 3
    double p_phys = 1e-3;    // physical error rate, below threshold

    void validate() const;
};

// Physical qubits of one surface-code patch: d^2 data + d^2-1 ancilla.
uint64_t patch_physical_qubits(int d);

// Error-corrected operation classes sharing one logical rate.
enum class LogicalOpClass : uint8_t { Memory, CX, H, S, Measure };

// Sub-threshold scaling A*(p/p_th)^((d+1)/2) with A = 0.1, p_th = 0.01,
// anchored so (d=11, p=1e-3) gives 1e-7 per operation class.
double logical_error_rate(const CodeParams& code);

// Rz magic-state injection error: 23*p_phys/30.
double injection_error(double p_phys);

struct NisqNoiseModel {
    double p_cnot = 0.0;
    double p_1q = 0.0;
    double p_rz = 0.0;   // rotations are virtual, exactly zero
    double p_meas = 0.0;

    static NisqNoiseModel from_physical(double p_phys);
};

struct PqecNoiseModel {
    CodeParams code;
    double p_logical = 0.0;    // shared across {Memory, CX, H, S, Measure}
    double p_rz_inject = 0.0;  // per consumption attempt

    static PqecNoiseModel from_code(const CodeParams& code);
    double rate(LogicalOpClass cls) const { (void)cls; return p_logical; }
};

struct FactorySpec {
    std::string name;
    int d_x = 0, d_z = 0, d_m = 0;
    uint64_t qubit_footprint = 0;
    uint64_t cycles_per_t = 0;
    double t_error = 0.0;
    bool assumed = false;  // parameters interpolated rather than published

    void validate() const;
};

// The three 15-to-1 configurations used throughout: (7,3,3), (11,5,5),
// (17,7,7). The middle configuration's footprint, cycle count, and output
// error are geometric interpolations of the outer two and flagged assumed.
std::vector<FactorySpec> builtin_factories();
FactorySpec factory_by_name(const std::string& name);

struct SynthesisSpec {
    double epsilon = 1e-6;    // target rotation precision
    double c1 = 3.0;          // t_per_rz ~ c1*log2(1/eps) + c0 (model, not
    double c0 = 0.0;          //   a published value)
    double depth_factor = 7.0;
    double gate_factor = 3.3417;  // Cliffords interleaved per T, calibrated

    void validate() const;
};

uint64_t t_count_per_rz(const SynthesisSpec& spec);

struct SynthesizedCounts {
    uint64_t t_gates = 0;
    uint64_t clifford_gates = 0;  // includes the original non-Rz gates
    double gate_ratio = 0.0;      // synthesized total / original total
    double depth_ratio = 0.0;
};

// Gate blowup of replacing each Rz by its Clifford+T sequence.
SynthesizedCounts synthesize_counts(uint64_t non_rz_gates, uint64_t rz_gates,
                                    const SynthesisSpec& spec);

// Solves gate_factor so a given circuit profile reaches the target gate
// blowup (e.g. 20x for a 20-qubit fully-connected layer).
SynthesisSpec calibrate_gate_factor(uint64_t non_rz_gates, uint64_t rz_gates,
                                    double target_gate_ratio,
                                    SynthesisSpec spec = {});

struct CultivationSpec {
    uint64_t footprint_patches = 1;  // about one surface-code patch
    // Discard-and-retry makes the per-T latency large; no published default
    // exists, so this is an assumption exposed as a CLI parameter.
    uint64_t expected_cycles_per_t = 200;
    double t_error = 1e-8;  // assumed, overridable
    bool assumed = true;

    void validate() const;
};

}  // namespace eftvqa

#endif
