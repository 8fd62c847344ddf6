#ifndef EFTVQA_SCHEDULE_HPP
#define EFTVQA_SCHEDULE_HPP

#include <cstdint>
#include <vector>

#include "eftvqa/ansatz.hpp"
#include "eftvqa/circuit.hpp"
#include "eftvqa/layout.hpp"

namespace eftvqa {

enum class MacroKind : uint8_t {
    cnot_cluster_fast,   // same-row single-control multi-target, 4 cycles
    cnot_cluster_slow,   // boundary-crossing, 8 cycles
    rz_consume,
    patch_rotate,
    measure_patch,
};

enum class ScheduleMode : uint8_t { deterministic, stochastic };

struct MacroOp {
    MacroKind kind = MacroKind::rz_consume;
    double start = 0.0;
    double cycles = 0.0;
    std::vector<uint32_t> data_patches;  // exclusively held data patches
    double engaged_patches = 0.0;        // including ancilla share, for volume
    uint32_t layer = 0;
    int64_t gate_index = -1;  // originating gate (first CX of a cluster)
};

struct Schedule {
    LayoutSpec layout;
    uint32_t width = 0;
    ScheduleMode mode = ScheduleMode::deterministic;
    std::vector<MacroOp> timeline;

    double t_circ = 0.0;
    double v_patch_cycles = 0.0;   // sum of cycles * engaged patches
    uint64_t total_patches = 0;
    uint64_t physical_qubits = 0;  // total_patches * (2d^2-1)
    double v_physical = 0.0;       // v_patch_cycles * (2d^2-1)

    std::vector<double> idle_cycles;  // per data qubit, t_circ - busy
    double total_idle_patch_cycles() const;

    uint64_t cnot_count = 0;
    uint64_t rz_count = 0;
    double rz_attempts = 0.0;  // E[g)*rz_count deterministic, sampled otherwise
    double stall_cycles = 0.0; // rotation windows beyond the first, stochastic
};

// Cycle-accurate placement of a circuit on a layout. Circuits produced by
// build_ansatz carry their AnsatzSpec and are scheduled through the
// calibrated per-family recipe; other circuits go through the generic greedy
// list scheduler (same-control CX runs fused, rotation concurrency capped by
// the layout's parallel-magic bound).
Schedule schedule(const Circuit& circuit, const LayoutSpec& layout,
                  ScheduleMode mode = ScheduleMode::deterministic,
                  uint64_t seed = 0);

// Expands a schedule back into a plain gate list (clusters unfused, in
// timeline order). Used to check that scheduling preserves semantics.
Circuit scheduled_circuit_gates(const Schedule& schedule, const Circuit& original);

struct VolumeRatioPoint {
    uint32_t n = 0;
    double ratio = 0.0;  // V(layout) / V(proposed)
};

struct VolumeRatioReport {
    AnsatzKind ansatz;
    LayoutKind layout;
    double mean_ratio = 0.0;
    std::vector<VolumeRatioPoint> per_n;
};

// Mean spacetime-volume ratio of a comparison layout over the proposed one,
// swept across ansatz instances of n_begin..n_end (step n_step) qubits.
VolumeRatioReport layout_volume_ratio(AnsatzKind ansatz, LayoutKind layout,
                                      const CodeParams& code, uint32_t n_begin = 8,
                                      uint32_t n_end = 164, uint32_t n_step = 4);

}  // namespace eftvqa

#endif
