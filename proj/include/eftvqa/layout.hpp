#ifndef EFTVQA_LAYOUT_HPP
#define EFTVQA_LAYOUT_HPP

#include <cstdint>
#include <string>

#include "eftvqa/noise_models.hpp"

namespace eftvqa {

enum class LayoutKind : uint8_t { proposed, compact, intermediate, fast, grid };

const char* layout_name(LayoutKind kind);
LayoutKind layout_kind_from_name(const std::string& name);

// The proposed layout is parameterized by k: 4k+4 data patches out of
// 6(k+2) total, two data rows around a shared routing row. Comparison
// layouts are parameterized cost models sized by the program width.
struct LayoutSpec {
    LayoutKind kind = LayoutKind::proposed;
    uint32_t k = 1;             // proposed only
    uint32_t data_qubits = 8;   // comparison layouts: program width
    CodeParams code;

    static LayoutSpec proposed(uint32_t k, const CodeParams& code);
    // Smallest k whose data row fits `width` qubits.
    static LayoutSpec proposed_for_width(uint32_t width, const CodeParams& code);
    static LayoutSpec comparison(LayoutKind kind, uint32_t data_qubits,
                                 const CodeParams& code);

    uint32_t data_patches() const;
    uint64_t total_patches() const;
};

struct LayoutMetrics {
    uint64_t data_patches = 0;
    uint64_t total_patches = 0;
    double packing_efficiency = 0.0;
    uint64_t physical_qubits = 0;
    uint32_t max_parallel_magic = 0;
};

LayoutMetrics layout_metrics(const LayoutSpec& spec);

struct ProgramFit {
    uint32_t k = 0;
    uint32_t data_qubits = 0;
    uint64_t physical_qubits = 0;
};

// Largest proposed-layout k fitting the physical-qubit budget.
ProgramFit max_program(uint64_t budget, const CodeParams& code);

// Cost-model constants for the comparison layouts. op_footprint_scale
// multiplies every operation's engaged-patch count (longer routes, larger
// provisioned tiles); intra_cluster_cycles replaces the 4-cycle same-row
// multi-target cluster, which only the proposed layout executes at full
// speed. Values are tuned against the published volume-ratio table.
struct BaselineCostModel {
    double patches_per_data;
    double op_footprint_scale;
    double intra_cluster_cycles;
};

BaselineCostModel baseline_cost_model(LayoutKind kind);

}  // namespace eftvqa

#endif
