#ifndef EFTVQA_ANSATZ_HPP
#define EFTVQA_ANSATZ_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "eftvqa/circuit.hpp"

namespace eftvqa {

// Mean repeat-until-success consumption attempts per rotation
// (geometric with success probability 1/2).
inline constexpr double kExpectedRusAttempts = 2.0;

struct GateCounts {
    uint64_t cnot_count = 0;
    uint64_t rz_count = 0;             // circuit-level, before RUS repetition
    double rz_runtime_expected = 0.0;  // rz_count * E[attempts]
};

GateCounts gate_counts(const AnsatzSpec& spec);

// Rate of CNOT growth per runtime-rotation growth. Both gate families grow
// linearly in depth, so the finite and asymptotic ratios coincide; the flag
// selects between evaluating the closed form and dividing actual counts.
double cnot_rz_ratio(const AnsatzSpec& spec, bool asymptotic = true);

// Builds the parameterized circuit. params must have length spec.rz_count(),
// in radians, ordered (layer, sublayer, qubit).
Circuit build_ansatz(const AnsatzSpec& spec, std::span<const double> params);

// Convenience: all-zero parameters.
Circuit build_ansatz_zero(const AnsatzSpec& spec);

// The per-block single-control clusters of the blocked ansatz, exposed for
// the scheduler. Each entry is (control, targets) over block-local members.
struct CnotCluster {
    uint32_t control;
    std::vector<uint32_t> targets;
};
std::vector<CnotCluster> blocked_intra_clusters(uint32_t block_size,
                                                uint32_t block_offset);
std::vector<CnotCluster> blocked_linking_clusters(uint32_t n);

}  // namespace eftvqa

#endif
