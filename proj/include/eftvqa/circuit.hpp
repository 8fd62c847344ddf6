#ifndef EFTVQA_CIRCUIT_HPP
#define EFTVQA_CIRCUIT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace eftvqa {

enum class GateKind : uint8_t { H, S, Sdg, X, Y, Z, CX, Rz, MeasureZ };

const char* gate_name(GateKind kind);
GateKind gate_kind_from_name(const std::string& name);

struct Gate {
    GateKind kind = GateKind::H;
    uint32_t q0 = 0;       // target for 1q gates, control for CX
    uint32_t q1 = 0;       // CX target
    double angle = 0.0;    // Rz only, radians

    static Gate h(uint32_t q) { return {GateKind::H, q, 0, 0.0}; }
    static Gate s(uint32_t q) { return {GateKind::S, q, 0, 0.0}; }
    static Gate sdg(uint32_t q) { return {GateKind::Sdg, q, 0, 0.0}; }
    static Gate x(uint32_t q) { return {GateKind::X, q, 0, 0.0}; }
    static Gate y(uint32_t q) { return {GateKind::Y, q, 0, 0.0}; }
    static Gate z(uint32_t q) { return {GateKind::Z, q, 0, 0.0}; }
    static Gate cx(uint32_t control, uint32_t target) { return {GateKind::CX, control, target, 0.0}; }
    static Gate rz(uint32_t q, double angle) { return {GateKind::Rz, q, 0, angle}; }
    static Gate measure_z(uint32_t q) { return {GateKind::MeasureZ, q, 0, 0.0}; }

    bool is_two_qubit() const { return kind == GateKind::CX; }
};

// If theta is (numerically) a multiple of pi/2, returns the equivalent
// Clifford substitution: 0 -> no gate, 1 -> S, 2 -> Z, 3 -> Sdg, expressed as
// the multiple of pi/2 mod 4. Returns nullopt for non-Clifford angles.
std::optional<int> rz_half_turn_quadrant(double theta, double tol = 1e-9);

enum class AnsatzKind : uint8_t { linear, fche, blocked_all_to_all };

const char* ansatz_name(AnsatzKind kind);
AnsatzKind ansatz_kind_from_name(const std::string& name);

struct AnsatzSpec {
    AnsatzKind kind = AnsatzKind::linear;
    uint32_t n = 2;   // qubit count
    uint32_t p = 1;   // layer repetitions

    uint64_t rz_count() const { return 2ull * n * p; }
    void validate() const;
};

struct Circuit {
    uint32_t width = 0;
    std::vector<Gate> gates;

    // Set by build_ansatz; lets the scheduler pick the calibrated per-ansatz
    // cost recipe instead of the generic greedy path.
    std::optional<AnsatzSpec> provenance;

    void append(Gate g) { gates.push_back(g); }
    void validate() const;

    uint64_t count(GateKind kind) const;
};

}  // namespace eftvqa

#endif
