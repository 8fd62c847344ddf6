#include "eftvqa/circuit.hpp"

#include <cmath>

#include "eftvqa/errors.hpp"

namespace eftvqa {

const char* gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "h";
        case GateKind::S: return "s";
        case GateKind::Sdg: return "sdg";
        case GateKind::X: return "x";
        case GateKind::Y: return "y";
        case GateKind::Z: return "z";
        case GateKind::CX: return "cx";
        case GateKind::Rz: return "rz";
        case GateKind::MeasureZ: return "mz";
    }
    return "?";
}

GateKind gate_kind_from_name(const std::string& name) {
    if (name == "h") return GateKind::H;
    if (name == "s") return GateKind::S;
    if (name == "sdg") return GateKind::Sdg;
    if (name == "x") return GateKind::X;
    if (name == "y") return GateKind::Y;
    if (name == "z") return GateKind::Z;
    if (name == "cx") return GateKind::CX;
    if (name == "rz") return GateKind::Rz;
    if (name == "mz") return GateKind::MeasureZ;
    throw config_error("unknown gate op '" + name + "'");
}

std::optional<int> rz_half_turn_quadrant(double theta, double tol) {
    const double half_pi = M_PI / 2.0;
    double q = theta / half_pi;
    double rounded = std::round(q);
    if (std::abs(q - rounded) > tol) return std::nullopt;
    long long m = static_cast<long long>(rounded) % 4;
    if (m < 0) m += 4;
    return static_cast<int>(m);
}

const char* ansatz_name(AnsatzKind kind) {
    switch (kind) {
        case AnsatzKind::linear: return "linear";
        case AnsatzKind::fche: return "fche";
        case AnsatzKind::blocked_all_to_all: return "blocked_all_to_all";
    }
    return "?";
}

AnsatzKind ansatz_kind_from_name(const std::string& name) {
    if (name == "linear") return AnsatzKind::linear;
    if (name == "fche" || name == "fully_connected") return AnsatzKind::fche;
    if (name == "blocked_all_to_all" || name == "blocked") return AnsatzKind::blocked_all_to_all;
    throw config_error("unsupported ansatz kind '" + name + "'");
}

void AnsatzSpec::validate() const {
    if (n < 2) throw config_error("ansatz needs at least 2 qubits");
    if (p < 1) throw config_error("ansatz depth p must be >= 1");
    if (kind == AnsatzKind::blocked_all_to_all && n % 2 != 0)
        throw config_error("blocked_all_to_all requires an even qubit count");
}

void Circuit::validate() const {
    for (const auto& g : gates) {
        if (g.q0 >= width || (g.is_two_qubit() && g.q1 >= width))
            throw config_error("gate qubit index out of range");
        if (g.is_two_qubit() && g.q0 == g.q1)
            throw config_error("CX control equals target");
    }
}

uint64_t Circuit::count(GateKind kind) const {
    uint64_t c = 0;
    for (const auto& g : gates)
        if (g.kind == kind) ++c;
    return c;
}

}  // namespace eftvqa
