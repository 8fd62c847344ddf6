#include "eftvqa/layout.hpp"

#include <cmath>

#include "eftvqa/errors.hpp"

namespace eftvqa {

const char* layout_name(LayoutKind kind) {
    switch (kind) {
        case LayoutKind::proposed: return "proposed";
        case LayoutKind::compact: return "compact";
        case LayoutKind::intermediate: return "intermediate";
        case LayoutKind::fast: return "fast";
        case LayoutKind::grid: return "grid";
    }
    return "?";
}

LayoutKind layout_kind_from_name(const std::string& name) {
    if (name == "proposed") return LayoutKind::proposed;
    if (name == "compact") return LayoutKind::compact;
    if (name == "intermediate") return LayoutKind::intermediate;
    if (name == "fast") return LayoutKind::fast;
    if (name == "grid") return LayoutKind::grid;
    throw config_error("unknown layout '" + name + "'");
}

LayoutSpec LayoutSpec::proposed(uint32_t k, const CodeParams& code) {
    code.validate();
    LayoutSpec spec;
    spec.kind = LayoutKind::proposed;
    spec.k = k;
    spec.data_qubits = 4 * k + 4;
    spec.code = code;
    return spec;
}

LayoutSpec LayoutSpec::proposed_for_width(uint32_t width, const CodeParams& code) {
    uint32_t k = width <= 4 ? 0 : (width - 4 + 3) / 4;
    return proposed(k, code);
}

LayoutSpec LayoutSpec::comparison(LayoutKind kind, uint32_t data_qubits,
                                  const CodeParams& code) {
    if (kind == LayoutKind::proposed)
        throw config_error("use LayoutSpec::proposed for the proposed layout");
    code.validate();
    LayoutSpec spec;
    spec.kind = kind;
    spec.data_qubits = data_qubits;
    spec.code = code;
    return spec;
}

uint32_t LayoutSpec::data_patches() const {
    return kind == LayoutKind::proposed ? 4 * k + 4 : data_qubits;
}

uint64_t LayoutSpec::total_patches() const {
    if (kind == LayoutKind::proposed) return 6ull * (k + 2);
    const double per = baseline_cost_model(kind).patches_per_data;
    return static_cast<uint64_t>(std::ceil(per * data_patches()));
}

LayoutMetrics layout_metrics(const LayoutSpec& spec) {
    LayoutMetrics m;
    m.data_patches = spec.data_patches();
    m.total_patches = spec.total_patches();
    m.packing_efficiency = static_cast<double>(m.data_patches) /
                           static_cast<double>(m.total_patches);
    m.physical_qubits = m.total_patches * patch_physical_qubits(spec.code.d);
    m.max_parallel_magic = spec.kind == LayoutKind::proposed ? 2 * (spec.k / 3) : 2;
    return m;
}

ProgramFit max_program(uint64_t budget, const CodeParams& code) {
    code.validate();
    const uint64_t per_patch = patch_physical_qubits(code.d);
    const uint64_t groups = budget / (6 * per_patch);  // 6(k+2) patches total
    if (groups < 2)
        throw no_fit_error("budget below the smallest proposed layout (k=0)");
    ProgramFit fit;
    fit.k = static_cast<uint32_t>(groups - 2);
    fit.data_qubits = 4 * fit.k + 4;
    fit.physical_qubits = 6 * (uint64_t(fit.k) + 2) * per_patch;
    return fit;
}

BaselineCostModel baseline_cost_model(LayoutKind kind) {
    switch (kind) {
        case LayoutKind::proposed: return {1.5, 1.0, 4.0};  // 6(k+2)/(4k+4) -> 1.5
        case LayoutKind::compact: return {1.5, 1.03, 7.6};
        case LayoutKind::intermediate: return {2.0, 1.17, 7.2};
        case LayoutKind::fast: return {2.25, 2.65, 6.8};
        case LayoutKind::grid: return {4.0, 5.19, 6.8};
    }
    return {1.5, 1.0, 4.0};
}

}  // namespace eftvqa
