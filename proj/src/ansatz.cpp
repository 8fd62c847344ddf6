#include "eftvqa/ansatz.hpp"

#include "eftvqa/errors.hpp"

namespace eftvqa {

GateCounts gate_counts(const AnsatzSpec& spec) {
    spec.validate();
    const uint64_t n = spec.n;
    const uint64_t p = spec.p;
    GateCounts counts;
    switch (spec.kind) {
        case AnsatzKind::linear:
            counts.cnot_count = n * p;
            break;
        case AnsatzKind::fche:
            counts.cnot_count = n * (n - 1) * p;
            break;
        case AnsatzKind::blocked_all_to_all:
            // n is even; n*n/2 - 5n + 20 realized as two all-to-all blocks
            // plus 8 linking CNOTs per layer.
            counts.cnot_count = (n * n / 2 - 5 * n + 20) * p;
            break;
    }
    counts.rz_count = 2 * n * p;
    counts.rz_runtime_expected = static_cast<double>(counts.rz_count) * kExpectedRusAttempts;
    return counts;
}

double cnot_rz_ratio(const AnsatzSpec& spec, bool asymptotic) {
    spec.validate();
    if (asymptotic) {
        const double n = spec.n;
        switch (spec.kind) {
            case AnsatzKind::linear: return 0.25;
            case AnsatzKind::fche: return (n - 1.0) / 4.0;
            case AnsatzKind::blocked_all_to_all: return n / 8.0 - 1.25 + 5.0 / n;
        }
    }
    const GateCounts counts = gate_counts(spec);
    return static_cast<double>(counts.cnot_count) / counts.rz_runtime_expected;
}

std::vector<CnotCluster> blocked_intra_clusters(uint32_t block_size, uint32_t block_offset) {
    std::vector<CnotCluster> clusters;
    if (block_size < 4) return clusters;
    // block_size - 3 clusters of block_size - 2 targets each: control i skips
    // itself and member i+1, so every member still participates somewhere.
    for (uint32_t i = 0; i + 3 < block_size; ++i) {
        CnotCluster c;
        c.control = block_offset + i;
        for (uint32_t j = 0; j < block_size; ++j) {
            if (j == i || j == i + 1) continue;
            c.targets.push_back(block_offset + j);
        }
        clusters.push_back(std::move(c));
    }
    return clusters;
}

std::vector<CnotCluster> blocked_linking_clusters(uint32_t n) {
    const uint32_t b = n / 2;
    std::vector<CnotCluster> clusters;
    // 8 linking CNOTs per block boundary as 4 two-target clusters, control in
    // the first block, targets in the second.
    for (uint32_t m = 0; m < 4; ++m) {
        CnotCluster c;
        c.control = m % b;
        c.targets = {b + (2 * m) % b, b + (2 * m + 1) % b};
        clusters.push_back(std::move(c));
    }
    return clusters;
}

namespace {

void append_cluster(Circuit& circ, const CnotCluster& cluster) {
    for (uint32_t t : cluster.targets) circ.append(Gate::cx(cluster.control, t));
}

}  // namespace

Circuit build_ansatz(const AnsatzSpec& spec, std::span<const double> params) {
    spec.validate();
    if (params.size() != spec.rz_count())
        throw config_error("parameter vector length must equal the ansatz Rz count");

    const uint32_t n = spec.n;
    Circuit circ;
    circ.width = n;
    circ.provenance = spec;

    size_t next_param = 0;
    auto rz_sublayer = [&] {
        for (uint32_t q = 0; q < n; ++q)
            circ.append(Gate::rz(q, params[next_param++]));
    };

    for (uint32_t layer = 0; layer < spec.p; ++layer) {
        rz_sublayer();
        switch (spec.kind) {
            case AnsatzKind::linear:
                for (uint32_t q = 0; q < n; ++q)
                    circ.append(Gate::cx(q, (q + 1) % n));
                break;
            case AnsatzKind::fche:
                for (uint32_t c = 0; c < n; ++c)
                    for (uint32_t t = 0; t < n; ++t)
                        if (t != c) circ.append(Gate::cx(c, t));
                break;
            case AnsatzKind::blocked_all_to_all: {
                const uint32_t b = n / 2;
                for (const auto& cl : blocked_intra_clusters(b, 0)) append_cluster(circ, cl);
                for (const auto& cl : blocked_intra_clusters(b, b)) append_cluster(circ, cl);
                for (const auto& cl : blocked_linking_clusters(n)) append_cluster(circ, cl);
                break;
            }
        }
        rz_sublayer();
    }
    return circ;
}

Circuit build_ansatz_zero(const AnsatzSpec& spec) {
    spec.validate();
    std::vector<double> zeros(spec.rz_count(), 0.0);
    return build_ansatz(spec, zeros);
}

}  // namespace eftvqa
