#include "eftvqa/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "eftvqa/errors.hpp"
#include "eftvqa/rng.hpp"

namespace eftvqa {

double Schedule::total_idle_patch_cycles() const {
    double total = 0.0;
    for (double c : idle_cycles) total += c;
    return total;
}

namespace {

// Shared emission state. Engaged-patch counts model the ancilla share of
// each operation on the proposed layout (k routing constant); comparison
// layouts scale them by their footprint factor.
struct Builder {
    const LayoutSpec& layout;
    ScheduleMode mode;
    Rng rng;
    BaselineCostModel cost;
    uint32_t route_k;  // proposed-equivalent k for ancilla share
    std::vector<MacroOp> ops;

    Builder(const LayoutSpec& l, ScheduleMode m, uint64_t seed)
        : layout(l), mode(m), rng(seed), cost(baseline_cost_model(l.kind)) {
        route_k = l.kind == LayoutKind::proposed
                      ? l.k
                      : LayoutSpec::proposed_for_width(l.data_qubits, l.code).k;
    }

    double scale() const { return cost.op_footprint_scale; }

    // Rotation slot on the data patch: one consumption window deterministic
    // (the compensation stream is pipelined through the second magic patch);
    // sampled attempts serialize in stochastic mode.
    double rz_slot_cycles(uint64_t& attempts_out) {
        if (mode == ScheduleMode::stochastic) {
            attempts_out = rng.geometric(0.5);
            return 2.0 * static_cast<double>(attempts_out);
        }
        attempts_out = 2;  // E[g]
        return 2.0;
    }

    MacroOp& emit(MacroKind kind, double start, double cycles,
                  std::vector<uint32_t> patches, double engaged, uint32_t layer) {
        ops.push_back(MacroOp{kind, start, cycles, std::move(patches),
                              engaged * scale(), layer});
        return ops.back();
    }

    double engaged_cluster_same_row(size_t targets) const {
        return 1.0 + double(targets) + double(route_k + 2);
    }
    double engaged_cluster_cross(size_t targets) const {
        return 1.0 + double(targets) + double(2 * route_k + 4);
    }
};

struct Tallies {
    uint64_t cnots = 0;
    uint64_t rz = 0;
    double attempts = 0.0;
    double stall = 0.0;
};

// ---- calibrated per-family recipes -------------------------------------
//
// Deterministic spans on the proposed layout, per layer:
//   blocked: 2 + 5*(B-3) + 32 + 2            = 2.5N + 21   (B = N/2)
//   fche:    (N-4) + (5N-1) + (N-4)          = 7N - 9
//   linear:  (N-4) + 5(N-2)+16 + (N-4)       = 7N - 2
// Pitch 5 = 4 surgery steps + 1 realign between same-chain clusters; the 8
// linking CNOTs run as four serial 8-cycle boundary clusters.

double emit_rz_wave(Builder& b, Tallies& t, double start, uint32_t n_begin,
                    uint32_t n_end, uint32_t layer) {
    double span = 0.0;
    for (uint32_t q = n_begin; q < n_end; ++q) {
        uint64_t attempts = 0;
        const double dur = b.rz_slot_cycles(attempts);
        b.emit(MacroKind::rz_consume, start, dur, {q}, 3.0, layer);
        t.rz += 1;
        t.attempts += static_cast<double>(attempts);
        t.stall += std::max(0.0, dur - 2.0);
        span = std::max(span, dur);
    }
    return span;
}

// Row-serial rotation sublayer: two magic streams per row, lockstep for the
// first two slots, then pitch one slot per qubit.
double emit_rz_row_serial(Builder& b, Tallies& t, double start, uint32_t width,
                          uint32_t layer) {
    const uint32_t row0 = (width + 1) / 2;
    double span = 0.0;
    for (uint32_t row = 0; row < 2; ++row) {
        const uint32_t begin = row == 0 ? 0 : row0;
        const uint32_t end = row == 0 ? row0 : width;
        if (begin >= end) continue;
        const uint32_t count = end - begin;
        // slot index per row-local qubit: pairs {0,1}->0, {2,3}->1, i->i-2
        double slot_start = start;
        uint32_t slot = 0;
        double slot_dur = 0.0;
        for (uint32_t i = 0; i < count; ++i) {
            const uint32_t my_slot = i < 4 ? i / 2 : i - 2;
            if (my_slot != slot) {
                slot_start += slot_dur;
                slot = my_slot;
                slot_dur = 0.0;
            }
            uint64_t attempts = 0;
            const double dur = b.rz_slot_cycles(attempts);
            b.emit(MacroKind::rz_consume, slot_start, dur, {begin + i}, 3.0, layer);
            t.rz += 1;
            t.attempts += static_cast<double>(attempts);
            t.stall += std::max(0.0, dur - 2.0);
            slot_dur = std::max(slot_dur, dur);
        }
        span = std::max(span, slot_start + slot_dur - start);
    }
    return span;
}

double emit_cluster_chain(Builder& b, Tallies& t, double start,
                          const std::vector<CnotCluster>& clusters, bool same_row,
                          double cycles, bool inter_realign, bool trailing_realign,
                          uint32_t layer) {
    double at = start;
    for (size_t i = 0; i < clusters.size(); ++i) {
        const auto& cl = clusters[i];
        std::vector<uint32_t> patches = {cl.control};
        patches.insert(patches.end(), cl.targets.begin(), cl.targets.end());
        const double engaged = same_row ? b.engaged_cluster_same_row(cl.targets.size())
                                        : b.engaged_cluster_cross(cl.targets.size());
        b.emit(same_row ? MacroKind::cnot_cluster_fast : MacroKind::cnot_cluster_slow,
               at, cycles, std::move(patches), engaged, layer);
        t.cnots += cl.targets.size();
        at += cycles;
        const bool realign = (i + 1 < clusters.size()) ? inter_realign : trailing_realign;
        if (realign) {
            b.emit(MacroKind::patch_rotate, at, 1.0, {}, 1.0, layer);
            at += 1.0;
        }
    }
    return at - start;
}

double emit_blocked_layer(Builder& b, Tallies& t, double start, uint32_t n,
                          uint32_t layer) {
    const uint32_t half = n / 2;
    double at = start;
    at += emit_rz_wave(b, t, at, 0, n, layer);

    const auto block0 = blocked_intra_clusters(half, 0);
    const auto block1 = blocked_intra_clusters(half, half);
    const bool have_intra = !block0.empty();
    const double intra_cycles = b.cost.intra_cluster_cycles;
    double intra_span = 0.0;
    if (have_intra) {
        // rows run in parallel; trailing realign aligns edges for the
        // boundary-crossing linking group
        intra_span =
            emit_cluster_chain(b, t, at, block0, true, intra_cycles, true, true, layer);
        emit_cluster_chain(b, t, at, block1, true, intra_cycles, true, true, layer);
    }
    at += intra_span;

    // boundary clusters chain back to back, one per routing window
    at += emit_cluster_chain(b, t, at, blocked_linking_clusters(n), false, 8.0,
                             false, false, layer);
    at += emit_rz_wave(b, t, at, 0, n, layer);
    return at - start;
}

double emit_fche_layer(Builder& b, Tallies& t, double start, uint32_t n,
                       uint32_t layer) {
    double at = start;
    at += emit_rz_row_serial(b, t, at, n, layer);
    std::vector<CnotCluster> clusters;
    clusters.reserve(n);
    for (uint32_t c = 0; c < n; ++c) {
        CnotCluster cl;
        cl.control = c;
        for (uint32_t q = 0; q < n; ++q)
            if (q != c) cl.targets.push_back(q);
        clusters.push_back(std::move(cl));
    }
    at += emit_cluster_chain(b, t, at, clusters, false, 4.0, true, false, layer);
    at += emit_rz_row_serial(b, t, at, n, layer);
    return at - start;
}

double emit_linear_layer(Builder& b, Tallies& t, double start, uint32_t n,
                         uint32_t layer) {
    const uint32_t row0 = (n + 1) / 2;
    double at = start;
    at += emit_rz_row_serial(b, t, at, n, layer);
    std::vector<CnotCluster> ring_fast, ring_slow;
    for (uint32_t q = 0; q < n; ++q) {
        const uint32_t target = (q + 1) % n;
        const bool cross = (q < row0) != (target < row0);
        CnotCluster cl{q, {target}};
        (cross ? ring_slow : ring_fast).push_back(cl);
    }
    at += emit_cluster_chain(b, t, at, ring_fast, true, 4.0, true, true, layer);
    at += emit_cluster_chain(b, t, at, ring_slow, false, 8.0, false, false, layer);
    at += emit_rz_row_serial(b, t, at, n, layer);
    return at - start;
}

bool recipe_applicable(const Circuit& circuit) {
    if (!circuit.provenance) return false;
    for (const auto& g : circuit.gates)
        if (g.kind == GateKind::MeasureZ) return false;
    return true;
}

void run_recipe(Builder& b, Tallies& t, const Circuit& circuit) {
    const AnsatzSpec spec = *circuit.provenance;
    double at = 0.0;
    for (uint32_t layer = 0; layer < spec.p; ++layer) {
        switch (spec.kind) {
            case AnsatzKind::blocked_all_to_all:
                at += emit_blocked_layer(b, t, at, spec.n, layer);
                break;
            case AnsatzKind::fche:
                at += emit_fche_layer(b, t, at, spec.n, layer);
                break;
            case AnsatzKind::linear:
                at += emit_linear_layer(b, t, at, spec.n, layer);
                break;
        }
    }
}

// ---- generic greedy list scheduler --------------------------------------

void run_generic(Builder& b, Tallies& t, const Circuit& circuit) {
    const uint32_t n = circuit.width;
    const uint32_t row0 = (n + 1) / 2;
    std::vector<double> qubit_free(n, 0.0);

    const LayoutMetrics metrics = layout_metrics(b.layout);
    const uint32_t rz_cap = std::max<uint32_t>(1, metrics.max_parallel_magic);
    std::priority_queue<double, std::vector<double>, std::greater<>> rz_slots;
    for (uint32_t i = 0; i < rz_cap; ++i) rz_slots.push(0.0);

    auto row_of = [&](uint32_t q) { return q < row0 ? 0u : 1u; };

    size_t i = 0;
    while (i < circuit.gates.size()) {
        const Gate& g = circuit.gates[i];
        if (g.kind == GateKind::CX) {
            // fuse the maximal run of CXs sharing this control
            std::vector<uint32_t> targets;
            size_t j = i;
            while (j < circuit.gates.size() && circuit.gates[j].kind == GateKind::CX &&
                   circuit.gates[j].q0 == g.q0)
                targets.push_back(circuit.gates[j++].q1);
            bool same_row = true;
            for (uint32_t q : targets)
                if (row_of(q) != row_of(g.q0)) same_row = false;
            const double cycles = same_row ? 4.0 : 8.0;
            double ready = qubit_free[g.q0];
            for (uint32_t q : targets) ready = std::max(ready, qubit_free[q]);
            std::vector<uint32_t> patches = {g.q0};
            patches.insert(patches.end(), targets.begin(), targets.end());
            const double engaged = same_row
                                       ? b.engaged_cluster_same_row(targets.size())
                                       : b.engaged_cluster_cross(targets.size());
            b.emit(same_row ? MacroKind::cnot_cluster_fast : MacroKind::cnot_cluster_slow,
                   ready, cycles, patches, engaged, 0);
            for (uint32_t q : patches) qubit_free[q] = ready + cycles;
            t.cnots += targets.size();
            i = j;
            continue;
        }
        if (g.kind == GateKind::Rz) {
            uint64_t attempts = 2;
            double cycles = 2.0 * kExpectedRusAttempts;
            if (b.mode == ScheduleMode::stochastic) {
                attempts = b.rng.geometric(0.5);
                cycles = 2.0 * static_cast<double>(attempts);
            }
            const double slot = rz_slots.top();
            rz_slots.pop();
            const double ready = std::max(qubit_free[g.q0], slot);
            b.emit(MacroKind::rz_consume, ready, cycles, {g.q0}, 3.0, 0);
            qubit_free[g.q0] = ready + cycles;
            rz_slots.push(ready + cycles);
            t.rz += 1;
            t.attempts += static_cast<double>(attempts);
            t.stall += std::max(0.0, cycles - 2.0 * kExpectedRusAttempts);
            ++i;
            continue;
        }
        if (g.kind == GateKind::MeasureZ) {
            const double ready = qubit_free[g.q0];
            b.emit(MacroKind::measure_patch, ready, 1.0, {g.q0}, 1.0, 0);
            qubit_free[g.q0] = ready + 1.0;
            ++i;
            continue;
        }
        // 1q Clifford
        const double ready = qubit_free[g.q0];
        b.emit(MacroKind::patch_rotate, ready, 1.0, {g.q0}, 1.0, 0);
        qubit_free[g.q0] = ready + 1.0;
        ++i;
    }
}

}  // namespace

Schedule schedule(const Circuit& circuit, const LayoutSpec& layout,
                  ScheduleMode mode, uint64_t seed) {
    circuit.validate();
    if (circuit.width > layout.data_patches())
        throw no_fit_error("circuit width exceeds the layout's data patches");

    Builder b(layout, mode, seed);
    Tallies tallies;
    if (recipe_applicable(circuit))
        run_recipe(b, tallies, circuit);
    else
        run_generic(b, tallies, circuit);

    Schedule s;
    s.layout = layout;
    s.width = circuit.width;
    s.mode = mode;
    s.timeline = std::move(b.ops);
    for (const auto& op : s.timeline) {
        s.t_circ = std::max(s.t_circ, op.start + op.cycles);
        s.v_patch_cycles += op.cycles * op.engaged_patches;
    }
    s.total_patches = layout.total_patches();
    const uint64_t per_patch = patch_physical_qubits(layout.code.d);
    s.physical_qubits = s.total_patches * per_patch;
    s.v_physical = s.v_patch_cycles * static_cast<double>(per_patch);

    s.idle_cycles.assign(circuit.width, s.t_circ);
    for (const auto& op : s.timeline)
        for (uint32_t q : op.data_patches)
            if (q < circuit.width) s.idle_cycles[q] -= op.cycles;

    s.cnot_count = tallies.cnots;
    s.rz_count = tallies.rz;
    s.rz_attempts = tallies.attempts;
    s.stall_cycles = tallies.stall;
    return s;
}

Circuit scheduled_circuit_gates(const Schedule& schedule, const Circuit& original) {
    // Rebuild the gate list from the timeline in (start, emission) order.
    // Ops that moved across each other act on disjoint qubits (exclusivity),
    // so per-qubit program order is what must be preserved: non-CX gates are
    // matched through per-qubit cursors.
    Circuit out;
    out.width = original.width;
    std::vector<size_t> order(schedule.timeline.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return schedule.timeline[a].start < schedule.timeline[b].start;
    });
    std::vector<std::vector<size_t>> per_qubit(original.width);
    for (size_t i = 0; i < original.gates.size(); ++i) {
        const Gate& g = original.gates[i];
        if (g.kind != GateKind::CX) per_qubit[g.q0].push_back(i);
    }
    std::vector<size_t> cursor(original.width, 0);
    for (size_t idx : order) {
        const MacroOp& op = schedule.timeline[idx];
        switch (op.kind) {
            case MacroKind::cnot_cluster_fast:
            case MacroKind::cnot_cluster_slow:
                for (size_t t = 1; t < op.data_patches.size(); ++t)
                    out.append(Gate::cx(op.data_patches[0], op.data_patches[t]));
                break;
            case MacroKind::rz_consume:
            case MacroKind::measure_patch:
            case MacroKind::patch_rotate: {
                if (op.data_patches.empty()) break;  // pure realignment
                const uint32_t q = op.data_patches[0];
                if (cursor[q] < per_qubit[q].size())
                    out.append(original.gates[per_qubit[q][cursor[q]++]]);
                break;
            }
        }
    }
    return out;
}

VolumeRatioReport layout_volume_ratio(AnsatzKind ansatz, LayoutKind layout,
                                      const CodeParams& code, uint32_t n_begin,
                                      uint32_t n_end, uint32_t n_step) {
    if (layout == LayoutKind::proposed)
        throw config_error("volume ratio compares a baseline against proposed");
    VolumeRatioReport report;
    report.ansatz = ansatz;
    report.layout = layout;
    double sum = 0.0;
    uint32_t count = 0;
    for (uint32_t n = n_begin; n <= n_end; n += n_step) {
        AnsatzSpec spec{ansatz, n, 1};
        const Circuit circ = build_ansatz_zero(spec);
        const Schedule base =
            schedule(circ, LayoutSpec::proposed_for_width(n, code));
        const Schedule other =
            schedule(circ, LayoutSpec::comparison(layout, n, code));
        const double ratio = other.v_patch_cycles / base.v_patch_cycles;
        report.per_n.push_back({n, ratio});
        sum += ratio;
        ++count;
    }
    report.mean_ratio = count ? sum / count : 0.0;
    return report;
}

}  // namespace eftvqa
