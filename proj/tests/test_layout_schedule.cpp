#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "eftvqa/errors.hpp"
#include "eftvqa/layout.hpp"
#include "eftvqa/rng.hpp"
#include "eftvqa/schedule.hpp"
#include "eftvqa/tableau.hpp"

using namespace eftvqa;

namespace {
const CodeParams kCode{11, 1e-3};
}

TEST_CASE("packing efficiency formula and limit") {
    for (uint32_t k = 1; k <= 50; ++k) {
        const LayoutMetrics m = layout_metrics(LayoutSpec::proposed(k, kCode));
        CHECK(m.data_patches == 4 * k + 4);
        CHECK(m.total_patches == 6 * (k + 2));
        CHECK(m.packing_efficiency ==
              doctest::Approx(4.0 * (k + 1) / (6.0 * (k + 2))).epsilon(1e-12));
        CHECK(m.physical_qubits == m.total_patches * 241);
    }
    const LayoutMetrics huge = layout_metrics(LayoutSpec::proposed(1000000, kCode));
    CHECK(huge.packing_efficiency == doctest::Approx(2.0 / 3.0).epsilon(1e-5));
    CHECK(layout_metrics(LayoutSpec::proposed(1, kCode)).packing_efficiency ==
          doctest::Approx(8.0 / 18.0).epsilon(1e-12));
}

TEST_CASE("parallel magic state bound") {
    CHECK(layout_metrics(LayoutSpec::proposed(6, kCode)).max_parallel_magic == 4);
    CHECK(layout_metrics(LayoutSpec::proposed(3, kCode)).max_parallel_magic == 2);
    CHECK(layout_metrics(LayoutSpec::proposed(2, kCode)).max_parallel_magic == 0);
}

TEST_CASE("largest program fitting a budget") {
    const ProgramFit fit = max_program(10000, kCode);
    CHECK(fit.k == 4);
    CHECK(fit.data_qubits == 20);

    const ProgramFit boundary = max_program(241 * 12, kCode);
    CHECK(boundary.k == 0);
    CHECK(boundary.data_qubits == 4);

    CHECK_THROWS_AS(max_program(241 * 11, kCode), no_fit_error);
}

TEST_CASE("deterministic cycle counts match the published table") {
    // blocked_all_to_all: 71/121/171 at 20/40/60 qubits, depth 1
    const uint32_t ns[] = {20, 40, 60};
    const double blocked_expected[] = {71, 121, 171};
    const double fche_expected[] = {131, 271, 411};
    for (int i = 0; i < 3; ++i) {
        const Circuit blocked =
            build_ansatz_zero({AnsatzKind::blocked_all_to_all, ns[i], 1});
        const Schedule sb =
            schedule(blocked, LayoutSpec::proposed_for_width(ns[i], kCode));
        CAPTURE(ns[i]);
        CHECK(sb.t_circ == doctest::Approx(blocked_expected[i]).epsilon(1e-12));

        const Circuit fche = build_ansatz_zero({AnsatzKind::fche, ns[i], 1});
        const Schedule sf =
            schedule(fche, LayoutSpec::proposed_for_width(ns[i], kCode));
        CHECK(sf.t_circ == doctest::Approx(fche_expected[i]).epsilon(1e-12));
    }
}

TEST_CASE("linear forms extend to other widths") {
    for (uint32_t n = 8; n <= 96; n += 4) {
        const Circuit blocked =
            build_ansatz_zero({AnsatzKind::blocked_all_to_all, n, 1});
        const Schedule sb = schedule(blocked, LayoutSpec::proposed_for_width(n, kCode));
        CAPTURE(n);
        CHECK(sb.t_circ == doctest::Approx(2.5 * n + 21).epsilon(1e-12));

        const Circuit fche = build_ansatz_zero({AnsatzKind::fche, n, 1});
        const Schedule sf = schedule(fche, LayoutSpec::proposed_for_width(n, kCode));
        CHECK(sf.t_circ == doctest::Approx(7.0 * n - 9).epsilon(1e-12));
    }
}

TEST_CASE("volume equals the op-wise sum and depth scaling is monotone") {
    for (AnsatzKind kind :
         {AnsatzKind::linear, AnsatzKind::fche, AnsatzKind::blocked_all_to_all}) {
        double prev = 0.0;
        for (uint32_t p = 1; p <= 4; ++p) {
            const Circuit c = build_ansatz_zero({kind, 16, p});
            const Schedule s = schedule(c, LayoutSpec::proposed_for_width(16, kCode));
            double v = 0.0;
            for (const auto& op : s.timeline) v += op.cycles * op.engaged_patches;
            CHECK(s.v_patch_cycles == doctest::Approx(v).epsilon(1e-12));
            CHECK(s.t_circ > prev);
            prev = s.t_circ;
        }
    }
}

TEST_CASE("no two concurrent ops share a data patch") {
    for (AnsatzKind kind :
         {AnsatzKind::linear, AnsatzKind::fche, AnsatzKind::blocked_all_to_all}) {
        for (ScheduleMode mode : {ScheduleMode::deterministic, ScheduleMode::stochastic}) {
            const Circuit c = build_ansatz_zero({kind, 12, 2});
            const Schedule s =
                schedule(c, LayoutSpec::proposed_for_width(12, kCode), mode, 17);
            for (size_t i = 0; i < s.timeline.size(); ++i) {
                for (size_t j = i + 1; j < s.timeline.size(); ++j) {
                    const auto& a = s.timeline[i];
                    const auto& b = s.timeline[j];
                    const bool overlap = a.start < b.start + b.cycles &&
                                         b.start < a.start + a.cycles;
                    if (!overlap) continue;
                    for (uint32_t qa : a.data_patches)
                        for (uint32_t qb : b.data_patches) {
                            CAPTURE(ansatz_name(kind));
                            CAPTURE(i);
                            CAPTURE(j);
                            REQUIRE(qa != qb);
                        }
                }
            }
        }
    }
}

TEST_CASE("scheduling preserves circuit semantics") {
    Rng rng(404);
    for (int trial = 0; trial < 30; ++trial) {
        const uint32_t n = 3 + uint32_t(rng.below(10));  // up to 12 qubits
        Circuit c;
        c.width = n;
        const uint32_t gates = 5 + uint32_t(rng.below(40));
        for (uint32_t i = 0; i < gates; ++i) {
            switch (rng.below(4)) {
                case 0: c.append(Gate::h(uint32_t(rng.below(n)))); break;
                case 1: c.append(Gate::s(uint32_t(rng.below(n)))); break;
                case 2: {
                    const uint32_t ctrl = uint32_t(rng.below(n));
                    uint32_t tgt = uint32_t(rng.below(n - 1));
                    if (tgt >= ctrl) ++tgt;
                    c.append(Gate::cx(ctrl, tgt));
                    break;
                }
                default:
                    c.append(Gate::rz(uint32_t(rng.below(n)),
                                      double(rng.below(4)) * M_PI / 2));
                    break;
            }
        }
        const Schedule s = schedule(c, LayoutSpec::proposed_for_width(n, kCode));
        const Circuit rebuilt = scheduled_circuit_gates(s, c);
        REQUIRE(rebuilt.gates.size() == c.gates.size());

        Tableau original(n), remapped(n);
        for (const auto& g : c.gates) original.apply(g);
        for (const auto& g : rebuilt.gates) remapped.apply(g);
        for (int probe = 0; probe < 64; ++probe) {
            PauliString p(n);
            for (uint32_t q = 0; q < n; ++q)
                p.set_letter(q, static_cast<PauliLetter>(rng.below(4)));
            REQUIRE(original.expectation(p) == remapped.expectation(p));
        }
    }
}

TEST_CASE("removing a gate never lengthens the generic schedule") {
    Rng rng(808);
    const uint32_t n = 8;
    Circuit c;
    c.width = n;
    for (uint32_t i = 0; i < 60; ++i) {
        if (rng.bit())
            c.append(Gate::cx(uint32_t(rng.below(n)), (uint32_t(rng.below(n - 1)) + 1 +
                                                       uint32_t(rng.below(1))) % n));
        else
            c.append(Gate::rz(uint32_t(rng.below(n)), M_PI));
    }
    // fix up any accidental self-CX
    for (auto& g : c.gates)
        if (g.kind == GateKind::CX && g.q0 == g.q1) g.q1 = (g.q1 + 1) % n;

    const LayoutSpec layout = LayoutSpec::proposed_for_width(n, kCode);
    const double full = schedule(c, layout).t_circ;
    for (size_t drop = 0; drop < c.gates.size(); drop += 7) {
        Circuit shorter;
        shorter.width = n;
        for (size_t i = 0; i < c.gates.size(); ++i)
            if (i != drop) shorter.append(c.gates[i]);
        CHECK(schedule(shorter, layout).t_circ <= full + 1e-9);
    }
}

TEST_CASE("width overflow is rejected") {
    const Circuit c = build_ansatz_zero({AnsatzKind::linear, 24, 1});
    CHECK_THROWS_AS(schedule(c, LayoutSpec::proposed(1, kCode)), no_fit_error);
}

TEST_CASE("volume ratios: ordered baselines, all at least one") {
    for (AnsatzKind kind :
         {AnsatzKind::linear, AnsatzKind::fche, AnsatzKind::blocked_all_to_all}) {
        double prev = 1.0;
        for (LayoutKind layout : {LayoutKind::compact, LayoutKind::intermediate,
                                  LayoutKind::fast, LayoutKind::grid}) {
            // trimmed sweep here; the acceptance suite runs the full one
            const VolumeRatioReport r =
                layout_volume_ratio(kind, layout, kCode, 8, 84, 4);
            CAPTURE(ansatz_name(kind));
            CAPTURE(layout_name(layout));
            for (const auto& point : r.per_n) CHECK(point.ratio >= 1.0);
            CHECK(r.mean_ratio > prev);
            prev = r.mean_ratio;
        }
    }
}

TEST_CASE("stochastic schedules are reproducible per seed") {
    const Circuit c = build_ansatz_zero({AnsatzKind::fche, 12, 1});
    const LayoutSpec layout = LayoutSpec::proposed_for_width(12, kCode);
    const Schedule a = schedule(c, layout, ScheduleMode::stochastic, 5);
    const Schedule b = schedule(c, layout, ScheduleMode::stochastic, 5);
    CHECK(a.t_circ == b.t_circ);
    CHECK(a.rz_attempts == b.rz_attempts);
    const Schedule other = schedule(c, layout, ScheduleMode::stochastic, 6);
    CHECK(a.rz_attempts != other.rz_attempts);
}
