#include <doctest.h>

#include <cmath>

#include "eftvqa/ansatz.hpp"
#include "eftvqa/errors.hpp"
#include "eftvqa/hamiltonian.hpp"
#include "eftvqa/tableau.hpp"

using namespace eftvqa;

namespace {

int count_terms(const Hamiltonian& h, const std::string& pauli) {
    int c = 0;
    for (const auto& t : h.terms)
        if (t.pauli.to_string() == pauli) ++c;
    return c;
}

}  // namespace

TEST_CASE("ising chain structure") {
    const Hamiltonian h = build_ising(2, 1.0);
    REQUIRE(h.terms.size() == 3);
    CHECK(count_terms(h, "XX") == 1);
    CHECK(count_terms(h, "ZI") == 1);
    CHECK(count_terms(h, "IZ") == 1);
    for (const auto& t : h.terms) CHECK(t.coeff == 1.0);

    const Hamiltonian zero_j = build_ising(3, 0.0);
    REQUIRE(zero_j.terms.size() == 3);  // only Z terms remain
    CHECK(count_terms(zero_j, "ZII") == 1);
    CHECK(count_terms(zero_j, "IZI") == 1);
    CHECK(count_terms(zero_j, "IIZ") == 1);

    const Hamiltonian quarter = build_ising(4, 0.25);
    int xx = 0, z = 0;
    for (const auto& t : quarter.terms) {
        if (t.pauli.weight() == 2) {
            CHECK(t.coeff == 0.25);
            ++xx;
        } else {
            CHECK(t.coeff == 1.0);
            ++z;
        }
    }
    CHECK(xx == 3);
    CHECK(z == 4);

    CHECK_THROWS_AS(build_ising(1, 1.0), config_error);
}

TEST_CASE("heisenberg chain structure") {
    const Hamiltonian h = build_heisenberg(2, 1.0);
    REQUIRE(h.terms.size() == 3);
    CHECK(count_terms(h, "XX") == 1);
    CHECK(count_terms(h, "YY") == 1);
    CHECK(count_terms(h, "ZZ") == 1);

    const Hamiltonian zero_j = build_heisenberg(2, 0.0);
    REQUIRE(zero_j.terms.size() == 1);
    CHECK(count_terms(zero_j, "ZZ") == 1);
    CHECK(zero_j.terms[0].coeff == 1.0);

    const Hamiltonian half = build_heisenberg(3, 0.5);
    CHECK(half.terms.size() == 6);  // 3 couplings x 2 bonds
    for (const auto& t : half.terms) {
        bool zz = true;
        for (uint32_t q = 0; q < 3; ++q)
            if (t.pauli.letter(q) == PauliLetter::X || t.pauli.letter(q) == PauliLetter::Y)
                zz = false;
        CHECK(t.coeff == (zz ? 1.0 : 0.5));
    }
}

TEST_CASE("gate counts formulas") {
    CHECK(gate_counts({AnsatzKind::linear, 10, 3}).cnot_count == 30);
    CHECK(gate_counts({AnsatzKind::blocked_all_to_all, 20, 1}).cnot_count == 120);
    CHECK(gate_counts({AnsatzKind::blocked_all_to_all, 40, 1}).cnot_count == 620);

    const GateCounts linear = gate_counts({AnsatzKind::linear, 8, 2});
    CHECK(linear.cnot_count == 16);
    CHECK(linear.rz_count == 32);
    CHECK(linear.rz_runtime_expected == 64.0);

    CHECK(gate_counts({AnsatzKind::fche, 12, 1}).rz_count == 24);
}

TEST_CASE("ansatz census matches gate_counts for all kinds") {
    for (AnsatzKind kind :
         {AnsatzKind::linear, AnsatzKind::fche, AnsatzKind::blocked_all_to_all}) {
        for (uint32_t n = 4; n <= 64; n += 6) {
            uint32_t use_n = n;
            if (kind == AnsatzKind::blocked_all_to_all && use_n % 2) ++use_n;
            for (uint32_t p = 1; p <= 4; ++p) {
                AnsatzSpec spec{kind, use_n, p};
                const Circuit c = build_ansatz_zero(spec);
                const GateCounts counts = gate_counts(spec);
                CAPTURE(ansatz_name(kind));
                CAPTURE(use_n);
                CAPTURE(p);
                CHECK(c.count(GateKind::CX) == counts.cnot_count);
                CHECK(c.count(GateKind::Rz) == counts.rz_count);
            }
        }
    }
}

TEST_CASE("parameter vector length is enforced") {
    AnsatzSpec spec{AnsatzKind::linear, 4, 1};
    std::vector<double> wrong(spec.rz_count() + 1, 0.0);
    CHECK_THROWS_AS(build_ansatz(spec, wrong), config_error);
    CHECK_THROWS_AS(build_ansatz_zero({AnsatzKind::blocked_all_to_all, 7, 1}),
                    config_error);
}

TEST_CASE("zero parameters act as identity on the all-zeros state") {
    for (AnsatzKind kind :
         {AnsatzKind::linear, AnsatzKind::fche, AnsatzKind::blocked_all_to_all}) {
        AnsatzSpec spec{kind, 8, 1};
        const Circuit c = build_ansatz_zero(spec);
        Tableau tab(8);
        for (const auto& g : c.gates) tab.apply(g);
        for (uint32_t q = 0; q < 8; ++q) {
            PauliString z(8);
            z.set_letter(q, PauliLetter::Z);
            CHECK(tab.expectation(z) == 1);
        }
    }
}

TEST_CASE("cnot to rz growth ratio") {
    CHECK(cnot_rz_ratio({AnsatzKind::blocked_all_to_all, 16, 1}) ==
          doctest::Approx(1.0625).epsilon(1e-12));
    CHECK(cnot_rz_ratio({AnsatzKind::blocked_all_to_all, 13 + 1, 1}) > 0.76);
    // evaluate the closed form at 13 via a spec with even n? the formula is
    // width-only, so check through a direct computation instead
    const double at13 = 13.0 / 8.0 - 1.25 + 5.0 / 13.0;
    CHECK(at13 == doctest::Approx(0.7596).epsilon(1e-3));
    CHECK(cnot_rz_ratio({AnsatzKind::linear, 10, 2}) == 0.25);
    CHECK(cnot_rz_ratio({AnsatzKind::linear, 50, 1}, false) == 0.25);

    // monotone increasing for n >= 7 and crossing 0.76 between 13 and 14
    double prev = 7.0 / 8.0 - 1.25 + 5.0 / 7.0;
    for (uint32_t n = 8; n <= 64; ++n) {
        const double r = n / 8.0 - 1.25 + 5.0 / n;
        CHECK(r > prev);
        prev = r;
    }
    const double r13 = 13.0 / 8.0 - 1.25 + 5.0 / 13.0;
    const double r14 = 14.0 / 8.0 - 1.25 + 5.0 / 14.0;
    CHECK(r13 < 0.76);
    CHECK(r14 > 0.76);

    // finite-count and asymptotic routes agree (both families linear in p)
    for (uint32_t n = 6; n <= 40; n += 2) {
        AnsatzSpec spec{AnsatzKind::blocked_all_to_all, n, 2};
        CHECK(cnot_rz_ratio(spec, true) ==
              doctest::Approx(cnot_rz_ratio(spec, false)).epsilon(1e-12));
    }
}

TEST_CASE("quarter-turn canonicalization") {
    CHECK(rz_half_turn_quadrant(0.0) == 0);
    CHECK(rz_half_turn_quadrant(M_PI / 2) == 1);
    CHECK(rz_half_turn_quadrant(M_PI) == 2);
    CHECK(rz_half_turn_quadrant(3 * M_PI / 2) == 3);
    CHECK(rz_half_turn_quadrant(-M_PI / 2) == 3);
    CHECK(rz_half_turn_quadrant(2 * M_PI) == 0);
    CHECK(!rz_half_turn_quadrant(0.3).has_value());

    // quarter-turn circuits stay inside the Clifford simulator
    AnsatzSpec spec{AnsatzKind::fche, 4, 1};
    std::vector<double> params(spec.rz_count());
    for (size_t i = 0; i < params.size(); ++i) params[i] = (i % 4) * M_PI / 2;
    const Circuit c = build_ansatz(spec, params);
    Tableau tab(4);
    for (const auto& g : c.gates) CHECK_NOTHROW(tab.apply(g));
}

TEST_CASE("gate and circuit validation") {
    Circuit c;
    c.width = 2;
    c.append(Gate::cx(0, 0));
    CHECK_THROWS_AS(c.validate(), config_error);
    c.gates.clear();
    c.append(Gate::h(5));
    CHECK_THROWS_AS(c.validate(), config_error);
}
