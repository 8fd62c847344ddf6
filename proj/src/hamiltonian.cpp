#include "eftvqa/hamiltonian.hpp"

#include <cmath>

#include "eftvqa/errors.hpp"

namespace eftvqa {

void Hamiltonian::add(double coeff, const PauliString& pauli) {
    if (pauli.width() != width)
        throw config_error("Hamiltonian term width mismatch");
    if (!std::isfinite(coeff))
        throw config_error("Hamiltonian coefficient must be finite");
    terms.push_back({coeff, pauli});
}

void Hamiltonian::validate() const {
    for (const auto& t : terms) {
        if (t.pauli.width() != width)
            throw config_error("Hamiltonian term width mismatch");
        if (!std::isfinite(t.coeff))
            throw config_error("Hamiltonian coefficient must be finite");
    }
}

double Hamiltonian::one_norm() const {
    double s = 0.0;
    for (const auto& t : terms) s += std::abs(t.coeff);
    return s;
}

namespace {

PauliString two_site(uint32_t n, uint32_t i, PauliLetter l) {
    PauliString p(n);
    p.set_letter(i, l);
    p.set_letter(i + 1, l);
    return p;
}

}  // namespace

Hamiltonian build_ising(uint32_t n, double j) {
    if (n < 2) throw config_error("Ising chain needs at least 2 sites");
    Hamiltonian h;
    h.width = n;
    if (j != 0.0) {
        for (uint32_t i = 0; i + 1 < n; ++i)
            h.add(j, two_site(n, i, PauliLetter::X));
    }
    for (uint32_t i = 0; i < n; ++i) {
        PauliString p(n);
        p.set_letter(i, PauliLetter::Z);
        h.add(1.0, p);
    }
    return h;
}

Hamiltonian build_heisenberg(uint32_t n, double j) {
    if (n < 2) throw config_error("Heisenberg chain needs at least 2 sites");
    Hamiltonian h;
    h.width = n;
    for (uint32_t i = 0; i + 1 < n; ++i) {
        if (j != 0.0) {
            h.add(j, two_site(n, i, PauliLetter::X));
            h.add(j, two_site(n, i, PauliLetter::Y));
        }
        h.add(1.0, two_site(n, i, PauliLetter::Z));
    }
    return h;
}

}  // namespace eftvqa
