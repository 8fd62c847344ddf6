#ifndef EFTVQA_HAMILTONIAN_HPP
#define EFTVQA_HAMILTONIAN_HPP

#include <cstdint>
#include <vector>

#include "eftvqa/pauli.hpp"

namespace eftvqa {

struct HamiltonianTerm {
    double coeff = 0.0;
    PauliString pauli;
};

// Real-coefficient Pauli sum. All terms share the Hamiltonian width.
struct Hamiltonian {
    uint32_t width = 0;
    std::vector<HamiltonianTerm> terms;

    void add(double coeff, const PauliString& pauli);
    void validate() const;

    // Sum of |coeff|; useful scale for shot-noise estimates.
    double one_norm() const;
};

// 1D transverse-style Ising chain: J * sum X_i X_{i+1} + sum Z_i.
// Zero-coefficient coupling terms are omitted.
Hamiltonian build_ising(uint32_t n, double j);

// Field-free 1D Heisenberg chain: sum (J X X + J Y Y + Z Z) over bonds;
// the ZZ coupling has unit strength. Zero-coefficient terms are omitted.
Hamiltonian build_heisenberg(uint32_t n, double j);

}  // namespace eftvqa

#endif
