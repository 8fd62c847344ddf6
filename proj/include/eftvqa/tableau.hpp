#ifndef EFTVQA_TABLEAU_HPP
#define EFTVQA_TABLEAU_HPP

#include <cstdint>
#include <vector>

#include "eftvqa/circuit.hpp"
#include "eftvqa/pauli.hpp"
#include "eftvqa/rng.hpp"

namespace eftvqa {

// Aaronson-Gottesman stabilizer tableau over bit-packed rows. Rows 0..n-1
// hold destabilizer generators, rows n..2n-1 the stabilizers; each row is a
// Hermitian Pauli with a sign bit. The state starts as |0...0>.
class Tableau {
public:
    explicit Tableau(uint32_t n);

    uint32_t num_qubits() const { return n_; }

    // Clifford gates. Rz is accepted only at pi/2 multiples (canonicalized to
    // I/S/Z/Sdg); other angles throw unsupported_gate_error.
    void apply(const Gate& gate);
    void apply_h(uint32_t q);
    void apply_s(uint32_t q);
    void apply_sdg(uint32_t q);
    void apply_x(uint32_t q);
    void apply_y(uint32_t q);
    void apply_z(uint32_t q);
    void apply_cx(uint32_t control, uint32_t target);
    void apply_pauli(const PauliString& p);  // state update only, sign ignored

    // Z-basis measurement; deterministic where Z_q is (up to sign) in the
    // stabilizer group, otherwise a fair coin with state update.
    int measure_z(uint32_t q, Rng& rng);

    // <P> for the current state: +1/-1 when +-P is in the stabilizer group,
    // 0 when P anticommutes with some stabilizer.
    int expectation(const PauliString& p) const;

    // Checks the symplectic invariants (commutation structure and full rank).
    // Used by tests after gate/channel/measurement sequences.
    bool validate() const;

private:
    uint32_t n_;
    uint32_t words_;            // 64-bit words per row half
    std::vector<uint64_t> x_;   // (2n rows) x words_
    std::vector<uint64_t> z_;
    std::vector<uint8_t> r_;    // sign bits per row

    uint64_t* xrow(uint32_t row) { return x_.data() + size_t(row) * words_; }
    uint64_t* zrow(uint32_t row) { return z_.data() + size_t(row) * words_; }
    const uint64_t* xrow(uint32_t row) const { return x_.data() + size_t(row) * words_; }
    const uint64_t* zrow(uint32_t row) const { return z_.data() + size_t(row) * words_; }

    bool xbit(uint32_t row, uint32_t q) const { return (xrow(row)[q >> 6] >> (q & 63)) & 1; }
    bool zbit(uint32_t row, uint32_t q) const { return (zrow(row)[q >> 6] >> (q & 63)) & 1; }

    // row[h] *= row[i] with exact sign tracking.
    void rowmult(uint32_t h, uint32_t i);
    // Sign-tracked multiply of an external accumulator row by row i.
    void accumulate(std::vector<uint64_t>& ax, std::vector<uint64_t>& az,
                    int& phase_times_i, uint32_t i) const;

    bool rows_anticommute(const uint64_t* ax, const uint64_t* az, uint32_t row) const;
};

struct PauliChannelOutcome {
    double probability = 0.0;
    PauliString pauli;  // width equals channel arity
};

// Stochastic Pauli channel; outcomes need not sum to 1, the remainder is the
// identity.
class PauliChannel {
public:
    PauliChannel() = default;
    PauliChannel(uint32_t arity, std::vector<PauliChannelOutcome> outcomes);

    static PauliChannel identity(uint32_t arity);
    static PauliChannel depolarizing1(double p);
    static PauliChannel depolarizing2(double p);
    static PauliChannel bit_flip(double p);
    // Asymmetric single-qubit channel with explicit X/Y/Z probabilities.
    static PauliChannel xyz(double px, double py, double pz);

    uint32_t arity() const { return arity_; }
    const std::vector<PauliChannelOutcome>& outcomes() const { return outcomes_; }
    double total_error_probability() const;
    double probability_of(PauliLetter l) const;  // arity-1 helper

    bool is_identity() const { return outcomes_.empty(); }

    // Samples one outcome (or identity) and applies it at `qubits`.
    void apply(Tableau& tab, const std::vector<uint32_t>& qubits, Rng& rng) const;

private:
    uint32_t arity_ = 1;
    std::vector<PauliChannelOutcome> outcomes_;
};

}  // namespace eftvqa

#endif
