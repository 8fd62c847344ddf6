#include "eftvqa/tableau.hpp"

#include <bit>
#include <stdexcept>

#include "eftvqa/errors.hpp"

namespace eftvqa {

Tableau::Tableau(uint32_t n)
    : n_(n), words_((n + 63) / 64),
      x_(size_t(2) * n * words_, 0), z_(size_t(2) * n * words_, 0),
      r_(size_t(2) * n, 0) {
    if (n == 0) throw config_error("tableau needs at least one qubit");
    for (uint32_t q = 0; q < n; ++q) {
        xrow(q)[q >> 6] |= 1ull << (q & 63);          // destabilizer X_q
        zrow(n + q)[q >> 6] |= 1ull << (q & 63);      // stabilizer Z_q
    }
}

void Tableau::apply(const Gate& gate) {
    switch (gate.kind) {
        case GateKind::H: apply_h(gate.q0); return;
        case GateKind::S: apply_s(gate.q0); return;
        case GateKind::Sdg: apply_sdg(gate.q0); return;
        case GateKind::X: apply_x(gate.q0); return;
        case GateKind::Y: apply_y(gate.q0); return;
        case GateKind::Z: apply_z(gate.q0); return;
        case GateKind::CX: apply_cx(gate.q0, gate.q1); return;
        case GateKind::Rz: {
            auto quadrant = rz_half_turn_quadrant(gate.angle);
            if (!quadrant)
                throw unsupported_gate_error(
                    "Rz angle is not a multiple of pi/2; route through the "
                    "injection model or canonicalize first");
            switch (*quadrant) {
                case 0: return;
                case 1: apply_s(gate.q0); return;
                case 2: apply_z(gate.q0); return;
                case 3: apply_sdg(gate.q0); return;
            }
            return;
        }
        case GateKind::MeasureZ:
            throw unsupported_gate_error("measurement requires an RNG; use measure_z");
    }
}

void Tableau::apply_h(uint32_t q) {
    const uint32_t w = q >> 6;
    const uint64_t m = 1ull << (q & 63);
    for (uint32_t i = 0; i < 2 * n_; ++i) {
        uint64_t& xw = xrow(i)[w];
        uint64_t& zw = zrow(i)[w];
        const uint64_t xb = xw & m, zb = zw & m;
        r_[i] ^= (xb && zb) ? 1 : 0;
        xw ^= xb ^ zb;
        zw ^= xb ^ zb;
    }
}

void Tableau::apply_s(uint32_t q) {
    const uint32_t w = q >> 6;
    const uint64_t m = 1ull << (q & 63);
    for (uint32_t i = 0; i < 2 * n_; ++i) {
        const uint64_t xb = xrow(i)[w] & m;
        const uint64_t zb = zrow(i)[w] & m;
        r_[i] ^= (xb && zb) ? 1 : 0;
        zrow(i)[w] ^= xb;
    }
}

void Tableau::apply_sdg(uint32_t q) {
    const uint32_t w = q >> 6;
    const uint64_t m = 1ull << (q & 63);
    for (uint32_t i = 0; i < 2 * n_; ++i) {
        const uint64_t xb = xrow(i)[w] & m;
        const uint64_t zb = zrow(i)[w] & m;
        r_[i] ^= (xb && !zb) ? 1 : 0;
        zrow(i)[w] ^= xb;
    }
}

void Tableau::apply_x(uint32_t q) {
    const uint32_t w = q >> 6;
    const uint64_t m = 1ull << (q & 63);
    for (uint32_t i = 0; i < 2 * n_; ++i)
        r_[i] ^= (zrow(i)[w] & m) ? 1 : 0;
}

void Tableau::apply_z(uint32_t q) {
    const uint32_t w = q >> 6;
    const uint64_t m = 1ull << (q & 63);
    for (uint32_t i = 0; i < 2 * n_; ++i)
        r_[i] ^= (xrow(i)[w] & m) ? 1 : 0;
}

void Tableau::apply_y(uint32_t q) {
    const uint32_t w = q >> 6;
    const uint64_t m = 1ull << (q & 63);
    for (uint32_t i = 0; i < 2 * n_; ++i) {
        const bool xb = xrow(i)[w] & m;
        const bool zb = zrow(i)[w] & m;
        r_[i] ^= (xb != zb) ? 1 : 0;
    }
}

void Tableau::apply_cx(uint32_t control, uint32_t target) {
    if (control == target) throw config_error("CX control equals target");
    const uint32_t wc = control >> 6, wt = target >> 6;
    const uint64_t mc = 1ull << (control & 63), mt = 1ull << (target & 63);
    for (uint32_t i = 0; i < 2 * n_; ++i) {
        uint64_t* xr = xrow(i);
        uint64_t* zr = zrow(i);
        const bool xc = xr[wc] & mc, zc = zr[wc] & mc;
        const bool xt = xr[wt] & mt, zt = zr[wt] & mt;
        r_[i] ^= (xc && zt && (xt == zc)) ? 1 : 0;
        if (xc) xr[wt] ^= mt;
        if (zt) zr[wc] ^= mc;
    }
}

void Tableau::apply_pauli(const PauliString& p) {
    if (p.width() != n_) throw config_error("Pauli width mismatch");
    for (uint32_t q = 0; q < n_; ++q) {
        switch (p.letter(q)) {
            case PauliLetter::I: break;
            case PauliLetter::X: apply_x(q); break;
            case PauliLetter::Y: apply_y(q); break;
            case PauliLetter::Z: apply_z(q); break;
        }
    }
}

namespace {

// Sign contribution of multiplying Hermitian Pauli rows: counts the i-phase
// exponents per qubit and folds them into a mod-4 accumulator.
inline void phase_masks(uint64_t x1, uint64_t z1, uint64_t x2, uint64_t z2,
                        uint64_t& plus, uint64_t& minus) {
    const uint64_t y1 = x1 & z1;
    const uint64_t xonly1 = x1 & ~z1;
    const uint64_t zonly1 = ~x1 & z1;
    plus  = (y1 & z2 & ~x2) | (xonly1 & z2 & x2) | (zonly1 & x2 & ~z2);
    minus = (y1 & x2 & ~z2) | (xonly1 & z2 & ~x2) | (zonly1 & x2 & z2);
}

}  // namespace

void Tableau::rowmult(uint32_t h, uint32_t i) {
    int phase = 2 * r_[h] + 2 * r_[i];
    uint64_t* xh = xrow(h);
    uint64_t* zh = zrow(h);
    const uint64_t* xi = xrow(i);
    const uint64_t* zi = zrow(i);
    for (uint32_t w = 0; w < words_; ++w) {
        uint64_t plus, minus;
        phase_masks(xi[w], zi[w], xh[w], zh[w], plus, minus);
        phase += std::popcount(plus) - std::popcount(minus);
        xh[w] ^= xi[w];
        zh[w] ^= zi[w];
    }
    phase &= 3;
    // products of commuting Hermitian Paulis stay Hermitian
    r_[h] = static_cast<uint8_t>(phase >> 1);
}

void Tableau::accumulate(std::vector<uint64_t>& ax, std::vector<uint64_t>& az,
                         int& phase, uint32_t i) const {
    const uint64_t* xi = xrow(i);
    const uint64_t* zi = zrow(i);
    phase += 2 * r_[i];
    for (uint32_t w = 0; w < words_; ++w) {
        uint64_t plus, minus;
        phase_masks(xi[w], zi[w], ax[w], az[w], plus, minus);
        phase += std::popcount(plus) - std::popcount(minus);
        ax[w] ^= xi[w];
        az[w] ^= zi[w];
    }
    phase &= 3;
}

int Tableau::measure_z(uint32_t q, Rng& rng) {
    if (q >= n_) throw config_error("measurement qubit out of range");
    const uint32_t w = q >> 6;
    const uint64_t m = 1ull << (q & 63);

    uint32_t p = 2 * n_;
    for (uint32_t i = n_; i < 2 * n_; ++i) {
        if (xrow(i)[w] & m) { p = i; break; }
    }

    if (p < 2 * n_) {
        // outcome random: collapse onto +-Z_q
        for (uint32_t i = 0; i < 2 * n_; ++i) {
            if (i != p && (xrow(i)[w] & m)) rowmult(i, p);
        }
        // old stabilizer becomes the matching destabilizer
        const uint32_t dest = p - n_;
        for (uint32_t ww = 0; ww < words_; ++ww) {
            xrow(dest)[ww] = xrow(p)[ww];
            zrow(dest)[ww] = zrow(p)[ww];
        }
        r_[dest] = r_[p];
        for (uint32_t ww = 0; ww < words_; ++ww) {
            xrow(p)[ww] = 0;
            zrow(p)[ww] = 0;
        }
        zrow(p)[w] |= m;
        const int outcome = rng.bit() ? 1 : 0;
        r_[p] = static_cast<uint8_t>(outcome);
        return outcome;
    }

    // deterministic: product of stabilizers indexed by destabilizer X bits
    std::vector<uint64_t> ax(words_, 0), az(words_, 0);
    int phase = 0;
    for (uint32_t i = 0; i < n_; ++i) {
        if (xrow(i)[w] & m) accumulate(ax, az, phase, n_ + i);
    }
    return (phase >> 1) & 1;
}

bool Tableau::rows_anticommute(const uint64_t* ax, const uint64_t* az, uint32_t row) const {
    uint64_t acc = 0;
    const uint64_t* xr = xrow(row);
    const uint64_t* zr = zrow(row);
    for (uint32_t w = 0; w < words_; ++w)
        acc ^= (ax[w] & zr[w]) ^ (az[w] & xr[w]);
    return std::popcount(acc) & 1;
}

int Tableau::expectation(const PauliString& p) const {
    if (p.width() != n_) throw config_error("observable width mismatch");
    std::vector<uint64_t> px(words_, 0), pz(words_, 0);
    for (uint32_t q = 0; q < n_; ++q) {
        if (p.has_x(q)) px[q >> 6] |= 1ull << (q & 63);
        if (p.has_z(q)) pz[q >> 6] |= 1ull << (q & 63);
    }

    for (uint32_t i = n_; i < 2 * n_; ++i)
        if (rows_anticommute(px.data(), pz.data(), i)) return 0;

    // P commutes with the group, so +-P is a stabilizer product; the factors
    // are the stabilizers whose destabilizer partners anticommute with P.
    std::vector<uint64_t> ax(words_, 0), az(words_, 0);
    int phase = 0;
    for (uint32_t i = 0; i < n_; ++i)
        if (rows_anticommute(px.data(), pz.data(), i)) accumulate(ax, az, phase, n_ + i);

    for (uint32_t w = 0; w < words_; ++w) {
        if (ax[w] != px[w] || az[w] != pz[w])
            throw std::logic_error("stabilizer decomposition mismatch");
    }
    // align the i-phase conventions: the accumulator tracks products of
    // Hermitian rows; a Y letter in P itself carries no extra phase here
    const int sign = ((phase >> 1) & 1) ? -1 : +1;
    return sign * p.sign();
}

bool Tableau::validate() const {
    // stabilizers pairwise commute; destabilizer i anticommutes with
    // stabilizer i and commutes with the others
    std::vector<uint64_t> ax(words_), az(words_);
    for (uint32_t i = 0; i < 2 * n_; ++i) {
        for (uint32_t w = 0; w < words_; ++w) { ax[w] = xrow(i)[w]; az[w] = zrow(i)[w]; }
        for (uint32_t j = 0; j < 2 * n_; ++j) {
            const bool anti = rows_anticommute(ax.data(), az.data(), j);
            bool expect_anti;
            if (i < n_)
                expect_anti = (j == i + n_);
            else
                expect_anti = (j + n_ == i);
            if (anti != expect_anti) return false;
        }
    }
    // full rank over GF(2): Gaussian elimination on the 2n x 2n symplectic matrix
    std::vector<std::vector<uint64_t>> rows(2 * n_, std::vector<uint64_t>(2 * words_));
    for (uint32_t i = 0; i < 2 * n_; ++i) {
        for (uint32_t w = 0; w < words_; ++w) {
            rows[i][w] = xrow(i)[w];
            rows[i][words_ + w] = zrow(i)[w];
        }
    }
    uint32_t rank = 0;
    for (uint32_t col = 0; col < 2 * n_ && rank < 2 * n_; ++col) {
        const uint32_t q = col < n_ ? col : col - n_;
        const uint32_t w = (col < n_ ? 0 : words_) + (q >> 6);
        const uint64_t m = 1ull << (q & 63);
        uint32_t pivot = rank;
        while (pivot < 2 * n_ && !(rows[pivot][w] & m)) ++pivot;
        if (pivot == 2 * n_) continue;
        std::swap(rows[rank], rows[pivot]);
        for (uint32_t i = 0; i < 2 * n_; ++i) {
            if (i != rank && (rows[i][w] & m)) {
                for (uint32_t ww = 0; ww < 2 * words_; ++ww) rows[i][ww] ^= rows[rank][ww];
            }
        }
        ++rank;
    }
    return rank == 2 * n_;
}

PauliChannel::PauliChannel(uint32_t arity, std::vector<PauliChannelOutcome> outcomes)
    : arity_(arity), outcomes_(std::move(outcomes)) {
    double total = 0.0;
    for (const auto& o : outcomes_) {
        if (o.probability < 0.0)
            throw config_error("channel outcome probability must be nonnegative");
        if (o.pauli.width() != arity_)
            throw config_error("channel outcome width must equal channel arity");
        total += o.probability;
    }
    if (total > 1.0 + 1e-12)
        throw config_error("channel outcome probabilities exceed 1");
}

PauliChannel PauliChannel::identity(uint32_t arity) { return PauliChannel(arity, {}); }

PauliChannel PauliChannel::depolarizing1(double p) {
    if (p < 0.0 || p > 1.0) throw config_error("depolarizing probability out of range");
    std::vector<PauliChannelOutcome> outs;
    for (PauliLetter l : {PauliLetter::X, PauliLetter::Y, PauliLetter::Z}) {
        PauliString ps(1);
        ps.set_letter(0, l);
        outs.push_back({p / 3.0, ps});
    }
    return PauliChannel(1, std::move(outs));
}

PauliChannel PauliChannel::depolarizing2(double p) {
    if (p < 0.0 || p > 1.0) throw config_error("depolarizing probability out of range");
    std::vector<PauliChannelOutcome> outs;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            if (a == 0 && b == 0) continue;
            PauliString ps(2);
            ps.set_letter(0, static_cast<PauliLetter>(a));
            ps.set_letter(1, static_cast<PauliLetter>(b));
            outs.push_back({p / 15.0, ps});
        }
    }
    return PauliChannel(2, std::move(outs));
}

PauliChannel PauliChannel::bit_flip(double p) {
    if (p < 0.0 || p > 1.0) throw config_error("bit-flip probability out of range");
    PauliString ps(1);
    ps.set_letter(0, PauliLetter::X);
    return PauliChannel(1, {{p, ps}});
}

PauliChannel PauliChannel::xyz(double px, double py, double pz) {
    std::vector<PauliChannelOutcome> outs;
    PauliString x(1), y(1), z(1);
    x.set_letter(0, PauliLetter::X);
    y.set_letter(0, PauliLetter::Y);
    z.set_letter(0, PauliLetter::Z);
    if (px > 0) outs.push_back({px, x});
    if (py > 0) outs.push_back({py, y});
    if (pz > 0) outs.push_back({pz, z});
    return PauliChannel(1, std::move(outs));
}

double PauliChannel::total_error_probability() const {
    double total = 0.0;
    for (const auto& o : outcomes_) total += o.probability;
    return total;
}

double PauliChannel::probability_of(PauliLetter l) const {
    double total = 0.0;
    for (const auto& o : outcomes_)
        if (o.pauli.width() == 1 && o.pauli.letter(0) == l) total += o.probability;
    return total;
}

void PauliChannel::apply(Tableau& tab, const std::vector<uint32_t>& qubits, Rng& rng) const {
    if (qubits.size() != arity_)
        throw config_error("channel arity does not match targeted qubits");
    if (outcomes_.empty()) return;
    double u = rng.uniform();
    for (const auto& o : outcomes_) {
        if (u < o.probability) {
            for (uint32_t q = 0; q < arity_; ++q) {
                switch (o.pauli.letter(q)) {
                    case PauliLetter::I: break;
                    case PauliLetter::X: tab.apply_x(qubits[q]); break;
                    case PauliLetter::Y: tab.apply_y(qubits[q]); break;
                    case PauliLetter::Z: tab.apply_z(qubits[q]); break;
                }
            }
            return;
        }
        u -= o.probability;
    }
}

}  // namespace eftvqa
