// Dense statevector simulator used as an independent oracle for the
// stabilizer tableau. Test-only; kept free of any tableau code.
#ifndef EFTVQA_TESTS_ORACLE_STATEVECTOR_HPP
#define EFTVQA_TESTS_ORACLE_STATEVECTOR_HPP

#include <bit>
#include <cmath>
#include <complex>
#include <vector>

#include "eftvqa/circuit.hpp"
#include "eftvqa/pauli.hpp"

namespace eftvqa::testing {

class Statevector {
public:
    explicit Statevector(uint32_t n) : n_(n), amp_(size_t(1) << n, {0.0, 0.0}) {
        amp_[0] = {1.0, 0.0};
    }

    uint32_t num_qubits() const { return n_; }

    void apply(const Gate& g) {
        using cd = std::complex<double>;
        switch (g.kind) {
            case GateKind::H:
                map1(g.q0, [](cd a0, cd a1) {
                    const double inv = 1.0 / std::sqrt(2.0);
                    return std::pair<cd, cd>{(a0 + a1) * inv, (a0 - a1) * inv};
                });
                break;
            case GateKind::S:
                map1(g.q0, [](cd a0, cd a1) {
                    return std::pair<cd, cd>{a0, cd(0, 1) * a1};
                });
                break;
            case GateKind::Sdg:
                map1(g.q0, [](cd a0, cd a1) {
                    return std::pair<cd, cd>{a0, cd(0, -1) * a1};
                });
                break;
            case GateKind::X:
                map1(g.q0, [](cd a0, cd a1) { return std::pair<cd, cd>{a1, a0}; });
                break;
            case GateKind::Y:
                map1(g.q0, [](cd a0, cd a1) {
                    return std::pair<cd, cd>{cd(0, -1) * a1, cd(0, 1) * a0};
                });
                break;
            case GateKind::Z:
                map1(g.q0, [](cd a0, cd a1) { return std::pair<cd, cd>{a0, -a1}; });
                break;
            case GateKind::Rz: {
                const cd e0 = std::exp(cd(0, -g.angle / 2));
                const cd e1 = std::exp(cd(0, g.angle / 2));
                map1(g.q0, [&](cd a0, cd a1) {
                    return std::pair<cd, cd>{e0 * a0, e1 * a1};
                });
                break;
            }
            case GateKind::CX: {
                const uint64_t cm = 1ull << g.q0, tm = 1ull << g.q1;
                for (uint64_t i = 0; i < amp_.size(); ++i)
                    if ((i & cm) && !(i & tm)) std::swap(amp_[i], amp_[i | tm]);
                break;
            }
            case GateKind::MeasureZ:
                throw std::runtime_error("oracle does not measure");
        }
    }

    double expectation(const PauliString& p) const {
        using cd = std::complex<double>;
        uint64_t xmask = 0, zmask = 0;
        uint32_t ys = 0;
        for (uint32_t q = 0; q < n_; ++q) {
            if (p.has_x(q)) xmask |= 1ull << q;
            if (p.has_z(q)) zmask |= 1ull << q;
            if (p.letter(q) == PauliLetter::Y) ++ys;
        }
        const cd iy = std::pow(cd(0, 1), ys);
        cd acc = 0.0;
        for (uint64_t j = 0; j < amp_.size(); ++j) {
            const uint64_t out = j ^ xmask;
            const int sign = (std::popcount(j & zmask) & 1) ? -1 : 1;
            acc += std::conj(amp_[out]) * (iy * double(sign)) * amp_[j];
        }
        return acc.real() * p.sign();
    }

private:
    template <typename Fn>
    void map1(uint32_t q, Fn&& fn) {
        const uint64_t m = 1ull << q;
        for (uint64_t i = 0; i < amp_.size(); ++i) {
            if (i & m) continue;
            auto [a0, a1] = fn(amp_[i], amp_[i | m]);
            amp_[i] = a0;
            amp_[i | m] = a1;
        }
    }

    uint32_t n_;
    std::vector<std::complex<double>> amp_;
};

}  // namespace eftvqa::testing

#endif
