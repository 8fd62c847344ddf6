#include "eftvqa/pauli.hpp"

#include "eftvqa/errors.hpp"

namespace eftvqa {

PauliString::PauliString(uint32_t width, int sign)
    : letters_(width, PauliLetter::I) {
    set_sign(sign);
}

void PauliString::set_sign(int sign) {
    if (sign != +1 && sign != -1)
        throw config_error("PauliString sign must be +1 or -1");
    sign_ = sign;
}

PauliString PauliString::parse(const std::string& text) {
    size_t pos = 0;
    int sign = +1;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        sign = text[0] == '-' ? -1 : +1;
        pos = 1;
    }
    PauliString p(static_cast<uint32_t>(text.size() - pos), sign);
    for (uint32_t q = 0; pos < text.size(); ++pos, ++q) {
        switch (text[pos]) {
            case 'I': p.set_letter(q, PauliLetter::I); break;
            case 'X': p.set_letter(q, PauliLetter::X); break;
            case 'Y': p.set_letter(q, PauliLetter::Y); break;
            case 'Z': p.set_letter(q, PauliLetter::Z); break;
            default:
                throw config_error("invalid Pauli letter '" + std::string(1, text[pos]) + "'");
        }
    }
    return p;
}

bool PauliString::is_identity() const {
    for (auto l : letters_)
        if (l != PauliLetter::I) return false;
    return true;
}

uint32_t PauliString::weight() const {
    uint32_t w = 0;
    for (auto l : letters_)
        if (l != PauliLetter::I) ++w;
    return w;
}

bool PauliString::commutes_with(const PauliString& other) const {
    if (width() != other.width())
        throw config_error("Pauli width mismatch in commutator check");
    uint32_t anti = 0;
    for (uint32_t q = 0; q < width(); ++q) {
        bool a = (has_x(q) && other.has_z(q)) != (has_z(q) && other.has_x(q));
        anti ^= a ? 1u : 0u;
    }
    return anti == 0;
}

std::string PauliString::to_string() const {
    static const char kNames[] = {'I', 'X', 'Y', 'Z'};
    std::string s;
    s.reserve(width());
    for (auto l : letters_) s.push_back(kNames[static_cast<int>(l)]);
    return s;
}

}  // namespace eftvqa
