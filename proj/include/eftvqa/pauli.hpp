#ifndef EFTVQA_PAULI_HPP
#define EFTVQA_PAULI_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace eftvqa {

enum class PauliLetter : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

// An n-qubit Pauli operator with an overall sign of +1 or -1.
class PauliString {
public:
    PauliString() = default;
    PauliString(uint32_t width, int sign = +1);

    // Parses strings like "XXIZ" or "-IZY".
    static PauliString parse(const std::string& text);

    uint32_t width() const { return static_cast<uint32_t>(letters_.size()); }
    int sign() const { return sign_; }
    void set_sign(int sign);

    PauliLetter letter(uint32_t q) const { return letters_[q]; }
    void set_letter(uint32_t q, PauliLetter l) { letters_[q] = l; }

    bool has_x(uint32_t q) const {
        return letters_[q] == PauliLetter::X || letters_[q] == PauliLetter::Y;
    }
    bool has_z(uint32_t q) const {
        return letters_[q] == PauliLetter::Z || letters_[q] == PauliLetter::Y;
    }

    bool is_identity() const;
    uint32_t weight() const;  // number of non-identity letters

    bool commutes_with(const PauliString& other) const;

    std::string to_string() const;  // letters only, sign folded out
    bool operator==(const PauliString& other) const = default;

private:
    std::vector<PauliLetter> letters_;
    int sign_ = +1;
};

}  // namespace eftvqa

#endif
