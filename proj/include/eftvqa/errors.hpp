#ifndef EFTVQA_ERRORS_HPP
#define EFTVQA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eftvqa {

// Invalid user-supplied configuration (bad sizes, malformed tables, unknown
// keys). Maps to CLI exit code 2.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// A program that cannot be placed on the requested device/budget.
// Maps to CLI exit code 3.
struct no_fit_error : std::runtime_error {
    explicit no_fit_error(const std::string& what) : std::runtime_error(what) {}
};

// A gate outside the supported set for the requested execution path
// (e.g. a non-pi/2 Rz sent to the Clifford simulator).
struct unsupported_gate_error : std::runtime_error {
    explicit unsupported_gate_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace eftvqa

#endif
