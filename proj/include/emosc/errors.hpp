#ifndef EMOSC_ERRORS_HPP
#define EMOSC_ERRORS_HPP

#include <stdexcept>
#include <string>

// Error taxonomy for the emosc library. Every failure mode the library can
// diagnose maps to one of these types so callers (and the CLI) can translate
// them into stable exit codes and messages.

namespace emosc {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input validation failed (negative mass, non-finite field, ...).
struct InvalidInput : Error {
    using Error::Error;
};

// A potential-free axis carries a nonzero uniform force: the center shift /
// completion of squares does not exist.
struct DegenerateAxis : Error {
    using Error::Error;
};

// A planar normal-mode frequency vanishes (free or unbound mode); the
// discrete-spectrum machinery does not apply.
struct ZeroMode : Error {
    using Error::Error;
};

// Mode-vector normalization drifted: |u_i . v_i - 1| exceeded tolerance.
struct NormalizationFailure : Error {
    using Error::Error;
};

// A requested state is not square-integrable (quadratic form not positive).
struct NonNormalizable : Error {
    using Error::Error;
};

// A variance radicand came out negative beyond roundoff.
struct NegativeRadicand : Error {
    using Error::Error;
};

// Grid too coarse or domain too small for the state it must represent.
struct ResolutionError : Error {
    using Error::Error;
};

// Iterative eigensolver ran out of its iteration budget.
struct ConvergenceFailure : Error {
    using Error::Error;
};

// Iterative linear solve inside the propagator failed to reach tolerance.
struct SolverStall : Error {
    using Error::Error;
};

// System configuration file could not be parsed; carries the line number.
struct ConfigParseError : Error {
    int line;
    ConfigParseError(int line_, const std::string& msg)
        : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// Configuration admits no normalizable solution (untrapped axis pushed by a
// uniform force in a way that cannot be transformed away).
struct Unsolvable : Error {
    using Error::Error;
};

}  // namespace emosc

#endif
