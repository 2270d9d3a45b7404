#ifndef INISIM_ERROR_HPP
#define INISIM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace inisim {

/// Error codes for contract violations raised by the signal-chain operations.
enum class ErrorCode {
    NonIntegerCp,
    ScalingMismatch,
    CpTooLong,
    RolloffTooLarge,
    LengthMismatch,
    SymbolCountMismatch,
    GridMisalignment,
    WindowOutOfRange,
    EmptyInput,
    UnknownPreset,
    ParseError,
    IoError,
};

const char* error_code_name(ErrorCode code);

class SimError : public std::runtime_error {
public:
    SimError(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace inisim

#endif
