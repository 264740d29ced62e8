#ifndef GCX_ERROR_HPP
#define GCX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gcx {

enum class ErrorCode {
    BadVertex,
    NoSuchEdge,
    SizeMismatch,
    BadShape,
    LowValence,
    NotAComplex,
    DegreeOutOfRange,
    UnitInput,
    NonzeroConstantTerm,
    EmptyLeft,
    LengthMismatch,
    NotMixed,
    NotABoundary,
    NoSuchRoute,
    Parse
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode c, const std::string& what)
        : std::runtime_error(std::string(error_name(c)) + ": " + what), code_(c) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace gcx

#endif
