#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace scflip {

enum class ErrorCode {
    InvalidElement,
    Range,
    UnsupportedShape,
    NotAnIdeal,
    Validation,
    PosetMismatch,
    CapExceeded,
    GuardExceeded,
    Invariant,
    Unsupported,
    NoSeed,
};

const char* to_string(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Thrown by enumerate when the cap trips; carries how far it got.
class PartialResult : public Error {
public:
    PartialResult(const std::string& what, std::uint64_t found)
        : Error(ErrorCode::CapExceeded, what), found_(found) {}
    std::uint64_t found() const noexcept { return found_; }

private:
    std::uint64_t found_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

inline void invariant(bool ok, const char* what) {
    if (!ok) fail(ErrorCode::Invariant, what);
}

}  // namespace scflip
