#include "scflip/errors.hpp"

namespace scflip {

const char* to_string(ErrorCode c) {
    switch (c) {
        case ErrorCode::InvalidElement: return "invalid-element";
        case ErrorCode::Range: return "range";
        case ErrorCode::UnsupportedShape: return "unsupported-shape";
        case ErrorCode::NotAnIdeal: return "not-an-ideal";
        case ErrorCode::Validation: return "validation";
        case ErrorCode::PosetMismatch: return "poset-mismatch";
        case ErrorCode::CapExceeded: return "cap-exceeded";
        case ErrorCode::GuardExceeded: return "guard-exceeded";
        case ErrorCode::Invariant: return "invariant";
        case ErrorCode::Unsupported: return "unsupported";
        case ErrorCode::NoSeed: return "no-seed";
    }
    return "unknown";
}

void fail(ErrorCode code, const std::string& what) {
    throw Error(code, std::string(to_string(code)) + ": " + what);
}

}  // namespace scflip
