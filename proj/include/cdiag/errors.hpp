#pragma once

#include <stdexcept>
#include <string>

namespace cdiag {

enum class errc {
    duplicate_edge,
    self_loop,
    non_positive_weight,
    cycle_not_square,
    out_of_range,
    not_skew_symmetrizable,
    weight_overflow,
    internal_non_square,
    size_limit,
    limit_exceeded,
    arf_undefined,
    not_connected,
    length_mismatch,
    unsupported_size,
    precondition_violated,
    bad_params,
    io_error,
    format_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::self_loop: return "SelfLoop";
    case errc::non_positive_weight: return "NonPositiveWeight";
    case errc::cycle_not_square: return "CycleNotSquare";
    case errc::out_of_range: return "OutOfRange";
    case errc::not_skew_symmetrizable: return "NotSkewSymmetrizable";
    case errc::weight_overflow: return "WeightOverflow";
    case errc::internal_non_square: return "InternalNonSquare";
    case errc::size_limit: return "SizeLimit";
    case errc::limit_exceeded: return "LimitExceeded";
    case errc::arf_undefined: return "ArfUndefined";
    case errc::not_connected: return "NotConnected";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::unsupported_size: return "UnsupportedSize";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::bad_params: return "BadParams";
    case errc::io_error: return "IoError";
    case errc::format_error: return "FormatError";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

} // namespace cdiag
