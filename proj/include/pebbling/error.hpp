#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pebbling {

enum class ErrorKind {
    DuplicateEdge,
    SelfLoop,
    UnknownLabel,
    Disconnected,
    DuplicateLabel,
    RingIndexOutOfRange,
    NoPath,
    PathLimitExceeded,
    InvalidParameter,
    RootHasNoWeight,
    ZeroMinWeight,
    SyntaxError,
    UnknownVertex,
    GraphMismatch,
    InvalidRational,
    InvalidCertificate,
    PeripheralUnreachable,
    CannotCover,
    UnsupportedTarget,
    ResourceLimit,
    BudgetExceeded,
    InternalInconsistency,
    FixtureMissing,
    IoError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace pebbling
