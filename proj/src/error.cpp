#include "pebbling/error.hpp"

namespace pebbling {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::RingIndexOutOfRange: return "RingIndexOutOfRange";
    case ErrorKind::NoPath: return "NoPath";
    case ErrorKind::PathLimitExceeded: return "PathLimitExceeded";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::RootHasNoWeight: return "RootHasNoWeight";
    case ErrorKind::ZeroMinWeight: return "ZeroMinWeight";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::GraphMismatch: return "GraphMismatch";
    case ErrorKind::InvalidRational: return "InvalidRational";
    case ErrorKind::InvalidCertificate: return "InvalidCertificate";
    case ErrorKind::PeripheralUnreachable: return "PeripheralUnreachable";
    case ErrorKind::CannotCover: return "CannotCover";
    case ErrorKind::UnsupportedTarget: return "UnsupportedTarget";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::FixtureMissing: return "FixtureMissing";
    case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

} // namespace pebbling
