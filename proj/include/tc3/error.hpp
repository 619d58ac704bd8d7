#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tc3 {

enum class ErrorKind {
    NotConnected,
    SelfIntersecting,
    MalformedBoundary,
    InvalidSpec,
    EndpointMismatch,
    AlreadyMonotonicInRegion,
    MultipleCrossings,
    NoOverlap,
    MultipleOverlapRuns,
    InvalidSurface,
    NotAGroundSector,
    OutOfRegion,
    DimensionMismatch,
    TooLarge,
    SyntaxError,
    SemanticError,
    InvalidArgument,
    UnknownCommand,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace tc3
