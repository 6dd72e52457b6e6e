#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nodecut {

enum class ErrorKind {
    Parse,
    ZeroInternalDegree,
    NotANeighbor,
    NotAMember,
    WeightedUnsupported,
    EmptyCut,
    NoFrontier,
    DisconnectedGraph,
    TooLarge,
    EmptyUnion,
    NoLowerCommunity,
    UnknownLabel,
    Io,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for every failure the library reports. The kind
/// identifies the contract that was violated; the CLI maps kinds to exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace nodecut
