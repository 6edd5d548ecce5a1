#pragma once

#include <stdexcept>
#include <string>

namespace relgraph {

enum class ErrorKind {
    universe_mismatch,
    image_not_full,
    has_loops,
    hall_satisfied,
    cap_exceeded,
    precondition,
    parse,
};

const char* to_string(ErrorKind kind) noexcept;

// Single exception type for every library failure; `kind()` lets callers
// (the CLI in particular) map failures to exit codes without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace relgraph
