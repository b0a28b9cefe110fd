#pragma once

#include <stdexcept>
#include <string>

namespace ldgm {

// Mismatched vector/matrix dimensions.
struct DimensionError : std::runtime_error {
    explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};

// An ensemble spec or config violates its invariants.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// An exhaustive computation was requested beyond its configured cap.
// Always explicit; nothing is silently truncated.
struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// A formula argument is outside its mathematical domain.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A root-finding bracket has no sign change. Reported, never guessed around.
struct BracketError : std::runtime_error {
    explicit BracketError(const std::string& what) : std::runtime_error(what) {}
};

// File parse/write failure.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ldgm
