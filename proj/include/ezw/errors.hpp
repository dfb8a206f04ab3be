#pragma once

#include <stdexcept>
#include <string>

namespace ezw {

/// Thrown when an argument violates an operation's preconditions
/// (bad dimensions, non-positive threshold, out-of-range coordinate, ...).
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when serialized bytes (PGM file, EZW1 stream) do not parse.
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
    FormatError(const std::string& what, size_t byte_offset)
        : std::runtime_error(what + " at byte " + std::to_string(byte_offset)),
          offset_(byte_offset) {}

    size_t byte_offset() const { return offset_; }

private:
    size_t offset_ = 0;
};

} // namespace ezw
