#pragma once

#include <stdexcept>
#include <string>

namespace toprand {

/// Malformed input: bad sizes, out-of-range labels, invalid group tables.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A brute-force enumeration would exceed its configured tuple cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool condition, const std::string& message)
{
    if (!condition) throw InvalidArgument(message);
}

} // namespace detail

} // namespace toprand
