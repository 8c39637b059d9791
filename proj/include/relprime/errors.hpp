#pragma once

#include <stdexcept>
#include <string>

namespace relprime {

/// Thrown when an argument violates an operation's precondition
/// (n = 0, d not dividing n, empty set, guard exceeded, ...).
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline void require(bool ok, const std::string& what)
{
    if (!ok)
        throw precondition_error(what);
}

} // namespace relprime
