#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dbx {

// Input/grammar failure. Carries a 0-based offset into the offending text.
class parse_error : public std::runtime_error {
  public:
    parse_error(std::string msg, std::size_t position)
        : std::runtime_error(std::move(msg)), pos(position) {}
    std::size_t pos;
};

// A mathematical precondition or verification failed (claimed curve not
// invariant, point not singular, inconsistent integrating factor, ...).
class math_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// The computation cannot decide within its configured bounds (series
// truncation too short, multiplier-degree cap reached).
class inconclusive_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace dbx
