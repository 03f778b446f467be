#pragma once

#include <stdexcept>
#include <string>

namespace ebraid {

struct MalformedBraid : std::runtime_error {
    explicit MalformedBraid(const std::string& what) : std::runtime_error(what) {}
};

struct IndexOutOfRange : std::out_of_range {
    explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct LengthMismatch : std::invalid_argument {
    explicit LengthMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct TooManyCrossings : std::runtime_error {
    explicit TooManyCrossings(const std::string& what) : std::runtime_error(what) {}
};

struct TooManyStrands : std::runtime_error {
    explicit TooManyStrands(const std::string& what) : std::runtime_error(what) {}
};

struct PositionOutOfRange : std::out_of_range {
    explicit PositionOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct ComponentNotIntegral : std::domain_error {
    explicit ComponentNotIntegral(const std::string& what) : std::domain_error(what) {}
};

// Internal-consistency failures: these indicate a bug, not bad input.
struct DifferentialNotSquareZero : std::logic_error {
    explicit DifferentialNotSquareZero(const std::string& what) : std::logic_error(what) {}
};

struct SignSystemInconsistent : std::logic_error {
    explicit SignSystemInconsistent(const std::string& what) : std::logic_error(what) {}
};

struct MethodDisagreement : std::runtime_error {
    explicit MethodDisagreement(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ebraid
