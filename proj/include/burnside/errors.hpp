#pragma once

#include <stdexcept>
#include <string>

namespace burnside {

struct NotAPermutation : std::runtime_error {
    explicit NotAPermutation(const std::string& what) : std::runtime_error(what) {}
};

struct GroupTooLarge : std::runtime_error {
    explicit GroupTooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct NotASubgroup : std::runtime_error {
    explicit NotASubgroup(const std::string& what) : std::runtime_error(what) {}
};

struct GroupMismatch : std::runtime_error {
    explicit GroupMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct NotInLattice : std::runtime_error {
    explicit NotInLattice(const std::string& what) : std::runtime_error(what) {}
};

struct SizeExceeded : std::runtime_error {
    explicit SizeExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a norm or restriction produces marks outside the lattice.
// That can only happen through an internal bug, so it is a logic_error.
struct IntegralityViolation : std::logic_error {
    explicit IntegralityViolation(const std::string& what) : std::logic_error(what) {}
};

struct IndexOutOfRange : std::runtime_error {
    explicit IndexOutOfRange(const std::string& what) : std::runtime_error(what) {}
};

} // namespace burnside
