#pragma once

#include <stdexcept>
#include <string>

namespace isocover {

/// Malformed or inconsistent input, e.g. an unknown vertex or a broken file.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// The input is well formed but outside the operation's domain (e.g. radius of a disconnected graph).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Instance exceeds the exact oracles' configured vertex bound.
class SizeError : public std::length_error {
public:
    explicit SizeError(const std::string& what) : std::length_error(what) {}
};

} // namespace isocover
