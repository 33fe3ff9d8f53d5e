#pragma once

#include <stdexcept>
#include <string>

namespace hst {

/// Thrown when a caller violates a documented precondition.
class contract_error : public std::logic_error {
public:
    explicit contract_error(const std::string& what) : std::logic_error(what) {}
};

/// Thrown when a computation would exceed a configured resource guard.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when internal cross-checks fail; signals a bug or corrupt input data.
class integrity_error : public std::runtime_error {
public:
    explicit integrity_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hst
