#pragma once

#include <stdexcept>
#include <string>

namespace mzeta {

/// Caller broke an API contract (wrong table, bad index, malformed input).
class usage_error : public std::invalid_argument {
public:
    explicit usage_error(const std::string& msg) : std::invalid_argument(msg) {}
};

/// The requested value does not exist mathematically (non-invertible series,
/// illegal negative exponent, insufficient lambda-data, ...).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& msg) : std::domain_error(msg) {}
};

/// I/O failure (cache files, documents).
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace mzeta
