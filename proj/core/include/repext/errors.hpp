#pragma once

#include <stdexcept>
#include <string>

namespace repext {

// Bad user-supplied data (files, tables, matrices). CLI maps this to exit 1.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A residual or internal identity check failed. CLI maps this to exit 2.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace repext
