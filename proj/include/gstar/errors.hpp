#pragma once

#include <stdexcept>
#include <string>

namespace gstar {

// Invalid input or parameter (CLI exit code 1).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Input is valid but exceeds an exact-computation threshold (CLI exit code 2).
struct capability_error : std::runtime_error {
    explicit capability_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gstar
