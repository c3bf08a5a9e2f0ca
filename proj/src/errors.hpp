#ifndef HYPERSTATE_ERRORS_HPP
#define HYPERSTATE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hyperstate {

struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedFamily : std::runtime_error {
    explicit UnsupportedFamily(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedCase : std::runtime_error {
    explicit UnsupportedCase(const std::string& what) : std::runtime_error(what) {}
};

struct NotGhzOddForm : std::runtime_error {
    explicit NotGhzOddForm(const std::string& what) : std::runtime_error(what) {}
};

struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

struct CrossCheckFailure : std::runtime_error {
    explicit CrossCheckFailure(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hyperstate

#endif
