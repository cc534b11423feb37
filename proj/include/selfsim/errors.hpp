#ifndef SELFSIM_ERRORS_HPP
#define SELFSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace selfsim {

// Refusal to run an operation whose input exceeds a configured size cap.
struct SizeLimitError : std::runtime_error {
    explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file or preset string.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace selfsim

#endif
