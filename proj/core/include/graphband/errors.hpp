#ifndef GRAPHBAND_ERRORS_HPP
#define GRAPHBAND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace graphband {

// Invalid or inconsistent input (documents, parameters).  CLI exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A guaranteed inclusion failed.  Signals a bug, never ignored.  CLI exit code 3.
class TheoremError : public std::runtime_error {
public:
    explicit TheoremError(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal numerical failure (residuals, non-Hermitian input).  CLI exit code 4.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace graphband

#endif
