#ifndef MONO_ERRORS_HPP
#define MONO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mono {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Structurally invalid input (wrong variable count, bad weight, ...).
struct malformed_input : error {
    using error::error;
};

/// Operation undefined for this input (unit ideal to the Hilbert engine, ...).
struct degenerate_input : error {
    using error::error;
};

/// A configured enumeration or size cap was exceeded.
struct resource_limit : error {
    using error::error;
};

/// A closed-form formula was requested outside its hypothesis.
struct hypothesis_violated : error {
    using error::error;
};

struct not_squarefree : error {
    using error::error;
};

/// Text input rejected; carries 1-based line/column.
struct parse_error : error {
    parse_error(std::size_t line, std::size_t col, const std::string& msg)
        : error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
          line(line), col(col) {}
    std::size_t line;
    std::size_t col;
};

} // namespace mono

#endif
