#pragma once

#include <stdexcept>
#include <string>

namespace lm {

/// A requested code construction cannot injectively encode all N labels.
class not_injective_error : public std::invalid_argument {
public:
    explicit not_injective_error(const std::string& what) : std::invalid_argument(what) {}
};

/// More sites requested than the construction supports (n > p for Reed-Solomon).
class too_many_sites_error : public std::invalid_argument {
public:
    explicit too_many_sites_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Exact computation refused because the instance is too large; never silently
/// falls back to sampling.
class unsupported_error : public std::invalid_argument {
public:
    explicit unsupported_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed input file; the message carries the 1-based line number.
class parse_error : public std::invalid_argument {
public:
    parse_error(const std::string& what, std::size_t line)
        : std::invalid_argument(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

} // namespace lm
