#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qheis {

/// A mathematical precondition was violated (pq = 1, zero scalar, non-simple
/// module, ...). The CLI maps this to exit code 1.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed textual input. Carries the byte offset of the offending token.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, std::size_t offset)
        : std::invalid_argument(message + " at offset " + std::to_string(offset)),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace qheis
