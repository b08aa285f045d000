#pragma once

#include <stdexcept>
#include <string>

namespace groupfair {

// Base for all recoverable library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or invalid input documents (instances, allocations, lotteries, rationals).
class ParseError : public Error {
public:
    using Error::Error;
};

// The allocation space exceeds the configured guard. Refusal is explicit:
// callers either raise the limit or pick a smaller instance.
class SizeLimitError : public Error {
public:
    SizeLimitError(std::string space_size, std::uint64_t limit)
        : Error("allocation space has " + space_size + " allocations, exceeding the limit of " +
                std::to_string(limit) + " (raise it with --max-size or GROUPFAIR_MAX_SIZE)"),
          space_size_(std::move(space_size)),
          limit_(limit) {}

    const std::string& space_size() const { return space_size_; }
    std::uint64_t limit() const { return limit_; }

private:
    std::string space_size_;
    std::uint64_t limit_;
};

}  // namespace groupfair
