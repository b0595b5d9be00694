#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace lrsaa {

// All library failures carry a stable category string. The CLI prints the
// category as the first token of its single-line error output, so scripts
// can branch on it without parsing free text.
class Error : public std::runtime_error {
public:
    Error(std::string category, const std::string& message)
        : std::runtime_error(category + ": " + message), category_(std::move(category)) {}

    const std::string& category() const noexcept { return category_; }

private:
    std::string category_;
};

[[noreturn]] inline void fail(std::string category, const std::string& message) {
    throw Error(std::move(category), message);
}

} // namespace lrsaa
