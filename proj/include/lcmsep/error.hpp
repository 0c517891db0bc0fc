#pragma once

#include <stdexcept>
#include <string>

namespace lcmsep {

/// Error with a stable machine-checkable code ("DegenerateTriangle", ...).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

}  // namespace lcmsep
