#pragma once

#include <stdexcept>
#include <string>

namespace gkz {

/// Mathematical precondition failure. `kind` is a stable name such as
/// "NonGenericWeight" that the CLI prints and tests match on.
class MathError : public std::runtime_error {
public:
    MathError(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

/// Malformed input document.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& what) {
    throw MathError(kind, what);
}

}  // namespace gkz
