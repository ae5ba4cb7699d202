#pragma once

#include <stdexcept>
#include <string>

namespace nres {

// Base for everything thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A precondition of an operation failed. `code` names the condition
// (NotToric, NotNoetherPosition, ...) so callers can dispatch on it;
// the CLI maps these to exit status 2.
class ValidationError : public Error {
public:
    ValidationError(std::string code, const std::string& msg)
        : Error(code + ": " + msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// Malformed textual input; the CLI maps these to exit status 1.
struct ParseError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
    throw ValidationError(code, msg);
}

} // namespace nres
