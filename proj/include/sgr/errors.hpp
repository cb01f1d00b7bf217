#pragma once

#include <stdexcept>
#include <string>

namespace sgr {

// Every failure carries a short tag (e.g. "Cond1Violation") that reports and
// tests match on, plus free-form witness text.
class Error : public std::runtime_error {
public:
    Error(std::string tag, const std::string& what)
        : std::runtime_error(tag + ": " + what), tag_(std::move(tag)) {}
    const std::string& tag() const { return tag_; }

private:
    std::string tag_;
};

// Malformed or unsupported input. CLI exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

// A verified mathematical failure. CLI exit code 1.
class MathError : public Error {
public:
    using Error::Error;
};

class OutOfWindow : public Error {
public:
    explicit OutOfWindow(const std::string& what) : Error("OutOfWindow", what) {}
};

}  // namespace sgr
