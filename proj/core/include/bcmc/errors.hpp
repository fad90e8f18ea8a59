#ifndef BCMC_ERRORS_HPP
#define BCMC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bcmc {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed edge-list input. `line` is 1-based; 0 means the input as a whole.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class DisconnectedGraphError : public Error {
public:
    explicit DisconnectedGraphError(std::vector<std::size_t> sizes)
        : Error(describe(sizes)), component_sizes_(std::move(sizes)) {}

    const std::vector<std::size_t>& component_sizes() const { return component_sizes_; }

private:
    static std::string describe(const std::vector<std::size_t>& sizes) {
        std::string msg = "graph is disconnected (component sizes:";
        for (std::size_t s : sizes) msg += " " + std::to_string(s);
        return msg + ")";
    }
    std::vector<std::size_t> component_sizes_;
};

class UnknownVertexError : public Error {
public:
    explicit UnknownVertexError(const std::string& label)
        : Error("vertex '" + label + "' is not in the graph") {}
};

/// Shortest-path counts exceeded 64-bit range.
class SigmaOverflowError : public Error {
public:
    SigmaOverflowError() : Error("shortest-path count overflows 64 bits") {}
};

/// The target vertex lies on no shortest path: every dependency score on it is zero.
class AllZeroDependencyError : public Error {
public:
    using Error::Error;
};

class EmptyStratumError : public Error {
public:
    using Error::Error;
};

class ZeroDenominatorError : public Error {
public:
    using Error::Error;
};

/// Oracle size guard tripped (brute force and kernel builders are desk-scale only).
class TooLargeError : public Error {
public:
    using Error::Error;
};

class InvalidParameterError : public Error {
public:
    using Error::Error;
};

}  // namespace bcmc

#endif  // BCMC_ERRORS_HPP
