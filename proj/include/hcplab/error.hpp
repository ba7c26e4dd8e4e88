#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hcplab {

/// Base of every error raised by the library. The CLI maps any of these to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SelfLoop : public Error {
public:
    explicit SelfLoop(int vertex)
        : Error("self-loop on vertex " + std::to_string(vertex)), vertex_(vertex) {}
    int vertex() const noexcept { return vertex_; }

private:
    int vertex_;
};

class VertexOutOfRange : public Error {
public:
    VertexOutOfRange(int vertex, int n)
        : Error("vertex " + std::to_string(vertex) + " out of range [1, " + std::to_string(n) + "]"),
          vertex_(vertex), n_(n) {}
    int vertex() const noexcept { return vertex_; }
    int n() const noexcept { return n_; }

private:
    int vertex_;
    int n_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class InfeasibleFamily : public Error {
public:
    using Error::Error;
};

class TooLarge : public Error {
public:
    TooLarge(int n, int cap)
        : Error("graph has " + std::to_string(n) + " vertices, cap is " + std::to_string(cap)),
          n_(n), cap_(cap) {}
    int n() const noexcept { return n_; }
    int cap() const noexcept { return cap_; }

private:
    int n_;
    int cap_;
};

class InvalidCycle : public Error {
public:
    using Error::Error;
};

class NoUnvisitedNeighbor : public Error {
public:
    explicit NoUnvisitedNeighbor(int vertex)
        : Error("vertex " + std::to_string(vertex) + " has no unvisited neighbor") {}
};

class MalformedTape : public Error {
public:
    using Error::Error;
};

class NotFinal : public Error {
public:
    NotFinal() : Error("superposition contains non-final configurations") {}
};

class DomainMismatch : public Error {
public:
    using Error::Error;
};

}  // namespace hcplab
