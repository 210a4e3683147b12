#pragma once

#include <stdexcept>
#include <string>

namespace locdim {

// Base class for every error this library throws on bad input or exceeded caps.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SelfLoopError : Error {
    explicit SelfLoopError(int v)
        : Error("self-loop at vertex " + std::to_string(v)), vertex(v) {}
    int vertex;
};

struct VertexOutOfRangeError : Error {
    VertexOutOfRangeError(int v, int n)
        : Error("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n) + ")"),
          vertex(v) {}
    int vertex;
};

struct EmptySetError : Error {
    EmptySetError() : Error("vertex set must be nonempty") {}
};

struct BadOrderError : Error {
    explicit BadOrderError(const std::string& what) : Error(what) {}
};

struct DisconnectedError : Error {
    DisconnectedError() : Error("graph is not connected") {}
};

struct TrivialGraphError : Error {
    TrivialGraphError() : Error("graph has fewer than 2 vertices") {}
};

struct SearchLimitError : Error {
    SearchLimitError(int n, int cap)
        : Error("exact search on " + std::to_string(n) + " vertices exceeds cap " +
                std::to_string(cap)) {}
};

struct TooLargeError : Error {
    TooLargeError(int n, int cap)
        : Error("instance size " + std::to_string(n) + " exceeds cap " + std::to_string(cap)) {}
};

struct InfeasibleError : Error {
    InfeasibleError() : Error("no completion exists") {}
};

struct InconsistentDecompositionError : Error {
    explicit InconsistentDecompositionError(const std::string& what) : Error(what) {}
};

struct ArityMismatchError : Error {
    explicit ArityMismatchError(const std::string& what) : Error(what) {}
};

struct BadIdentificationError : Error {
    explicit BadIdentificationError(const std::string& what) : Error(what) {}
};

struct DisconnectedResultError : Error {
    DisconnectedResultError() : Error("identification pattern does not connect all parts") {}
};

struct BadSpecError : Error {
    explicit BadSpecError(const std::string& what) : Error(what) {}
};

struct MissingBaseError : Error {
    MissingBaseError() : Error("bipartite factor requires the base graph") {}
};

struct BadBlockOrderError : Error {
    explicit BadBlockOrderError(int order)
        : Error("block of order " + std::to_string(order) +
                " below 3; use the general engine instead") {}
};

struct BadConfigError : Error {
    explicit BadConfigError(const std::string& what) : Error(what) {}
};

// DSL parse failure with source position.
struct SyntaxError : Error {
    SyntaxError(int line_, int col_, const std::string& expected_)
        : Error("syntax error at " + std::to_string(line_) + ":" + std::to_string(col_) +
                ": expected " + expected_),
          line(line_), col(col_), expected(expected_) {}
    int line;
    int col;
    std::string expected;
};

struct UnknownIdentifierError : Error {
    UnknownIdentifierError(const std::string& name, int line_, int col_)
        : Error("unknown identifier '" + name + "' at " + std::to_string(line_) + ":" +
                std::to_string(col_)),
          line(line_), col(col_) {}
    int line;
    int col;
};

struct ArityError : Error {
    explicit ArityError(const std::string& what) : Error(what) {}
};

// Edge-list file failure with line number.
struct ParseError : Error {
    ParseError(int line_, const std::string& what)
        : Error("line " + std::to_string(line_) + ": " + what), line(line_) {}
    int line;
};

}  // namespace locdim
