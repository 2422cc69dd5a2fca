#pragma once

#include <stdexcept>
#include <string>

namespace gcurv {

// Base class for every precondition violation reported by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class LoopEdgeError : public Error {
public:
    explicit LoopEdgeError(int v)
        : Error("loop edge at vertex " + std::to_string(v)), vertex(v) {}
    int vertex;
};

class IdOutOfRangeError : public Error {
public:
    IdOutOfRangeError(int v, int n)
        : Error("vertex id " + std::to_string(v) + " out of range [0," +
                std::to_string(n) + ")") {}
};

class TooSmallError : public Error {
public:
    explicit TooSmallError(const std::string& what) : Error(what) {}
};

class TooLargeError : public Error {
public:
    explicit TooLargeError(const std::string& what) : Error(what) {}
};

class InvalidRotationError : public Error {
public:
    explicit InvalidRotationError(const std::string& what) : Error(what) {}
};

class NotIncidentError : public Error {
public:
    explicit NotIncidentError(const std::string& what) : Error(what) {}
};

class InvalidTessellationError : public Error {
public:
    explicit InvalidTessellationError(const std::string& what) : Error(what) {}
};

class DisconnectedError : public Error {
public:
    explicit DisconnectedError(const std::string& what = "graph is disconnected")
        : Error(what) {}
};

class IsolatedVertexError : public Error {
public:
    explicit IsolatedVertexError(int v)
        : Error("vertex " + std::to_string(v) + " has no neighbors") {}
};

class NegativeTimeError : public Error {
public:
    explicit NegativeTimeError(double t)
        : Error("heat semigroup time must be nonnegative, got " + std::to_string(t)) {}
};

class IdlenessOutOfRangeError : public Error {
public:
    explicit IdlenessOutOfRangeError(const std::string& p)
        : Error("idleness must lie in [0,1], got " + p) {}
};

class SameVertexError : public Error {
public:
    explicit SameVertexError(int v)
        : Error("curvature requires two distinct vertices, got " + std::to_string(v) +
                " twice") {}
};

class DisconnectedPairError : public Error {
public:
    DisconnectedPairError(int x, int y)
        : Error("vertices " + std::to_string(x) + " and " + std::to_string(y) +
                " lie in different components") {}
};

class DisconnectedSupportsError : public Error {
public:
    explicit DisconnectedSupportsError(const std::string& what =
                                           "measure supports span several components")
        : Error(what) {}
};

// Internal contract violation: the S2 block of the Gamma2 form is provably
// positive semidefinite, so a significantly negative eigenvalue there means a
// bug, not bad input.
class DegenerateKernelError : public Error {
public:
    explicit DegenerateKernelError(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace gcurv
