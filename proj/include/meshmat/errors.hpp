#pragma once

#include <stdexcept>
#include <string>

namespace meshmat {

// Base class for all recoverable errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotConnected : Error {
    explicit NotConnected(const std::string& what = "graph is not connected") : Error(what) {}
};

struct UnknownEdge : Error {
    explicit UnknownEdge(int edge_id)
        : Error("unknown edge id " + std::to_string(edge_id)) {}
};

struct LoopContraction : Error {
    explicit LoopContraction(int edge_id)
        : Error("cannot contract loop edge " + std::to_string(edge_id)) {}
};

struct NotCotreeEdge : Error {
    explicit NotCotreeEdge(int edge_id)
        : Error("edge " + std::to_string(edge_id) + " is not a cotree edge") {}
};

struct HostMismatch : Error {
    HostMismatch() : Error("chains live on different host graphs") {}
};

struct NonSquare : Error {
    NonSquare() : Error("matrix is not square") {}
};

struct NonSymmetric : Error {
    NonSymmetric() : Error("matrix is not symmetric") {}
};

struct NotType3 : Error {
    explicit NotType3(int edge_id)
        : Error("edge " + std::to_string(edge_id) + " is not a long-path chord") {}
};

struct ImproperPartition : Error {
    explicit ImproperPartition(const std::string& what) : Error(what) {}
};

struct NotSpanningForest : Error {
    NotSpanningForest() : Error("cell subset is not a spanning forest") {}
};

struct InvalidComplex : Error {
    explicit InvalidComplex(const std::string& what) : Error(what) {}
};

struct TooLarge : Error {
    explicit TooLarge(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace meshmat
