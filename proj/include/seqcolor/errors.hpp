#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace seqcolor {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class GraphErrc {
    loop_edge,
    duplicate_edge,
    vertex_out_of_range,
    bipartition_violated,
    invalid_parameter,
};

/// A graph could not be constructed because an invariant would break.
class GraphError : public Error {
public:
    GraphError(GraphErrc code, const std::string& what) : Error(what), code_(code) {}
    GraphErrc code() const noexcept { return code_; }

private:
    GraphErrc code_;
};

/// Malformed graph6, edge-list, coloring or vertex-set text.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A coloring does not assign a valid color to every edge of its host graph.
class CoverageError : public Error {
public:
    using Error::Error;
};

/// One or more preconditions of an operation failed. Every failed
/// condition is listed separately.
class PreconditionError : public Error {
public:
    explicit PreconditionError(std::vector<std::string> violations);
    const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
    std::vector<std::string> violations_;
};

/// The exact solver proved that no proper Δ-coloring exists.
class ClassTwoError : public Error {
public:
    using Error::Error;
};

/// Heuristics needed Δ+1 colors and the instance is too large for the exact
/// solver, so the chromatic index stays undecided.
class UnknownClassError : public Error {
public:
    using Error::Error;
};

/// The exact chromatic index search hit its color cap.
class CapExceededError : public Error {
public:
    CapExceededError(int lower_bound, const std::string& what)
        : Error(what), lower_bound_(lower_bound) {}
    /// Every t below this value was refuted.
    int lower_bound() const noexcept { return lower_bound_; }

private:
    int lower_bound_;
};

/// An exhaustive oracle was asked to run on an instance above its size guard.
class OracleRefusal : public Error {
public:
    using Error::Error;
};

/// The random biregular generator gave up after its retry budget.
class GenerationError : public Error {
public:
    GenerationError(std::uint64_t seed, const std::string& what) : Error(what), seed_(seed) {}
    std::uint64_t seed() const noexcept { return seed_; }

private:
    std::uint64_t seed_;
};

}  // namespace seqcolor
