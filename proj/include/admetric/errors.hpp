// Error types shared by all admetric modules.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace admetric {

// Bad arguments: dimension mismatches, empty sets, parameters out of range,
// failed set-inclusion preconditions.
struct InputError : std::invalid_argument {
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// The line integral of 1/f along a segment does not admit a finite certified
// enclosure (the segment approaches the landmark set).
struct DivergentIntegralError : std::runtime_error {
    explicit DivergentIntegralError(const std::string& what) : std::runtime_error(what) {}
};

// Shortest-path query between nodes in different graph components.
struct DisconnectedError : std::runtime_error {
    DisconnectedError(const std::string& what, std::size_t source_component_size,
                      std::size_t target_component_size)
        : std::runtime_error(what),
          source_component_size(source_component_size),
          target_component_size(target_component_size) {}
    std::size_t source_component_size = 0;
    std::size_t target_component_size = 0;
};

// Adaptive distance queried at the landmark point itself.
struct UndefinedDistanceError : std::runtime_error {
    explicit UndefinedDistanceError(const std::string& what) : std::runtime_error(what) {}
};

// The ball-intersection solver hit its iteration cap before certifying either
// answer. Never silently converted into a yes/no.
struct IndeterminateIntersectionError : std::runtime_error {
    explicit IndeterminateIntersectionError(const std::string& what) : std::runtime_error(what) {}
};

// A scale-parameter gate failed (e.g. the eta gate of homology inference).
// Carries the computed threshold so callers can report it.
struct PreconditionError : std::runtime_error {
    PreconditionError(const std::string& what, double computed_threshold)
        : std::runtime_error(what), computed_threshold(computed_threshold) {}
    double computed_threshold = 0.0;
};

// A user-asserted assumption (e.g. the wfs bound) fails its consistency check.
struct AssumptionError : std::runtime_error {
    explicit AssumptionError(const std::string& what) : std::runtime_error(what) {}
};

// Interleaving certificates composed out of order (filtration names mismatch).
struct CompositionError : std::runtime_error {
    explicit CompositionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace admetric
