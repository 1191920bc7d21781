#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qhx/quiver.hpp"

namespace qhx {

struct StructuralPredicates {
    bool is_alternating = false;
    bool has_oriented_cycle = false;
    std::vector<std::string> stable_vertices;    // sorted
    std::vector<std::string> unstable_vertices;  // sorted
    bool has_alternating_cycle = false;
};

/// Directed-cycle existence (self-loops and 2-cycles count).
bool has_oriented_cycle(const Quiver& g);

/// Full predicate record. Alternating-cycle detection enumerates the embedded
/// cycles of the realization and throws CycleLimitExceeded past `cycle_cap`
/// examined cycles.
StructuralPredicates structural_predicates(const Quiver& g, std::size_t cycle_cap = 1000000);

}  // namespace qhx
