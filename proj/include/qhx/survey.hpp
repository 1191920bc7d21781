#pragma once

#include <functional>
#include <vector>

#include "qhx/quiver.hpp"
#include "qhx/snf.hpp"

namespace qhx {

struct SurveyRow {
    int genus = 0;
    long classes = 0;        // isomorphism classes examined at this genus
    BigInt max_exponent = 1;  // largest torsion exponent of X(·) seen
};

/// Exhaustive torsion survey over connected loop-free digraphs with at most
/// max_vertices vertices, max_edges edges, and genus at most max_genus,
/// deduplicated by brute-force canonical labeling over all vertex
/// permutations. One row per genus, streamed through on_row when given.
/// Throws BoundsTooLarge when max_vertices > 5.
std::vector<SurveyRow> torsion_survey(
    int max_vertices, int max_edges, int max_genus,
    const std::function<void(const SurveyRow&)>& on_row = {});

}  // namespace qhx
