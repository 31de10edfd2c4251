#pragma once

#include "relcol/instance.hpp"

namespace relcol {

struct GreedyStats {
    long long sparse_calls = 0;    // extraction rounds
    long long arithmetic_ops = 0;  // work inside the closed-form solver
};

/// Result of the iterated-extraction coloring. Row i of the coloring is
/// exactly the i-th extracted selection mapped onto the instance's
/// canonical parts, so the matrix doubles as the extraction trace.
struct GreedyResult {
    CountColoring coloring;
    GreedyStats stats;
};

/// Colors the instance by repeatedly extracting a maximum t-sparse set
/// from the uncolored remainder and giving it a fresh color. Output is
/// deterministic and always a valid t-relaxed coloring; it uses at most
/// twice the optimal number of colors.
GreedyResult greedy_coloring(const MultipartiteInstance& inst);

int greedy_color_count(const MultipartiteInstance& inst);

}  // namespace relcol
