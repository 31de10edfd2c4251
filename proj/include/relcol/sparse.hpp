#pragma once

#include "relcol/instance.hpp"

namespace relcol {

/// Tallies the work done by the closed-form solvers so tests can pin the
/// advertised complexity bounds. Counts arithmetic steps, not wall time.
struct OpCounter {
    long long ops = 0;
    long long lp_calls = 0;
};

/// Vertex picks per part (canonical order) realizing a t-sparse set.
struct SparseSelection {
    std::vector<int> picks;
    long long size = 0;
};

/// Optimal picks for the subproblem restricted to the largest `touched`
/// parts with every pick positive, together with the objective value.
struct LpSolution {
    std::vector<int> picks;  // length == touched, non-increasing
    long long value = 0;
};

/// True when `picks` (one entry per canonical part, entries within the
/// part sizes) induces a subgraph of maximum degree at most t: for every
/// part picked from, the picks outside that part may not exceed t.
bool is_sparse_selection(const MultipartiteInstance& inst,
                         const std::vector<int>& picks);

/// Closed-form solution of the restricted subproblem. `touched` must lie
/// in [2, min(part count, t+1)]; outside that range no selection touching
/// exactly that many parts exists and std::invalid_argument is thrown.
LpSolution solve_lp(const MultipartiteInstance& inst, int touched,
                    OpCounter* counter = nullptr);

/// A maximum t-sparse selection. Considers the whole largest part plus
/// every restricted subproblem; runs in O((t+1)^2) arithmetic steps on a
/// pre-sorted instance. Ties prefer selections touching fewer parts.
SparseSelection max_t_sparse(const MultipartiteInstance& inst,
                             OpCounter* counter = nullptr);

/// Size of a maximum t-sparse set.
long long beta_t(const MultipartiteInstance& inst);

}  // namespace relcol
