#pragma once

#include <optional>

#include "relcol/instance.hpp"

namespace relcol {

inline constexpr long long kDefaultNodeBudget = 10'000'000;

enum class Feasibility { feasible, infeasible, unknown };

/// Outcome of a single k-color decision search. `unknown` means the node
/// budget ran out before the search space was exhausted — never a silent
/// wrong answer.
struct KtDecision {
    Feasibility feasibility = Feasibility::unknown;
    std::optional<CountColoring> witness;  // set when feasible
    long long nodes = 0;
};

/// Exact-solver outcome. When solved, `witness` is a valid coloring with
/// exactly `chi` colors and no coloring with fewer colors exists. When
/// the budget ran out, `chi_lower`/`chi_upper` carry the best bounds
/// established (exhausted color counts plus the closed-form bounds).
struct SolveOutcome {
    bool solved = false;
    int chi = 0;
    CountColoring witness;
    long long nodes_explored = 0;
    int chi_lower = 0;
    int chi_upper = 0;
};

/// Decides whether a valid coloring with at most k colors exists, by
/// branch and bound over count matrices: parts are assigned color
/// compositions in canonical order. Pruning is sound (no valid coloring
/// is ever cut) and the search is deterministic, so repeated calls return
/// identical witnesses.
KtDecision is_kt_colorable(const MultipartiteInstance& inst, int k,
                           long long node_budget = kDefaultNodeBudget);

/// Smallest color count by incrementing k from the closed-form lower
/// bound. Intended for small instances (roughly up to 40 vertices at
/// moderate t); beyond that the budget will run out and the outcome says
/// so explicitly.
SolveOutcome chi_t_exact(const MultipartiteInstance& inst,
                         long long node_budget = kDefaultNodeBudget);

}  // namespace relcol
