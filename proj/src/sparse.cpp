#include "relcol/sparse.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace relcol {

bool is_sparse_selection(const MultipartiteInstance& inst,
                         const std::vector<int>& picks) {
    if (static_cast<int>(picks.size()) != inst.part_count()) return false;
    long long total = 0;
    for (int j = 0; j < inst.part_count(); ++j) {
        if (picks[j] < 0 || picks[j] > inst.part_size(j)) return false;
        total += picks[j];
    }
    for (int j = 0; j < inst.part_count(); ++j) {
        if (picks[j] > 0 && total - picks[j] > inst.t()) return false;
    }
    return true;
}

LpSolution solve_lp(const MultipartiteInstance& inst, int touched,
                    OpCounter* counter) {
    const auto& n = inst.part_sizes();
    const long long t = inst.t();
    const long long limit = std::min<long long>(inst.part_count(), t + 1);
    if (touched < 2 || touched > limit)
        throw std::invalid_argument("touched part count " + std::to_string(touched) +
                                    " outside [2, " + std::to_string(limit) + "]");
    if (counter) {
        counter->lp_calls += 1;
        counter->ops += 4;
    }

    const int i = touched;
    // Picking from i parts leaves the smallest pick with total - pick
    // same-set neighbors, so the smallest pick is capped by t/(i-1).
    const long long per_part_floor = t / (i - 1);
    long long tail_pick;    // pick in the smallest touched part
    long long floor_level;  // least value any leading pick may take
    long long budget;       // total distributed over the leading i-1 parts
    if (n[i - 1] <= per_part_floor) {
        tail_pick = n[i - 1];
        floor_level = n[i - 1];
        long long cap_sum = 0;
        for (int j = 0; j + 1 < i; ++j) cap_sum += n[j];
        budget = std::min(t, cap_sum);
    } else {
        tail_pick = per_part_floor;
        floor_level = per_part_floor;
        budget = t;
    }

    // Water-fill the leading parts left to right: take as much as the part
    // allows while leaving every later slot its floor.
    std::vector<int> picks(i);
    picks[i - 1] = static_cast<int>(tail_pick);
    long long remaining = budget;
    for (int j = 0; j + 1 < i; ++j) {
        const long long slots_after = i - 2 - j;
        const long long take =
            std::min<long long>(n[j], remaining - slots_after * floor_level);
        picks[j] = static_cast<int>(take);
        remaining -= take;
        if (counter) counter->ops += 2;
    }

    return LpSolution{std::move(picks), budget + tail_pick};
}

namespace {

void require_selection(const MultipartiteInstance& inst, const SparseSelection& sel) {
    long long total = 0;
    for (int v : sel.picks) total += v;
    if (total != sel.size || !is_sparse_selection(inst, sel.picks))
        throw std::logic_error("computed selection violates the sparsity invariants");
}

}  // namespace

SparseSelection max_t_sparse(const MultipartiteInstance& inst, OpCounter* counter) {
    const auto& n = inst.part_sizes();
    const int s = inst.part_count();
    const long long t = inst.t();

    // The whole largest part is always t-sparse; once it has 2t vertices no
    // multi-part selection can beat it.
    long long best = n[0];
    int best_touched = 1;
    std::vector<int> best_leading;
    if (counter) counter->ops += 2;

    if (n[0] < 2 * t) {
        const int limit = static_cast<int>(std::min<long long>(s, t + 1));
        for (int i = 2; i <= limit; ++i) {
            LpSolution sol = solve_lp(inst, i, counter);
            if (sol.value > best) {
                best = sol.value;
                best_touched = i;
                best_leading = std::move(sol.picks);
            }
            if (counter) counter->ops += 1;
        }
    }

    std::vector<int> picks(s, 0);
    if (best_touched == 1) {
        picks[0] = n[0];
    } else {
        std::copy(best_leading.begin(), best_leading.end(), picks.begin());
    }
    SparseSelection sel{std::move(picks), best};
    if (counter) counter->ops += best_touched;
    require_selection(inst, sel);
    return sel;
}

long long beta_t(const MultipartiteInstance& inst) {
    return max_t_sparse(inst).size;
}

}  // namespace relcol
