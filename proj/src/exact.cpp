#include "relcol/exact.hpp"

#include <algorithm>
#include <limits>

#include "relcol/bounds.hpp"
#include "relcol/sparse.hpp"

namespace relcol {

namespace {

constexpr int kUntouched = std::numeric_limits<int>::max();

// Depth-first search over count matrices, one part (column) at a time.
// Colors are interchangeable, so only matrices whose rows are
// lexicographically non-increasing are enumerated; equal-size parts are
// interchangeable too, so their columns must be non-increasing as well.
// Every coloring has a representative sorted both ways (take the one with
// the largest row-major reading), so neither rule loses solutions.
struct Search {
    const std::vector<int>& parts;
    const long long t;
    const int k;
    const int s;
    const long long budget;

    std::vector<std::vector<int>> matrix;  // k rows, s columns
    std::vector<long long> total;          // vertices per color so far
    std::vector<int> min_pick;             // least positive entry per color
    std::vector<long long> suffix;         // vertices in parts j..s-1
    std::vector<long long> reachable;      // largest sparse set within parts j+1..s-1
    long long full_cap = 0;                // largest sparse set of the whole instance
    long long nodes = 0;
    bool out_of_budget = false;

    Search(const MultipartiteInstance& inst, int colors, long long node_budget)
        : parts(inst.part_sizes()),
          t(inst.t()),
          k(colors),
          s(inst.part_count()),
          budget(node_budget) {
        matrix.assign(k, std::vector<int>(s, 0));
        total.assign(k, 0);
        min_pick.assign(k, kUntouched);
        suffix.assign(s + 1, 0);
        for (int j = s - 1; j >= 0; --j) suffix[j] = suffix[j + 1] + parts[j];
        reachable.assign(s, 0);
        for (int j = 0; j + 1 < s; ++j) {
            std::vector<int> tail(parts.begin() + j + 1, parts.end());
            reachable[j] = beta_t(MultipartiteInstance(std::move(tail), inst.t()));
        }
        full_cap = beta_t(inst);
    }

    bool solve() {
        if (static_cast<long long>(k) * full_cap < suffix[0]) return false;
        return solve_part(0);
    }

    bool solve_part(int j) {
        if (j == s) return true;
        // Which adjacent row pairs still agree on all earlier columns; only
        // those are order-constrained within this column.
        std::vector<unsigned char> tied(k, 0);
        for (int c = 1; c < k; ++c) {
            bool same = true;
            for (int h = 0; h < j && same; ++h) same = matrix[c - 1][h] == matrix[c][h];
            tied[c] = same;
        }
        return place(j, 0, parts[j], tied);
    }

    // A positive entry v for color c keeps the class repairable only while
    // class size stays within t of its smallest entry; both quantities move
    // against us as the search deepens, so violation here is final.
    bool entry_ok(int c, int v) const {
        if (v == 0) return true;
        const long long new_total = total[c] + v;
        const long long new_min = std::min<long long>(min_pick[c], v);
        return new_total - new_min <= t;
    }

    bool place(int j, int c, int rem, const std::vector<unsigned char>& tied) {
        if (out_of_budget) return false;
        if (c == k - 1) {
            nodes += 1;
            if (nodes > budget) {
                out_of_budget = true;
                return false;
            }
            if (tied[c] && rem > matrix[c - 1][j]) return false;
            if (!entry_ok(c, rem)) return false;
            const int saved_min = min_pick[c];
            assign(j, c, rem);
            if (column_done(j)) return true;
            retract(j, c, rem, saved_min);
            return false;
        }
        int hi = rem;
        if (c > 0 && tied[c]) hi = std::min(hi, matrix[c - 1][j]);
        for (int v = hi; v >= 0; --v) {
            nodes += 1;
            if (nodes > budget) {
                out_of_budget = true;
                return false;
            }
            if (!entry_ok(c, v)) continue;
            const int saved_min = min_pick[c];
            assign(j, c, v);
            if (place(j, c + 1, rem - v, tied)) return true;
            retract(j, c, v, saved_min);
            if (out_of_budget) return false;
        }
        return false;
    }

    void assign(int j, int c, int v) {
        matrix[c][j] = v;
        if (v > 0) {
            total[c] += v;
            min_pick[c] = std::min(min_pick[c], v);
        }
    }

    void retract(int j, int c, int v, int saved_min) {
        matrix[c][j] = 0;
        if (v > 0) {
            total[c] -= v;
            min_pick[c] = saved_min;
        }
    }

    bool column_done(int j) {
        if (j > 0 && parts[j] == parts[j - 1]) {
            for (int c = 0; c < k; ++c) {
                if (matrix[c][j] != matrix[c][j - 1]) {
                    if (matrix[c][j] > matrix[c][j - 1]) return false;
                    break;
                }
            }
        }
        const long long remaining = suffix[j + 1];
        if (remaining > 0) {
            // How many more vertices each color can still absorb: none once
            // the class outgrew t, up to its repair slack while it has not,
            // and at most one sparse set of the leftover parts when fresh.
            long long capacity = 0;
            for (int c = 0; c < k && capacity < remaining; ++c) {
                if (total[c] == 0)
                    capacity += reachable[j];
                else if (total[c] <= t)
                    capacity += t + min_pick[c] - total[c];
            }
            if (capacity < remaining) return false;
        }
        return solve_part(j + 1);
    }
};

CountColoring strip_unused(const std::vector<std::vector<int>>& matrix) {
    CountColoring col;
    for (const auto& row : matrix) {
        bool used = false;
        for (int v : row) used = used || v > 0;
        if (used) col.rows.push_back(row);
    }
    return col;
}

}  // namespace

KtDecision is_kt_colorable(const MultipartiteInstance& inst, int k,
                           long long node_budget) {
    if (k < 1) throw std::invalid_argument("color count must be positive");
    Search search(inst, k, node_budget);
    const bool found = search.solve();
    KtDecision decision;
    decision.nodes = search.nodes;
    if (found) {
        decision.feasibility = Feasibility::feasible;
        decision.witness = strip_unused(search.matrix);
    } else if (search.out_of_budget) {
        decision.feasibility = Feasibility::unknown;
    } else {
        decision.feasibility = Feasibility::infeasible;
    }
    return decision;
}

SolveOutcome chi_t_exact(const MultipartiteInstance& inst, long long node_budget) {
    const BoundsReport report = bounds_report(inst);
    const int start = std::max({1, report.lower_2t, report.lower_chi});
    SolveOutcome outcome;
    long long used = 0;
    for (int k = start; k <= inst.part_count(); ++k) {
        KtDecision decision = is_kt_colorable(inst, k, node_budget - used);
        used += decision.nodes;
        if (decision.feasibility == Feasibility::feasible) {
            outcome.solved = true;
            outcome.chi = k;
            outcome.witness = *decision.witness;
            outcome.nodes_explored = used;
            outcome.chi_lower = k;
            outcome.chi_upper = k;
            return outcome;
        }
        if (decision.feasibility == Feasibility::unknown) {
            outcome.solved = false;
            outcome.nodes_explored = used;
            outcome.chi_lower = k;  // lower counts are exhausted
            outcome.chi_upper = std::min(report.upper_2t, report.upper_delta);
            return outcome;
        }
    }
    // One color per part always succeeds, so the loop cannot fall through.
    throw std::logic_error("search rejected the one-color-per-part coloring");
}

}  // namespace relcol
