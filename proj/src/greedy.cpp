#include "relcol/greedy.hpp"

#include <algorithm>

#include "relcol/sparse.hpp"

namespace relcol {

GreedyResult greedy_coloring(const MultipartiteInstance& inst) {
    struct Remnant {
        int size;
        int part;  // canonical index in the full instance
    };
    std::vector<Remnant> rest;
    rest.reserve(inst.part_count());
    for (int j = 0; j < inst.part_count(); ++j)
        rest.push_back({inst.part_size(j), j});

    GreedyResult result;
    OpCounter ops;
    while (!rest.empty()) {
        // Stable, so equal-size remnants keep their order from the previous
        // round; this is what makes traces reproducible.
        std::stable_sort(rest.begin(), rest.end(),
                         [](const Remnant& a, const Remnant& b) { return a.size > b.size; });

        std::vector<int> sizes;
        sizes.reserve(rest.size());
        for (const Remnant& r : rest) sizes.push_back(r.size);
        const MultipartiteInstance sub(std::move(sizes), inst.t());

        const SparseSelection sel = max_t_sparse(sub, &ops);
        result.stats.sparse_calls += 1;

        std::vector<int> row(inst.part_count(), 0);
        for (std::size_t q = 0; q < rest.size(); ++q) {
            row[rest[q].part] = sel.picks[q];
            rest[q].size -= sel.picks[q];
        }
        result.coloring.rows.push_back(std::move(row));

        std::erase_if(rest, [](const Remnant& r) { return r.size == 0; });
    }
    result.stats.arithmetic_ops = ops.ops;
    return result;
}

int greedy_color_count(const MultipartiteInstance& inst) {
    return greedy_coloring(inst).coloring.color_count();
}

}  // namespace relcol
