#include "relcol/instance.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace relcol {

MultipartiteInstance::MultipartiteInstance(std::vector<int> part_sizes, int t)
    : t_(t) {
    if (part_sizes.empty())
        throw std::invalid_argument("instance needs at least one part");
    if (t < 0)
        throw std::invalid_argument("relaxation parameter t must be non-negative");
    for (int size : part_sizes) {
        if (size < 1)
            throw std::invalid_argument("every part needs at least one vertex, got " +
                                        std::to_string(size));
    }

    std::vector<int> order(part_sizes.size());
    std::iota(order.begin(), order.end(), 0);
    // Stable, so equal-size parts keep their input order.
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return part_sizes[a] > part_sizes[b]; });

    parts_.reserve(order.size());
    for (int idx : order) parts_.push_back(part_sizes[idx]);
    canon_to_orig_ = std::move(order);
    orig_to_canon_.assign(parts_.size(), 0);
    for (int j = 0; j < part_count(); ++j) orig_to_canon_[canon_to_orig_[j]] = j;

    for (int size : parts_) {
        total_ += size;
        if (total_ > std::numeric_limits<int>::max())
            throw std::invalid_argument("total vertex count exceeds supported range");
    }
}

MultipartiteInstance make_instance(std::vector<int> part_sizes, int t) {
    return MultipartiteInstance(std::move(part_sizes), t);
}

long long CountColoring::class_size(int color) const {
    long long sum = 0;
    for (int v : rows.at(color)) sum += v;
    return sum;
}

long long CountColoring::column_sum(int part) const {
    long long sum = 0;
    for (const auto& row : rows) sum += row.at(part);
    return sum;
}

namespace {

void check_structure(const MultipartiteInstance& inst, const CountColoring& col) {
    const int s = inst.part_count();
    if (col.rows.empty())
        throw std::invalid_argument("coloring has no color rows");
    for (const auto& row : col.rows) {
        if (static_cast<int>(row.size()) != s)
            throw std::invalid_argument("coloring row width does not match part count");
        bool used = false;
        for (int v : row) {
            if (v < 0) throw std::invalid_argument("negative count in coloring");
            used = used || v > 0;
        }
        if (!used)
            throw std::invalid_argument("coloring contains an unused color row");
    }
    for (int h = 0; h < s; ++h) {
        if (col.column_sum(h) != inst.part_size(h))
            throw std::invalid_argument(
                "part " + std::to_string(h + 1) + " has " +
                std::to_string(col.column_sum(h)) + " colored vertices, expected " +
                std::to_string(inst.part_size(h)));
    }
}

}  // namespace

std::vector<ColoringViolation> verify_coloring(const MultipartiteInstance& inst,
                                               const CountColoring& col) {
    check_structure(inst, col);
    std::vector<ColoringViolation> out;
    for (int r = 0; r < col.color_count(); ++r) {
        const long long total = col.class_size(r);
        for (int h = 0; h < inst.part_count(); ++h) {
            const int own = col.rows[r][h];
            if (own == 0) continue;
            // Every vertex of part h in this class sees total - own
            // same-colored neighbors.
            const long long neighbors = total - own;
            if (neighbors > inst.t())
                out.push_back({r, h, neighbors - inst.t()});
        }
    }
    return out;
}

bool is_valid_coloring(const MultipartiteInstance& inst, const CountColoring& col) {
    return verify_coloring(inst, col).empty();
}

std::vector<int> expand_labels(const MultipartiteInstance& inst,
                               const CountColoring& col) {
    check_structure(inst, col);
    std::vector<int> labels;
    labels.reserve(static_cast<std::size_t>(inst.vertex_count()));
    for (int orig = 0; orig < inst.part_count(); ++orig) {
        const int j = inst.canonical_index(orig);
        for (int r = 0; r < col.color_count(); ++r)
            labels.insert(labels.end(), col.rows[r][j], r + 1);
    }
    return labels;
}

}  // namespace relcol
