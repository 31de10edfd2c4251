#pragma once

#include <stdexcept>
#include <vector>

namespace relcol {

/// A complete multi-partite graph together with the relaxation parameter t.
/// Two vertices are adjacent exactly when they lie in different parts, so
/// the part-size profile determines the whole graph; no adjacency storage
/// is needed or wanted.
///
/// Parts are kept sorted by size, largest first. The permutation back to
/// the caller's input order is retained so per-vertex output can be
/// rendered in input order. Instances are immutable and safe to share
/// across threads.
class MultipartiteInstance {
public:
    /// Throws std::invalid_argument on an empty profile, a part of size
    /// below one, or negative t.
    MultipartiteInstance(std::vector<int> part_sizes, int t);

    int t() const { return t_; }
    int part_count() const { return static_cast<int>(parts_.size()); }
    long long vertex_count() const { return total_; }

    /// Part sizes in canonical (non-increasing) order.
    const std::vector<int>& part_sizes() const { return parts_; }
    int part_size(int part) const { return parts_.at(part); }

    /// Input-order index of the part stored at canonical position `part`.
    int original_index(int part) const { return canon_to_orig_.at(part); }
    /// Canonical position of the part that was at `original` in the input.
    int canonical_index(int original) const { return orig_to_canon_.at(original); }

    /// Maximum degree: a vertex of the smallest part sees all other parts.
    long long max_degree() const { return total_ - parts_.back(); }
    /// Every pair of parts is fully joined, so the clique and chromatic
    /// numbers both equal the part count.
    int clique_number() const { return part_count(); }
    int chromatic_number() const { return part_count(); }

    bool operator==(const MultipartiteInstance& other) const {
        return t_ == other.t_ && parts_ == other.parts_;
    }

private:
    std::vector<int> parts_;
    std::vector<int> canon_to_orig_;
    std::vector<int> orig_to_canon_;
    int t_ = 0;
    long long total_ = 0;
};

MultipartiteInstance make_instance(std::vector<int> part_sizes, int t);

/// A coloring stored at count granularity: rows are colors, columns are
/// parts (canonical order), and an entry is the number of vertices of
/// that part given that color. Vertices within a part are
/// interchangeable, so this determines the coloring up to irrelevant
/// relabeling of vertices.
struct CountColoring {
    std::vector<std::vector<int>> rows;

    int color_count() const { return static_cast<int>(rows.size()); }
    int part_count() const {
        return rows.empty() ? 0 : static_cast<int>(rows.front().size());
    }
    long long class_size(int color) const;
    long long column_sum(int part) const;
};

/// One offending (color, part) pair: vertices of `part` holding `color`
/// see `excess` more same-colored neighbors than t allows.
struct ColoringViolation {
    int color = 0;
    int part = 0;
    long long excess = 0;
};

/// Checks the degree condition for every color class: a class touching a
/// part may exceed that part's contribution by at most t vertices.
/// Returns the empty vector when the coloring is valid. Structural
/// defects (row width mismatch, column sums not matching part sizes,
/// negative counts, an unused color row) throw std::invalid_argument
/// instead: such a matrix is not a coloring at all rather than an
/// invalid one.
std::vector<ColoringViolation> verify_coloring(const MultipartiteInstance& inst,
                                               const CountColoring& col);

bool is_valid_coloring(const MultipartiteInstance& inst, const CountColoring& col);

/// Per-vertex color labels (1-based), vertices grouped by part in the
/// caller's input part order. Within a part, colors appear in ascending
/// color index, one consecutive block per color. Requires a structurally
/// sound coloring.
std::vector<int> expand_labels(const MultipartiteInstance& inst,
                               const CountColoring& col);

}  // namespace relcol
