#include "relcol/gen.hpp"

#include <random>
#include <string>

namespace relcol {

CertifiedColoring gen_counterexample_odd(int t) {
    if (t < 7 || t % 2 == 0)
        throw std::invalid_argument("family needs an odd t of at least 7, got " +
                                    std::to_string(t));
    const int low = (t - 1) / 2;
    const int high = (t + 1) / 2;
    MultipartiteInstance inst({2 * t - 1, t + 1, low, low, low, low}, t);
    CountColoring col{{
        {2 * t - 1, 0, 0, 0, 0, 0},
        {0, high, low, low, 0, 0},
        {0, high, 0, 0, low, low},
    }};
    if (!is_valid_coloring(inst, col))
        throw std::logic_error("generated certificate failed verification");
    return {std::move(inst), std::move(col)};
}

CertifiedColoring gen_counterexample_even(int t) {
    if (t < 8 || t % 2 == 1)
        throw std::invalid_argument("family needs an even t of at least 8, got " +
                                    std::to_string(t));
    const int half = t / 2;
    MultipartiteInstance inst({2 * t - 1, t + 1, half, half, half - 1, half - 1}, t);
    CountColoring col{{
        {2 * t - 1, 0, 0, 0, 0, 0},
        {0, half, half, half, 0, 0},
        {0, half + 1, 0, 0, half - 1, half - 1},
    }};
    if (!is_valid_coloring(inst, col))
        throw std::logic_error("generated certificate failed verification");
    return {std::move(inst), std::move(col)};
}

int counterexample_chi(const CertifiedColoring& cert) {
    const MultipartiteInstance& inst = cert.instance;
    const long long t = inst.t();
    if (t < 1) throw std::invalid_argument("certificate needs t >= 1");
    for (int size : inst.part_sizes())
        if (size >= 2 * t)
            throw std::invalid_argument(
                "certification requires every part below 2t vertices");
    if (!is_valid_coloring(inst, cert.coloring))
        throw std::invalid_argument("certificate coloring is not valid");
    // With every part below 2t, a class meeting two or more parts holds at
    // most 2t vertices and a one-part class even fewer, which forces
    // ceil(n / 2t) colors. The certificate meets that floor, so it is
    // optimal.
    const long long forced = (inst.vertex_count() + 2 * t - 1) / (2 * t);
    if (forced != cert.coloring.color_count())
        throw std::invalid_argument("certificate does not meet the forced color count");
    return cert.coloring.color_count();
}

MultipartiteInstance gen_tightness(TightnessKind kind, int large_parts,
                                   int total_parts, int t) {
    if (large_parts < 1 || total_parts < large_parts)
        throw std::invalid_argument("need 1 <= large parts <= total parts");
    if (t < 1) throw std::invalid_argument("tightness families need t >= 1");
    const int big = kind == TightnessKind::upper_bound ? 2 * t + 1 : 2 * t;
    const int small = kind == TightnessKind::upper_bound ? 1 : t;
    std::vector<int> sizes;
    sizes.reserve(total_parts);
    sizes.insert(sizes.end(), large_parts, big);
    sizes.insert(sizes.end(), total_parts - large_parts, small);
    return MultipartiteInstance(std::move(sizes), t);
}

MultipartiteInstance gen_random(std::uint64_t seed, int max_parts,
                                int max_part_size, int max_t) {
    if (max_parts < 1 || max_part_size < 1 || max_t < 1)
        throw std::invalid_argument("random caps must be positive");
    std::mt19937_64 engine(seed);
    // Raw engine draws instead of a distribution: the engine's output is
    // pinned by the standard, distribution algorithms are not.
    const auto draw = [&engine](int lo, int hi) {
        return lo + static_cast<int>(engine() %
                                     static_cast<std::uint64_t>(hi - lo + 1));
    };
    const int part_count = draw(1, max_parts);
    const int t = draw(1, max_t);
    std::vector<int> sizes(part_count);
    for (int& size : sizes) size = draw(1, max_part_size);
    return MultipartiteInstance(std::move(sizes), t);
}

namespace {

void profiles_rec(int max_parts, int cap, std::vector<int>& current,
                  std::vector<std::vector<int>>& out) {
    if (!current.empty()) out.push_back(current);
    if (static_cast<int>(current.size()) == max_parts) return;
    for (int size = cap; size >= 1; --size) {
        current.push_back(size);
        profiles_rec(max_parts, size, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> enumerate_profiles(int max_parts, int max_part_size) {
    if (max_parts < 1 || max_part_size < 1)
        throw std::invalid_argument("profile caps must be positive");
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    profiles_rec(max_parts, max_part_size, current, out);
    return out;
}

}  // namespace relcol
