#include "relcol/bounds.hpp"

#include <string>

namespace relcol {

namespace {

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

}  // namespace

BoundsReport bounds_report(const MultipartiteInstance& inst) {
    const long long t = inst.t();
    BoundsReport rep;
    for (int size : inst.part_sizes()) {
        if (size >= 2 * t)
            rep.r += 1;
        else
            rep.sigma += size;
    }
    // For t = 0 every part counts as large and sigma is zero, so both 2t
    // bounds become the part count without a division by zero.
    rep.lower_2t = rep.r + static_cast<int>(rep.sigma > 0 ? ceil_div(rep.sigma, 2 * t) : 0);
    rep.upper_2t = rep.r + static_cast<int>(rep.sigma > 0 ? ceil_div(rep.sigma, t + 1) : 0);
    rep.upper_delta = static_cast<int>(ceil_div(inst.max_degree() + 1, t + 1));
    rep.lower_chi = static_cast<int>(ceil_div(inst.part_count(), t + 1));
    return rep;
}

long long color_class_cap(int touched, long long t) {
    if (touched < 2)
        throw std::invalid_argument(
            "class cap needs at least two touched parts, got " + std::to_string(touched));
    if (t < 0) throw std::invalid_argument("t must be non-negative");
    return t + t / (touched - 1);
}

int chi_1_formula(const MultipartiteInstance& inst) {
    int singletons = 0;
    for (int size : inst.part_sizes())
        if (size == 1) singletons += 1;
    return inst.part_count() - singletons + (singletons + 1) / 2;
}

}  // namespace relcol
