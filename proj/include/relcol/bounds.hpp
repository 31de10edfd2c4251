#pragma once

#include "relcol/instance.hpp"

namespace relcol {

/// Closed-form lower and upper bounds on the smallest color count of a
/// t-relaxed coloring. `r` counts the parts with at least 2t vertices,
/// `sigma` is the number of vertices in the remaining parts.
struct BoundsReport {
    int r = 0;
    long long sigma = 0;
    int lower_2t = 0;    // r + ceil(sigma / 2t)
    int upper_2t = 0;    // r + ceil(sigma / (t+1))
    int upper_delta = 0; // ceil((max degree + 1) / (t+1))
    int lower_chi = 0;   // ceil(part count / (t+1))
};

/// All four bounds for an instance. For t = 0 the relaxed problem is
/// ordinary coloring and both 2t bounds collapse to the part count.
BoundsReport bounds_report(const MultipartiteInstance& inst);

/// Largest possible color class touching `touched` parts: t + floor(t /
/// (touched - 1)). Requires touched >= 2; a class confined to one part is
/// only capped by the part size.
long long color_class_cap(int touched, long long t);

/// Exact color count for t = 1 by formula: one color per part of size at
/// least two, plus paired-up singleton parts. Ignores the instance's t.
int chi_1_formula(const MultipartiteInstance& inst);

}  // namespace relcol
