#pragma once

#include <cstdint>
#include <vector>

#include "relcol/instance.hpp"

namespace relcol {

/// An instance together with a machine-verified coloring of it.
struct CertifiedColoring {
    MultipartiteInstance instance;
    CountColoring coloring;
};

/// Six-part family on which iterated extraction overshoots the optimum:
/// one part just under 2t, one just over t, four small ones. The returned
/// 3-coloring is re-verified at generation time; odd t >= 7 required.
CertifiedColoring gen_counterexample_odd(int t);

/// Even-t sibling of the family above (t >= 8, even). The certificate
/// coloring is verified before being returned.
CertifiedColoring gen_counterexample_even(int t);

/// Optimal color count of a generated counterexample, certified without
/// search: the certificate gives 3 colors, and since every part has
/// fewer than 2t vertices no class can exceed 2t, while the instance has
/// more than 4t vertices. Throws if the argument is not from the
/// counterexample families.
int counterexample_chi(const CertifiedColoring& cert);

/// Families from the bound-tightness constructions: `upper_bound` puts r
/// parts of size 2t+1 next to s-r singletons, `lower_bound` puts r parts
/// of size 2t next to s-r parts of size t.
enum class TightnessKind { upper_bound, lower_bound };

MultipartiteInstance gen_tightness(TightnessKind kind, int large_parts,
                                   int total_parts, int t);

/// Reproducible random instance: same seed, same instance, on every
/// platform. Part count in [1, max_parts], sizes in [1, max_part_size],
/// t in [1, max_t].
MultipartiteInstance gen_random(std::uint64_t seed, int max_parts,
                                int max_part_size, int max_t);

/// Every non-increasing part profile with at most `max_parts` parts and
/// part sizes in [1, max_part_size], in a fixed order (largest sizes
/// first, each profile before its extensions). The count equals
/// C(max_part_size + max_parts, max_parts) - 1.
std::vector<std::vector<int>> enumerate_profiles(int max_parts, int max_part_size);

}  // namespace relcol
