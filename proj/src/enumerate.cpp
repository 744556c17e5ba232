#include "fundalc/enumerate.hpp"

#include <algorithm>
#include <unordered_set>

namespace fundalc {

std::vector<AffElt> enumerate_elements(const RootDatum& d, long long max_len, int omega_window_size) {
    std::vector<AffElt> out;
    std::unordered_set<AffElt, AffEltHash> seen;
    const auto& sa = simple_affine_reflections(d);

    std::vector<AffElt> level = omega_window(d, omega_window_size);
    std::sort(level.begin(), level.end());
    for (const AffElt& x : level) {
        seen.insert(x);
        out.push_back(x);
    }
    for (long long len = 1; len <= max_len; ++len) {
        std::vector<AffElt> next;
        for (const AffElt& x : level)
            for (const AffElt& s : sa.elts) {
                AffElt y = aff_mul(s, x);
                if (aff_length(d, y) != len) continue;
                if (seen.insert(y).second) next.push_back(y);
            }
        std::sort(next.begin(), next.end());
        out.insert(out.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return out;
}

}  // namespace fundalc
