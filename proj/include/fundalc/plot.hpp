#pragma once

#include <optional>
#include <string>

#include "fundalc/alcove.hpp"

namespace fundalc {

// Deterministic SVG picture of the affine hyperplane arrangement for data of
// semisimple rank 1 or 2: hyperplanes within the level window, the shaded
// base alcove, labeled image alcoves for the given elements, and (with a
// direction vector) the positive half-planes, with violated comparisons
// highlighted. Floating point appears only here, at the picture boundary.
struct PlotOptions {
    int window = 3;
    double scale = 80.0;
    std::optional<QVec> v;  // direction datum to overlay
};

std::string plot_rank2_svg(const RootDatum& d, const std::vector<AffElt>& elements,
                           const PlotOptions& opt);

void plot_rank2_file(const RootDatum& d, const std::vector<AffElt>& elements,
                     const PlotOptions& opt, const std::string& out_path);

}  // namespace fundalc
