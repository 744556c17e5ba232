#pragma once

#include "fundalc/affine.hpp"

namespace fundalc {

// Every element of length <= max_len whose length-zero part lies in the
// omega window (the window is ignored for finite Omega). Output is sorted
// within each length level, so the stream is schedule-independent.
std::vector<AffElt> enumerate_elements(const RootDatum& d, long long max_len, int omega_window_size = 2);

}  // namespace fundalc
