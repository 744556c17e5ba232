#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fundalc/affine.hpp"

namespace fundalc {

// Cache directory resolution: FUNDALC_CACHE_DIR environment variable, then
// cache_dir= in ./fundalc.conf, then ".fundalc-cache".
std::string cache_directory();

// Append-only enumeration cache, keyed by datum, twist power, bound, window
// and the code version. Files are written once and never rewritten.
std::optional<std::vector<AffElt>> enumeration_cache_get(const RootDatum& d,
                                                         const std::string& datum_key,
                                                         int sigma_power, long long max_len,
                                                         int window);
void enumeration_cache_put(const RootDatum& d, const std::string& datum_key, int sigma_power,
                           long long max_len, int window, const std::vector<AffElt>& elements);

// Enumerate with a read-through cache.
std::vector<AffElt> cached_enumeration(const RootDatum& d, const std::string& datum_key,
                                       int sigma_power, long long max_len, int window,
                                       bool use_cache);

}  // namespace fundalc
