#include "fundalc/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fundalc/enumerate.hpp"
#include "fundalc/io.hpp"

namespace fundalc {

namespace {

constexpr const char* kCodeVersion = "fundalc-0.1.0";

std::string config_value(const std::string& key) {
    std::ifstream in("fundalc.conf");
    if (!in) return {};
    std::string line;
    while (std::getline(in, line)) {
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string k = line.substr(0, eq);
        while (!k.empty() && (k.back() == ' ' || k.back() == '\t')) k.pop_back();
        if (k == key) {
            std::string v = line.substr(eq + 1);
            size_t a = v.find_first_not_of(" \t");
            return a == std::string::npos ? std::string() : v.substr(a);
        }
    }
    return {};
}

uint64_t fnv(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

std::string key_file(const RootDatum& d, const std::string& datum_key, int sigma_power,
                     long long max_len, int window) {
    std::ostringstream key;
    key << datum_key << "|sigma^" << sigma_power << "|len" << max_len << "|win" << window
        << "|" << kCodeVersion << "|" << fnv(datum_to_json(d));
    std::ostringstream name;
    name << "enum-" << std::hex << fnv(key.str()) << ".json";
    return (std::filesystem::path(cache_directory()) / name.str()).string();
}

}  // namespace

std::string cache_directory() {
    if (const char* env = std::getenv("FUNDALC_CACHE_DIR"); env && *env) return env;
    std::string conf = config_value("cache_dir");
    if (!conf.empty()) return conf;
    return ".fundalc-cache";
}

std::optional<std::vector<AffElt>> enumeration_cache_get(const RootDatum& d,
                                                         const std::string& datum_key,
                                                         int sigma_power, long long max_len,
                                                         int window) {
    std::ifstream in(key_file(d, datum_key, sigma_power, max_len, window));
    if (!in) return std::nullopt;
    nlohmann::json j;
    try {
        in >> j;
        std::vector<AffElt> out;
        for (const auto& lit : j.at("elements"))
            out.push_back(parse_element(d, lit.get<std::string>()));
        return out;
    } catch (const std::exception&) {
        return std::nullopt;  // unreadable cache entries are ignored
    }
}

void enumeration_cache_put(const RootDatum& d, const std::string& datum_key, int sigma_power,
                           long long max_len, int window, const std::vector<AffElt>& elements) {
    std::string path = key_file(d, datum_key, sigma_power, max_len, window);
    if (std::filesystem::exists(path)) return;  // append-only: never rewrite
    std::error_code ec;
    std::filesystem::create_directories(cache_directory(), ec);
    nlohmann::json j;
    j["elements"] = nlohmann::json::array();
    for (const AffElt& x : elements) j["elements"].push_back(print_element(d, x));
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << j.dump();
    }
    std::filesystem::rename(tmp, path, ec);
}

std::vector<AffElt> cached_enumeration(const RootDatum& d, const std::string& datum_key,
                                       int sigma_power, long long max_len, int window,
                                       bool use_cache) {
    if (use_cache)
        if (auto hit = enumeration_cache_get(d, datum_key, sigma_power, max_len, window)) return *hit;
    std::vector<AffElt> out = enumerate_elements(d, max_len, window);
    if (use_cache) enumeration_cache_put(d, datum_key, sigma_power, max_len, window, out);
    return out;
}

}  // namespace fundalc
