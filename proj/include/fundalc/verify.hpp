#pragma once

#include <string>
#include <vector>

#include "fundalc/affine.hpp"

namespace fundalc {

struct PropertyResult {
    std::string name;
    bool pass = true;
    long long checked = 0;
    std::vector<std::string> counterexamples;  // truncated to a handful
    std::string note;
};

struct VerifyOptions {
    std::string datum_key;
    long long max_len = 6;
    long long cap_slack = 2;
    int omega_window = 2;
    int sigma_power = 1;
    int jobs = 1;
    unsigned long long seed = 12345;
    bool use_cache = false;
    size_t sample = 0;  // 0 = exhaustive; otherwise a seeded subsample
};

// Suite names: root-datum, words, oracles, newton, fund-equivalence,
// min-certificates, kf-criteria, straight-classes, transport, newton-bound.
std::vector<std::string> suite_names();
bool suite_exists(const std::string& name);

std::vector<PropertyResult> run_suite(const std::string& suite, const VerifyOptions& opt);

}  // namespace fundalc
