// Acceptance suite: runs every top-level guarantee of the library over the
// whole desk-scale catalogue and prints one pass/fail line per criterion.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <thread>

#include "fundalc/classifier.hpp"
#include "fundalc/io.hpp"
#include "fundalc/verify.hpp"

using namespace fundalc;

namespace {

const std::vector<std::string> kCatalogue = {"GL2",    "SL2",   "PGL2",  "GL3",  "SL3",
                                             "Sp4-sc", "G2-sc", "SL3@2", "SL4@2"};

int g_jobs = 1;

struct CriterionOutcome {
    bool pass = true;
    std::vector<std::string> failures;
    double seconds = 0;

    void absorb(const std::string& datum, const std::vector<PropertyResult>& results) {
        for (const PropertyResult& r : results) {
            if (r.pass) continue;
            pass = false;
            std::ostringstream os;
            os << datum << " " << r.name;
            if (!r.counterexamples.empty()) os << ": " << r.counterexamples[0];
            failures.push_back(os.str());
        }
    }
};

template <typename F>
CriterionOutcome run_criterion(F&& body) {
    CriterionOutcome out;
    auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.pass = false;
        out.failures.push_back(e.what());
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

void report(int number, const std::string& title, const CriterionOutcome& out, int& failed) {
    std::printf("[%s] criterion %d: %s (%.1fs)\n", out.pass ? "PASS" : "FAIL", number,
                title.c_str(), out.seconds);
    if (!out.pass) {
        ++failed;
        for (size_t i = 0; i < out.failures.size() && i < 8; ++i)
            std::printf("       %s\n", out.failures[i].c_str());
    }
    std::fflush(stdout);
}

VerifyOptions options_for(const std::string& datum, long long max_len) {
    VerifyOptions opt;
    opt.datum_key = datum;
    opt.max_len = max_len;
    opt.omega_window = 2;
    opt.jobs = g_jobs;
    opt.use_cache = false;
    return opt;
}

}  // namespace

int main(int argc, char** argv) {
    g_jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (g_jobs < 1) g_jobs = 1;
    if (g_jobs > 8) g_jobs = 8;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a.rfind("--jobs=", 0) == 0) g_jobs = std::stoi(a.substr(7));
    }
    int failed = 0;

    // 1. Fundamental iff straight, with witnesses, length <= 10.
    report(1, "fundamental-witness search succeeds exactly on straight elements (len <= 10)",
           run_criterion([&](CriterionOutcome& out) {
               for (const auto& datum : kCatalogue)
                   out.absorb(datum, run_suite("fund-equivalence", options_for(datum, 10)));
           }),
           failed);

    // 2. Reduction certificates, length <= 8.
    report(2, "straight-times-finite certificates with all invariants (len <= 8)",
           run_criterion([&](CriterionOutcome& out) {
               for (const auto& datum : kCatalogue)
                   out.absorb(datum, run_suite("min-certificates", options_for(datum, 8)));
           }),
           failed);

    // 3. One-class criteria agree; length superadditivity, length <= 10.
    report(3, "one-class coset and Levi criteria agree, with the length inequality (len <= 10)",
           run_criterion([&](CriterionOutcome& out) {
               for (const auto& datum : kCatalogue)
                   out.absorb(datum, run_suite("kf-criteria", options_for(datum, 10)));
           }),
           failed);

    // 4. Straight class grouping vs invariants, bound 10 / cap 12.
    report(4, "drift and class point classify straight reachability groups (len <= 10, cap 12)",
           run_criterion([&](CriterionOutcome& out) {
               for (const auto& datum : kCatalogue)
                   out.absorb(datum, run_suite("straight-classes", options_for(datum, 10)));
           }),
           failed);

    // 5. Minuscule double cosets dominate straight class members.
    report(5, "minuscule cosets: every element dominates a straight conjugate of its class",
           run_criterion([&](CriterionOutcome& out) {
               struct Job {
                   const char* key;
                   IVec mu;
               };
               for (const Job& job : {Job{"GL3", {1, 0, 0}}, Job{"GL4", {1, 1, 0, 0}}}) {
                   RootDatum d = build_root_datum(job.key);
                   MinusculeReport rep = minuscule_report(d, d.sigma, job.mu);
                   for (const MinusculeRow& row : rep.rows)
                       if (!row.ok)
                           out.failures.push_back(std::string(job.key) + " row " +
                                                  print_element(d, row.elt));
                   out.pass = out.pass && rep.all_ok;
               }
           }),
           failed);

    // 6. Transport suite: exhaustive at 8, sampled at 10.
    report(6, "transport and support properties, exhaustive len <= 8 and sampled len <= 10",
           run_criterion([&](CriterionOutcome& out) {
               for (const auto& datum : kCatalogue) {
                   out.absorb(datum, run_suite("transport", options_for(datum, 8)));
                   VerifyOptions sampled = options_for(datum, 10);
                   sampled.sample = 120;
                   out.absorb(datum + "(sampled)", run_suite("transport", sampled));
               }
           }),
           failed);

    // 7. Oracle equivalences.
    report(7, "independent oracles agree: lengths, Bruhat pairs, class closures (len <= 10)",
           run_criterion([&](CriterionOutcome& out) {
               for (const auto& datum : kCatalogue)
                   out.absorb(datum, run_suite("oracles", options_for(datum, 10)));
           }),
           failed);

    // 8. Global inequality plus the SL2 two-scale split.
    report(8, "length dominates the drift pairing; SL2 exhibits the two-scale split (len <= 10)",
           run_criterion([&](CriterionOutcome& out) {
               for (const auto& datum : kCatalogue)
                   out.absorb(datum, run_suite("newton-bound", options_for(datum, 10)));
               RootDatum sl2 = build_root_datum("SL2");
               const auto& sa = simple_affine_reflections(sl2);
               AffElt s = sa.elts[0], s0 = sa.elts[1];
               bool split = is_k_fundamental(sl2, sl2.sigma, s) &&
                            is_gl_fundamental(sl2, sl2.sigma, s) &&
                            !is_fundamental(sl2, sl2.sigma, s).fundamental &&
                            !is_k_fundamental(sl2, sl2.sigma, s0) &&
                            is_gl_fundamental(sl2, sl2.sigma, s0);
               if (!split) {
                   out.pass = false;
                   out.failures.push_back("SL2 two-scale split not reproduced");
               }
           }),
           failed);

    std::printf("%d/8 criteria passed\n", 8 - failed);
    return failed;
}
