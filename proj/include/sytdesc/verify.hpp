#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace sytdesc {

struct CheckResult {
    std::string id;
    std::string description;
    bool passed = false;
    std::string detail;
};

// Bounds for the oracle suites. Defaults are the full acceptance limits.
struct VerifyOptions {
    int hook_max_n = 12;         // count_syt vs enumeration
    int rs_max_n = 10;           // sum N^2 = n!
    int enumeration_max_n = 9;   // closed forms vs brute force
    int coefficient_max_n = 30;  // enumeration-free identities
    int audit_max_n = 8;         // exhaustive sampler audit
    std::uint64_t sample_draws = 100000;
    std::uint64_t seed = 1;
    int two_row_max_m = 1000;
    int corollary_max_n = 10000;
    int threads = 0;
};

// Bounds derived from a single size limit, as used by `verify --max-n`.
VerifyOptions verify_options_for_max_n(int max_n);

CheckResult check_hook_counts(const VerifyOptions& o);
CheckResult check_robinson_schensted(const VerifyOptions& o);
CheckResult check_moments_against_enumeration(const VerifyOptions& o);
CheckResult check_position_invariance(const VerifyOptions& o);
CheckResult check_count_identities(const VerifyOptions& o);
CheckResult check_count_integrality(const VerifyOptions& o);
CheckResult check_prefix_interpretations(const VerifyOptions& o);
CheckResult check_sampler_exactness(const VerifyOptions& o);
CheckResult check_sampler_statistics(const VerifyOptions& o);
CheckResult check_two_row_bounded(const VerifyOptions& o);
CheckResult check_hook_geometric_growth(const VerifyOptions& o);
CheckResult check_corollary_ratio(const VerifyOptions& o);
CheckResult check_coefficient_conjugation(const VerifyOptions& o);
CheckResult check_descent_complement(const VerifyOptions& o);
CheckResult check_reading_word(const VerifyOptions& o);

// Runs every check in order, reporting each as it finishes.
std::vector<CheckResult> run_verification(const VerifyOptions& o,
                                          const std::function<void(const CheckResult&)>& report = {});

} // namespace sytdesc
