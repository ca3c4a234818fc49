// Seeded property suites shared by the command-line `verify` and the acceptance runner.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace shintani {

struct CheckResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t total = 0;
    std::vector<std::string> failures;  // first few only
    double seconds = 0;

    bool ok() const { return passed == total; }
    void record(bool good, const std::string& detail = {});
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool ok() const;
};

using Rng = std::mt19937_64;

// cones
CheckResult check_face_weights(Rng& rng, int per_dim);
CheckResult check_positive_cocycle(Rng& rng, int per_dim);
CheckResult check_signed_domain(const std::string& fixture_name, Rng& rng, int points);

// generating functions and the Shintani operator
CheckResult check_wedges(Rng& rng, int count, int trunc);
// count tuples for each of n = 2 and n = 3
CheckResult check_series_cocycle(Rng& rng, int count, int trunc);
CheckResult check_delta_example();
CheckResult check_hurwitz(int max_q, unsigned max_k);
CheckResult check_delta_scaling(Rng& rng, int count);
CheckResult check_mtwist(Rng& rng, int count);
CheckResult check_reciprocity(Rng& rng, int count);

// smoothing
CheckResult check_smoothing_regularity(Rng& rng, int count, int min_trunc);
CheckResult check_gamma_cocycle(Rng& rng, int count);
CheckResult check_integrality_sweep(Rng& rng, int per_case, unsigned max_k);
CheckResult check_flagship();

// Sczech side
CheckResult check_fcoc(Rng& rng, int count);
CheckResult check_boundary_squared(Rng& rng, int count);
CheckResult check_coboundary(std::size_t n, bool parallel = false);
CheckResult check_polar(Rng& rng, int count, unsigned max_k);

// "cones", "domain", "genfun", "eisenstein", "sczech", "all"
const std::vector<std::string>& suite_names();
// Throws InvalidInput for an unknown suite.
SuiteReport run_suite(const std::string& name, std::uint64_t seed, bool parallel = false);

}  // namespace shintani
