#ifndef ZSIG_SUITES_HPP
#define ZSIG_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "zsig/mpoly.hpp"

namespace zsig {

struct SuiteConfig {
    uint64_t characteristic = 0;
    int vars = 1;
    uint64_t max_n = 24;
    int trials = 10;
    uint64_t rand_seed = 42;
};

struct CheckRecord {
    std::string id;
    std::string params;
    bool pass = false;
    std::string witness;  // canonical polynomial/value strings
};

struct SuiteReport {
    std::string suite;
    SuiteConfig config;
    std::vector<CheckRecord> records;  // sorted by id
    size_t num_pass = 0;
    size_t num_fail = 0;

    bool all_pass() const { return num_fail == 0; }
    std::string to_json() const;
};

// Suites: zsigmondy (F kind: primitive parts vs Phi_n(f,g), strong
// divisibility), lucas, lehmer (same for L and U through the power-sum
// path), lemmas (resultant grids + coprimality instances), valuation
// (needs vars = 1, char > 0), frobenius (needs char > 0).
// Deterministic given config.rand_seed.
SuiteReport run_suite(const std::string& name, const SuiteConfig& config);

// Deterministic sparse random polynomial (degree <= 3, at most 4 terms)
// and rejection-sampled valid seed pairs; exposed for reuse in tests.
// Sampled pairs additionally avoid degenerate cancellations where some
// Phi_n at the seed (n <= 24) collapses to a constant, since those seeds
// fall outside the working hypotheses of the primitive-divisor theorems.
class SeedSampler {
  public:
    SeedSampler(const RingSpec& ring, uint64_t rand_seed);
    MPoly random_poly();
    std::pair<MPoly, MPoly> random_seed_pair(int seed_kind);  // SeedKind value

  private:
    RingSpec ring_;
    uint64_t state_;
    uint64_t next();
};

}  // namespace zsig

#endif
