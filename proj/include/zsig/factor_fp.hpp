#ifndef ZSIG_FACTOR_FP_HPP
#define ZSIG_FACTOR_FP_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "zsig/mpoly.hpp"

namespace zsig {

// Complete factorization of a univariate polynomial over F_p:
// unit * prod factor_i^mult_i reproduces the input exactly, the factors are
// pairwise distinct, monic and irreducible.
struct FactorizationFp {
    FpElem unit;
    std::vector<std::pair<MPoly, uint64_t>> factors;
    uint64_t rng_seed = 0;  // seed used for equal-degree splitting
};

struct SquarefreeDecomp {
    FpElem unit;
    std::vector<std::pair<MPoly, uint64_t>> parts;  // (squarefree, multiplicity)
};

// Yun-style squarefree decomposition adapted to characteristic p, with
// p-th-root extraction when the derivative vanishes.
SquarefreeDecomp squarefree_decomp(const MPoly& h);

inline constexpr uint64_t kDefaultFactorSeed = 0x5eed5eed5eedull;
inline constexpr int kSplitRetryBudget = 64;

// Distinct-degree decomposition then randomized equal-degree splitting
// (trace-map variant at p = 2).  Deterministic given rng_seed.
FactorizationFp factor_fp(const MPoly& h, uint64_t rng_seed = kDefaultFactorSeed);

// Rabin's irreducibility criterion.
bool is_irreducible_fp(const MPoly& h);

}  // namespace zsig

#endif
