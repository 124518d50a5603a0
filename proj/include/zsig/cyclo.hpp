#ifndef ZSIG_CYCLO_HPP
#define ZSIG_CYCLO_HPP

#include <string>
#include <vector>

#include "zsig/mpoly.hpp"

namespace zsig {

// Homogeneous bivariate polynomial over Z of degree d:
// coeffs[k] is the coefficient of X^{d-k} Y^k.
struct HomogBivar {
    int degree = 0;
    std::vector<BigInt> coeffs;  // size degree + 1

    HomogBivar() : coeffs{BigInt(0)} {}
    HomogBivar(int d, std::vector<BigInt> c) : degree(d), coeffs(std::move(c)) {}

    bool is_zero() const;
    bool is_symmetric() const;  // coeffs[k] == coeffs[degree - k]
    bool operator==(const HomogBivar&) const = default;

    std::string to_string() const;  // e.g. "X^2 - X*Y + Y^2"
};

HomogBivar homog_mul(const HomogBivar& a, const HomogBivar& b);
// Exact division over Z; throws NotDivisible.
HomogBivar homog_exact_div(const HomogBivar& a, const HomogBivar& b);

// n-th homogeneous cyclotomic polynomial Phi_n(X,Y), degree phi(n),
// computed over Z by exact division of X^n - Y^n by the lower Phi_d.
// 1 <= n <= 10^4.
HomogBivar cyclotomic_int(uint64_t n);

enum class HomogKind { P, T, W, V };

// P_m = (X^m - Y^m)/(X - Y);  T_m = P_m/(X+Y) (m even);
// W_m = (X^m + Y^m)/(X + Y) (m odd);  V = P_m(X^n, Y^n).
HomogBivar homog_family(HomogKind kind, uint64_t m, uint64_t n = 0);

// The R-valued data determining a sequence.
//   FG:     (f, g)
//   LUCAS:  (s, q) = (alpha + beta, alpha * beta)
//   LEHMER: (E, q) = ((lambda + eta)^2, lambda * eta)
// Validation requires both entries nonzero, coprime, and not both constant;
// the last two jointly exclude the root-of-unity ratio.
enum class SeedKind { FG, LUCAS, LEHMER };

struct SeedPair {
    SeedKind kind;
    MPoly first;
    MPoly second;

    SeedPair(SeedKind k, MPoly a, MPoly b);
    const RingSpec& ring() const { return first.ring(); }
};

// Power sums t_k = a^k + b^k as elements of R.
// LUCAS: all k up to k_max (t_0 = 2, t_1 = s, t_k = s t_{k-1} - q t_{k-2}).
// LEHMER: even k only (odd power sums are not in R); odd slots hold the
// zero polynomial.  FG seeds throw KindMismatch: their power sums are
// computed directly from f and g.
std::vector<MPoly> power_sums(const SeedPair& seed, int k_max);

// Evaluates a symmetric homogeneous integer template at the seed's
// algebraic pair: (f,g), (alpha,beta) or (lambda,eta).  For LEHMER seeds
// the degree must be even.  The result is exact in R.
MPoly eval_symmetric(const HomogBivar& tmpl, const SeedPair& seed);

}  // namespace zsig

#endif
