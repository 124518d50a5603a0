#ifndef ZSIG_RESULTANT_HPP
#define ZSIG_RESULTANT_HPP

#include "zsig/cyclo.hpp"

namespace zsig {

// Sylvester matrix of two homogeneous bivariate integer polynomials of
// degrees m and n: (m+n) x (m+n), the first n rows carry the first
// polynomial's coefficients shifted, the last m rows the second's.
struct SylvesterMatrix {
    int dim = 0;
    std::vector<BigInt> entries;  // row-major

    BigInt& at(int i, int j) { return entries[static_cast<size_t>(i) * dim + j]; }
    const BigInt& at(int i, int j) const {
        return entries[static_cast<size_t>(i) * dim + j];
    }
};

inline constexpr int kMaxSylvesterDim = 200;

// Throws ConstantInput when either polynomial has degree 0 and
// DimensionLimit beyond kMaxSylvesterDim.
SylvesterMatrix sylvester(const HomogBivar& a, const HomogBivar& b);

// Exact determinant by Bareiss single-step fraction-free elimination.
BigInt det_exact(const SylvesterMatrix& m);

BigInt resultant(const HomogBivar& a, const HomogBivar& b);

enum class ResLemma { RES2, MIX, PMN, ABN };

struct ResLemmaResult {
    BigInt value;
    bool pass;  // value in {+1, -1}
};

// RES2: Res(P_m, P_n), gcd(m,n) = 1, m,n >= 2.
// MIX:  Res(P_m, T_n), m odd >= 3, n even >= 4, gcd(m,n) = 1.
// PMN:  Res(P_m(X^n, Y^n), W_n), m,n odd >= 3.
// ABN:  Res(P_n, (X+Y)^2), n odd >= 3 (m ignored).
ResLemmaResult resultant_lemma_check(ResLemma lemma, uint64_t m, uint64_t n);

}  // namespace zsig

#endif
