#include "zsig/resultant.hpp"

#include <numeric>

namespace zsig {

SylvesterMatrix sylvester(const HomogBivar& a, const HomogBivar& b) {
    if (a.degree < 1 || b.degree < 1) throw ConstantInput();
    int m = a.degree, n = b.degree;
    int dim = m + n;
    if (dim > kMaxSylvesterDim)
        throw DimensionLimit(std::to_string(dim) + " > " +
                             std::to_string(kMaxSylvesterDim));
    SylvesterMatrix s;
    s.dim = dim;
    s.entries.assign(static_cast<size_t>(dim) * dim, BigInt(0));
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k <= m; ++k) s.at(i, i + k) = a.coeffs[k];
    }
    for (int j = 0; j < m; ++j) {
        for (int k = 0; k <= n; ++k) s.at(n + j, j + k) = b.coeffs[k];
    }
    return s;
}

BigInt det_exact(const SylvesterMatrix& m) {
    SylvesterMatrix w = m;
    const int n = w.dim;
    if (n == 0) return BigInt(1);
    int sign = 1;
    BigInt prev(1);
    for (int k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i) {
                if (w.at(i, k) != 0) {
                    pivot = i;
                    break;
                }
            }
            if (pivot < 0) return BigInt(0);
            for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                BigInt num = w.at(k, k) * w.at(i, j) - w.at(i, k) * w.at(k, j);
                // Bareiss: division by the previous pivot is exact.
                mpz_divexact(w.at(i, j).get_mpz_t(), num.get_mpz_t(),
                             prev.get_mpz_t());
            }
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    BigInt det = w.at(n - 1, n - 1);
    return sign > 0 ? det : BigInt(-det);
}

BigInt resultant(const HomogBivar& a, const HomogBivar& b) {
    return det_exact(sylvester(a, b));
}

ResLemmaResult resultant_lemma_check(ResLemma lemma, uint64_t m, uint64_t n) {
    BigInt value;
    switch (lemma) {
        case ResLemma::RES2:
            if (m < 2 || n < 2)
                throw PreconditionViolation("RES2 requires m, n >= 2");
            if (std::gcd(m, n) != 1)
                throw PreconditionViolation("RES2 requires gcd(m, n) = 1");
            value = resultant(homog_family(HomogKind::P, m),
                              homog_family(HomogKind::P, n));
            break;
        case ResLemma::MIX:
            if (m % 2 != 1 || m < 3)
                throw PreconditionViolation("MIX requires odd m >= 3");
            if (n % 2 != 0 || n < 4)
                throw PreconditionViolation("MIX requires even n >= 4");
            if (std::gcd(m, n) != 1)
                throw PreconditionViolation("MIX requires gcd(m, n) = 1");
            value = resultant(homog_family(HomogKind::P, m),
                              homog_family(HomogKind::T, n));
            break;
        case ResLemma::PMN:
            if (m % 2 != 1 || m < 3 || n % 2 != 1 || n < 3)
                throw PreconditionViolation("PMN requires odd m, n >= 3");
            value = resultant(homog_family(HomogKind::V, m, n),
                              homog_family(HomogKind::W, n));
            break;
        case ResLemma::ABN:
            if (n % 2 != 1 || n < 3)
                throw PreconditionViolation("ABN requires odd n >= 3");
            value = resultant(homog_family(HomogKind::P, n),
                              HomogBivar(2, {BigInt(1), BigInt(2), BigInt(1)}));
            break;
    }
    bool pass = (value == 1 || value == -1);
    return ResLemmaResult{std::move(value), pass};
}

}  // namespace zsig
