#ifndef ZSIG_TESTS_ORACLES_HPP
#define ZSIG_TESTS_ORACLES_HPP

// Independent reference implementations used to derive frozen test values.
// Everything here is deliberately naive: correctness over speed, and no
// shared code paths with the library internals under test.

#include <cstdint>
#include <vector>

#include "zsig/exact_arith.hpp"
#include "zsig/mpoly.hpp"

namespace oracles {

using zsig::BigInt;
using zsig::FieldElem;
using zsig::MPoly;
using zsig::RingSpec;

// Dense univariate polynomial over the ring's field, ascending coefficients.
using Dense = std::vector<FieldElem>;

inline Dense dense_trim(Dense v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
    return v;
}

inline Dense to_dense(const MPoly& h, int var = 0) {
    Dense v(static_cast<size_t>(std::max(h.deg_in(var), 0)) + 1, h.ring().zero());
    for (const auto& t : h.terms()) v[t.m.e[var]] = t.c;
    return dense_trim(std::move(v));
}

inline MPoly from_dense(const RingSpec& ring, const Dense& v, int var = 0) {
    MPoly out(ring);
    for (size_t i = 0; i < v.size(); ++i) {
        MPoly term = MPoly::constant(ring, v[i]);
        out = out + term * MPoly::variable(ring, var, static_cast<uint32_t>(i));
    }
    return out;
}

// Classical monic Euclid in K[x]: the oracle mp_gcd must agree with on
// univariate inputs.
inline Dense euclid_gcd(Dense a, Dense b) {
    a = dense_trim(std::move(a));
    b = dense_trim(std::move(b));
    while (!b.empty()) {
        // a <- a mod b
        FieldElem inv = b.back().inv();
        while (a.size() >= b.size() && !a.empty()) {
            FieldElem f = a.back() * inv;
            size_t off = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) a[off + i] = a[off + i] - f * b[i];
            a = dense_trim(std::move(a));
        }
        std::swap(a, b);
    }
    if (!a.empty()) {
        FieldElem inv = a.back().inv();
        for (auto& c : a) c = c * inv;
    }
    return a;
}

inline MPoly euclid_gcd_poly(const MPoly& a, const MPoly& b, int var = 0) {
    return from_dense(a.ring(), euclid_gcd(to_dense(a, var), to_dense(b, var)), var);
}

// Exact division in Z[x] on dense BigInt vectors (ascending); the oracle for
// cyclotomic polynomial computations.  Callers must know the division is
// exact; a nonzero remainder aborts via the returned empty vector.
inline std::vector<BigInt> z_exact_div(std::vector<BigInt> a,
                                       const std::vector<BigInt>& b) {
    auto trim = [](std::vector<BigInt>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(a);
    if (a.empty()) return {BigInt(0)};
    std::vector<BigInt> q(a.size() - b.size() + 1, BigInt(0));
    while (a.size() >= b.size()) {
        if (a.back() % b.back() != 0) return {};
        BigInt f = a.back() / b.back();
        size_t off = a.size() - b.size();
        q[off] = f;
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        trim(a);
    }
    if (!a.empty()) return {};
    return q;
}

// n-th cyclotomic polynomial over Z (dense, ascending), computed the slow
// way: divide x^n - 1 by the product of all lower Phi_d.
inline std::vector<BigInt> cyclotomic_dense(uint64_t n) {
    auto mul = [](const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
        std::vector<BigInt> c(a.size() + b.size() - 1, BigInt(0));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
        return c;
    };
    std::vector<BigInt> acc{BigInt(1)};
    for (uint64_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        acc = mul(acc, cyclotomic_dense(d));
    }
    std::vector<BigInt> xn(static_cast<size_t>(n) + 1, BigInt(0));
    xn[0] = -1;
    xn[n] = 1;
    return z_exact_div(std::move(xn), acc);
}

// Power sums of two symbolic roots with elementary symmetric values (s, q):
// t_k = s*t_{k-1} - q*t_{k-2}, the hand-derivable Newton identity.
inline std::vector<MPoly> newton_power_sums(const MPoly& s, const MPoly& q, int kmax) {
    const RingSpec& ring = s.ring();
    std::vector<MPoly> t;
    t.push_back(MPoly::from_long(ring, 2));
    if (kmax >= 1) t.push_back(s);
    for (int k = 2; k <= kmax; ++k) t.push_back(s * t[k - 1] - q * t[k - 2]);
    return t;
}

// Deterministic light-weight RNG for test data (decoupled from library RNG).
struct TestRng {
    uint64_t state;
    explicit TestRng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

inline MPoly random_poly(TestRng& rng, const RingSpec& ring, int max_deg,
                         int max_terms) {
    std::vector<zsig::Term> ts;
    int nterms = 1 + static_cast<int>(rng.next() % max_terms);
    for (int t = 0; t < nterms; ++t) {
        zsig::Monomial m;
        int budget = max_deg;
        for (int i = 0; i < ring.num_vars; ++i) {
            uint32_t e = static_cast<uint32_t>(rng.next() % (budget + 1));
            m.e[i] = e;
            budget -= static_cast<int>(e);
        }
        long long v = static_cast<long long>(rng.next() % 19) - 9;
        if (v == 0) v = 1;
        ts.push_back(zsig::Term{m, ring.from_long(v)});
    }
    return MPoly::from_terms(ring, std::move(ts));
}

}  // namespace oracles

#endif
