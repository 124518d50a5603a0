#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "zsig/cyclo.hpp"
#include "zsig/numtheory.hpp"
#include "zsig/poly_io.hpp"

using namespace zsig;

namespace {
MPoly P(const RingSpec& ring, const std::string& s) { return parse_poly(s, ring); }
const RingSpec Q1(0, 1);

HomogBivar from_dense(const std::vector<BigInt>& asc) {
    // ascending univariate -> homogeneous coeffs[k] = coeff of X^{d-k} Y^k
    int d = static_cast<int>(asc.size()) - 1;
    std::vector<BigInt> c(asc.size());
    for (int i = 0; i <= d; ++i) c[d - i] = asc[i];
    return HomogBivar(d, std::move(c));
}
}  // namespace

TEST_CASE("cyclotomic examples against the dense division oracle") {
    CHECK(cyclotomic_int(1) == HomogBivar(1, {BigInt(1), BigInt(-1)}));
    CHECK(cyclotomic_int(6) == HomogBivar(2, {BigInt(1), BigInt(-1), BigInt(1)}));
    CHECK(cyclotomic_int(12) ==
          HomogBivar(4, {BigInt(1), BigInt(0), BigInt(-1), BigInt(0), BigInt(1)}));
    for (uint64_t n : {1ull, 2ull, 6ull, 12ull, 30ull, 105ull}) {
        CHECK(cyclotomic_int(n) == from_dense(oracles::cyclotomic_dense(n)));
    }
    CHECK_THROWS_AS(cyclotomic_int(0), OutOfRange);
    CHECK_THROWS_AS(cyclotomic_int(10001), OutOfRange);
}

TEST_CASE("product formula and degree for n <= 200") {
    for (uint64_t n = 1; n <= 200; ++n) {
        CHECK(cyclotomic_int(n).degree == static_cast<int>(euler_phi(n)));
        HomogBivar prod(0, {BigInt(1)});
        for (uint64_t d : divisors(n)) prod = homog_mul(prod, cyclotomic_int(d));
        std::vector<BigInt> expect(n + 1, BigInt(0));
        expect[0] = 1;
        expect[n] = -1;  // X^n - Y^n in descending-Y layout
        CHECK(prod == HomogBivar(static_cast<int>(n), std::move(expect)));

        // P_n = prod over divisors >= 2
        HomogBivar pn(0, {BigInt(1)});
        for (uint64_t d : divisors(n))
            if (d >= 2) pn = homog_mul(pn, cyclotomic_int(d));
        CHECK(pn == homog_family(HomogKind::P, n));
    }
}

TEST_CASE("homogeneous family examples") {
    CHECK(homog_family(HomogKind::P, 3) ==
          HomogBivar(2, {BigInt(1), BigInt(1), BigInt(1)}));
    CHECK(homog_family(HomogKind::T, 2) == HomogBivar(0, {BigInt(1)}));
    CHECK(homog_family(HomogKind::W, 3) ==
          HomogBivar(2, {BigInt(1), BigInt(-1), BigInt(1)}));
    CHECK_THROWS_AS(homog_family(HomogKind::T, 3), ParityViolation);
    CHECK_THROWS_AS(homog_family(HomogKind::W, 4), ParityViolation);
    // V_m with inner exponent n: P_m(X^n, Y^n)
    HomogBivar v = homog_family(HomogKind::V, 3, 2);
    CHECK(v.degree == 4);
    CHECK(v == HomogBivar(4, {BigInt(1), BigInt(0), BigInt(1), BigInt(0), BigInt(1)}));
}

TEST_CASE("homog to_string") {
    CHECK(cyclotomic_int(6).to_string() == "X^2 - X*Y + Y^2");
    CHECK(cyclotomic_int(1).to_string() == "X - Y");
}

TEST_CASE("seed pair validation") {
    CHECK_NOTHROW(SeedPair(SeedKind::FG, P(Q1, "x+1"), P(Q1, "x")));
    CHECK_THROWS_AS(SeedPair(SeedKind::FG, P(Q1, "x"), MPoly::zero(Q1)), InvalidSeed);
    CHECK_THROWS_AS(SeedPair(SeedKind::FG, P(Q1, "2"), P(Q1, "3")), InvalidSeed);
    CHECK_THROWS_AS(SeedPair(SeedKind::FG, P(Q1, "x^2+x"), P(Q1, "x")), InvalidSeed);
}

TEST_CASE("power sums") {
    SeedPair lucas(SeedKind::LUCAS, P(Q1, "x"), P(Q1, "1"));
    auto t = power_sums(lucas, 4);
    CHECK(t[0] == P(Q1, "2"));
    CHECK(t[1] == P(Q1, "x"));
    CHECK(t[3] == P(Q1, "x^3 - 3*x"));
    // independent Newton-identity oracle
    auto oracle = oracles::newton_power_sums(P(Q1, "x"), P(Q1, "1"), 4);
    for (int k = 0; k <= 4; ++k) CHECK(t[k] == oracle[k]);

    SeedPair lehmer(SeedKind::LEHMER, P(Q1, "x"), P(Q1, "1"));
    auto u = power_sums(lehmer, 4);
    CHECK(u[2] == P(Q1, "x - 2"));
    CHECK(u[4] == P(Q1, "x^2 - 4*x + 2"));
    CHECK(u[3].is_zero());  // odd slots are not elements of R

    SeedPair fg(SeedKind::FG, P(Q1, "x+1"), P(Q1, "x"));
    CHECK_THROWS_AS(power_sums(fg, 3), KindMismatch);
}

TEST_CASE("eval_symmetric examples") {
    SeedPair lucas(SeedKind::LUCAS, P(Q1, "x"), P(Q1, "1"));
    CHECK(eval_symmetric(cyclotomic_int(3), lucas) == P(Q1, "x^2 - 1"));
    CHECK(eval_symmetric(cyclotomic_int(5), lucas) == P(Q1, "x^4 - 3*x^2 + 1"));

    SeedPair lehmer(SeedKind::LEHMER, P(Q1, "x"), P(Q1, "1"));
    CHECK(eval_symmetric(cyclotomic_int(9), lehmer) ==
          P(Q1, "x^3 - 6*x^2 + 9*x - 1"));

    // degree parity and symmetry guards
    CHECK_THROWS_AS(
        eval_symmetric(HomogBivar(1, {BigInt(1), BigInt(1)}), lehmer),
        ParityViolation);
    CHECK_THROWS_AS(eval_symmetric(HomogBivar(1, {BigInt(1), BigInt(2)}), lucas),
                    NotSymmetric);
}

TEST_CASE("eval_symmetric at FG seeds equals direct substitution") {
    RingSpec q2(0, 2);
    SeedPair fg(SeedKind::FG, P(q2, "x+y"), P(q2, "x-y+1"));
    const MPoly& f = fg.first;
    const MPoly& g = fg.second;
    for (uint64_t n : {3ull, 4ull, 6ull, 9ull}) {
        HomogBivar phi = cyclotomic_int(n);
        MPoly direct(q2);
        for (int k = 0; k <= phi.degree; ++k) {
            MPoly term = f.pow(static_cast<uint64_t>(phi.degree - k)) *
                         g.pow(static_cast<uint64_t>(k));
            direct = direct + term.scaled(q2.from_bigint(phi.coeffs[k]));
        }
        CHECK(eval_symmetric(phi, fg) == direct);
    }
}
