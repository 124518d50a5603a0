#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "zsig/factor_fp.hpp"
#include "zsig/poly_io.hpp"

using namespace zsig;

namespace {

MPoly P(const RingSpec& ring, const std::string& s) { return parse_poly(s, ring); }

MPoly rebuild(const FieldElem& unit, const RingSpec& ring,
              const std::vector<std::pair<MPoly, uint64_t>>& parts) {
    MPoly out = MPoly::from_long(ring, 1).scaled(unit);
    for (const auto& [h, mult] : parts) out = out * h.pow(mult);
    return out;
}

MPoly rebuild_fp(const FpElem& unit,
                 const std::vector<std::pair<MPoly, uint64_t>>& parts,
                 const RingSpec& ring) {
    return rebuild(FieldElem::fp(unit.value, unit.p), ring, parts);
}

// exhaustive irreducibility oracle for degree <= 3: irreducible over F_p
// iff no root (deg 2, 3) and nonconstant
bool brute_irreducible(const MPoly& h, uint64_t p) {
    auto deg = h.total_degree();
    if (!deg || *deg < 1) return false;
    if (*deg == 1) return true;
    if (*deg > 3) throw std::logic_error("oracle limited to degree 3");
    for (uint64_t a = 0; a < p; ++a) {
        if (mp_eval(h, {FieldElem::fp(a, p)}).is_zero()) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("squarefree decomposition examples") {
    RingSpec f5(5, 1);
    // (x+1)^2 * x
    SquarefreeDecomp d1 = squarefree_decomp(P(f5, "x^3 + 2*x^2 + x"));
    REQUIRE(d1.parts.size() == 2);
    CHECK(rebuild_fp(d1.unit, d1.parts, f5) == P(f5, "x^3 + 2*x^2 + x"));
    bool saw_sq = false;
    for (const auto& [h, mult] : d1.parts)
        if (mult == 2) {
            saw_sq = true;
            CHECK(h == P(f5, "x + 1"));
        }
    CHECK(saw_sq);

    // x^5 + 1 = (x+1)^5 over F_5 — derivative vanishes, p-th-root path
    SquarefreeDecomp d2 = squarefree_decomp(P(f5, "x^5 + 1"));
    REQUIRE(d2.parts.size() == 1);
    CHECK(d2.parts[0].first == P(f5, "x + 1"));
    CHECK(d2.parts[0].second == 5);

    // already squarefree
    RingSpec f3(3, 1);
    SquarefreeDecomp d3 = squarefree_decomp(P(f3, "x^2 + 1"));
    REQUIRE(d3.parts.size() == 1);
    CHECK(d3.parts[0].second == 1);
    CHECK(d3.parts[0].first == P(f3, "x^2 + 1"));
}

TEST_CASE("factorization examples") {
    RingSpec f5(5, 1);
    FactorizationFp r1 = factor_fp(P(f5, "x^2 - 1"));
    REQUIRE(r1.factors.size() == 2);
    CHECK(r1.unit.value == 1);
    CHECK(rebuild_fp(r1.unit, r1.factors, f5) == P(f5, "x^2 + 4"));

    // F_4 at f = x+1, g = x over F_3: (x+1)^4 - x^4 = (2x+1)(2x^2+2x+1),
    // reported in monic form
    RingSpec f3(3, 1);
    MPoly f4 = P(f3, "x+1").pow(4) - P(f3, "x").pow(4);
    FactorizationFp r2 = factor_fp(f4);
    REQUIRE(r2.factors.size() == 2);
    CHECK(rebuild_fp(r2.unit, r2.factors, f3) == f4);
    for (const auto& [h, mult] : r2.factors) {
        CHECK(mult == 1);
        CHECK(h.leading_coeff().is_one());
        CHECK(is_irreducible_fp(h));
    }

    // constant input: unit only, no factors
    FactorizationFp r3 = factor_fp(P(f5, "3"));
    CHECK(r3.unit.value == 3);
    CHECK(r3.factors.empty());

    // full splitting of x^6 - 1 over F_7
    RingSpec f7(7, 1);
    FactorizationFp r4 = factor_fp(P(f7, "x^6 - 1"));
    REQUIRE(r4.factors.size() == 6);
    for (const auto& [h, mult] : r4.factors) CHECK(h.total_degree() == 1);
    CHECK(rebuild_fp(r4.unit, r4.factors, f7) == P(f7, "x^6 + 6"));
}

TEST_CASE("irreducibility examples") {
    RingSpec f2(2, 1);
    CHECK(is_irreducible_fp(P(f2, "x^2 + x + 1")));
    CHECK(!is_irreducible_fp(P(f2, "x^2 + 1")));  // (x+1)^2
    RingSpec f5(5, 1);
    CHECK(is_irreducible_fp(P(f5, "x^2 + 2")));
    CHECK(!is_irreducible_fp(P(f5, "x^2 - 1")));
    CHECK_THROWS_AS(is_irreducible_fp(P(f5, "4")), ConstantInput);
    CHECK_THROWS_AS(is_irreducible_fp(MPoly::zero(f5)), ConstantInput);
}

TEST_CASE("error taxonomy") {
    RingSpec f5(5, 1);
    CHECK_THROWS_AS(factor_fp(MPoly::zero(f5)), ZeroInput);
    CHECK_THROWS_AS(factor_fp(parse_poly("x+y", RingSpec(5, 2))), WrongArity);
    CHECK_THROWS_AS(factor_fp(parse_poly("x+1", RingSpec(0, 1))), CharZero);
}

TEST_CASE("factor-and-rebuild on random polynomials") {
    oracles::TestRng rng(53);
    const uint64_t primes[] = {2, 3, 5, 7, 101};
    int done = 0;
    while (done < 500) {
        uint64_t p = primes[rng.next() % 5];
        RingSpec ring(p, 1);
        int deg = 1 + static_cast<int>(rng.next() % 20);
        std::vector<FieldElem> c;
        for (int i = 0; i <= deg; ++i) c.push_back(FieldElem::fp(rng.next() % p, p));
        if (c.back().is_zero()) c.back() = FieldElem::fp(1, p);
        MPoly h = oracles::from_dense(ring, c);
        FactorizationFp r = factor_fp(h, 1000 + static_cast<uint64_t>(done));
        CHECK(rebuild_fp(r.unit, r.factors, ring) == h);
        for (const auto& [g, mult] : r.factors) {
            CHECK(mult >= 1);
            CHECK(g.leading_coeff().is_one());
            CHECK(is_irreducible_fp(g));
            auto d = g.total_degree();
            if (d && *d <= 3) CHECK(brute_irreducible(g, p));
        }
        // factors pairwise distinct
        for (size_t i = 0; i < r.factors.size(); ++i)
            for (size_t j = i + 1; j < r.factors.size(); ++j)
                CHECK(!(r.factors[i].first == r.factors[j].first));
        ++done;
    }
}

TEST_CASE("squarefree decomposition on random products") {
    oracles::TestRng rng(59);
    for (int i = 0; i < 100; ++i) {
        uint64_t p = (i % 2) ? 3 : 7;
        RingSpec ring(p, 1);
        MPoly h = MPoly::from_long(ring, 1);
        for (int j = 0; j < 3; ++j) {
            MPoly g = oracles::random_poly(rng, ring, 3, 3);
            if (g.is_zero() || g.is_constant()) continue;
            h = h * g.pow(1 + rng.next() % 3);
        }
        if (h.is_constant()) continue;
        SquarefreeDecomp d = squarefree_decomp(h);
        CHECK(rebuild_fp(d.unit, d.parts, ring) == h);
        for (const auto& [g, mult] : d.parts) {
            CHECK(mult >= 1);
            // squarefree: gcd with derivative is constant, via the factorizer
            for (const auto& [q, m2] : factor_fp(g).factors) CHECK(m2 == 1);
        }
    }
}

TEST_CASE("deterministic given the seed") {
    RingSpec f101(101, 1);
    MPoly h = P(f101, "x^8 + 3*x^5 + 7*x^2 + 1");
    FactorizationFp a = factor_fp(h, 12345);
    FactorizationFp b = factor_fp(h, 12345);
    REQUIRE(a.factors.size() == b.factors.size());
    for (size_t i = 0; i < a.factors.size(); ++i) {
        CHECK(a.factors[i].first == b.factors[i].first);
        CHECK(a.factors[i].second == b.factors[i].second);
    }
}
