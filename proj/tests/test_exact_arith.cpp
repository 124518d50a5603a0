#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "zsig/exact_arith.hpp"

using namespace zsig;

TEST_CASE("rat_canonical basics") {
    CHECK(rat_canonical(BigInt(6), BigInt(4)) == Rat(3, 2));
    CHECK(rat_canonical(BigInt(-6), BigInt(-4)) == Rat(3, 2));
    CHECK(rat_canonical(BigInt(0), BigInt(5)) == Rat(0));
    CHECK(rat_canonical(BigInt(3), BigInt(-6)) == Rat(-1, 2));
    CHECK_THROWS_AS(rat_canonical(BigInt(1), BigInt(0)), DivisionByZero);
}

TEST_CASE("rat round-trip under common factors") {
    oracles::TestRng rng(7);
    for (int i = 0; i < 200; ++i) {
        BigInt a(static_cast<long>(rng.next() % 2001) - 1000);
        BigInt b(static_cast<long>(rng.next() % 2000) - 1000);
        if (b == 0) b = 1;
        BigInt k(static_cast<long>(rng.next() % 99) + 1);
        CHECK(rat_canonical(a * k, b * k) == rat_canonical(a, b));
        CHECK(rat_canonical(a * -k, b * -k) == rat_canonical(a, b));
    }
}

TEST_CASE("FpElem arithmetic and inverses") {
    FpElem a(3, 7), b(5, 7);
    CHECK((a + b).value == 1);
    CHECK((a - b).value == 5);
    CHECK((a * b).value == 1);
    CHECK((-a).value == 4);
    CHECK(a.inv().value == 5);  // 3*5 = 15 = 1 mod 7
    CHECK(a.pow(6).value == 1);
    CHECK_THROWS_AS(FpElem(0, 7).inv(), DivisionByZero);
    CHECK(FpElem::from_signed(-1, 5).value == 4);
    CHECK(FpElem::from_bigint(BigInt(-13), 5).value == 2);
}

TEST_CASE("Fermat: a^p = a over several primes") {
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 101ull}) {
        for (uint64_t a = 0; a < p; ++a) {
            CHECK(FpElem(a, p).pow(p) == FpElem(a, p));
        }
    }
}

TEST_CASE("field axioms on random pairs, both fields") {
    oracles::TestRng rng(11);
    auto rand_rat = [&] {
        long n = static_cast<long>(rng.next() % 201) - 100;
        long d = static_cast<long>(rng.next() % 100) + 1;
        return FieldElem::rational(n, d);
    };
    auto rand_fp = [&] { return FieldElem::fp(rng.next() % 101, 101); };

    for (int i = 0; i < 1000; ++i) {
        for (int which = 0; which < 2; ++which) {
            FieldElem a = which ? rand_fp() : rand_rat();
            FieldElem b = which ? rand_fp() : rand_rat();
            FieldElem c = which ? rand_fp() : rand_rat();
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == (a - a));
            if (!a.is_zero()) {
                CHECK(a * a.inv() == (which ? FieldElem::fp(1, 101)
                                            : FieldElem::rational(1)));
            }
        }
    }
}

TEST_CASE("mixing fields throws RingMismatch") {
    FieldElem a = FieldElem::rational(1, 2);
    FieldElem b = FieldElem::fp(1, 7);
    CHECK_THROWS_AS((void)(a + b), RingMismatch);
    CHECK_THROWS_AS((void)(FieldElem::fp(1, 5) * FieldElem::fp(1, 7)), RingMismatch);
}

TEST_CASE("FieldElem printing") {
    CHECK(FieldElem::rational(-3, 4).to_string() == "-3/4");
    CHECK(FieldElem::rational(5).to_string() == "5");
    CHECK(FieldElem::fp(9, 7).to_string() == "2");
}
