#ifndef ZSIG_EXACT_ARITH_HPP
#define ZSIG_EXACT_ARITH_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

#include "zsig/errors.hpp"
#include "zsig/numtheory.hpp"

namespace zsig {

// Arbitrary-precision integer.  GMP keeps the canonical sign-magnitude
// representation (no leading zero limbs, zero is unsigned) and all
// arithmetic is exact.
using BigInt = mpz_class;

// Arbitrary-precision rational, kept canonical: den > 0, gcd(|num|, den) = 1,
// zero is 0/1.  Every mpq_class produced by rat_canonical or by arithmetic
// between canonical values stays canonical.
using Rat = mpq_class;

// Builds the canonical rational num/den.  Throws DivisionByZero when den = 0.
Rat rat_canonical(const BigInt& num, const BigInt& den);

inline constexpr uint64_t kMaxPrime = (1ull << 62);

// One element of the prime field F_p, p < 2^62.  The modulus travels with
// the value; mixing moduli throws RingMismatch.
struct FpElem {
    uint64_t value = 0;  // 0 <= value < p
    uint64_t p = 2;

    FpElem() = default;
    FpElem(uint64_t v, uint64_t prime) : value(v % prime), p(prime) {}

    static FpElem from_signed(long long v, uint64_t prime) {
        long long r = v % static_cast<long long>(prime);
        if (r < 0) r += static_cast<long long>(prime);
        return FpElem(static_cast<uint64_t>(r), prime);
    }
    static FpElem from_bigint(const BigInt& v, uint64_t prime);

    bool is_zero() const { return value == 0; }
    bool is_one() const { return value == 1 % p; }

    FpElem operator+(const FpElem& o) const;
    FpElem operator-(const FpElem& o) const;
    FpElem operator*(const FpElem& o) const;
    FpElem operator-() const;
    FpElem inv() const;  // throws DivisionByZero on 0
    FpElem pow(uint64_t e) const;

    bool operator==(const FpElem& o) const { return value == o.value && p == o.p; }
};

// A coefficient of R = K[X_1..X_r]: a rational when char K = 0, an F_p
// residue otherwise.  All operations are exact; mixing the two alternatives
// (or two different moduli) throws RingMismatch.
class FieldElem {
  public:
    FieldElem() : v_(Rat(0)) {}
    explicit FieldElem(Rat q) : v_(std::move(q)) {}
    explicit FieldElem(FpElem f) : v_(f) {}

    static FieldElem rational(long num, long den = 1) {
        if (den == 0) throw DivisionByZero();
        Rat q(num, den);
        q.canonicalize();
        return FieldElem(q);
    }
    static FieldElem fp(uint64_t v, uint64_t p) { return FieldElem(FpElem(v, p)); }

    bool is_rational() const { return std::holds_alternative<Rat>(v_); }
    bool is_fp() const { return std::holds_alternative<FpElem>(v_); }
    const Rat& rat() const { return std::get<Rat>(v_); }
    const FpElem& fpe() const { return std::get<FpElem>(v_); }

    bool is_zero() const;
    bool is_one() const;

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem inv() const;
    FieldElem pow(uint64_t e) const;

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    void check_same(const FieldElem& o) const;
    std::variant<Rat, FpElem> v_;
};

// Multiplicative inverse in the field; throws DivisionByZero when a = 0.
FieldElem field_inv(const FieldElem& a);
FpElem field_inv(const FpElem& a);
Rat field_inv(const Rat& a);

}  // namespace zsig

#endif
