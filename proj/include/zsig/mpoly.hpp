#ifndef ZSIG_MPOLY_HPP
#define ZSIG_MPOLY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "zsig/exact_arith.hpp"

namespace zsig {

inline constexpr int kMaxVars = 8;
inline constexpr size_t kMaxTerms = 1'000'000;

// Ambient ring descriptor for R = K[X_1..X_r], K = Q (characteristic 0)
// or F_p.  Primality of p is validated once, here.
struct RingSpec {
    uint64_t characteristic = 0;
    int num_vars = 1;

    RingSpec() = default;
    RingSpec(uint64_t ch, int r);

    bool operator==(const RingSpec&) const = default;

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem from_long(long long v) const;
    // Maps a rational into K.  In F_p the denominator must be invertible
    // mod p; otherwise CoefficientNotInField.
    FieldElem from_rat(const Rat& q) const;
    FieldElem from_bigint(const BigInt& v) const;
};

struct Monomial {
    std::array<uint32_t, kMaxVars> e{};

    int total_degree(int r) const {
        int d = 0;
        for (int i = 0; i < r; ++i) d += static_cast<int>(e[i]);
        return d;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
};

// Graded lexicographic comparison: total degree first, then lex on
// exponents.  Returns <0, 0, >0.
int mono_cmp(const Monomial& a, const Monomial& b, int r);

struct Term {
    Monomial m;
    FieldElem c;
};

// Total degree with the -infinity sentinel for the zero polynomial:
// std::nullopt orders below every integer under std::optional's ordering.
using Degree = std::optional<int>;

// Sparse exact multivariate polynomial.  Terms are kept strictly sorted in
// descending graded-lex order with no zero coefficients; the zero polynomial
// is the empty term list.
class MPoly {
  public:
    MPoly() = default;
    explicit MPoly(const RingSpec& ring) : ring_(ring) {}

    static MPoly zero(const RingSpec& ring) { return MPoly(ring); }
    static MPoly constant(const RingSpec& ring, const FieldElem& c);
    static MPoly from_long(const RingSpec& ring, long long v);
    static MPoly variable(const RingSpec& ring, int var, uint32_t exp = 1);
    // Normalizes: sorts, merges, drops zeros.
    static MPoly from_terms(const RingSpec& ring, std::vector<Term> terms);

    const RingSpec& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    size_t num_terms() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_unit() const { return is_constant() && !is_zero(); }
    // Constant term value (zero if absent).
    FieldElem constant_value() const;

    Degree total_degree() const;
    int deg_in(int var) const;  // -1 for the zero polynomial
    const Term& leading() const;
    const FieldElem& leading_coeff() const { return leading().c; }

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator-() const;
    MPoly scaled(const FieldElem& c) const;
    MPoly pow(uint64_t n) const;

    bool operator==(const MPoly& o) const;
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    // Leading coefficient scaled to 1 (the canonical unit normalization).
    MPoly canonical() const;

    // Substitutes point[i] for X_i; point.size() must equal num_vars.
    FieldElem eval(const std::vector<FieldElem>& point) const;
    // Substitutes a value for a single variable; the result lives in the
    // same ring with that variable absent.
    MPoly eval_partial(int var, const FieldElem& value) const;

    void check_same_ring(const MPoly& o) const;

  private:
    RingSpec ring_;
    std::vector<Term> terms_;

    friend MPoly normalize_terms(const RingSpec&, std::vector<Term>&&);
};

MPoly mp_mul(const MPoly& a, const MPoly& b);

// Exact division; throws NotDivisible when the remainder would be nonzero.
MPoly mp_exact_div(const MPoly& a, const MPoly& b);
// Probing variant: nullopt instead of NotDivisible.
std::optional<MPoly> mp_try_div(const MPoly& a, const MPoly& b);

// GCD in canonical normalization.  Recursive Gauss-lemma reduction to the
// lowest used variable; see mpoly.cpp for the remainder-sequence details.
MPoly mp_gcd(const MPoly& a, const MPoly& b);

// Content/primitive-part split with respect to one variable: content is the
// gcd of the coefficients of a in K[other vars][main_var], primpart is
// canonical, and content * primpart == a exactly.
std::pair<MPoly, MPoly> mp_content_primpart(const MPoly& a, int main_var);

FieldElem mp_eval(const MPoly& a, const std::vector<FieldElem>& point);

// A nonconstant polynomial whose graded-lex leading coefficient is 1.
struct Monic {
    MPoly poly;
    explicit Monic(MPoly p) : poly(std::move(p)) {
        if (poly.is_constant()) throw ConstantInput();
        if (!poly.leading_coeff().is_one())
            throw PreconditionViolation("leading coefficient must be 1");
    }
};

// Decomposition of a by the exponent of one variable: result[k] is the
// coefficient of main_var^k (a polynomial free of main_var).
std::vector<MPoly> coeffs_wrt(const MPoly& a, int var);
MPoly leading_coeff_wrt(const MPoly& a, int var);

}  // namespace zsig

#endif
