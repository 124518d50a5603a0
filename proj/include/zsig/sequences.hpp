#ifndef ZSIG_SEQUENCES_HPP
#define ZSIG_SEQUENCES_HPP

#include <memory>
#include <vector>

#include "zsig/cyclo.hpp"
#include "zsig/mpoly.hpp"

namespace zsig {

// The four sequences:
//   F_n = f^n - g^n          (FG seed)
//   S_n = f^n + g^n          (FG seed)
//   L_n = (a^n - b^n)/(a-b)  (LUCAS seed: s = a+b, q = ab)
//   U_n = Lehmer             (LEHMER seed: E = (l+e)^2, q = l*e)
enum class SeqKind { F, S, L, U };

char seq_kind_letter(SeqKind k);

struct TermIndex {
    uint64_t n;
    bool deleted;  // true iff char p > 0 and p | n
};

struct CoprimeWitness {
    uint64_t divisor;     // proper divisor d of n
    bool unit;            // gcd(primitive_part, term_d) is a unit
};

struct PrimitivePartReport {
    TermIndex index;
    MPoly term;
    MPoly primitive_part;  // canonical
    int degree;
    std::vector<CoprimeWitness> witnesses;

    bool all_witnesses_unit() const;
};

// Term generator with a per-spec immutable-after-fill memo cache.
class Sequence {
  public:
    Sequence(SeedPair seed, SeqKind kind, uint64_t index_cap = 64);

    const SeedPair& seed() const { return seed_; }
    SeqKind kind() const { return kind_; }
    uint64_t index_cap() const { return cap_; }
    const RingSpec& ring() const { return seed_.ring(); }

    // n-th term, 1 <= n <= index_cap.
    const MPoly& term(uint64_t n) const;

    TermIndex index(uint64_t n) const;

  private:
    SeedPair seed_;
    SeqKind kind_;
    uint64_t cap_;
    mutable std::vector<MPoly> cache_;       // cache_[n] = term n; [0] unused
    mutable std::vector<bool> have_;
    mutable std::vector<MPoly> fpow_, gpow_;  // power caches for F/S kinds

    const MPoly& power_f(uint64_t n) const;
    const MPoly& power_g(uint64_t n) const;
};

MPoly seq_term(const Sequence& spec, uint64_t n);

// gcd(term_m, term_n) == term_gcd(m,n), compared in canonical form.
// For the S kind the correct law is gcd(S_m, S_n) = S_d when m/d and n/d
// are both odd and a unit otherwise (in characteristic 2, S = F and the
// plain law applies); the check asserts that law.
bool strong_div_check(const Sequence& spec, uint64_t m, uint64_t n);

// Moebius-product primitive part: prod_{d|n} term_d^{mu(n/d)}, computed by
// exact division; for the S kind the product runs over F at index 2n.
// Rejects deleted indices (char p > 0 and p | n).
PrimitivePartReport primitive_part(const Sequence& spec, uint64_t n);

bool has_primitive_divisor(const Sequence& spec, uint64_t n);

// Largest k with pi^k dividing h exactly.
uint64_t valuation(const MPoly& h, const Monic& pi);

// term(p*n) == term(n)^p; the Frobenius identity behind index deletion.
// F kind, characteristic p > 0 only.
bool frobenius_check(const Sequence& spec, uint64_t n);

enum class CoprimeLemma { L_PMPN2, L_PMPN_ODD, L_PMPN_MIX, L_PMN, L_ABN };

// Instance-level coprimality checks: constructs the two ring elements named
// by the lemma and returns whether their gcd is a unit.
bool lemma_coprime_check(CoprimeLemma lemma, const SeedPair& seed, uint64_t m,
                         uint64_t n);

}  // namespace zsig

#endif
