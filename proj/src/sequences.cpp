#include "zsig/sequences.hpp"

#include <numeric>

#include "zsig/numtheory.hpp"

namespace zsig {

char seq_kind_letter(SeqKind k) {
    switch (k) {
        case SeqKind::F: return 'F';
        case SeqKind::S: return 'S';
        case SeqKind::L: return 'L';
        case SeqKind::U: return 'U';
    }
    return '?';
}

bool PrimitivePartReport::all_witnesses_unit() const {
    for (const auto& w : witnesses) {
        if (!w.unit) return false;
    }
    return true;
}

Sequence::Sequence(SeedPair seed, SeqKind kind, uint64_t index_cap)
    : seed_(std::move(seed)), kind_(kind), cap_(index_cap) {
    SeedKind want = (kind == SeqKind::L)   ? SeedKind::LUCAS
                    : (kind == SeqKind::U) ? SeedKind::LEHMER
                                           : SeedKind::FG;
    if (seed_.kind != want)
        throw KindMismatch(std::string("sequence kind ") + seq_kind_letter(kind) +
                           " needs a different seed kind");
    if (cap_ < 4) throw OutOfRange("index cap must be at least 4");
    cache_.assign(cap_ + 1, MPoly(ring()));
    have_.assign(cap_ + 1, false);
    fpow_.push_back(MPoly::from_long(ring(), 1));
    gpow_.push_back(MPoly::from_long(ring(), 1));
}

const MPoly& Sequence::power_f(uint64_t n) const {
    while (fpow_.size() <= n) fpow_.push_back(fpow_.back() * seed_.first);
    return fpow_[n];
}

const MPoly& Sequence::power_g(uint64_t n) const {
    while (gpow_.size() <= n) gpow_.push_back(gpow_.back() * seed_.second);
    return gpow_[n];
}

TermIndex Sequence::index(uint64_t n) const {
    uint64_t p = ring().characteristic;
    return TermIndex{n, p > 0 && n % p == 0};
}

const MPoly& Sequence::term(uint64_t n) const {
    if (n < 1 || n > cap_)
        throw IndexOutOfRange("term index " + std::to_string(n) + " (cap " +
                              std::to_string(cap_) + ")");
    if (have_[n]) return cache_[n];

    switch (kind_) {
        case SeqKind::F:
            cache_[n] = power_f(n) - power_g(n);
            break;
        case SeqKind::S:
            cache_[n] = power_f(n) + power_g(n);
            break;
        case SeqKind::L: {
            const MPoly& s = seed_.first;
            const MPoly& q = seed_.second;
            if (n == 1) {
                cache_[n] = MPoly::from_long(ring(), 1);
            } else if (n == 2) {
                cache_[n] = s;
            } else {
                cache_[n] = s * term(n - 1) - q * term(n - 2);
            }
            break;
        }
        case SeqKind::U: {
            const MPoly& E = seed_.first;
            const MPoly& q = seed_.second;
            if (n == 1 || n == 2) {
                cache_[n] = MPoly::from_long(ring(), 1);
            } else if (n == 3) {
                cache_[n] = E - q;
            } else if (n == 4) {
                cache_[n] = E - q.scaled(ring().from_long(2));
            } else {
                // U_{n} = (E - 2q) U_{n-2} - q^2 U_{n-4}
                MPoly a = E - q.scaled(ring().from_long(2));
                cache_[n] = a * term(n - 2) - (q * q) * term(n - 4);
            }
            break;
        }
    }
    have_[n] = true;
    return cache_[n];
}

MPoly seq_term(const Sequence& spec, uint64_t n) { return spec.term(n); }

bool strong_div_check(const Sequence& spec, uint64_t m, uint64_t n) {
    if (m < 1 || n < 1) throw IndexOutOfRange("m, n >= 1 required");
    uint64_t d = std::gcd(m, n);
    MPoly g = mp_gcd(spec.term(m), spec.term(n));
    MPoly expected(spec.ring());
    if (spec.kind() == SeqKind::S && spec.ring().characteristic != 2) {
        bool both_odd = ((m / d) % 2 == 1) && ((n / d) % 2 == 1);
        expected = both_odd ? spec.term(d).canonical()
                            : MPoly::from_long(spec.ring(), 1);
    } else {
        expected = spec.term(d).canonical();
    }
    return g == expected;
}

PrimitivePartReport primitive_part(const Sequence& spec, uint64_t n) {
    if (n < 3) throw IndexOutOfRange("primitive part needs n >= 3");
    uint64_t p = spec.ring().characteristic;
    if (p > 0 && n % p == 0)
        throw DeletedIndex("p = " + std::to_string(p) + " divides n = " +
                           std::to_string(n));

    MPoly num = MPoly::from_long(spec.ring(), 1);
    MPoly den = MPoly::from_long(spec.ring(), 1);
    if (spec.kind() == SeqKind::S) {
        // Primitive part of S_n through F at index 2n (F_{2n} = F_n S_n).
        Sequence aux(spec.seed(), SeqKind::F, std::max<uint64_t>(2 * n, 8));
        for (uint64_t d : divisors(2 * n)) {
            int mu = mobius(2 * n / d);
            if (mu == 1) num = num * aux.term(d);
            if (mu == -1) den = den * aux.term(d);
        }
    } else {
        for (uint64_t d : divisors(n)) {
            int mu = mobius(n / d);
            if (mu == 1) num = num * spec.term(d);
            if (mu == -1) den = den * spec.term(d);
        }
    }
    MPoly prim = mp_exact_div(num, den).canonical();

    PrimitivePartReport report;
    report.index = spec.index(n);
    report.term = spec.term(n);
    report.primitive_part = prim;
    report.degree = prim.total_degree().value_or(0);
    for (uint64_t d : divisors(n)) {
        if (d == n) continue;
        MPoly g = mp_gcd(prim, spec.term(d));
        report.witnesses.push_back(CoprimeWitness{d, g.is_constant()});
    }
    return report;
}

bool has_primitive_divisor(const Sequence& spec, uint64_t n) {
    PrimitivePartReport r = primitive_part(spec, n);
    return r.degree >= 1 && r.all_witnesses_unit();
}

uint64_t valuation(const MPoly& h, const Monic& pi) {
    if (h.is_zero()) throw ZeroInput();
    uint64_t k = 0;
    MPoly cur = h;
    while (true) {
        auto q = mp_try_div(cur, pi.poly);
        if (!q) return k;
        cur = std::move(*q);
        ++k;
    }
}

bool frobenius_check(const Sequence& spec, uint64_t n) {
    if (spec.kind() != SeqKind::F)
        throw KindMismatch("frobenius_check applies to the F kind");
    uint64_t p = spec.ring().characteristic;
    if (p == 0) throw CharZero();
    return spec.term(p * n) == spec.term(n).pow(p);
}

bool lemma_coprime_check(CoprimeLemma lemma, const SeedPair& seed, uint64_t m,
                         uint64_t n) {
    auto require = [](bool cond, const char* what) {
        if (!cond) throw PreconditionViolation(what);
    };
    switch (lemma) {
        case CoprimeLemma::L_PMPN2: {
            if (seed.kind != SeedKind::LUCAS)
                throw KindMismatch("L_PMPN2 needs a LUCAS seed");
            require(m >= 1 && n >= 1, "m, n >= 1");
            require(std::gcd(m, n) == 1, "gcd(m, n) = 1");
            Sequence L(seed, SeqKind::L, std::max<uint64_t>(std::max(m, n), 4));
            return mp_gcd(L.term(m), L.term(n)).is_constant();
        }
        case CoprimeLemma::L_PMPN_ODD: {
            if (seed.kind != SeedKind::LEHMER)
                throw KindMismatch("L_PMPN_ODD needs a LEHMER seed");
            require(m % 2 == 1 && n % 2 == 1, "m and n odd");
            require(std::gcd(m, n) == 1, "gcd(m, n) = 1");
            Sequence U(seed, SeqKind::U, std::max<uint64_t>(std::max(m, n), 4));
            return mp_gcd(U.term(m), U.term(n)).is_constant();
        }
        case CoprimeLemma::L_PMPN_MIX: {
            if (seed.kind != SeedKind::LEHMER)
                throw KindMismatch("L_PMPN_MIX needs a LEHMER seed");
            require(m % 2 == 1, "m odd");
            require(n % 2 == 0 && n >= 4, "n even >= 4");
            require(std::gcd(m, n) == 1, "gcd(m, n) = 1");
            // P_m(l, e) = U_m for odd m; P_n(l, e)/(l + e) = U_n for even n.
            Sequence U(seed, SeqKind::U, std::max<uint64_t>(std::max(m, n), 4));
            return mp_gcd(U.term(m), U.term(n)).is_constant();
        }
        case CoprimeLemma::L_PMN: {
            if (seed.kind != SeedKind::LEHMER)
                throw KindMismatch("L_PMN needs a LEHMER seed");
            require(m % 2 == 1 && n % 2 == 1, "m and n odd");
            require(m >= 1 && n >= 1, "m, n >= 1");
            // P_m(l^n, e^n) = U_{mn}/U_n;  (l^n + e^n)/(l + e) = U_{2n}/U_n.
            Sequence U(seed, SeqKind::U, std::max<uint64_t>(m * n, 2 * n) + 4);
            MPoly a = mp_exact_div(U.term(m * n), U.term(n));
            MPoly b = mp_exact_div(U.term(2 * n), U.term(n));
            return mp_gcd(a, b).is_constant();
        }
        case CoprimeLemma::L_ABN: {
            if (seed.kind != SeedKind::LEHMER)
                throw KindMismatch("L_ABN needs a LEHMER seed");
            require(n % 2 == 1, "n odd");
            Sequence U(seed, SeqKind::U, std::max<uint64_t>(n, 4));
            // (l^n - e^n)/(l - e) = U_n;  (l + e)^2 = E.
            return mp_gcd(U.term(n), seed.first).is_constant();
        }
    }
    throw PreconditionViolation("unknown lemma");
}

}  // namespace zsig
