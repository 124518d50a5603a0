#include "zsig/factor_fp.hpp"

#include <algorithm>
#include <random>

#include "zsig/numtheory.hpp"

namespace zsig {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % p);
}

// Dense univariate polynomial over F_p, coefficients ascending, trimmed.
struct FpPoly {
    std::vector<uint64_t> c;
    uint64_t p;

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_one() const { return c.size() == 1 && c[0] == 1; }
    uint64_t lc() const { return c.back(); }

    static FpPoly zero(uint64_t p) { return FpPoly{{}, p}; }
    static FpPoly one(uint64_t p) { return FpPoly{{1 % p}, p}; }
    static FpPoly x(uint64_t p) { return FpPoly{{0, 1}, p}; }
};

bool operator==(const FpPoly& a, const FpPoly& b) { return a.c == b.c; }

FpPoly add(const FpPoly& a, const FpPoly& b) {
    FpPoly r{std::vector<uint64_t>(std::max(a.c.size(), b.c.size()), 0), a.p};
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = (r.c[i] + b.c[i]) % a.p;
    r.trim();
    return r;
}

FpPoly sub(const FpPoly& a, const FpPoly& b) {
    FpPoly r{std::vector<uint64_t>(std::max(a.c.size(), b.c.size()), 0), a.p};
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = (r.c[i] + a.p - b.c[i]) % a.p;
    r.trim();
    return r;
}

FpPoly mul(const FpPoly& a, const FpPoly& b) {
    if (a.is_zero() || b.is_zero()) return FpPoly::zero(a.p);
    FpPoly r{std::vector<uint64_t>(a.c.size() + b.c.size() - 1, 0), a.p};
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) {
            r.c[i + j] = (r.c[i + j] + mulmod(a.c[i], b.c[j], a.p)) % a.p;
        }
    }
    r.trim();
    return r;
}

FpPoly scale(const FpPoly& a, uint64_t k) {
    FpPoly r = a;
    for (auto& x : r.c) x = mulmod(x, k, a.p);
    r.trim();
    return r;
}

FpPoly monic(const FpPoly& a) {
    if (a.is_zero() || a.lc() == 1) return a;
    return scale(a, FpElem(a.lc(), a.p).inv().value);
}

// a = q*b + r
std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.deg() < b.deg()) return {FpPoly::zero(a.p), a};
    FpPoly r = a;
    FpPoly q{std::vector<uint64_t>(static_cast<size_t>(a.deg() - b.deg()) + 1, 0),
             a.p};
    uint64_t inv = FpElem(b.lc(), b.p).inv().value;
    while (!r.is_zero() && r.deg() >= b.deg()) {
        size_t k = static_cast<size_t>(r.deg() - b.deg());
        uint64_t f = mulmod(r.lc(), inv, a.p);
        q.c[k] = f;
        for (size_t i = 0; i < b.c.size(); ++i) {
            r.c[k + i] = (r.c[k + i] + a.p - mulmod(f, b.c[i], a.p)) % a.p;
        }
        r.trim();
    }
    q.trim();
    return {q, r};
}

FpPoly mod(const FpPoly& a, const FpPoly& b) { return divmod(a, b).second; }
FpPoly quot(const FpPoly& a, const FpPoly& b) { return divmod(a, b).first; }

FpPoly gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

FpPoly derivative(const FpPoly& a) {
    FpPoly r{{}, a.p};
    for (size_t i = 1; i < a.c.size(); ++i) {
        r.c.push_back(mulmod(a.c[i], i % a.p, a.p));
    }
    r.trim();
    return r;
}

// h(x) = g(x)^p: coefficients of g are the a_{ip} (Frobenius fixes F_p).
FpPoly pth_root(const FpPoly& h) {
    FpPoly r{{}, h.p};
    for (size_t i = 0; i < h.c.size(); i += h.p) r.c.push_back(h.c[i]);
    r.trim();
    return r;
}

FpPoly powmod(FpPoly base, const BigInt& e, const FpPoly& m) {
    FpPoly result = FpPoly::one(base.p);
    base = mod(base, m);
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return result;
    for (size_t i = bits; i-- > 0;) {
        result = mod(mul(result, result), m);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = mod(mul(result, base), m);
    }
    return result;
}

FpPoly to_dense(const MPoly& h) {
    const RingSpec& ring = h.ring();
    if (ring.num_vars != 1) throw WrongArity();
    if (ring.characteristic == 0) throw CharZero();
    FpPoly r{std::vector<uint64_t>(static_cast<size_t>(h.deg_in(0)) + 1, 0),
             ring.characteristic};
    for (const auto& t : h.terms()) r.c[t.m.e[0]] = t.c.fpe().value;
    r.trim();
    return r;
}

MPoly to_mpoly(const FpPoly& f, const RingSpec& ring) {
    std::vector<Term> ts;
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i]) {
            Monomial m;
            m.e[0] = static_cast<uint32_t>(i);
            ts.push_back(Term{m, FieldElem::fp(f.c[i], ring.characteristic)});
        }
    }
    return MPoly::from_terms(ring, std::move(ts));
}

void squarefree_rec(const FpPoly& f, uint64_t mult,
                    std::vector<std::pair<FpPoly, uint64_t>>& out) {
    // f monic nonconstant
    const uint64_t p = f.p;
    FpPoly fd = derivative(f);
    if (fd.is_zero()) {
        squarefree_rec(pth_root(f), mult * p, out);
        return;
    }
    FpPoly c = gcd(f, fd);
    FpPoly w = quot(f, c);
    uint64_t i = 1;
    while (!w.is_one()) {
        FpPoly y = gcd(w, c);
        FpPoly z = quot(w, y);
        if (z.deg() > 0) out.emplace_back(z, mult * i);
        w = std::move(y);
        c = quot(c, w);
        ++i;
    }
    if (!c.is_one()) squarefree_rec(pth_root(c), mult * p, out);
}

bool irreducible_dense(const FpPoly& h0) {
    FpPoly h = monic(h0);
    const uint64_t p = h.p;
    int d = h.deg();
    if (d < 1) throw ConstantInput();
    if (d == 1) return true;
    BigInt pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), p, static_cast<unsigned long>(d));
    FpPoly x = FpPoly::x(p);
    if (!(powmod(x, pd, h) == mod(x, h))) return false;
    for (uint64_t l : prime_factors(static_cast<uint64_t>(d))) {
        BigInt pe;
        mpz_ui_pow_ui(pe.get_mpz_t(), p, static_cast<unsigned long>(d / l));
        FpPoly y = sub(powmod(x, pe, h), x);
        if (gcd(y, h).deg() != 0) return false;
    }
    return true;
}

FpPoly random_poly(std::mt19937_64& rng, int max_deg, uint64_t p) {
    FpPoly r{std::vector<uint64_t>(static_cast<size_t>(max_deg) + 1, 0), p};
    for (auto& c : r.c) c = rng() % p;
    r.trim();
    return r;
}

void equal_degree_split(const FpPoly& f, int d, std::mt19937_64& rng,
                        std::vector<FpPoly>& out) {
    const uint64_t p = f.p;
    if (f.deg() == d) {
        out.push_back(f);
        return;
    }
    for (int attempt = 0; attempt < kSplitRetryBudget; ++attempt) {
        FpPoly a = random_poly(rng, f.deg() - 1, p);
        if (a.deg() < 1) continue;
        FpPoly g = gcd(a, f);
        if (g.deg() == 0) {
            if (p == 2) {
                // trace map over F_{2^d}
                FpPoly t = mod(a, f);
                FpPoly acc = t;
                for (int i = 1; i < d; ++i) {
                    t = mod(mul(t, t), f);
                    acc = add(acc, t);
                }
                g = gcd(acc, f);
            } else {
                BigInt e;
                mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
                e = (e - 1) / 2;
                FpPoly b = powmod(a, e, f);
                g = gcd(sub(b, FpPoly::one(p)), f);
            }
        }
        if (g.deg() > 0 && g.deg() < f.deg()) {
            equal_degree_split(monic(g), d, rng, out);
            equal_degree_split(monic(quot(f, g)), d, rng, out);
            return;
        }
    }
    throw SplitBudgetExhausted();
}

}  // namespace

SquarefreeDecomp squarefree_decomp(const MPoly& h) {
    if (h.is_zero()) throw ZeroInput();
    FpPoly f = to_dense(h);
    SquarefreeDecomp out;
    out.unit = FpElem(f.lc(), f.p);
    std::vector<std::pair<FpPoly, uint64_t>> parts;
    if (f.deg() > 0) squarefree_rec(monic(f), 1, parts);
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return a.first.c < b.first.c;
    });
    for (auto& [sq, m] : parts) out.parts.emplace_back(to_mpoly(sq, h.ring()), m);
    return out;
}

FactorizationFp factor_fp(const MPoly& h, uint64_t rng_seed) {
    if (h.is_zero()) throw ZeroInput();
    FpPoly f = to_dense(h);
    const uint64_t p = f.p;
    FactorizationFp out;
    out.unit = FpElem(f.lc(), p);
    out.rng_seed = rng_seed;
    if (f.deg() == 0) return out;

    std::mt19937_64 rng(rng_seed);
    std::vector<std::pair<FpPoly, uint64_t>> sq;
    squarefree_rec(monic(f), 1, sq);

    std::vector<std::pair<FpPoly, uint64_t>> irr;  // (factor, multiplicity)
    for (auto& [part, mult] : sq) {
        // distinct-degree decomposition of the squarefree part
        FpPoly cur = part;
        FpPoly x = FpPoly::x(p);
        FpPoly w = mod(x, cur);
        int d = 0;
        while (cur.deg() > 0) {
            ++d;
            if (2 * d > cur.deg()) {
                std::vector<FpPoly> fs;
                equal_degree_split(cur, cur.deg(), rng, fs);
                for (auto& g : fs) irr.emplace_back(g, mult);
                break;
            }
            w = powmod(w, BigInt(static_cast<unsigned long>(p)), cur);
            FpPoly g = gcd(sub(w, mod(x, cur)), cur);
            if (g.deg() > 0) {
                std::vector<FpPoly> fs;
                equal_degree_split(g, d, rng, fs);
                for (auto& gg : fs) irr.emplace_back(gg, mult);
                cur = quot(cur, g);
                w = mod(w, cur);
            }
        }
    }
    std::sort(irr.begin(), irr.end(), [](const auto& a, const auto& b) {
        if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
        return a.first.c < b.first.c;
    });
    for (auto& [g, m] : irr) out.factors.emplace_back(to_mpoly(g, h.ring()), m);
    return out;
}

bool is_irreducible_fp(const MPoly& h) {
    if (h.is_zero() || h.is_constant()) throw ConstantInput();
    return irreducible_dense(to_dense(h));
}

}  // namespace zsig
