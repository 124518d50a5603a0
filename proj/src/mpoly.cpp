#include "zsig/mpoly.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace zsig {

RingSpec::RingSpec(uint64_t ch, int r) : characteristic(ch), num_vars(r) {
    if (r < 1 || r > kMaxVars)
        throw OutOfRange("num_vars must be between 1 and 8, got " + std::to_string(r));
    if (ch != 0) {
        if (ch >= kMaxPrime)
            throw OutOfRange("characteristic must be below 2^62");
        if (!is_prime_u64(ch))
            throw NotPrime(std::to_string(ch));
    }
}

FieldElem RingSpec::zero() const {
    return characteristic == 0 ? FieldElem(Rat(0)) : FieldElem::fp(0, characteristic);
}

FieldElem RingSpec::one() const {
    return characteristic == 0 ? FieldElem(Rat(1)) : FieldElem::fp(1, characteristic);
}

FieldElem RingSpec::from_long(long long v) const {
    if (characteristic == 0) return FieldElem(Rat(static_cast<long>(v)));
    return FieldElem(FpElem::from_signed(v, characteristic));
}

FieldElem RingSpec::from_bigint(const BigInt& v) const {
    if (characteristic == 0) return FieldElem(Rat(v));
    return FieldElem(FpElem::from_bigint(v, characteristic));
}

FieldElem RingSpec::from_rat(const Rat& q) const {
    if (characteristic == 0) return FieldElem(q);
    FpElem den = FpElem::from_bigint(BigInt(q.get_den()), characteristic);
    if (den.is_zero())
        throw CoefficientNotInField(q.get_str() + " mod " + std::to_string(characteristic));
    FpElem num = FpElem::from_bigint(BigInt(q.get_num()), characteristic);
    return FieldElem(num * den.inv());
}

int mono_cmp(const Monomial& a, const Monomial& b, int r) {
    int da = a.total_degree(r), db = b.total_degree(r);
    if (da != db) return da < db ? -1 : 1;
    for (int i = 0; i < r; ++i) {
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    }
    return 0;
}

namespace {

struct MonoHash {
    size_t operator()(const Monomial& m) const {
        size_t h = 1469598103934665603ull;
        for (uint32_t x : m.e) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct DescCmp {
    int r;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return mono_cmp(a, b, r) > 0;
    }
};

}  // namespace

MPoly normalize_terms(const RingSpec& ring, std::vector<Term>&& ts) {
    std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) {
        return mono_cmp(a.m, b.m, ring.num_vars) > 0;
    });
    std::vector<Term> out;
    out.reserve(ts.size());
    for (auto& t : ts) {
        if (!out.empty() && out.back().m == t.m) {
            out.back().c = out.back().c + t.c;
            if (out.back().c.is_zero()) out.pop_back();
        } else if (!t.c.is_zero()) {
            out.push_back(std::move(t));
        }
    }
    if (out.size() > kMaxTerms) throw TermLimitExceeded();
    MPoly p(ring);
    p.terms_ = std::move(out);
    return p;
}

MPoly MPoly::constant(const RingSpec& ring, const FieldElem& c) {
    MPoly p(ring);
    if (!c.is_zero()) p.terms_.push_back(Term{Monomial{}, c});
    return p;
}

MPoly MPoly::from_long(const RingSpec& ring, long long v) {
    return constant(ring, ring.from_long(v));
}

MPoly MPoly::variable(const RingSpec& ring, int var, uint32_t exp) {
    if (var < 0 || var >= ring.num_vars)
        throw OutOfRange("variable index " + std::to_string(var));
    MPoly p(ring);
    if (exp == 0) return from_long(ring, 1);
    Monomial m;
    m.e[var] = exp;
    p.terms_.push_back(Term{m, ring.one()});
    return p;
}

MPoly MPoly::from_terms(const RingSpec& ring, std::vector<Term> terms) {
    return normalize_terms(ring, std::move(terms));
}

bool MPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_[0].m.total_degree(ring_.num_vars) == 0);
}

FieldElem MPoly::constant_value() const {
    if (terms_.empty() || terms_.back().m.total_degree(ring_.num_vars) != 0)
        return ring_.zero();
    return terms_.back().c;
}

Degree MPoly::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().m.total_degree(ring_.num_vars);
}

int MPoly::deg_in(int var) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.m.e[var]));
    return terms_.empty() ? -1 : std::max(d, 0);
}

const Term& MPoly::leading() const {
    if (terms_.empty()) throw ZeroInput();
    return terms_.front();
}

void MPoly::check_same_ring(const MPoly& o) const {
    if (!(ring_ == o.ring_)) throw RingMismatch();
}

MPoly MPoly::operator+(const MPoly& o) const {
    check_same_ring(o);
    // Merge two sorted term lists.
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = mono_cmp(terms_[i].m, o.terms_[j].m, ring_.num_vars);
        if (c > 0) {
            out.push_back(terms_[i++]);
        } else if (c < 0) {
            out.push_back(o.terms_[j++]);
        } else {
            FieldElem s = terms_[i].c + o.terms_[j].c;
            if (!s.is_zero()) out.push_back(Term{terms_[i].m, s});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    if (out.size() > kMaxTerms) throw TermLimitExceeded();
    MPoly p(ring_);
    p.terms_ = std::move(out);
    return p;
}

MPoly MPoly::operator-() const {
    MPoly p(ring_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back(Term{t.m, -t.c});
    return p;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::scaled(const FieldElem& c) const {
    if (c.is_zero()) return MPoly(ring_);
    MPoly p(ring_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back(Term{t.m, t.c * c});
    return p;
}

MPoly MPoly::operator*(const MPoly& o) const {
    check_same_ring(o);
    if (is_zero() || o.is_zero()) return MPoly(ring_);
    if (o.terms_.size() == 1 && o.terms_[0].m.total_degree(ring_.num_vars) == 0)
        return scaled(o.terms_[0].c);
    if (terms_.size() == 1 && terms_[0].m.total_degree(ring_.num_vars) == 0)
        return o.scaled(terms_[0].c);
    std::unordered_map<Monomial, FieldElem, MonoHash> acc;
    acc.reserve(terms_.size() + o.terms_.size());
    const int r = ring_.num_vars;
    for (const auto& ta : terms_) {
        for (const auto& tb : o.terms_) {
            Monomial m;
            for (int k = 0; k < r; ++k) m.e[k] = ta.m.e[k] + tb.m.e[k];
            FieldElem prod = ta.c * tb.c;
            auto it = acc.find(m);
            if (it == acc.end()) {
                acc.emplace(m, std::move(prod));
            } else {
                it->second = it->second + prod;
            }
            if (acc.size() > 2 * kMaxTerms) throw TermLimitExceeded();
        }
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc) {
        if (!c.is_zero()) out.push_back(Term{m, std::move(c)});
    }
    return normalize_terms(ring_, std::move(out));
}

MPoly MPoly::pow(uint64_t n) const {
    MPoly result = from_long(ring_, 1);
    MPoly base = *this;
    while (n) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

bool MPoly::operator==(const MPoly& o) const {
    if (!(ring_ == o.ring_) || terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (!(terms_[i].m == o.terms_[i].m) || terms_[i].c != o.terms_[i].c)
            return false;
    }
    return true;
}

MPoly MPoly::canonical() const {
    if (is_zero()) return *this;
    const FieldElem& lc = terms_.front().c;
    if (lc.is_one()) return *this;
    return scaled(lc.inv());
}

FieldElem MPoly::eval(const std::vector<FieldElem>& point) const {
    if (static_cast<int>(point.size()) != ring_.num_vars) throw ArityMismatch();
    const int r = ring_.num_vars;
    // Per-variable power caches.
    std::vector<std::vector<FieldElem>> powers(r);
    for (int i = 0; i < r; ++i) powers[i].push_back(ring_.one());
    FieldElem sum = ring_.zero();
    for (const auto& t : terms_) {
        FieldElem prod = t.c;
        for (int i = 0; i < r; ++i) {
            uint32_t e = t.m.e[i];
            auto& pw = powers[i];
            while (pw.size() <= e) pw.push_back(pw.back() * point[i]);
            if (e) prod = prod * pw[e];
        }
        sum = sum + prod;
    }
    return sum;
}

MPoly MPoly::eval_partial(int var, const FieldElem& value) const {
    if (var < 0 || var >= ring_.num_vars) throw OutOfRange("variable index");
    std::vector<FieldElem> powers{ring_.one()};
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        uint32_t e = t.m.e[var];
        while (powers.size() <= e) powers.push_back(powers.back() * value);
        Term nt = t;
        nt.m.e[var] = 0;
        nt.c = t.c * powers[e];
        out.push_back(std::move(nt));
    }
    return normalize_terms(ring_, std::move(out));
}

FieldElem mp_eval(const MPoly& a, const std::vector<FieldElem>& point) {
    return a.eval(point);
}

MPoly mp_mul(const MPoly& a, const MPoly& b) { return a * b; }

std::optional<MPoly> mp_try_div(const MPoly& a, const MPoly& b) {
    a.check_same_ring(b);
    if (b.is_zero()) throw DivisionByZero();
    const RingSpec& ring = a.ring();
    if (a.is_zero()) return MPoly::zero(ring);
    const int r = ring.num_vars;
    if (mono_cmp(a.leading().m, b.leading().m, r) < 0) return std::nullopt;

    std::map<Monomial, FieldElem, DescCmp> rem(DescCmp{r});
    for (const auto& t : a.terms()) rem.emplace(t.m, t.c);
    const Term& lb = b.leading();
    FieldElem lb_inv = lb.c.inv();
    std::vector<Term> quot;

    while (!rem.empty()) {
        const auto& [lm, lc] = *rem.begin();
        Monomial qm;
        for (int i = 0; i < r; ++i) {
            if (lm.e[i] < lb.m.e[i]) return std::nullopt;
            qm.e[i] = lm.e[i] - lb.m.e[i];
        }
        FieldElem qc = lc * lb_inv;
        quot.push_back(Term{qm, qc});
        if (quot.size() > kMaxTerms) throw TermLimitExceeded();
        // rem -= (qc * qm) * b
        for (const auto& tb : b.terms()) {
            Monomial m;
            for (int i = 0; i < r; ++i) m.e[i] = qm.e[i] + tb.m.e[i];
            FieldElem delta = qc * tb.c;
            auto it = rem.find(m);
            if (it == rem.end()) {
                rem.emplace(m, -delta);
            } else {
                it->second = it->second - delta;
                if (it->second.is_zero()) rem.erase(it);
            }
        }
    }
    return normalize_terms(ring, std::move(quot));
}

MPoly mp_exact_div(const MPoly& a, const MPoly& b) {
    auto q = mp_try_div(a, b);
    if (!q) throw NotDivisible();
    return *q;
}

std::vector<MPoly> coeffs_wrt(const MPoly& a, int var) {
    int d = a.deg_in(var);
    std::vector<std::vector<Term>> buckets(static_cast<size_t>(std::max(d, 0)) + 1);
    for (const auto& t : a.terms()) {
        Term nt = t;
        uint32_t e = nt.m.e[var];
        nt.m.e[var] = 0;
        buckets[e].push_back(std::move(nt));
    }
    std::vector<MPoly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(normalize_terms(a.ring(), std::move(b)));
    if (a.is_zero()) out.assign(1, MPoly::zero(a.ring()));
    return out;
}

MPoly leading_coeff_wrt(const MPoly& a, int var) {
    int d = a.deg_in(var);
    std::vector<Term> out;
    for (const auto& t : a.terms()) {
        if (static_cast<int>(t.m.e[var]) == d) {
            Term nt = t;
            nt.m.e[var] = 0;
            out.push_back(std::move(nt));
        }
    }
    return normalize_terms(a.ring(), std::move(out));
}

// ---------------------------------------------------------------------------
// GCD
// ---------------------------------------------------------------------------

namespace {

std::vector<int> used_vars(const MPoly& a, const MPoly& b) {
    std::vector<int> out;
    for (int i = 0; i < a.ring().num_vars; ++i) {
        if (a.deg_in(i) > 0 || b.deg_in(i) > 0) out.push_back(i);
    }
    return out;
}

// gcd of the main-variable coefficients, with early exit once the running
// gcd collapses to a constant.
MPoly coeff_gcd(const std::vector<MPoly>& cs) {
    const RingSpec& ring = cs.front().ring();
    std::vector<const MPoly*> nz;
    for (const auto& c : cs) {
        if (!c.is_zero()) nz.push_back(&c);
    }
    std::sort(nz.begin(), nz.end(), [](const MPoly* a, const MPoly* b) {
        return a->num_terms() < b->num_terms();
    });
    MPoly g = MPoly::zero(ring);
    for (const MPoly* c : nz) {
        g = g.is_zero() ? c->canonical() : mp_gcd(g, *c);
        if (g.is_constant()) return MPoly::from_long(ring, 1);
    }
    return g;
}

// Primitive part with respect to one variable (content divided out,
// result canonicalized).
MPoly primpart_wrt(const MPoly& a, int var) {
    MPoly content = coeff_gcd(coeffs_wrt(a, var));
    if (content.is_constant()) return a.canonical();
    return mp_exact_div(a, content).canonical();
}

// Dense univariate gcd over F_p (monic Euclid on uint64 coefficient
// vectors).
std::vector<uint64_t> fp_univ_gcd(std::vector<uint64_t> u, std::vector<uint64_t> v,
                                  uint64_t p) {
    auto trim = [](std::vector<uint64_t>& w) {
        while (!w.empty() && w.back() == 0) w.pop_back();
    };
    auto mulmod = [p](uint64_t a, uint64_t b) {
        return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % p);
    };
    trim(u);
    trim(v);
    while (!v.empty()) {
        // u mod v, with v made monic on the fly
        uint64_t inv = FpElem(v.back(), p).inv().value;
        while (u.size() >= v.size() && !u.empty()) {
            uint64_t q = mulmod(u.back(), inv);
            size_t off = u.size() - v.size();
            for (size_t i = 0; i < v.size(); ++i) {
                uint64_t t = mulmod(q, v[i]);
                u[off + i] = (u[off + i] + p - t) % p;
            }
            trim(u);
        }
        std::swap(u, v);
    }
    if (!u.empty()) {
        uint64_t inv = FpElem(u.back(), p).inv().value;
        auto mm = [p](uint64_t a, uint64_t b) {
            return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % p);
        };
        for (auto& c : u) c = mm(c, inv);
    }
    return u;
}

BigInt vec_content(const std::vector<BigInt>& v) {
    BigInt g = 0;
    for (const auto& c : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

// Primitive PRS over Z for dense univariate integer polynomials.
std::vector<BigInt> z_univ_gcd(std::vector<BigInt> u, std::vector<BigInt> v) {
    auto trim = [](std::vector<BigInt>& w) {
        while (!w.empty() && w.back() == 0) w.pop_back();
    };
    auto make_primitive = [&](std::vector<BigInt>& w) {
        BigInt g = vec_content(w);
        if (g > 1) {
            for (auto& c : w)
                mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        }
        if (!w.empty() && w.back() < 0) {
            for (auto& c : w) c = -c;
        }
    };
    trim(u);
    trim(v);
    make_primitive(u);
    make_primitive(v);
    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
        // Pseudo-remainder u <- prem(u, v), then strip content.
        const BigInt& lv = v.back();
        while (u.size() >= v.size() && !u.empty()) {
            BigInt lu = u.back();
            size_t off = u.size() - v.size();
            for (size_t i = 0; i + 1 < u.size(); ++i) u[i] *= lv;
            for (size_t i = 0; i + 1 < v.size(); ++i) u[off + i] -= lu * v[i];
            u.pop_back();
            trim(u);
        }
        make_primitive(u);
        std::swap(u, v);
    }
    return u;
}

MPoly univar_gcd(const MPoly& a, const MPoly& b, int var) {
    const RingSpec& ring = a.ring();
    int da = a.deg_in(var), db = b.deg_in(var);
    if (ring.characteristic != 0) {
        const uint64_t p = ring.characteristic;
        std::vector<uint64_t> u(static_cast<size_t>(da) + 1, 0),
            v(static_cast<size_t>(db) + 1, 0);
        for (const auto& t : a.terms()) u[t.m.e[var]] = t.c.fpe().value;
        for (const auto& t : b.terms()) v[t.m.e[var]] = t.c.fpe().value;
        auto g = fp_univ_gcd(std::move(u), std::move(v), p);
        std::vector<Term> ts;
        for (size_t i = 0; i < g.size(); ++i) {
            if (g[i]) {
                Monomial m;
                m.e[var] = static_cast<uint32_t>(i);
                ts.push_back(Term{m, FieldElem::fp(g[i], p)});
            }
        }
        return normalize_terms(ring, std::move(ts));
    }
    // Char 0: clear denominators, primitive PRS over Z.
    auto to_int = [&](const MPoly& h, int d) {
        std::vector<Rat> cs(static_cast<size_t>(d) + 1, Rat(0));
        for (const auto& t : h.terms()) cs[t.m.e[var]] = t.c.rat();
        BigInt den = 1;
        for (const auto& c : cs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(),
                                         c.get_den().get_mpz_t());
        std::vector<BigInt> out;
        out.reserve(cs.size());
        for (const auto& c : cs) out.push_back(BigInt(c.get_num() * (den / c.get_den())));
        return out;
    };
    auto g = z_univ_gcd(to_int(a, da), to_int(b, db));
    std::vector<Term> ts;
    for (size_t i = 0; i < g.size(); ++i) {
        if (g[i] != 0) {
            Monomial m;
            m.e[var] = static_cast<uint32_t>(i);
            ts.push_back(Term{m, FieldElem(Rat(g[i]))});
        }
    }
    return normalize_terms(ring, std::move(ts)).canonical();
}

// Sound upper bound for the main-variable degree of the gcd, obtained by
// specializing one other variable at a point where neither leading
// coefficient vanishes, then recursing on the smaller problem.  Returns
// min(deg bounds) or deg v when no usable point exists.
int specialized_degree_bound(const MPoly& pa, const MPoly& pb, int main,
                             const std::vector<int>& vars) {
    const RingSpec& ring = pa.ring();
    int bound = std::min(pa.deg_in(main), pb.deg_in(main));
    MPoly la = leading_coeff_wrt(pa, main);
    MPoly lb = leading_coeff_wrt(pb, main);
    for (int j : vars) {
        if (j == main) continue;
        std::vector<FieldElem> points;
        if (ring.characteristic == 0) {
            for (long c = 0; c <= 8; ++c) points.push_back(ring.from_long(c));
        } else {
            for (uint64_t c = 0; c < ring.characteristic && c < 64; ++c)
                points.push_back(FieldElem::fp(c, ring.characteristic));
        }
        for (const auto& c : points) {
            if (la.eval_partial(j, c).is_zero()) continue;
            if (lb.eval_partial(j, c).is_zero()) continue;
            MPoly ia = pa.eval_partial(j, c);
            MPoly ib = pb.eval_partial(j, c);
            MPoly g = mp_gcd(ia, ib);
            bound = std::min(bound, std::max(g.deg_in(main), 0));
            break;  // one good point per variable is enough
        }
        if (bound == 0) break;
    }
    return bound;
}

// ---- Modular gcd: Brown-style evaluation/interpolation ----

// Fields with at least this many elements use interpolation instead of the
// pseudo-remainder sequence.
inline constexpr uint64_t kBrownMinField = 1009;

// Highest used variable among the given polynomials, excluding z.
int interp_var(std::initializer_list<const MPoly*> ps, int z) {
    int w = -1;
    for (const MPoly* p : ps)
        for (int i = 0; i < p->ring().num_vars; ++i)
            if (i != z && p->deg_in(i) > 0) w = std::max(w, i);
    return w;
}

// Core interpolation over F_q.  Returns H = gamma * g / lc_z(g) where
// g = gcd(u, v) and lc is taken with respect to z (gamma is a multiple of
// every lc_z(g) image, so H is a polynomial), or nullopt when evaluation
// points run out.  Unlucky points are filtered by the z-degree of their
// image; a surviving bad image is caught by the caller's division check.
std::optional<MPoly> brown_rec(const MPoly& u, const MPoly& v,
                               const MPoly& gamma, int z) {
    const RingSpec& ring = u.ring();
    const uint64_t q = ring.characteristic;
    int w = interp_var({&u, &v, &gamma}, z);
    if (w < 0) return univar_gcd(u, v, z).scaled(gamma.constant_value());

    MPoly lu = leading_coeff_wrt(u, z);
    MPoly lv = leading_coeff_wrt(v, z);
    int bound = std::min(u.deg_in(w), v.deg_in(w)) + gamma.deg_in(w);
    MPoly H(ring);                               // Newton accumulator
    MPoly basis = MPoly::from_long(ring, 1);     // prod (x_w - alpha_i)
    int npoints = 0, cur_dz = -1;
    uint64_t budget = std::min<uint64_t>(q, static_cast<uint64_t>(bound) + 256);
    for (uint64_t ai = 0; ai < budget; ++ai) {
        FieldElem alpha = FieldElem::fp(ai, q);
        if (lu.eval_partial(w, alpha).is_zero()) continue;
        if (lv.eval_partial(w, alpha).is_zero()) continue;
        MPoly geval = gamma.eval_partial(w, alpha);
        if (geval.is_zero()) continue;  // uninformative image
        auto h = brown_rec(u.eval_partial(w, alpha), v.eval_partial(w, alpha),
                           geval, z);
        if (!h) return std::nullopt;
        int dz = h->deg_in(z);
        if (dz == 0) return gamma;  // gcd free of z
        if (cur_dz < 0 || dz < cur_dz) {
            cur_dz = dz;
            H = MPoly(ring);
            basis = MPoly::from_long(ring, 1);
            npoints = 0;
        } else if (dz > cur_dz) {
            continue;
        }
        MPoly diff = *h - H.eval_partial(w, alpha);
        if (!diff.is_zero()) {
            FieldElem balpha = basis.eval_partial(w, alpha).constant_value();
            H = H + basis * diff.scaled(field_inv(balpha));
        }
        basis = basis * (MPoly::variable(ring, w) - MPoly::constant(ring, alpha));
        if (++npoints == bound + 1) return H;
    }
    return std::nullopt;
}

// Brown gcd attempt for u, v primitive with respect to `main` over a large
// F_q.  Returns the verified gcd or nullopt (caller falls back to the PRS).
std::optional<MPoly> fq_brown_gcd(const MPoly& u, const MPoly& v, int main) {
    MPoly lu = leading_coeff_wrt(u, main);
    MPoly lv = leading_coeff_wrt(v, main);
    MPoly gamma = (lu.is_constant() || lv.is_constant())
                      ? MPoly::from_long(u.ring(), 1)
                      : mp_gcd(lu, lv);
    auto H = brown_rec(u, v, gamma, main);
    if (!H || H->is_zero()) return std::nullopt;
    if (H->is_constant()) return MPoly::from_long(u.ring(), 1);
    MPoly G = primpart_wrt(*H, main);
    // G | u and G | v force G | gcd; the interpolated degree in `main` is
    // never below the gcd's, so equality holds and G is the gcd.
    if (mp_try_div(u, G) && mp_try_div(v, G)) return G.canonical();
    return std::nullopt;
}

// Characteristic 0: clears denominators and the integer content; the result
// has integer coefficients, globally coprime, positive leading coefficient.
MPoly int_primitive(const MPoly& a) {
    BigInt den = 1;
    for (const auto& t : a.terms())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.c.rat().get_den().get_mpz_t());
    BigInt num = 0;
    for (const auto& t : a.terms()) {
        BigInt n = t.c.rat().get_num() * (den / BigInt(t.c.rat().get_den()));
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
    }
    Rat scale(den, num);
    scale.canonicalize();
    if (a.leading_coeff().rat() < 0) scale = -scale;
    return a.scaled(FieldElem(scale));
}

MPoly map_mod(const MPoly& a, const RingSpec& fring) {
    std::vector<Term> ts;
    ts.reserve(a.num_terms());
    for (const auto& t : a.terms())
        ts.push_back(Term{t.m, fring.from_bigint(BigInt(t.c.rat().get_num()))});
    return normalize_terms(fring, std::move(ts));
}

// Multivariate gcd over Q through modular images: gcd images over large
// prime fields, Chinese remaindering with symmetric lift until the lift
// stabilizes, then a deterministic division check.  Primes dividing either
// leading coefficient are skipped, so every image degree bounds the true
// gcd degree from above; a candidate dividing both inputs with the image
// degree is therefore the gcd.
std::optional<MPoly> char0_modular_gcd(const MPoly& a, const MPoly& b) {
    const RingSpec& ring = a.ring();
    MPoly ia = int_primitive(a), ib = int_primitive(b);
    BigInt la(ia.leading_coeff().rat().get_num());
    BigInt lb(ib.leading_coeff().rat().get_num());
    BigInt glc;
    mpz_gcd(glc.get_mpz_t(), la.get_mpz_t(), lb.get_mpz_t());

    DescCmp cmp{ring.num_vars};
    std::map<Monomial, BigInt, DescCmp> resid(cmp);
    std::map<Monomial, BigInt, DescCmp> prev_lift(cmp);
    BigInt modulus = 1;
    int best_deg = -1;
    bool have_lift = false;

    uint64_t q = kMaxPrime;  // scan downward from 2^62
    for (int used = 0; used < 30; ++used) {
        do {
            --q;
        } while (!is_prime_u64(q) ||
                 mpz_divisible_ui_p(la.get_mpz_t(), q) ||
                 mpz_divisible_ui_p(lb.get_mpz_t(), q));
        RingSpec fring(q, ring.num_vars);
        MPoly img = mp_gcd(map_mod(ia, fring), map_mod(ib, fring));
        if (img.is_constant()) return MPoly::from_long(ring, 1);
        int d = img.total_degree().value_or(0);
        if (best_deg >= 0 && d > best_deg) continue;  // unlucky prime
        if (best_deg < 0 || d < best_deg) {
            best_deg = d;
            resid.clear();
            modulus = 1;
            have_lift = false;
        }
        BigInt qz(static_cast<unsigned long>(q));
        MPoly scaled = img.scaled(fring.from_bigint(glc));
        std::map<Monomial, BigInt, DescCmp> qc(cmp);
        for (const auto& t : scaled.terms()) {
            qc.emplace(t.m, BigInt(static_cast<unsigned long>(t.c.fpe().value)));
            resid.try_emplace(t.m, 0);
        }
        BigInt minv, mq = modulus % qz;
        mpz_invert(minv.get_mpz_t(), mq.get_mpz_t(), qz.get_mpz_t());
        for (auto& [m, r] : resid) {
            auto it = qc.find(m);
            BigInt cq = (it == qc.end()) ? BigInt(0) : it->second;
            BigInt t = (cq - r % qz) % qz;
            if (t < 0) t += qz;
            t = t * minv % qz;
            r += modulus * t;
        }
        modulus *= qz;
        std::map<Monomial, BigInt, DescCmp> lift(cmp);
        for (const auto& [m, r] : resid) {
            BigInt c = r;
            if (c * 2 > modulus) c -= modulus;
            if (c != 0) lift.emplace(m, c);
        }
        // A single 62-bit prime usually already determines the gcd, so try
        // the candidate immediately; the division check rejects bad lifts.
        if ((!have_lift || lift == prev_lift) && !lift.empty()) {
            std::vector<Term> ts;
            for (const auto& [m, c] : lift) ts.push_back(Term{m, FieldElem(Rat(c))});
            MPoly cand = int_primitive(normalize_terms(ring, std::move(ts)));
            if (cand.total_degree().value_or(0) == best_deg &&
                mp_try_div(ia, cand) && mp_try_div(ib, cand))
                return cand.canonical();
        }
        prev_lift = std::move(lift);
        have_lift = true;
    }
    return std::nullopt;
}

// ---- Small characteristic: interpolation points from F_{p^k} ----
//
// Small prime fields have too few points for dense interpolation, so the
// Brown recursion runs over an extension F_{p^k} instead.  The gcd of two
// F_p polynomials is unchanged under base-field extension; the final
// division check makes the whole path fail-safe (fallback to the PRS).
namespace ext {

struct Ctx {
    uint64_t p;
    int k;
    std::vector<uint64_t> mod;  // monic irreducible of degree k, ascending
};

using El = std::vector<uint64_t>;  // fixed length k, ascending powers of t

uint64_t mm(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % p);
}

void trim(std::vector<uint64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

std::vector<uint64_t> poly_mul(const std::vector<uint64_t>& a,
                               const std::vector<uint64_t>& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint64_t> c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + mm(a[i], b[j], p)) % p;
    }
    trim(c);
    return c;
}

std::pair<std::vector<uint64_t>, std::vector<uint64_t>> poly_divmod(
    std::vector<uint64_t> a, const std::vector<uint64_t>& b, uint64_t p) {
    trim(a);
    if (a.size() < b.size()) return {{}, a};
    std::vector<uint64_t> q(a.size() - b.size() + 1, 0);
    uint64_t inv = FpElem(b.back(), p).inv().value;
    while (a.size() >= b.size()) {
        uint64_t f = mm(a.back(), inv, p);
        size_t off = a.size() - b.size();
        q[off] = f;
        for (size_t i = 0; i < b.size(); ++i)
            a[off + i] = (a[off + i] + p - mm(f, b[i], p)) % p;
        trim(a);
    }
    trim(q);
    return {q, a};
}

std::vector<uint64_t> poly_mod(std::vector<uint64_t> a,
                               const std::vector<uint64_t>& b, uint64_t p) {
    return poly_divmod(std::move(a), b, p).second;
}

bool modpoly_irreducible(const std::vector<uint64_t>& m, uint64_t p) {
    int k = static_cast<int>(m.size()) - 1;
    auto pow_p = [&](std::vector<uint64_t> g) {  // g^p mod m
        std::vector<uint64_t> r{1};
        uint64_t e = p;
        while (e) {
            if (e & 1) r = poly_mod(poly_mul(r, g, p), m, p);
            g = poly_mod(poly_mul(g, g, p), m, p);
            e >>= 1;
        }
        return r;
    };
    std::vector<std::vector<uint64_t>> frob{{0, 1}};  // frob[i] = x^{p^i} mod m
    for (int i = 0; i < k; ++i) frob.push_back(pow_p(frob.back()));
    if (frob[static_cast<size_t>(k)] != frob[0]) return false;
    for (uint64_t l : prime_factors(static_cast<uint64_t>(k))) {
        std::vector<uint64_t> d = frob[k / l];
        d.resize(std::max<size_t>(d.size(), 2), 0);
        d[1] = (d[1] + p - 1) % p;
        trim(d);
        if (d.empty()) return false;
        if (fp_univ_gcd(d, m, p).size() != 1) return false;
    }
    return true;
}

Ctx make_ctx(uint64_t p, int k) {
    if (k == 1) return Ctx{p, 1, {0, 1}};  // F_p itself, t = 0
    for (uint64_t c = 1;; ++c) {
        std::vector<uint64_t> m(static_cast<size_t>(k) + 1, 0);
        uint64_t t = c;
        for (int i = 0; i < k; ++i) {
            m[i] = t % p;
            t /= p;
        }
        m[k] = 1;
        if (modpoly_irreducible(m, p)) return Ctx{p, k, m};
    }
}

El el_zero(const Ctx& c) { return El(static_cast<size_t>(c.k), 0); }

El el_scalar(const Ctx& c, uint64_t v) {
    El e = el_zero(c);
    e[0] = v % c.p;
    return e;
}

El el_from_index(const Ctx& c, uint64_t idx) {
    El e = el_zero(c);
    for (int i = 0; i < c.k && idx; ++i) {
        e[i] = idx % c.p;
        idx /= c.p;
    }
    return e;
}

bool el_is_zero(const El& a) {
    for (uint64_t v : a)
        if (v) return false;
    return true;
}

El el_add(const Ctx& c, const El& a, const El& b) {
    El r = a;
    for (int i = 0; i < c.k; ++i) r[i] = (r[i] + b[i]) % c.p;
    return r;
}

El el_sub(const Ctx& c, const El& a, const El& b) {
    El r = a;
    for (int i = 0; i < c.k; ++i) r[i] = (r[i] + c.p - b[i]) % c.p;
    return r;
}

El el_neg(const Ctx& c, const El& a) { return el_sub(c, el_zero(c), a); }

El el_mul(const Ctx& c, const El& a, const El& b) {
    std::vector<uint64_t> prod = poly_mod(poly_mul(a, b, c.p), c.mod, c.p);
    prod.resize(static_cast<size_t>(c.k), 0);
    return prod;
}

El el_inv(const Ctx& c, const El& a) {
    // extended Euclid in F_p[t] against the modulus
    std::vector<uint64_t> r0 = c.mod, r1 = a, s0 = {}, s1 = {1};
    trim(r1);
    if (r1.empty()) throw DivisionByZero();
    while (!r1.empty()) {
        auto [q, r2] = poly_divmod(r0, r1, c.p);
        std::vector<uint64_t> qs = poly_mul(q, s1, c.p);
        std::vector<uint64_t> s2 = s0;
        s2.resize(std::max(s2.size(), qs.size()), 0);
        for (size_t i = 0; i < qs.size(); ++i) s2[i] = (s2[i] + c.p - qs[i]) % c.p;
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant gcd; scale s0 by its inverse
    uint64_t inv = FpElem(r0[0], c.p).inv().value;
    for (auto& v : s0) v = mm(v, inv, c.p);
    s0.resize(static_cast<size_t>(c.k), 0);
    return s0;
}

// Sparse polynomial over F_{p^k}: descending graded-lex, no zero terms.
struct EPoly {
    std::vector<std::pair<Monomial, El>> t;

    bool is_zero() const { return t.empty(); }
    bool is_constant() const {
        return t.empty() || (t.size() == 1 && t[0].first == Monomial{});
    }
    int deg_in(int var) const {
        int d = 0;
        for (const auto& [m, c] : t) d = std::max(d, static_cast<int>(m.e[var]));
        return d;
    }
};

EPoly e_norm(const Ctx& c, int r, std::vector<std::pair<Monomial, El>>&& v) {
    std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) {
        return mono_cmp(a.first, b.first, r) > 0;
    });
    EPoly out;
    for (auto& [m, e] : v) {
        if (!out.t.empty() && out.t.back().first == m) {
            out.t.back().second = el_add(c, out.t.back().second, e);
            if (el_is_zero(out.t.back().second)) out.t.pop_back();
        } else if (!el_is_zero(e)) {
            out.t.emplace_back(m, std::move(e));
        }
    }
    return out;
}

EPoly e_add(const Ctx& c, int r, const EPoly& a, const EPoly& b) {
    auto v = a.t;
    v.insert(v.end(), b.t.begin(), b.t.end());
    return e_norm(c, r, std::move(v));
}

EPoly e_sub(const Ctx& c, int r, const EPoly& a, const EPoly& b) {
    auto v = a.t;
    for (const auto& [m, e] : b.t) v.emplace_back(m, el_neg(c, e));
    return e_norm(c, r, std::move(v));
}

EPoly e_mul(const Ctx& c, int r, const EPoly& a, const EPoly& b) {
    std::vector<std::pair<Monomial, El>> v;
    v.reserve(a.t.size() * b.t.size());
    for (const auto& [ma, ca] : a.t)
        for (const auto& [mb, cb] : b.t) {
            Monomial m = ma;
            for (int i = 0; i < r; ++i) m.e[i] += mb.e[i];
            v.emplace_back(m, el_mul(c, ca, cb));
        }
    return e_norm(c, r, std::move(v));
}

EPoly e_scale(const Ctx& c, const EPoly& a, const El& s) {
    EPoly out;
    if (el_is_zero(s)) return out;
    for (const auto& [m, e] : a.t) {
        El v = el_mul(c, e, s);
        if (!el_is_zero(v)) out.t.emplace_back(m, std::move(v));
    }
    return out;
}

EPoly e_eval(const Ctx& c, int r, const EPoly& a, int var, const El& alpha) {
    std::vector<El> pows{el_scalar(c, 1)};
    std::vector<std::pair<Monomial, El>> v;
    for (const auto& [m, e] : a.t) {
        while (pows.size() <= m.e[var]) pows.push_back(el_mul(c, pows.back(), alpha));
        Monomial m2 = m;
        m2.e[var] = 0;
        v.emplace_back(m2, el_mul(c, e, pows[m.e[var]]));
    }
    return e_norm(c, r, std::move(v));
}

EPoly e_lc_wrt(const Ctx& c, int r, const EPoly& a, int z) {
    int d = a.deg_in(z);
    std::vector<std::pair<Monomial, El>> v;
    for (const auto& [m, e] : a.t) {
        if (static_cast<int>(m.e[z]) == d) {
            Monomial m2 = m;
            m2.e[z] = 0;
            v.emplace_back(m2, e);
        }
    }
    return e_norm(c, r, std::move(v));
}

// Monic dense Euclid in the single variable z.
EPoly e_univar_gcd(const Ctx& c, int r, const EPoly& a, const EPoly& b, int z) {
    auto to_dense = [&](const EPoly& h) {
        std::vector<El> v(static_cast<size_t>(h.deg_in(z)) + 1, el_zero(c));
        for (const auto& [m, e] : h.t) v[m.e[z]] = e;
        while (!v.empty() && el_is_zero(v.back())) v.pop_back();
        return v;
    };
    auto u = to_dense(a), w = to_dense(b);
    while (!w.empty()) {
        El inv = el_inv(c, w.back());
        while (u.size() >= w.size() && !u.empty()) {
            El f = el_mul(c, u.back(), inv);
            size_t off = u.size() - w.size();
            for (size_t i = 0; i < w.size(); ++i)
                u[off + i] = el_sub(c, u[off + i], el_mul(c, f, w[i]));
            while (!u.empty() && el_is_zero(u.back())) u.pop_back();
        }
        std::swap(u, w);
    }
    EPoly out;
    if (u.empty()) return out;
    El inv = el_inv(c, u.back());
    std::vector<std::pair<Monomial, El>> v;
    for (size_t i = 0; i < u.size(); ++i) {
        El e = el_mul(c, u[i], inv);
        if (!el_is_zero(e)) {
            Monomial m;
            m.e[z] = static_cast<uint32_t>(i);
            v.emplace_back(m, std::move(e));
        }
    }
    return e_norm(c, r, std::move(v));
}

int e_interp_var(const Ctx&, int r, std::initializer_list<const EPoly*> ps, int z) {
    int w = -1;
    for (const EPoly* p : ps)
        for (int i = 0; i < r; ++i)
            if (i != z && p->deg_in(i) > 0) w = std::max(w, i);
    return w;
}

// Mirror of brown_rec over F_{p^k}.
std::optional<EPoly> e_brown(const Ctx& c, int r, const EPoly& u, const EPoly& v,
                             const EPoly& gamma, int z) {
    int w = e_interp_var(c, r, {&u, &v, &gamma}, z);
    if (w < 0) {
        EPoly g = e_univar_gcd(c, r, u, v, z);
        El gc = gamma.is_zero() ? el_zero(c) : gamma.t[0].second;
        return e_scale(c, g, gc);
    }
    EPoly lu = e_lc_wrt(c, r, u, z);
    EPoly lv = e_lc_wrt(c, r, v, z);
    int bound = std::min(u.deg_in(w), v.deg_in(w)) + gamma.deg_in(w);
    EPoly H, basis;
    basis.t.emplace_back(Monomial{}, el_scalar(c, 1));
    int npoints = 0, cur_dz = -1;
    uint64_t field_size = 1;
    for (int i = 0; i < c.k; ++i) field_size *= c.p;
    uint64_t budget = std::min<uint64_t>(field_size,
                                         static_cast<uint64_t>(bound) + 256);
    for (uint64_t ai = 0; ai < budget; ++ai) {
        El alpha = el_from_index(c, ai);
        if (e_eval(c, r, lu, w, alpha).is_zero()) continue;
        if (e_eval(c, r, lv, w, alpha).is_zero()) continue;
        EPoly geval = e_eval(c, r, gamma, w, alpha);
        if (geval.is_zero()) continue;  // uninformative image
        auto h = e_brown(c, r, e_eval(c, r, u, w, alpha), e_eval(c, r, v, w, alpha),
                         geval, z);
        if (!h) return std::nullopt;
        int dz = h->deg_in(z);
        if (dz == 0) return gamma;
        if (cur_dz < 0 || dz < cur_dz) {
            cur_dz = dz;
            H = EPoly{};
            basis = EPoly{};
            basis.t.emplace_back(Monomial{}, el_scalar(c, 1));
            npoints = 0;
        } else if (dz > cur_dz) {
            continue;
        }
        EPoly diff = e_sub(c, r, *h, e_eval(c, r, H, w, alpha));
        if (!diff.is_zero()) {
            EPoly beval = e_eval(c, r, basis, w, alpha);
            H = e_add(c, r, H,
                      e_mul(c, r, basis, e_scale(c, diff, el_inv(c, beval.t[0].second))));
        }
        EPoly lin;
        Monomial mw;
        mw.e[w] = 1;
        lin.t.emplace_back(mw, el_scalar(c, 1));
        lin.t.emplace_back(Monomial{}, el_neg(c, alpha));
        basis = e_mul(c, r, basis, lin);
        if (++npoints == bound + 1) return H;
    }
    return std::nullopt;
}

}  // namespace ext

// Brown gcd attempt for small p through an extension field; u, v primitive
// with respect to `main`.  Verified result or nullopt.
std::optional<MPoly> small_p_brown_gcd(const MPoly& u, const MPoly& v, int main) {
    const RingSpec& ring = u.ring();
    const uint64_t p = ring.characteristic;
    const int r = ring.num_vars;
    MPoly lu = leading_coeff_wrt(u, main);
    MPoly lv = leading_coeff_wrt(v, main);
    MPoly gamma = (lu.is_constant() || lv.is_constant())
                      ? MPoly::from_long(ring, 1)
                      : mp_gcd(lu, lv);

    uint64_t need = static_cast<uint64_t>(u.total_degree().value_or(0) +
                                          v.total_degree().value_or(0)) + 300;
    int k = 1;
    uint64_t pk = p;
    while (pk < need) {
        pk *= p;
        ++k;
    }
    ext::Ctx ctx = ext::make_ctx(p, k);

    auto to_ext = [&](const MPoly& h) {
        ext::EPoly out;
        for (const auto& t : h.terms())
            out.t.emplace_back(t.m, ext::el_scalar(ctx, t.c.fpe().value));
        return out;
    };
    auto H = ext::e_brown(ctx, r, to_ext(u), to_ext(v), to_ext(gamma), main);
    if (!H || H->is_zero()) return std::nullopt;

    // The gcd lives over F_p: every coefficient must be a base-field scalar.
    std::vector<Term> ts;
    for (const auto& [m, e] : H->t) {
        for (int i = 1; i < ctx.k; ++i)
            if (e[i]) return std::nullopt;
        ts.push_back(Term{m, FieldElem::fp(e[0], p)});
    }
    MPoly Hm = normalize_terms(ring, std::move(ts));
    if (Hm.is_constant()) return MPoly::from_long(ring, 1);
    MPoly G = primpart_wrt(Hm, main);
    if (mp_try_div(u, G) && mp_try_div(v, G)) return G.canonical();
    return std::nullopt;
}

// GCD of two polynomials that are primitive with respect to `main`.
MPoly gcd_primitive(MPoly u, MPoly v, int main, const std::vector<int>& vars) {
    const RingSpec& ring = u.ring();
    if (u.deg_in(main) < v.deg_in(main)) std::swap(u, v);
    if (mp_try_div(u, v)) return v.canonical();

    if (ring.characteristic >= kBrownMinField) {
        if (auto g = fq_brown_gcd(u, v, main)) return *g;
    } else if (ring.characteristic > 0) {
        if (auto g = small_p_brown_gcd(u, v, main)) return *g;
    }

    const MPoly pa = u, pb = v;
    int dbound = specialized_degree_bound(pa, pb, main, vars);
    if (dbound == 0) return MPoly::from_long(ring, 1);

    int last_checked = -1;
    while (true) {
        int dv = v.deg_in(main);
        if (dv == 0) return MPoly::from_long(ring, 1);
        if (dv <= dbound && dv != last_checked) {
            last_checked = dv;
            if (mp_try_div(pa, v) && mp_try_div(pb, v)) return v.canonical();
        }
        // One pseudo-reduction step followed by a content strip keeps
        // coefficient growth down on structured inputs.
        int du = u.deg_in(main);
        MPoly lv = leading_coeff_wrt(v, main);
        MPoly lu = leading_coeff_wrt(u, main);
        MPoly shift = MPoly::variable(ring, main, static_cast<uint32_t>(du - dv));
        MPoly r = lv * u - lu * shift * v;
        if (r.is_zero()) return v.canonical();
        r = primpart_wrt(r, main);
        if (r.deg_in(main) >= dv) {
            u = std::move(r);
        } else {
            u = std::move(v);
            v = std::move(r);
            last_checked = -1;
        }
    }
}

}  // namespace

MPoly mp_gcd(const MPoly& a, const MPoly& b) {
    a.check_same_ring(b);
    if (a.is_zero() && b.is_zero()) throw BothZero();
    if (a.is_zero()) return b.canonical();
    if (b.is_zero()) return a.canonical();
    const RingSpec& ring = a.ring();
    if (a.is_constant() || b.is_constant()) return MPoly::from_long(ring, 1);

    std::vector<int> vars = used_vars(a, b);
    if (vars.size() == 1) return univar_gcd(a, b, vars[0]).canonical();

    if (ring.characteristic == 0) {
        if (auto g = char0_modular_gcd(a, b)) return *g;
    }

    const int main = vars[0];
    if (a.deg_in(main) == 0 || b.deg_in(main) == 0) {
        // One operand is free of the main variable: gcd divides the other's
        // content with respect to it.
        const MPoly& free_poly = a.deg_in(main) == 0 ? a : b;
        const MPoly& other = a.deg_in(main) == 0 ? b : a;
        MPoly content = coeff_gcd(coeffs_wrt(other, main));
        if (content.is_constant()) return MPoly::from_long(ring, 1);
        return mp_gcd(free_poly, content);
    }

    auto [ca, pa] = mp_content_primpart(a, main);
    auto [cb, pb] = mp_content_primpart(b, main);
    MPoly cg = (ca.is_constant() || cb.is_constant())
                   ? MPoly::from_long(ring, 1)
                   : mp_gcd(ca, cb);
    MPoly g = gcd_primitive(pa, pb, main, vars);
    return (cg * g).canonical();
}

std::pair<MPoly, MPoly> mp_content_primpart(const MPoly& a, int main_var) {
    if (a.is_zero()) throw ZeroInput();
    if (main_var < 0 || main_var >= a.ring().num_vars)
        throw OutOfRange("main_var");
    MPoly content = coeff_gcd(coeffs_wrt(a, main_var));
    MPoly primpart = content.is_constant() ? a.canonical()
                                           : mp_exact_div(a, content).canonical();
    // content * primpart == a exactly: fold the leftover unit into content.
    MPoly unit_fixed = mp_exact_div(a, primpart);
    return {unit_fixed, primpart};
}

}  // namespace zsig
