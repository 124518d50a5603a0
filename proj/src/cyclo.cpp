#include "zsig/cyclo.hpp"

#include <map>
#include <mutex>

#include "zsig/numtheory.hpp"

namespace zsig {

bool HomogBivar::is_zero() const {
    for (const auto& c : coeffs) {
        if (c != 0) return false;
    }
    return true;
}

bool HomogBivar::is_symmetric() const {
    for (int k = 0; k <= degree; ++k) {
        if (coeffs[k] != coeffs[degree - k]) return false;
    }
    return true;
}

std::string HomogBivar::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int k = 0; k <= degree; ++k) {
        const BigInt& c = coeffs[k];
        if (c == 0) continue;
        BigInt mag = abs(c);
        bool neg = c < 0;
        int ex = degree - k, ey = k;
        std::string mono;
        if (ex > 0) mono += "X" + (ex > 1 ? "^" + std::to_string(ex) : "");
        if (ey > 0) {
            if (!mono.empty()) mono += "*";
            mono += "Y" + (ey > 1 ? "^" + std::to_string(ey) : "");
        }
        std::string body = (mag == 1 && !mono.empty()) ? mono
                           : mono.empty() ? mag.get_str()
                                          : mag.get_str() + "*" + mono;
        if (first) {
            out = (neg ? "-" : "") + body;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + body;
        }
    }
    return out;
}

HomogBivar homog_mul(const HomogBivar& a, const HomogBivar& b) {
    int d = a.degree + b.degree;
    std::vector<BigInt> c(static_cast<size_t>(d) + 1, BigInt(0));
    for (int i = 0; i <= a.degree; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (int j = 0; j <= b.degree; ++j) {
            c[i + j] += a.coeffs[i] * b.coeffs[j];
        }
    }
    return HomogBivar(d, std::move(c));
}

HomogBivar homog_exact_div(const HomogBivar& a, const HomogBivar& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_zero()) return HomogBivar(0, {BigInt(0)});
    if (a.degree < b.degree || b.coeffs[0] == 0 || a.coeffs[0] == 0)
        throw NotDivisible();
    // Dehomogenized long division in X (coeff index = power of Y).
    int dq = a.degree - b.degree;
    std::vector<BigInt> rem = a.coeffs;
    std::vector<BigInt> q(static_cast<size_t>(dq) + 1, BigInt(0));
    for (int k = 0; k <= dq; ++k) {
        BigInt qc;
        mpz_tdiv_qr(q[k].get_mpz_t(), qc.get_mpz_t(), rem[k].get_mpz_t(),
                    b.coeffs[0].get_mpz_t());
        if (qc != 0) throw NotDivisible();
        for (int j = 0; j <= b.degree; ++j) rem[k + j] -= q[k] * b.coeffs[j];
    }
    for (const auto& c : rem) {
        if (c != 0) throw NotDivisible();
    }
    return HomogBivar(dq, std::move(q));
}

HomogBivar cyclotomic_int(uint64_t n) {
    if (n < 1 || n > 10000) throw OutOfRange("cyclotomic index " + std::to_string(n));

    static std::map<uint64_t, HomogBivar> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);

    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<uint64_t> todo{n};
    while (!todo.empty()) {
        uint64_t k = todo.back();
        if (cache.count(k)) {
            todo.pop_back();
            continue;
        }
        bool ready = true;
        for (uint64_t d : divisors(k)) {
            if (d < k && !cache.count(d)) {
                todo.push_back(d);
                ready = false;
            }
        }
        if (!ready) continue;
        todo.pop_back();
        if (k == 1) {
            cache.emplace(1, HomogBivar(1, {BigInt(1), BigInt(-1)}));
            continue;
        }
        // X^k - Y^k divided by the product of all lower Phi_d
        std::vector<BigInt> xkyk(static_cast<size_t>(k) + 1, BigInt(0));
        xkyk[0] = 1;
        xkyk[k] = -1;
        HomogBivar num(static_cast<int>(k), std::move(xkyk));
        for (uint64_t d : divisors(k)) {
            if (d < k) num = homog_exact_div(num, cache.at(d));
        }
        cache.emplace(k, std::move(num));
    }
    return cache.at(n);
}

HomogBivar homog_family(HomogKind kind, uint64_t m, uint64_t n) {
    if (m < 1 || m > 10000) throw OutOfRange("m = " + std::to_string(m));
    switch (kind) {
        case HomogKind::P: {
            std::vector<BigInt> c(m, BigInt(1));
            return HomogBivar(static_cast<int>(m) - 1, std::move(c));
        }
        case HomogKind::T: {
            if (m % 2 != 0) throw ParityViolation("T requires even m");
            if (m < 2) throw OutOfRange("T requires m >= 2");
            HomogBivar xy(1, {BigInt(1), BigInt(1)});
            return homog_exact_div(homog_family(HomogKind::P, m), xy);
        }
        case HomogKind::W: {
            if (m % 2 != 1) throw ParityViolation("W requires odd m");
            std::vector<BigInt> c(m);
            for (uint64_t k = 0; k < m; ++k) c[k] = (k % 2 == 0) ? 1 : -1;
            return HomogBivar(static_cast<int>(m) - 1, std::move(c));
        }
        case HomogKind::V: {
            if (n < 1 || n > 10000) throw OutOfRange("V requires 1 <= n <= 10^4");
            size_t deg = (m - 1) * n;
            if (deg > 100000) throw OutOfRange("V degree too large");
            std::vector<BigInt> c(deg + 1, BigInt(0));
            for (uint64_t k = 0; k < m; ++k) c[k * n] = 1;
            return HomogBivar(static_cast<int>(deg), std::move(c));
        }
    }
    throw OutOfRange("unknown homogeneous family");
}

SeedPair::SeedPair(SeedKind k, MPoly a, MPoly b)
    : kind(k), first(std::move(a)), second(std::move(b)) {
    first.check_same_ring(second);
    if (first.is_zero() || second.is_zero())
        throw InvalidSeed("seed entries must be nonzero");
    if (first.is_constant() && second.is_constant())
        throw InvalidSeed("seed entries must not both be constant");
    if (!mp_gcd(first, second).is_constant())
        throw InvalidSeed("seed entries must be coprime");
}

std::vector<MPoly> power_sums(const SeedPair& seed, int k_max) {
    if (seed.kind == SeedKind::FG)
        throw KindMismatch("power sums of an (f,g) seed are computed directly");
    if (k_max < 0) throw OutOfRange("k_max");
    const RingSpec& ring = seed.ring();
    std::vector<MPoly> t(static_cast<size_t>(k_max) + 1, MPoly::zero(ring));
    t[0] = MPoly::from_long(ring, 2);
    if (seed.kind == SeedKind::LUCAS) {
        const MPoly& s = seed.first;
        const MPoly& q = seed.second;
        if (k_max >= 1) t[1] = s;
        for (int k = 2; k <= k_max; ++k) t[k] = s * t[k - 1] - q * t[k - 2];
    } else {
        // LEHMER: t_2 = E - 2q, t_{2k} = t_2 t_{2k-2} - q^2 t_{2k-4}
        const MPoly& E = seed.first;
        const MPoly& q = seed.second;
        MPoly q2 = q * q;
        MPoly t2 = E - q.scaled(ring.from_long(2));
        if (k_max >= 2) t[2] = t2;
        for (int k = 4; k <= k_max; k += 2) t[k] = t2 * t[k - 2] - q2 * t[k - 4];
    }
    return t;
}

MPoly eval_symmetric(const HomogBivar& tmpl, const SeedPair& seed) {
    if (!tmpl.is_symmetric()) throw NotSymmetric();
    const RingSpec& ring = seed.ring();
    const int d = tmpl.degree;
    if (tmpl.is_zero()) return MPoly::zero(ring);

    if (seed.kind == SeedKind::FG) {
        const MPoly& f = seed.first;
        const MPoly& g = seed.second;
        std::vector<MPoly> fp{MPoly::from_long(ring, 1)}, gp{MPoly::from_long(ring, 1)};
        for (int i = 1; i <= d; ++i) {
            fp.push_back(fp.back() * f);
            gp.push_back(gp.back() * g);
        }
        MPoly sum = MPoly::zero(ring);
        for (int k = 0; k <= d; ++k) {
            if (tmpl.coeffs[k] == 0) continue;
            sum = sum + (fp[d - k] * gp[k]).scaled(ring.from_bigint(tmpl.coeffs[k]));
        }
        return sum;
    }

    if (seed.kind == SeedKind::LEHMER && d % 2 != 0)
        throw ParityViolation("odd-degree template at a Lehmer seed");

    const MPoly& q = seed.second;
    std::vector<MPoly> t = power_sums(seed, d);
    std::vector<MPoly> qp{MPoly::from_long(ring, 1)};
    for (int i = 1; i <= d / 2; ++i) qp.push_back(qp.back() * q);

    // sum over symmetric pairs: c_k q^k t_{d-2k}, plus middle c q^{d/2}
    MPoly sum = MPoly::zero(ring);
    for (int k = 0; 2 * k < d; ++k) {
        if (tmpl.coeffs[k] == 0) continue;
        sum = sum + (qp[k] * t[d - 2 * k]).scaled(ring.from_bigint(tmpl.coeffs[k]));
    }
    if (d % 2 == 0 && tmpl.coeffs[d / 2] != 0) {
        sum = sum + qp[d / 2].scaled(ring.from_bigint(tmpl.coeffs[d / 2]));
    }
    return sum;
}

}  // namespace zsig
