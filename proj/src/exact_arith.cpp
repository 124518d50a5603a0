#include "zsig/exact_arith.hpp"

namespace zsig {

Rat rat_canonical(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DivisionByZero();
    Rat q(num, den);
    q.canonicalize();  // reduces and forces den > 0; 0 becomes 0/1
    return q;
}

namespace {
uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}
}  // namespace

FpElem FpElem::from_bigint(const BigInt& v, uint64_t prime) {
    BigInt m = v % BigInt(static_cast<unsigned long>(prime));
    if (m < 0) m += BigInt(static_cast<unsigned long>(prime));
    return FpElem(m.get_ui(), prime);
}

FpElem FpElem::operator+(const FpElem& o) const {
    if (p != o.p) throw RingMismatch();
    uint64_t s = value + o.value;
    if (s >= p) s -= p;
    return FpElem(s, p);
}

FpElem FpElem::operator-(const FpElem& o) const {
    if (p != o.p) throw RingMismatch();
    uint64_t s = value >= o.value ? value - o.value : value + p - o.value;
    return FpElem(s, p);
}

FpElem FpElem::operator*(const FpElem& o) const {
    if (p != o.p) throw RingMismatch();
    return FpElem(mulmod(value, o.value, p), p);
}

FpElem FpElem::operator-() const {
    return FpElem(value == 0 ? 0 : p - value, p);
}

FpElem FpElem::pow(uint64_t e) const {
    uint64_t r = 1 % p, b = value;
    while (e) {
        if (e & 1) r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
    }
    return FpElem(r, p);
}

FpElem FpElem::inv() const {
    if (value == 0) throw DivisionByZero();
    // Extended Euclid on (value, p); p is prime so the inverse exists.
    int64_t t = 0, nt = 1;
    uint64_t r = p, nr = value;
    while (nr != 0) {
        uint64_t q = r / nr;
        int64_t tmp_t = t - static_cast<int64_t>(q) * nt;
        t = nt;
        nt = tmp_t;
        uint64_t tmp_r = r - q * nr;
        r = nr;
        nr = tmp_r;
    }
    int64_t res = t;
    if (res < 0) res += static_cast<int64_t>(p);
    return FpElem(static_cast<uint64_t>(res), p);
}

bool FieldElem::is_zero() const {
    if (is_rational()) return rat() == 0;
    return fpe().is_zero();
}

bool FieldElem::is_one() const {
    if (is_rational()) return rat() == 1;
    return fpe().is_one();
}

void FieldElem::check_same(const FieldElem& o) const {
    if (is_rational() != o.is_rational()) throw RingMismatch();
    if (is_fp() && fpe().p != o.fpe().p) throw RingMismatch();
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_same(o);
    if (is_rational()) return FieldElem(Rat(rat() + o.rat()));
    return FieldElem(fpe() + o.fpe());
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    check_same(o);
    if (is_rational()) return FieldElem(Rat(rat() - o.rat()));
    return FieldElem(fpe() - o.fpe());
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_same(o);
    if (is_rational()) return FieldElem(Rat(rat() * o.rat()));
    return FieldElem(fpe() * o.fpe());
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
    return *this * o.inv();
}

FieldElem FieldElem::operator-() const {
    if (is_rational()) return FieldElem(Rat(-rat()));
    return FieldElem(-fpe());
}

FieldElem FieldElem::inv() const {
    if (is_zero()) throw DivisionByZero();
    if (is_rational()) return FieldElem(Rat(1 / rat()));
    return FieldElem(fpe().inv());
}

FieldElem FieldElem::pow(uint64_t e) const {
    if (is_fp()) return FieldElem(fpe().pow(e));
    Rat r = 1, b = rat();
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return FieldElem(r);
}

bool FieldElem::operator==(const FieldElem& o) const {
    if (is_rational() != o.is_rational()) return false;
    if (is_rational()) return rat() == o.rat();
    return fpe() == o.fpe();
}

std::string FieldElem::to_string() const {
    if (is_rational()) return rat().get_str();
    return std::to_string(fpe().value);
}

FieldElem field_inv(const FieldElem& a) { return a.inv(); }
FpElem field_inv(const FpElem& a) { return a.inv(); }
Rat field_inv(const Rat& a) {
    if (a == 0) throw DivisionByZero();
    return Rat(1 / a);
}

}  // namespace zsig
