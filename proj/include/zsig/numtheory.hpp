#ifndef ZSIG_NUMTHEORY_HPP
#define ZSIG_NUMTHEORY_HPP

#include <cstdint>
#include <vector>

namespace zsig {

// Deterministic primality test for p < 2^62: trial division up to 2^21,
// then Miller-Rabin with a base set that is provably complete below 3.3e24.
bool is_prime_u64(uint64_t n);

// All positive divisors of n, sorted ascending.
std::vector<uint64_t> divisors(uint64_t n);

// Moebius function mu(n); n >= 1.
int mobius(uint64_t n);

// Euler totient phi(n); n >= 1.
uint64_t euler_phi(uint64_t n);

// Distinct prime factors of n, sorted ascending.
std::vector<uint64_t> prime_factors(uint64_t n);

}  // namespace zsig

#endif
