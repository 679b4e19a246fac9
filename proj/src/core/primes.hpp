#ifndef DISCSIEVE_PRIMES_HPP
#define DISCSIEVE_PRIMES_HPP

#include <cstdint>
#include <vector>

#include "mp.hpp"

namespace discsieve {

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return uint64_t((unsigned __int128)a * b % m);
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t mod);
uint64_t invmod_u64(uint64_t a, uint64_t m);  // gcd(a,m)=1 required
bool is_prime_u64(uint64_t n);                // deterministic Miller-Rabin

// primes <= bound, ascending
std::vector<uint32_t> primes_up_to(uint32_t bound);

// Legendre symbol (a/p), p odd prime: returns -1, 0, 1
int legendre_u64(uint64_t a, uint64_t p);

// sqrt mod odd prime p (Tonelli-Shanks); a must be a QR mod p
uint64_t sqrtmod_u64(uint64_t a, uint64_t p);

// floor(sqrt(n)) with exactness guaranteed
uint64_t isqrt_u64(uint64_t n);

// true iff no prime square divides d; d != 0 required.
// Trial division up to |d|^(1/3), then a perfect-square test on the cofactor
// (which is 1, p, p^2 or pq at that point).
bool is_squarefree_i64(int64_t d);
bool is_squarefree_int(const Int& d);

// Primes p with p^2 | d, ascending (the "square support" of d); d != 0.
std::vector<uint64_t> square_divisor_primes_i64(int64_t d);
std::vector<uint64_t> square_divisor_primes_int(const Int& d);

// Reference implementation of is_squarefree by trial division up to sqrt|d|,
// used as the oracle in tests (slow, exact).
bool is_squarefree_naive_i64(int64_t d);

}  // namespace discsieve

#endif
