#include "primes.hpp"

#include <cmath>
#include <stdexcept>

namespace discsieve {

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t mod) {
    uint64_t r = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, mod);
        base = mulmod_u64(base, base, mod);
        exp >>= 1;
    }
    return r;
}

uint64_t invmod_u64(uint64_t a, uint64_t m) {
    int64_t t = 0, newt = 1;
    int64_t r = int64_t(m), newr = int64_t(a % m);
    while (newr != 0) {
        int64_t q = r / newr;
        int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw std::invalid_argument("invmod: arguments not coprime");
    if (t < 0) t += int64_t(m);
    return uint64_t(t);
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    // deterministic witness set for 64-bit inputs
    for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::vector<uint32_t> primes_up_to(uint32_t bound) {
    std::vector<uint32_t> out;
    if (bound < 2) return out;
    std::vector<char> comp(size_t(bound) + 1, 0);
    for (uint64_t i = 2; i <= bound; ++i) {
        if (!comp[size_t(i)]) {
            out.push_back(uint32_t(i));
            for (uint64_t j = i * i; j <= bound; j += i) comp[size_t(j)] = 1;
        }
    }
    return out;
}

int legendre_u64(uint64_t a, uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    uint64_t r = powmod_u64(a, (p - 1) / 2, p);
    return r == 1 ? 1 : -1;
}

uint64_t sqrtmod_u64(uint64_t a, uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    if (p == 2) return a;
    if ((p & 3) == 3) return powmod_u64(a, (p + 1) / 4, p);
    // Tonelli-Shanks
    uint64_t q = p - 1;
    int s = 0;
    while ((q & 1) == 0) q >>= 1, ++s;
    uint64_t z = 2;
    while (legendre_u64(z, p) != -1) ++z;
    uint64_t m = uint64_t(s);
    uint64_t c = powmod_u64(z, q, p);
    uint64_t t = powmod_u64(a, q, p);
    uint64_t r = powmod_u64(a, (q + 1) / 2, p);
    while (t != 1) {
        uint64_t i = 0, tt = t;
        while (tt != 1) {
            tt = mulmod_u64(tt, tt, p);
            ++i;
            if (i == m) throw std::invalid_argument("sqrtmod: not a quadratic residue");
        }
        uint64_t b = c;
        for (uint64_t j = 0; j + i + 1 < m; ++j) b = mulmod_u64(b, b, p);
        m = i;
        c = mulmod_u64(b, b, p);
        t = mulmod_u64(t, c, p);
        r = mulmod_u64(r, b, p);
    }
    return r;
}

uint64_t isqrt_u64(uint64_t n) {
    if (n == 0) return 0;
    uint64_t r = uint64_t(std::sqrt(double(n)));
    const uint64_t rmax = 0xffffffffULL;
    if (r > rmax) r = rmax;
    while (r > 0 && r * r > n) --r;
    while (r < rmax && (r + 1) * (r + 1) <= n) ++r;
    return r;
}

namespace {

// Divide out all primes <= cbrt(|d|); reports squarefree-ness exactly.
// visit(p) is called once per prime with p^2 | d.
template <typename Visit>
bool square_support_i64(int64_t d, Visit visit, bool early_exit) {
    uint64_t n = d < 0 ? uint64_t(-(unsigned long long)d) : uint64_t(d);
    if (n == 0) throw std::invalid_argument("squarefree test on 0 (discriminant zero)");
    bool sf = true;
    auto handle = [&](uint64_t p) -> bool {  // returns true to stop
        if (n % p != 0) return false;
        int e = 0;
        while (n % p == 0) n /= p, ++e;
        if (e >= 2) {
            sf = false;
            visit(p);
            if (early_exit) return true;
        }
        return false;
    };
    if (handle(2)) return false;
    if (handle(3)) return false;
    for (uint64_t p = 5; p * p * p <= n; p += 6) {
        if (handle(p)) return false;
        if (handle(p + 2)) return false;
    }
    if (n > 1) {
        uint64_t r = isqrt_u64(n);
        if (r * r == n) {
            sf = false;
            visit(r);  // cofactor p^2 with p > cbrt, so p is prime
        }
    }
    return sf;
}

}  // namespace

bool is_squarefree_i64(int64_t d) {
    return square_support_i64(d, [](uint64_t) {}, true);
}

std::vector<uint64_t> square_divisor_primes_i64(int64_t d) {
    std::vector<uint64_t> out;
    square_support_i64(d, [&](uint64_t p) { out.push_back(p); }, false);
    return out;
}

bool is_squarefree_int(const Int& d) {
    if (d == 0) throw std::invalid_argument("squarefree test on 0 (discriminant zero)");
    if (auto v = int_to_i64(d)) return is_squarefree_i64(*v);
    // mpz path for larger inputs: same structure, desk scale only
    Int n = abs(d);
    auto divide_out = [&](unsigned long p) {
        int e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        return e;
    };
    if (divide_out(2) >= 2) return false;
    if (divide_out(3) >= 2) return false;
    Int cube;
    for (unsigned long p = 5;; p += 6) {
        mpz_ui_pow_ui(cube.get_mpz_t(), p, 3);
        if (cube > n) break;
        if (divide_out(p) >= 2) return false;
        if (divide_out(p + 2) >= 2) return false;
    }
    if (n > 1 && mpz_perfect_square_p(n.get_mpz_t())) return false;
    return true;
}

std::vector<uint64_t> square_divisor_primes_int(const Int& d) {
    if (auto v = int_to_i64(d)) return square_divisor_primes_i64(*v);
    if (d == 0) throw std::invalid_argument("square support of 0");
    std::vector<uint64_t> out;
    Int n = abs(d);
    auto divide_out = [&](unsigned long p) {
        int e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        if (e >= 2) out.push_back(p);
        return e;
    };
    divide_out(2);
    divide_out(3);
    Int cube;
    for (unsigned long p = 5;; p += 6) {
        mpz_ui_pow_ui(cube.get_mpz_t(), p, 3);
        if (cube > n) break;
        divide_out(p);
        divide_out(p + 2);
    }
    if (n > 1 && mpz_perfect_square_p(n.get_mpz_t())) {
        Int r = sqrt(n);
        if (r.fits_ulong_p()) out.push_back(r.get_ui());
        else throw std::invalid_argument("square support: cofactor too large at desk scale");
    }
    return out;
}

bool is_squarefree_naive_i64(int64_t d) {
    uint64_t n = d < 0 ? uint64_t(-(unsigned long long)d) : uint64_t(d);
    if (n == 0) throw std::invalid_argument("squarefree test on 0");
    for (uint64_t p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) return false;
    }
    return true;
}

}  // namespace discsieve
