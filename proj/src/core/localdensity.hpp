#ifndef DISCSIEVE_LOCALDENSITY_HPP
#define DISCSIEVE_LOCALDENSITY_HPP

#include <cstdint>

#include "modpoly.hpp"
#include "poly.hpp"

namespace discsieve {

// Density of monic degree-n polynomials over Z_p with discriminant not
// divisible by p^2 (Brakenhoff):
//   n=1: 1;  n=2: 1 - 1/p^2;  n=3: 1 - 2/p^2 + 1/p^3;
//   n>=4: 1 - 1/p + (p-1)^2 (1-(-p)^{2-n}) / (p^2 (p+1))      [odd p]
// lambda_1(2) = 1, lambda_n(2) = 1/2 for n >= 2.
Rat lambda_np(int n, uint64_t p);

// 1 - 1/p^2: density of p-maximality (independent of n for n >= 2).
Rat rho_np(int n, uint64_t p);

struct TruncatedProduct {
    double value = 1.0;
    double tail_bound = 0.0;  // crude bound sum_{p>P} 2/p^2 < 2/P
    uint64_t prime_bound = 0;
};

// prod_{p<=P} lambda_n(p)
TruncatedProduct lambda_n_truncated(int n, uint64_t P);
// prod_{p<=P} rho_n(p) (tends to 6/pi^2)
TruncatedProduct rho_n_truncated(uint64_t P);

// The n->infinity limit factor per prime is 1 - 1/p + (p-1)^2/(p^2(p+1)).
// Two conventions for p=2 coexist (they disagree; see the README note):
//   - limit of lambda_n uses lambda_n(2) = 1/2,
//   - the displayed infinite product uses the generic factor at 2 as well
//     and evaluates to ~0.358232.
TruncatedProduct lambda_limit_truncated(uint64_t P);
TruncatedProduct lambda_limit_truncated_paper_product(uint64_t P);

// Dedekind's criterion at p: with f = prod g_i^{e_i} mod p, g* = prod g_i,
// h* a monic lift of f/g*, T = (g* h* - f)/p: maximal iff
// gcd(T, g*, h*) = 1 over F_p. Depends on f only through f mod p^2.
bool dedekind_is_p_maximal(const MonicPoly& f, uint64_t p);

// Class-level form used by the sweeps: input is f mod p^2.
bool dedekind_class_is_maximal(const ModPoly& f_mod_p2, uint64_t p);

// Exact fraction of coefficient tuples mod p^2 (optionally with a_1 = 0)
// whose discriminant is nonzero mod p^2. Exhaustive: (p^2)^n tuples.
Rat bruteforce_disc_density(int n, uint64_t p, bool a1_zero);

// Exact fraction of tuples mod p^2 that are p-maximal by Dedekind.
Rat bruteforce_maximal_density(int n, uint64_t p);

}  // namespace discsieve

#endif
