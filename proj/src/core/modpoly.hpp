#ifndef DISCSIEVE_MODPOLY_HPP
#define DISCSIEVE_MODPOLY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "poly.hpp"

namespace discsieve {

// Polynomial over Z/qZ, coefficients ascending in [0,q). Normalized (no
// trailing zeros); the zero polynomial has empty coeffs. Field operations
// (gcd, division, squarefree decomposition) require prime q.
struct ModPoly {
    uint64_t q = 0;
    std::vector<uint64_t> c;

    int degree() const { return int(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    uint64_t lc() const { return c.back(); }
    void normalize();
    bool operator==(const ModPoly& o) const = default;
    std::string to_string() const;
};

ModPoly reduce_mod(const MonicPoly& f, uint64_t q);
ModPoly reduce_mod(const IntPoly& f, uint64_t q);

ModPoly mod_add(const ModPoly& a, const ModPoly& b);
ModPoly mod_sub(const ModPoly& a, const ModPoly& b);
ModPoly mod_mul(const ModPoly& a, const ModPoly& b);
ModPoly mod_make_monic(const ModPoly& a);                      // prime q
void mod_divmod(const ModPoly& a, const ModPoly& b, ModPoly& quo, ModPoly& rem);  // prime q
ModPoly mod_gcd(const ModPoly& a, const ModPoly& b);           // monic gcd, prime q
ModPoly mod_derivative(const ModPoly& a);

struct SqfFactor {
    ModPoly factor;   // monic, squarefree
    int multiplicity;
};

// Full squarefree decomposition over F_p (prime p), handling the f' == 0
// p-th-power case. Product of factor^multiplicity equals f up to the leading
// coefficient; factors pairwise coprime.
std::vector<SqfFactor> sqf_decompose_mod_p(const ModPoly& f);

// Lift to a monic integer polynomial with coefficients in [0, p).
IntPoly lift_to_int(const ModPoly& f);

}  // namespace discsieve

#endif
