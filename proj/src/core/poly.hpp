#ifndef DISCSIEVE_POLY_HPP
#define DISCSIEVE_POLY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mp.hpp"

namespace discsieve {

// Dense integer polynomial, coefficients ascending (c[0] + c[1]x + ...).
// Normalized: no trailing zero coefficients; the zero polynomial is {}.
using IntPoly = std::vector<Int>;
using RatPoly = std::vector<Rat>;

int deg(const IntPoly& f);  // -1 for the zero polynomial
void normalize(IntPoly& f);
IntPoly derivative(const IntPoly& f);
Int eval(const IntPoly& f, const Int& x);
IntPoly mul(const IntPoly& f, const IntPoly& g);
IntPoly sub(const IntPoly& f, const IntPoly& g);

// Monic integer polynomial x^n + a_1 x^{n-1} + ... + a_n; the leading 1 is
// implicit and never stored. a[i] holds a_{i+1}.
struct MonicPoly {
    std::vector<Int> a;

    int degree() const { return int(a.size()); }
    const Int& coeff(int i) const { return a[size_t(i - 1)]; }  // a_i, 1-based

    IntPoly to_int_poly() const;
    static MonicPoly from_int_poly(const IntPoly& f);  // must be monic

    bool operator==(const MonicPoly& o) const = default;
};

// Text form "x^3 - 1*x^2 + 3*x + 9" or JSON array "[a1,...,an]".
MonicPoly parse_monic(const std::string& text);
std::string format_monic(const MonicPoly& f);
std::string monic_coeff_json(const MonicPoly& f);  // "[a1,...,an]"

// H(f) < X as exact integer comparisons |a_i| < X^i.
bool height_less_than(const MonicPoly& f, const Int& X);

// #{f : deg n, H(f) < X} = prod_i (2X^i - 1)
Int box_count(int n, const Int& X);

MonicPoly shift(const MonicPoly& f, const Int& ell);  // f(x + ell)

// Weighted action a_i -> rho^i a_i (so H scales linearly by rho).
RatPoly weighted_scale_rat(const RatPoly& monic_f, const Rat& rho);
MonicPoly weighted_scale(const MonicPoly& f, const Int& rho);

// Res(f, g) via Sylvester matrix, fraction-free elimination. Rejects zero
// polynomials.
Int resultant(const IntPoly& f, const IntPoly& g);

// Classical discriminant (-1)^{n(n-1)/2} Res(f, f').
Int discriminant(const MonicPoly& f);
// Raw Res(f, f') without the sign convention.
Int disc_resultant_raw(const MonicPoly& f);

// Discriminant of a monic polynomial with rational coefficients (denominators
// cleared via the weighted action; exact).
Rat discriminant_rat(const RatPoly& monic_f);

// Closed forms for n <= 3, exact in int64 (coefficients must be small enough;
// callers in hot loops guarantee this).
std::optional<int64_t> discriminant_i64(std::span<const int64_t> a_desc);

// 2 max{|a_1|, |a_2|^{1/2}, ..., |a_{n-1}|^{1/(n-1)}, |a_n/2|^{1/n}}:
// upper bound for every complex root modulus.
double fujiwara_bound(const MonicPoly& f);

// True iff f has a monic integer factor of degree 1..n/2. Linear factors via
// the rational-root test on a_n; higher degrees by bounded enumeration of
// candidate factors (coefficient bounds from the Fujiwara root radius).
bool is_reducible_over_Q(const MonicPoly& f);

// Exact monic division: returns quotient iff h divides f over Z.
std::optional<IntPoly> divide_exact(const IntPoly& f, const IntPoly& h);

// gcd(f, f') is nonconstant over Q  <=>  disc = 0; exposed for the property
// test tying discriminant vanishing to repeated factors.
bool has_repeated_factor_over_Q(const MonicPoly& f);

}  // namespace discsieve

#endif
