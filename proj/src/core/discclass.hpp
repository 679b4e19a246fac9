#ifndef DISCSIEVE_DISCCLASS_HPP
#define DISCSIEVE_DISCCLASS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "poly.hpp"

namespace discsieve {

enum class P2Tag { NOT_DIVISIBLE, WEAK, STRONG, ZERO_DISC };

const char* to_string(P2Tag t);

struct P2Class {
    P2Tag tag = P2Tag::NOT_DIVISIBLE;
    std::optional<uint64_t> witness;  // double root mod p, present iff WEAK
};

// p^2 | disc(f) classified as weak (f mod p has a unique multiple root, in
// F_p, a simple double root: deg gcd(f,f') = 1) or strong (gcd degree >= 2).
P2Class classify_p2(const MonicPoly& f, uint64_t p);

// True iff p^2 | disc(f + p g) for every integer polynomial g; checked over
// the complete residue system g mod p (p^n cases).
bool strongly_divides_oracle(const MonicPoly& f, uint64_t p);

struct WeakNormalForm {
    Int ell;             // shift, normalized to [0, m)
    Int m;               // positive squarefree integer
    std::vector<Int> c;  // c_1..c_n of the shifted polynomial shape

    int degree() const { return int(c.size()); }
    // x^n + c_1 x^{n-1} + ... + c_{n-2} x^2 + (m c_{n-1}) x + m^2 c_n
    MonicPoly to_poly_shifted() const;   // the f(x+ell) shape
    MonicPoly to_poly_original() const;  // f itself
};

// Computes ell by CRT over the per-prime double-root witnesses and extracts
// the c_i; absent when some p | m is not WEAK for f.
std::optional<WeakNormalForm> weak_normal_form(const MonicPoly& f, const Int& m);

}  // namespace discsieve

#endif
