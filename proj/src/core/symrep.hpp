#ifndef DISCSIEVE_SYMREP_HPP
#define DISCSIEVE_SYMREP_HPP

#include <optional>
#include <vector>

#include "discclass.hpp"
#include "poly.hpp"

namespace discsieve {

// Symmetric n x n matrix B over Q stored as an integer matrix S with a global
// denominator d in {1,2,4}: B = S/d. d=2 covers odd-n embedding images, d=4
// even-n images.
struct SymMatrix {
    int n = 0;
    int d = 1;
    std::vector<Int> s;  // row-major, length n*n, symmetric

    Int& at(int i, int j) { return s[size_t(i) * size_t(n) + size_t(j)]; }
    const Int& at(int i, int j) const { return s[size_t(i) * size_t(n) + size_t(j)]; }

    bool is_symmetric() const;
    int genus() const { return n % 2 ? (n - 1) / 2 : (n - 2) / 2; }  // g with n=2g+1 or 2g+2
    bool operator==(const SymMatrix& o) const = default;
};

SymMatrix make_sym(int n, int d = 1);

// Anti-diagonal identity (1's on the anti-diagonal), d = 1.
SymMatrix a0(int n);

// f_B(x) = (-1)^{n(n-1)/2} det(A0 x - B), monic of degree n; exact, computed
// by evaluation at n+1 integer points and Lagrange interpolation.
RatPoly invariant_poly(const SymMatrix& B);

// Conversion when all coefficients are integers (e.g. sigma_m images).
std::optional<MonicPoly> rat_poly_to_monic(const RatPoly& f);

// Zero-block membership: odd n=2g+1 top-left g x g, even n=2g+2 top-left
// g x (g+1) (plus the symmetric reflection).
bool in_w0(const SymMatrix& B);
// (i,j)-entries vanish for i+j < n (1-indexed).
bool in_w00(const SymMatrix& B);

// gamma . B = gamma B gamma^t (denominator preserved).
SymMatrix congruence_act(const std::vector<Int>& gamma_rowmajor, const SymMatrix& B);

// The weak-divisibility embedding: B_m(c_1..c_n) per the displayed odd/even
// matrix patterns, plus ell * A0. Image lies in W0 (in fact W00 before the
// shift), d = 2 for odd n and 4 for even n. Requires n >= 3.
SymMatrix sigma_m(const WeakNormalForm& nf);

// integer matrix helpers shared with tests
Int det_int_matrix(const std::vector<Int>& m_rowmajor, int n);
std::vector<Int> mat_mul(const std::vector<Int>& a, const std::vector<Int>& b, int n);
std::vector<Int> mat_transpose(const std::vector<Int>& a, int n);

}  // namespace discsieve

#endif
