#ifndef DISCSIEVE_QINV_HPP
#define DISCSIEVE_QINV_HPP

#include <vector>

#include "symrep.hpp"

namespace discsieve {

// g x (g+1) rational matrix, row-major.
struct RatMat {
    int rows = 0, cols = 0;
    std::vector<Rat> v;

    Rat& at(int i, int j) { return v[size_t(i) * size_t(cols) + size_t(j)]; }
    const Rat& at(int i, int j) const { return v[size_t(i) * size_t(cols) + size_t(j)]; }
};

RatMat make_rat_mat(int rows, int cols);

// A point of 2 (x) g (x) (g+1): the pair (A, B) of g x (g+1) matrices.
struct QInput {
    RatMat A, B;

    int g() const { return A.rows; }
};

// Binary form of degree deg in (x,y): coeffs[k] is the coefficient of
// x^{deg-k} y^k.
using BinaryForm = std::vector<Rat>;

// i-th coordinate is (-1)^{i-1} det(Ax - By with column i removed), a binary
// form of degree g; exact polynomial expansion.
std::vector<BinaryForm> minor_vector(const QInput& q);

// Determinant of the (g+1)x(g+1) coefficient matrix of the minor vector
// (rows = minor index, columns = monomials x^g, x^{g-1}y, ..., y^g).
Rat q_invariant(const QInput& q);

// Q(B) := Q(A0^top, B^top) on W0; the top-right g x (g+1) blocks, with the
// denominator handled through degree-g(g+1)/2 homogeneity.
Rat q_of_w0(const SymMatrix& B);

// disc(f_B) / Q(B)^2, exact; requires B in W0 and Q(B) != 0.
Rat disc_over_q2(const SymMatrix& B);

// Verifies Q(gamma B gamma^t) = det(gamma_1) Q(B) (odd) or
// det(gamma_1)^{g+1} det(gamma_2)^g Q(B) (even) for gamma in G0: the block
// lower-triangular shape of eq. (G0) plus gamma A0 gamma^t = A0.
bool check_relative_invariance(const SymMatrix& B, const std::vector<Int>& gamma_rowmajor);

Rat rat_det(std::vector<std::vector<Rat>> m);

}  // namespace discsieve

#endif
