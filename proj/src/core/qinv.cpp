#include "qinv.hpp"

#include <stdexcept>

namespace discsieve {

RatMat make_rat_mat(int rows, int cols) {
    RatMat m;
    m.rows = rows;
    m.cols = cols;
    m.v.assign(size_t(rows) * size_t(cols), Rat(0));
    return m;
}

Rat rat_det(std::vector<std::vector<Rat>> m) {
    const size_t n = m.size();
    Rat det(1);
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det *= m[k][k];
        Rat inv = 1 / m[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            Rat f = m[i][k] * inv;
            for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    det.canonicalize();
    return det;
}

namespace {

// linear binary form a*x + b*y per matrix entry; determinant expanded by
// cofactors along the first row (g <= 5 at desk scale)
struct LinEntry {
    Rat a, b;
};

BinaryForm bf_zero(int degree) { return BinaryForm(size_t(degree) + 1, Rat(0)); }

void bf_addmul_lin(BinaryForm& acc, const BinaryForm& f, const LinEntry& e, int sign) {
    // acc += sign * f * (a x + b y); deg(acc) = deg(f) + 1
    for (size_t k = 0; k < f.size(); ++k) {
        if (f[k] == 0) continue;
        Rat fx = f[k] * e.a;
        Rat fy = f[k] * e.b;
        if (sign < 0) {
            fx = -fx;
            fy = -fy;
        }
        acc[k] += fx;
        acc[k + 1] += fy;
    }
}

BinaryForm det_linear(const std::vector<std::vector<LinEntry>>& m, std::vector<int>& cols, size_t row) {
    const size_t k = cols.size();
    if (k == 1) {
        const LinEntry& e = m[row][size_t(cols[0])];
        return {e.a, e.b};
    }
    BinaryForm out = bf_zero(int(k));
    for (size_t ci = 0; ci < k; ++ci) {
        int col = cols[ci];
        const LinEntry& e = m[row][size_t(col)];
        if (e.a == 0 && e.b == 0) continue;
        std::vector<int> rest;
        rest.reserve(k - 1);
        for (size_t cj = 0; cj < k; ++cj)
            if (cj != ci) rest.push_back(cols[cj]);
        BinaryForm sub = det_linear(m, rest, row + 1);
        bf_addmul_lin(out, sub, e, ci % 2 == 0 ? 1 : -1);
    }
    return out;
}

}  // namespace

std::vector<BinaryForm> minor_vector(const QInput& q) {
    const int g = q.g();
    if (g < 1 || q.A.cols != g + 1 || q.B.rows != g || q.B.cols != g + 1)
        throw std::invalid_argument("QInput must be a pair of g x (g+1) matrices");
    std::vector<std::vector<LinEntry>> M(size_t(g), std::vector<LinEntry>(size_t(g) + 1));
    for (int i = 0; i < g; ++i)
        for (int j = 0; j <= g; ++j) M[size_t(i)][size_t(j)] = {q.A.at(i, j), -q.B.at(i, j)};
    std::vector<BinaryForm> out;
    out.reserve(size_t(g) + 1);
    for (int i = 0; i <= g; ++i) {
        std::vector<int> cols;
        for (int j = 0; j <= g; ++j)
            if (j != i) cols.push_back(j);
        BinaryForm mi = det_linear(M, cols, 0);
        if (i % 2 == 1)
            for (Rat& c : mi) c = -c;
        for (Rat& c : mi) c.canonicalize();
        out.push_back(std::move(mi));
    }
    return out;
}

Rat q_invariant(const QInput& q) {
    const int g = q.g();
    std::vector<BinaryForm> mv = minor_vector(q);
    std::vector<std::vector<Rat>> C(size_t(g) + 1, std::vector<Rat>(size_t(g) + 1));
    for (int i = 0; i <= g; ++i)
        for (int k = 0; k <= g; ++k) C[size_t(i)][size_t(k)] = mv[size_t(i)][size_t(k)];
    return rat_det(std::move(C));
}

namespace {

QInput top_blocks(const SymMatrix& B) {
    const int n = B.n, g = B.genus();
    if (g < 1) throw std::invalid_argument("Q-invariant requires n >= 3");
    if (!in_w0(B)) throw std::invalid_argument("matrix is not in W0");
    QInput q;
    q.A = make_rat_mat(g, g + 1);
    q.B = make_rat_mat(g, g + 1);
    const int c0 = n - (g + 1);  // leftmost column of the top-right block
    for (int i = 0; i < g; ++i)
        for (int j = 0; j <= g; ++j) {
            q.A.at(i, j) = Rat(i + c0 + j == n - 1 ? 1 : 0);
            q.B.at(i, j) = Rat(B.at(i, c0 + j));
        }
    return q;
}

}  // namespace

Rat q_of_w0(const SymMatrix& B) {
    const int g = B.genus();
    QInput q = top_blocks(B);  // B^top entries taken from S (integer part)
    Rat val = q_invariant(q);
    // Q(A, S^top/d) = Q(A, S^top) / d^{g(g+1)/2}
    Int dpow;
    mpz_ui_pow_ui(dpow.get_mpz_t(), unsigned(B.d), unsigned(g * (g + 1) / 2));
    val /= Rat(dpow);
    val.canonicalize();
    return val;
}

Rat disc_over_q2(const SymMatrix& B) {
    Rat Q = q_of_w0(B);
    if (Q == 0) throw std::invalid_argument("Q(B) = 0: divisibility witness unavailable here");
    Rat D = discriminant_rat(invariant_poly(B));
    Rat out = D / (Q * Q);
    out.canonicalize();
    return out;
}

bool check_relative_invariance(const SymMatrix& B, const std::vector<Int>& gamma) {
    const int n = B.n, g = B.genus();
    if (gamma.size() != size_t(n) * size_t(n)) throw std::invalid_argument("gamma shape mismatch");
    const bool odd = n % 2 == 1;
    auto gm = [&](int i, int j) -> const Int& { return gamma[size_t(i) * size_t(n) + size_t(j)]; };
    // block lower-triangular shape: zero above the (g | rest) split, and for
    // even n also zero in the (g+1)-th row beyond its diagonal block
    for (int i = 0; i < g; ++i)
        for (int j = g; j < n; ++j)
            if (gm(i, j) != 0) throw std::invalid_argument("gamma violates the G0 block shape");
    if (!odd) {
        for (int j = g + 1; j < n; ++j)
            if (gm(g, j) != 0) throw std::invalid_argument("gamma violates the G0 block shape");
    }
    // gamma must preserve A0
    SymMatrix A = a0(n);
    if (congruence_act(gamma, A) != A) throw std::invalid_argument("gamma is not A0-orthogonal");

    std::vector<Int> g1(size_t(g) * size_t(g));
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) g1[size_t(i) * size_t(g) + size_t(j)] = gm(i, j);
    Int det1 = det_int_matrix(g1, g);

    Rat expected = Rat(det1) * q_of_w0(B);
    if (!odd) {
        const int h = g + 1;
        std::vector<Int> g2(size_t(h) * size_t(h));
        for (int i = 0; i < h; ++i)
            for (int j = 0; j < h; ++j) g2[size_t(i) * size_t(h) + size_t(j)] = gm(g + 1 + i, g + 1 + j);
        Int det2 = det_int_matrix(g2, h);
        Int w1, w2;
        mpz_pow_ui(w1.get_mpz_t(), det1.get_mpz_t(), unsigned(g + 1));
        mpz_pow_ui(w2.get_mpz_t(), det2.get_mpz_t(), unsigned(g));
        expected = Rat(w1 * w2) * q_of_w0(B);
    }
    Rat actual = q_of_w0(congruence_act(gamma, B));
    return actual == expected;
}

}  // namespace discsieve
