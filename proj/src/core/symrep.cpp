#include "symrep.hpp"

#include <stdexcept>

#include "exactdet.hpp"

namespace discsieve {

bool SymMatrix::is_symmetric() const {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

SymMatrix make_sym(int n, int d) {
    if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
    if (d != 1 && d != 2 && d != 4) throw std::invalid_argument("denominator must be 1, 2 or 4");
    SymMatrix B;
    B.n = n;
    B.d = d;
    B.s.assign(size_t(n) * size_t(n), Int(0));
    return B;
}

SymMatrix a0(int n) {
    SymMatrix A = make_sym(n, 1);
    for (int i = 0; i < n; ++i) A.at(i, n - 1 - i) = 1;
    return A;
}

Int det_int_matrix(const std::vector<Int>& m, int n) {
    std::vector<std::vector<Int>> rows(size_t(n), std::vector<Int>(size_t(n), Int(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[size_t(i)][size_t(j)] = m[size_t(i) * size_t(n) + size_t(j)];
    return bareiss_det(std::move(rows));
}

std::vector<Int> mat_mul(const std::vector<Int>& a, const std::vector<Int>& b, int n) {
    std::vector<Int> out(size_t(n) * size_t(n), Int(0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Int& aik = a[size_t(i) * size_t(n) + size_t(k)];
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j)
                out[size_t(i) * size_t(n) + size_t(j)] += aik * b[size_t(k) * size_t(n) + size_t(j)];
        }
    return out;
}

std::vector<Int> mat_transpose(const std::vector<Int>& a, int n) {
    std::vector<Int> out(size_t(n) * size_t(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[size_t(j) * size_t(n) + size_t(i)] = a[size_t(i) * size_t(n) + size_t(j)];
    return out;
}

RatPoly invariant_poly(const SymMatrix& B) {
    const int n = B.n;
    // f(t) = sign * det(A0 d t - S) / d^n at t = 0..n, then interpolate
    std::vector<Rat> vals(size_t(n) + 1);
    Int dn;
    mpz_ui_pow_ui(dn.get_mpz_t(), unsigned(B.d), unsigned(n));
    const bool neg = (size_t(n) * size_t(n - 1) / 2) % 2 == 1;
    for (int t = 0; t <= n; ++t) {
        std::vector<Int> m(B.s);
        for (auto& v : m) v = -v;
        for (int i = 0; i < n; ++i) m[size_t(i) * size_t(n) + size_t(n - 1 - i)] += Int(B.d) * t;
        Int det = det_int_matrix(m, n);
        if (neg) det = -det;
        vals[size_t(t)] = Rat(det) / Rat(dn);
        vals[size_t(t)].canonicalize();
    }
    // Lagrange interpolation on points 0..n
    RatPoly out(size_t(n) + 1, Rat(0));
    for (int i = 0; i <= n; ++i) {
        RatPoly basis{Rat(1)};
        Rat denom(1);
        for (int j = 0; j <= n; ++j) {
            if (j == i) continue;
            // basis *= (x - j)
            RatPoly next(basis.size() + 1, Rat(0));
            for (size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= Rat(j) * basis[k];
            }
            basis = std::move(next);
            denom *= Rat(i - j);
        }
        Rat w = vals[size_t(i)] / denom;
        for (size_t k = 0; k < basis.size(); ++k) out[k] += w * basis[k];
    }
    for (auto& c : out) c.canonicalize();
    if (out[size_t(n)] != 1) throw std::logic_error("invariant polynomial is not monic");
    return out;
}

std::optional<MonicPoly> rat_poly_to_monic(const RatPoly& f) {
    const int n = int(f.size()) - 1;
    if (n < 1 || f[size_t(n)] != 1) return std::nullopt;
    MonicPoly out;
    out.a.resize(size_t(n));
    for (int i = 1; i <= n; ++i) {
        Rat c = f[size_t(n - i)];
        c.canonicalize();
        if (c.get_den() != 1) return std::nullopt;
        out.a[size_t(i - 1)] = c.get_num();
    }
    return out;
}

bool in_w0(const SymMatrix& B) {
    const int g = B.genus();
    const int cols = B.n % 2 ? g : g + 1;
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < cols; ++j)
            if (B.at(i, j) != 0 || B.at(j, i) != 0) return false;
    return true;
}

bool in_w00(const SymMatrix& B) {
    // 1-indexed condition i+j < n; 0-indexed i+j <= n-3
    for (int i = 0; i < B.n; ++i)
        for (int j = 0; i + j + 2 < B.n && j < B.n; ++j)
            if (B.at(i, j) != 0) return false;
    return true;
}

SymMatrix congruence_act(const std::vector<Int>& gamma, const SymMatrix& B) {
    const int n = B.n;
    if (gamma.size() != size_t(n) * size_t(n)) throw std::invalid_argument("gamma shape mismatch");
    SymMatrix out = make_sym(n, B.d);
    out.s = mat_mul(mat_mul(gamma, B.s, n), mat_transpose(gamma, n), n);
    return out;
}

SymMatrix sigma_m(const WeakNormalForm& nf) {
    const int n = nf.degree();
    if (n < 3) throw std::invalid_argument("sigma_m requires degree >= 3 (g >= 1)");
    const bool odd = n % 2 == 1;
    const int g = odd ? (n - 1) / 2 : (n - 2) / 2;
    const int d = odd ? 2 : 4;
    SymMatrix B = make_sym(n, d);
    const Int& m = nf.m;
    const std::vector<Int>& c = nf.c;  // c[i-1] = c_i
    auto set = [&](int i, int j, const Int& v) {  // 1-indexed symmetric store of d*B
        B.at(i - 1, j - 1) = v;
        B.at(j - 1, i - 1) = v;
    };
    const Int D{long(d)};
    // anti-diagonal i+j = n: m at (1,n-1), 1 elsewhere
    set(1, n - 1, D * m);
    for (int i = 2; i <= n - 2; ++i)
        if (i <= n - i) set(i, n - i, D);
    if (odd) {
        // bottom (g+1)x(g+1) block: tridiagonal -c1,-c3,...,-cn / -c2/2,...
        for (int t = 1; t <= g + 1; ++t) set(g + t, g + t, -D * c[size_t(2 * t - 2)]);
        for (int t = 1; t <= g; ++t) set(g + t, g + t + 1, -(D / 2) * c[size_t(2 * t - 1)]);
    } else {
        set(g + 1, g + 2, -(D / 2) * c[0]);
        set(g + 2, g + 2, c[0] * c[0] - D * c[1]);  // d=4: 4*(c1^2/4 - c2)
        for (int t = 2; t <= g + 1; ++t) set(g + 1 + t, g + 1 + t, -D * c[size_t(2 * t - 1)]);
        for (int t = 1; t <= g; ++t) set(g + 1 + t, g + 2 + t, -(D / 2) * c[size_t(2 * t)]);
    }
    // + ell * A0
    for (int i = 1; i <= n; ++i) B.at(i - 1, n - i) += D * nf.ell;
    return B;
}

}  // namespace discsieve
