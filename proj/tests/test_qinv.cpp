#include <doctest.h>

#include "core/qinv.hpp"
#include "testsupport.hpp"

using namespace discsieve;
namespace ts = discsieve::testsupport;

namespace {

QInput qin(int g, std::vector<int64_t> a, std::vector<int64_t> b) {
    QInput q;
    q.A = make_rat_mat(g, g + 1);
    q.B = make_rat_mat(g, g + 1);
    for (size_t i = 0; i < a.size(); ++i) q.A.v[i] = Rat(int_from_i64(a[i]));
    for (size_t i = 0; i < b.size(); ++i) q.B.v[i] = Rat(int_from_i64(b[i]));
    return q;
}

QInput random_qinput(int g, const CounterRng& rng, uint64_t& ctr, int64_t range = 9) {
    QInput q;
    q.A = make_rat_mat(g, g + 1);
    q.B = make_rat_mat(g, g + 1);
    for (auto& v : q.A.v) v = Rat(int_from_i64(rng.range(ctr++, -range, range)));
    for (auto& v : q.B.v) v = Rat(int_from_i64(rng.range(ctr++, -range, range)));
    return q;
}

// 2x2 integer matrix with det 1 from shear products
std::array<int64_t, 4> random_sl2(const CounterRng& rng, uint64_t& ctr) {
    std::array<int64_t, 4> m{1, 0, 0, 1};
    for (int t = 0; t < 4; ++t) {
        int64_t k = rng.range(ctr++, -3, 3);
        if (rng.below(ctr++, 2)) {  // [[1,k],[0,1]]
            m = {m[0], m[0] * k + m[1], m[2], m[2] * k + m[3]};
        } else {  // [[1,0],[k,1]]
            m = {m[0] + k * m[1], m[1], m[2] + k * m[3], m[3]};
        }
    }
    return m;
}

RatMat mat_apply(const ts::Mat& U, int rows, const RatMat& M, const ts::Mat& V, int cols) {
    // U (rows x rows) * M * V^T (cols x cols)
    RatMat out = make_rat_mat(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            Rat acc(0);
            for (int a = 0; a < rows; ++a)
                for (int b = 0; b < cols; ++b)
                    acc += Rat(U[size_t(i) * size_t(rows) + size_t(a)]) * M.at(a, b) *
                           Rat(V[size_t(j) * size_t(cols) + size_t(b)]);
            out.at(i, j) = acc;
        }
    return out;
}

}  // namespace

TEST_CASE("minor vector, g = 1 conventions") {
    QInput q = qin(1, {1, 0}, {0, 1});
    auto mv = minor_vector(q);
    REQUIRE(mv.size() == 2);
    // M = (-y, -x): coefficients ordered (x, y)
    CHECK(mv[0] == BinaryForm{Rat(0), Rat(-1)});
    CHECK(mv[1] == BinaryForm{Rat(-1), Rat(0)});
    CHECK(abs(q_invariant(q)) == 1);
    // |Q| = |a1 b2 - a2 b1|
    CounterRng rng{9, 0};
    uint64_t ctr = 0;
    for (int trial = 0; trial < 100; ++trial) {
        int64_t a1 = rng.range(ctr++, -9, 9), a2 = rng.range(ctr++, -9, 9);
        int64_t b1 = rng.range(ctr++, -9, 9), b2 = rng.range(ctr++, -9, 9);
        Rat Q = q_invariant(qin(1, {a1, a2}, {b1, b2}));
        CHECK(abs(Q) == abs(Rat(int_from_i64(a1 * b2 - a2 * b1))));
    }
    // A = B: coefficient matrix singular
    QInput same = qin(2, {1, 2, 3, 4, 5, 6}, {1, 2, 3, 4, 5, 6});
    CHECK(q_invariant(same) == 0);
}

TEST_CASE("homogeneity: degree g(g+1)/2 in B, g(g+1) jointly") {
    CounterRng rng{21, 1};
    uint64_t ctr = 0;
    for (int g : {1, 2, 3}) {
        for (const Rat& lam : {Rat(2), Rat(-3), Rat(1, 2), Rat(5, 3)}) {
            QInput q = random_qinput(g, rng, ctr);
            Rat Q0 = q_invariant(q);
            QInput qb = q, qj = q;
            for (auto& v : qb.B.v) v *= lam;
            for (auto& v : qj.A.v) v *= lam;
            for (auto& v : qj.B.v) v *= lam;
            Rat lb(1), lj(1);
            for (int k = 0; k < g * (g + 1) / 2; ++k) lb *= lam;
            for (int k = 0; k < g * (g + 1); ++k) lj *= lam;
            CHECK(q_invariant(qb) == lb * Q0);
            CHECK(q_invariant(qj) == lj * Q0);
        }
    }
}

TEST_CASE("SL2 pencil invariance and H_g invariance") {
    CounterRng rng{33, 2};
    uint64_t ctr = 0;
    for (int g : {1, 2, 3}) {
        for (int trial = 0; trial < 25; ++trial) {
            QInput q = random_qinput(g, rng, ctr);
            Rat Q0 = q_invariant(q);
            // (A, B) -> (rA + sB, tA + uB), ru - st = 1
            auto m = random_sl2(rng, ctr);
            QInput qs = q;
            for (size_t i = 0; i < q.A.v.size(); ++i) {
                qs.A.v[i] = Rat(int_from_i64(m[0])) * q.A.v[i] + Rat(int_from_i64(m[1])) * q.B.v[i];
                qs.B.v[i] = Rat(int_from_i64(m[2])) * q.A.v[i] + Rat(int_from_i64(m[3])) * q.B.v[i];
            }
            CHECK(q_invariant(qs) == Q0);
            // (A, B) -> (U A V^T, U B V^T), det U = det V = 1
            auto [U, Uinv] = ts::random_unimodular(g, rng, ctr);
            auto [V, Vinv] = ts::random_unimodular(g + 1, rng, ctr);
            if (det_int_matrix(U, g) == -1)
                for (int j = 0; j < g; ++j) U[size_t(j)] = -U[size_t(j)];
            if (det_int_matrix(V, g + 1) == -1)
                for (int j = 0; j <= g; ++j) V[size_t(j)] = -V[size_t(j)];
            QInput qh;
            qh.A = mat_apply(U, g, q.A, V, g + 1);
            qh.B = mat_apply(U, g, q.B, V, g + 1);
            CHECK(q_invariant(qh) == Q0);
        }
    }
}

TEST_CASE("Q on W0: sigma images, A0 itself, scaling") {
    WeakNormalForm nf;
    nf.ell = 0;
    nf.m = 5;
    nf.c = {1, 1, 1};
    CHECK(abs(q_of_w0(sigma_m(nf))) == 5);
    for (int n : {3, 4, 5, 6}) CHECK(q_of_w0(a0(n)) == 0);  // A = B case

    CounterRng rng{41, 3};
    uint64_t ctr = 0;
    for (int n : {3, 4, 5, 6}) {
        SymMatrix B = ts::random_w0(n, rng, ctr, 9);
        SymMatrix B2 = B;
        for (auto& v : B2.s) v *= 2;
        int g = B.genus();
        Rat scale(1);
        for (int k = 0; k < g * (g + 1) / 2; ++k) scale *= 2;
        CHECK(q_of_w0(B2) == scale * q_of_w0(B));
    }
    CHECK_THROWS_AS(q_of_w0(make_sym(2, 1)), std::invalid_argument);  // n < 3
}

TEST_CASE("|Q| of sigma images equals m across degrees") {
    CounterRng rng{43, 4};
    uint64_t ctr = 0;
    for (int trial = 0; trial < 120; ++trial) {
        int n = 3 + int(rng.below(ctr++, 4));
        WeakNormalForm nf = ts::random_normal_form(n, rng, ctr);
        CHECK(abs(q_of_w0(sigma_m(nf))) == Rat(nf.m));
    }
}

TEST_CASE("disc / Q^2 is integral on integer W0 points") {
    CounterRng rng{51, 5};
    uint64_t ctr = 0;
    int done = 0;
    while (done < 120) {
        int n = 3 + int(rng.below(ctr++, 4));
        SymMatrix B = ts::random_w0(n, rng, ctr);
        if (q_of_w0(B) == 0) continue;
        Rat r = disc_over_q2(B);
        CHECK(rat_is_integer(r));
        ++done;
    }
    // sigma images: disc(f)/m^2 with m^2 | disc(f)
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + int(rng.below(ctr++, 4));
        WeakNormalForm nf = ts::random_normal_form(n, rng, ctr);
        SymMatrix B = sigma_m(nf);
        if (q_of_w0(B) == 0) continue;  // m >= 1 so this cannot happen; kept for clarity
        Rat r = disc_over_q2(B);
        Int d = discriminant(nf.to_poly_original());
        CHECK(r == Rat(d) / Rat(nf.m * nf.m));
        CHECK(rat_is_integer(r));
    }
    // disc = 0 with Q != 0 gives 0
    WeakNormalForm z;
    z.ell = 0;
    z.m = 1;
    z.c = {0, 0, 0};
    CHECK(disc_over_q2(sigma_m(z)) == 0);
    // Q = 0 rejected
    CHECK_THROWS_AS(disc_over_q2(make_sym(3, 1)), std::invalid_argument);
}

TEST_CASE("relative invariance under integer G0 elements") {
    CounterRng rng{61, 6};
    uint64_t ctr = 0;
    for (int n : {3, 4, 5, 6}) {
        WeakNormalForm nf = ts::random_normal_form(n, rng, ctr, 30, 9);
        SymMatrix B = sigma_m(nf);
        CHECK(check_relative_invariance(B, ts::identity_mat(n)));
        for (int trial = 0; trial < 20; ++trial) {
            ts::Mat gamma = ts::random_g0(n, rng, ctr);
            CHECK(check_relative_invariance(B, gamma));
            SymMatrix W = ts::random_w0(n, rng, ctr, 7);
            CHECK(check_relative_invariance(W, gamma));
        }
        // shape violation: nonzero upper-right block
        ts::Mat bad = ts::identity_mat(n);
        bad[size_t(0) * size_t(n) + size_t(n - 1)] = 1;
        CHECK_THROWS_AS(check_relative_invariance(B, bad), std::invalid_argument);
    }
}

TEST_CASE("rational det-2 scaling of the W0 pair (weight formula)") {
    // gamma_1 = diag(2, 1, ..., 1) acting on the top pair with the compensating
    // gamma_2 = J gamma_1^{-T} J: Q scales by det(gamma_1)^{g+1} det(gamma_2)^g
    // = 2 (the odd-case weight with det(gamma_1) = 2, over Q rather than Z).
    CounterRng rng{71, 7};
    uint64_t ctr = 0;
    for (int g : {1, 2, 3}) {
        QInput q = random_qinput(g, rng, ctr);
        Rat Q0 = q_invariant(q);
        QInput qs = q;
        for (int j = 0; j <= g; ++j) {
            qs.A.at(0, j) *= 2;  // gamma_1 row scaling
            qs.B.at(0, j) *= 2;
        }
        for (int i = 0; i < g; ++i) {
            qs.A.at(i, g) /= 2;  // gamma_2^T column scaling (last column, J-reversed)
            qs.B.at(i, g) /= 2;
        }
        // det(gamma_1) = 2, det(gamma_2) = 1/2: weight 2^{g+1} 2^{-g} = 2
        CHECK(q_invariant(qs) == Rat(2) * Q0);
    }
}
