#include <doctest.h>

#include <cmath>

#include "core/boxenum.hpp"
#include "core/poly.hpp"
#include "core/primes.hpp"
#include "core/rng.hpp"

using namespace discsieve;

namespace {

MonicPoly P(const std::string& s) { return parse_monic(s); }

// independent oracle: cofactor-expansion determinant, no elimination
Int cofactor_det(const std::vector<std::vector<Int>>& m) {
    const size_t n = m.size();
    if (n == 1) return m[0][0];
    Int acc(0);
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<Int>> sub;
        for (size_t i = 1; i < n; ++i) {
            std::vector<Int> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            sub.push_back(std::move(row));
        }
        Int term = m[0][j] * cofactor_det(sub);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

Int sylvester_resultant_oracle(const IntPoly& f, const IntPoly& g) {
    const int nf = deg(f), ng = deg(g);
    const size_t n = size_t(nf + ng);
    std::vector<std::vector<Int>> s(n, std::vector<Int>(n, Int(0)));
    for (int r = 0; r < ng; ++r)
        for (int j = 0; j <= nf; ++j) s[size_t(r)][size_t(r + j)] = f[size_t(nf - j)];
    for (int r = 0; r < nf; ++r)
        for (int j = 0; j <= ng; ++j) s[size_t(ng + r)][size_t(r + j)] = g[size_t(ng - j)];
    return cofactor_det(s);
}

}  // namespace

TEST_CASE("parse and format") {
    MonicPoly f = P("x^3 - 1*x^2 + 3*x + 9");
    CHECK(f.degree() == 3);
    CHECK(f.coeff(1) == -1);
    CHECK(f.coeff(2) == 3);
    CHECK(f.coeff(3) == 9);
    CHECK(format_monic(f) == "x^3 - 1*x^2 + 3*x + 9");
    CHECK(parse_monic("[-1,3,9]") == f);
    CHECK(monic_coeff_json(f) == "[-1,3,9]");
    CHECK(parse_monic("x^2-9") == P("[0,-9]"));
    CHECK(parse_monic("x^2 + 0*x - 9") == P("[0,-9]"));
    CHECK(format_monic(P("[0,-3]")) == "x^2 - 3");
    CHECK(parse_monic("x") == P("[0]"));
    CHECK_THROWS_AS(parse_monic("2*x^2+1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_monic(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_monic("7"), std::invalid_argument);
    CHECK_THROWS_AS(parse_monic("[]"), std::invalid_argument);
}

TEST_CASE("height box membership is exact") {
    CHECK_FALSE(height_less_than(P("x^2+3*x+2"), 2));  // |3| >= 2
    CHECK(height_less_than(P("x^2+3*x+2"), 4));        // 3 < 4, 2 < 16
    CHECK(box_count(2, 2) == 21);                      // (2*2-1)(2*4-1)
    CHECK(box_count(3, 2) == 315);
    CHECK(box_count(2, 10) == 3781);
    // boundary: a_2 = X^2 - 1 is inside, X^2 is not
    CHECK(height_less_than(P("[0,8]"), 3));
    CHECK_FALSE(height_less_than(P("[0,9]"), 3));
}

TEST_CASE("resultant: fixed values") {
    CHECK(resultant({-1, 0, 1}, {0, 2}) == -4);  // Res(x^2-1, 2x)
    for (const char* s : {"x^2+3*x+2", "x^3-3", "x^5 - 2*x + 1"}) {
        CHECK(resultant(P(s).to_int_poly(), {1}) == 1);  // Res(f, 1)
    }
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b) {
            CHECK(resultant({-a, 1}, {-b, 1}) == b - a);  // Res(x-a, x-b) = b-a
        }
    CHECK_THROWS_AS(resultant({}, {1, 1}), std::invalid_argument);
}

TEST_CASE("resultant equals cofactor-expansion Sylvester oracle, exhaustive n<=4") {
    for (int n = 2; n <= 4; ++n) {
        std::vector<int64_t> a(size_t(n), -3);
        for (;;) {
            MonicPoly f;
            for (int64_t v : a) f.a.push_back(int_from_i64(v));
            IntPoly fi = f.to_int_poly();
            IntPoly fd = derivative(fi);
            CHECK(resultant(fi, fd) == sylvester_resultant_oracle(fi, fd));
            int j = 0;
            while (j < n && ++a[size_t(j)] > 3) a[size_t(j++)] = -3;
            if (j == n) break;
        }
    }
}

TEST_CASE("discriminant: fixed values and conventions") {
    CHECK(discriminant(P("x^2+3*x+2")) == 1);
    CHECK(discriminant(P("x^3-x")) == 4);
    CHECK(discriminant(P("x^3-3")) == -243);
    CHECK(disc_resultant_raw(P("x^3-3")) == 243);  // Res(f, f') without the sign
    CHECK(discriminant(P("x")) == 1);              // degree 1 by convention
    // i64 closed forms agree with the Bareiss path
    CounterRng rng{17, 0};
    uint64_t ctr = 0;
    for (int trial = 0; trial < 400; ++trial) {
        int n = 2 + int(rng.below(ctr++, 2));
        MonicPoly f;
        for (int i = 0; i < n; ++i) f.a.push_back(int_from_i64(rng.range(ctr++, -50, 50)));
        Int raw = disc_resultant_raw(f);
        Int classical = (n * (n - 1) / 2) % 2 ? Int(-raw) : raw;
        CHECK(discriminant(f) == classical);
    }
}

TEST_CASE("shift: fixed values, disc invariance, involution") {
    CHECK(shift(P("[0,0]"), 1) == P("x^2+2*x+1"));
    CHECK(shift(P("x^3-3"), 0) == P("x^3-3"));
    CHECK(discriminant(shift(P("x^3-3"), 7)) == -243);
    CounterRng rng{3, 1};
    uint64_t ctr = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + int(rng.below(ctr++, 4));
        MonicPoly f;
        for (int i = 0; i < n; ++i) f.a.push_back(int_from_i64(rng.range(ctr++, -9, 9)));
        Int ell = int_from_i64(rng.range(ctr++, -6, 6));
        CHECK(discriminant(shift(f, ell)) == discriminant(f));
        CHECK(shift(shift(f, ell), -ell) == f);
    }
}

TEST_CASE("weighted scale") {
    CHECK(weighted_scale(P("x^2+x+1"), 2) == P("x^2+2*x+4"));
    CHECK(weighted_scale(P("x^3-3"), 1) == P("x^3-3"));
    // H(rho f) = rho H(f): box membership transported exactly
    CounterRng rng{5, 2};
    uint64_t ctr = 0;
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + int(rng.below(ctr++, 3));
        MonicPoly f;
        for (int i = 0; i < n; ++i) f.a.push_back(int_from_i64(rng.range(ctr++, -30, 30)));
        Int X = int_from_i64(rng.range(ctr++, 2, 8));
        Int rho = int_from_i64(rng.range(ctr++, 1, 5));
        CHECK(height_less_than(f, X) == height_less_than(weighted_scale(f, rho), rho * X));
    }
    // disc scales by rho^{n(n-1)}
    MonicPoly f = P("x^3+2*x^2-5*x+7");
    Int d = discriminant(f);
    CHECK(discriminant(weighted_scale(f, 3)) == d * Int(729));  // 3^6
    CHECK_THROWS_AS(weighted_scale(f, 0), std::invalid_argument);
}

TEST_CASE("disc = 0 iff gcd(f, f') nonconstant over Q") {
    CHECK(has_repeated_factor_over_Q(P("[0,0]")));  // x^2
    CHECK_FALSE(has_repeated_factor_over_Q(P("x^2-2")));
    CounterRng rng{11, 3};
    uint64_t ctr = 0;
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + int(rng.below(ctr++, 3));
        MonicPoly f;
        for (int i = 0; i < n; ++i) f.a.push_back(int_from_i64(rng.range(ctr++, -8, 8)));
        CHECK((discriminant(f) == 0) == has_repeated_factor_over_Q(f));
        // squared factor forces both
        IntPoly sq = mul(f.to_int_poly(), f.to_int_poly());
        MonicPoly g = MonicPoly::from_int_poly(mul(sq, {1, 1}));
        CHECK(discriminant(g) == 0);
        CHECK(has_repeated_factor_over_Q(g));
    }
}

TEST_CASE("disc mod p^2 depends only on f mod p^2") {
    CounterRng rng{23, 4};
    uint64_t ctr = 0;
    for (uint64_t p : {2ULL, 3ULL, 5ULL}) {
        const Int p2 = int_from_i64(int64_t(p * p));
        for (int trial = 0; trial < 60; ++trial) {
            int n = 2 + int(rng.below(ctr++, 4));
            MonicPoly f, g;
            for (int i = 0; i < n; ++i) {
                Int c = int_from_i64(rng.range(ctr++, -20, 20));
                f.a.push_back(c);
                g.a.push_back(c + p2 * int_from_i64(rng.range(ctr++, -3, 3)));
            }
            Int df = discriminant(f) % p2, dg = discriminant(g) % p2;
            if (df < 0) df += p2;
            if (dg < 0) dg += p2;
            CHECK(df == dg);
        }
    }
}

TEST_CASE("integer squarefree test: fixed values and naive-oracle sweep") {
    CHECK_FALSE(is_squarefree_int(36));
    CHECK_FALSE(is_squarefree_int(-243));
    CHECK(is_squarefree_int(1));
    CHECK_THROWS_AS(is_squarefree_int(0), std::invalid_argument);
    for (int64_t d = 1; d <= 20000; ++d) {
        CHECK(is_squarefree_i64(d) == is_squarefree_naive_i64(d));
        CHECK(is_squarefree_i64(-d) == is_squarefree_naive_i64(d));
    }
    CHECK(square_divisor_primes_i64(36 * 25) == std::vector<uint64_t>{2, 3, 5});
    CHECK(square_divisor_primes_i64(2 * 3 * 5 * 7) == std::vector<uint64_t>{});
    // cofactor = p^2 with p above the cube root
    CHECK_FALSE(is_squarefree_i64(101 * 101));
    CHECK(square_divisor_primes_i64(101 * 101 * 3) == std::vector<uint64_t>{101});
    CHECK(is_squarefree_i64(101 * 103));
}

TEST_CASE("rational reducibility") {
    CHECK(is_reducible_over_Q(P("x^2+3*x+2")));
    CHECK_FALSE(is_reducible_over_Q(P("x^2-2")));
    CHECK(is_reducible_over_Q(P("[0,0,0,4]")));        // x^4+4 = (x^2-2x+2)(x^2+2x+2)
    CHECK_FALSE(is_reducible_over_Q(P("[0,0,0,1]")));  // x^4+1
    CHECK(is_reducible_over_Q(P("[0,0,0,-4]")));       // (x^2-2)(x^2+2)
    CHECK(is_reducible_over_Q(P("[0,2,0]")));          // x(x^2+2)
    CHECK_FALSE(is_reducible_over_Q(P("[0,0,-1,-1]")));      // x^4-x-1 (Selmer family)
    CHECK(is_reducible_over_Q(P("[0,0,-5,0,0,6]")));         // (x^3-2)(x^3-3)
    CHECK_FALSE(is_reducible_over_Q(P("[0,0,0,0,-1,-1]")));  // x^6-x-1
    // quadratic-by-quadratic products always detected
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int c = -2; c <= 2; ++c)
                for (int d = -2; d <= 2; ++d) {
                    IntPoly prod = mul({b, a, 1}, {d, c, 1});
                    CHECK(is_reducible_over_Q(MonicPoly::from_int_poly(prod)));
                }
}

TEST_CASE("fujiwara bound basics") {
    CHECK(fujiwara_bound(P("x^2-2")) == doctest::Approx(2.0));
    CHECK(fujiwara_bound(P("[0,0,0]")) == 0.0);  // x^3
    CHECK(fujiwara_bound(P("[0,-1]")) == doctest::Approx(2.0 * std::sqrt(0.5)));
}

TEST_CASE("exact polynomial division") {
    IntPoly f = mul({2, 1}, {-3, 0, 1});  // (x+2)(x^2-3)
    auto q = divide_exact(f, {2, 1});
    REQUIRE(q.has_value());
    CHECK(*q == IntPoly{-3, 0, 1});
    CHECK_FALSE(divide_exact(f, {1, 1}).has_value());
}
