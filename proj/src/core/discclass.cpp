#include "discclass.hpp"

#include <stdexcept>

#include "budget.hpp"
#include "modpoly.hpp"
#include "primes.hpp"

namespace discsieve {

const char* to_string(P2Tag t) {
    switch (t) {
        case P2Tag::NOT_DIVISIBLE: return "NOT_DIVISIBLE";
        case P2Tag::WEAK: return "WEAK";
        case P2Tag::STRONG: return "STRONG";
        case P2Tag::ZERO_DISC: return "ZERO_DISC";
    }
    return "?";
}

P2Class classify_p2(const MonicPoly& f, uint64_t p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("classify_p2: p must be prime");
    Int d = discriminant(f);
    if (d == 0) return {P2Tag::ZERO_DISC, std::nullopt};
    Int p2 = int_from_i64(int64_t(p)) * int_from_i64(int64_t(p));
    if (d % p2 != 0) return {P2Tag::NOT_DIVISIBLE, std::nullopt};

    ModPoly fp = reduce_mod(f, p);
    ModPoly g = mod_gcd(fp, mod_derivative(fp));
    if (g.degree() == 1) {
        // g = x - r: the unique multiple root, a simple double root in F_p
        uint64_t r = g.c[0] == 0 ? 0 : p - g.c[0];
        return {P2Tag::WEAK, r};
    }
    return {P2Tag::STRONG, std::nullopt};
}

bool strongly_divides_oracle(const MonicPoly& f, uint64_t p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("oracle: p must be prime");
    const int n = f.degree();
    uint64_t cases = 1;
    for (int i = 0; i < n; ++i) {
        cases *= p;
        check_budget(cases, "strongly_divides_oracle");
        if (cases > 10'000'000ULL) throw budget_error("strongly_divides_oracle: p^n too large");
    }
    const Int P = int_from_i64(int64_t(p));
    const Int P2 = P * P;
    MonicPoly g = f;
    std::vector<uint64_t> digits(size_t(n), 0);
    for (uint64_t idx = 0;; ++idx) {
        for (int i = 0; i < n; ++i)
            g.a[size_t(i)] = f.a[size_t(i)] + P * int_from_i64(int64_t(digits[size_t(i)]));
        if (discriminant(g) % P2 != 0) return false;
        // odometer over the residue digits
        int j = 0;
        while (j < n && ++digits[size_t(j)] == p) digits[size_t(j++)] = 0;
        if (j == n) break;
        (void)idx;
    }
    return true;
}

MonicPoly WeakNormalForm::to_poly_shifted() const {
    const int n = degree();
    MonicPoly f;
    f.a = c;
    f.a[size_t(n - 2)] *= m;
    f.a[size_t(n - 1)] *= m * m;
    return f;
}

MonicPoly WeakNormalForm::to_poly_original() const { return shift(to_poly_shifted(), -ell); }

std::optional<WeakNormalForm> weak_normal_form(const MonicPoly& f, const Int& m) {
    if (m <= 0) throw std::invalid_argument("weak_normal_form: m must be positive");
    if (!is_squarefree_int(m)) throw std::invalid_argument("weak_normal_form: m must be squarefree");
    const int n = f.degree();
    if (n < 2) throw std::invalid_argument("weak_normal_form: degree must be >= 2");

    // factor m (squarefree, desk scale)
    std::vector<uint64_t> ps;
    {
        Int r = m;
        for (uint64_t p = 2; int_from_i64(int64_t(p * p)) <= r; ++p) {
            if (mpz_divisible_ui_p(r.get_mpz_t(), p)) {
                ps.push_back(p);
                mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), p);
            }
        }
        if (r > 1) {
            if (!r.fits_ulong_p()) throw std::invalid_argument("weak_normal_form: m too large");
            ps.push_back(r.get_ui());
        }
    }

    // CRT the per-prime double roots into ell in [0, m)
    Int ell(0), mod(1);
    for (uint64_t p : ps) {
        P2Class cls = classify_p2(f, p);
        if (cls.tag != P2Tag::WEAK) return std::nullopt;
        Int P = int_from_i64(int64_t(p));
        Int r = int_from_i64(int64_t(*cls.witness));
        // ell' = ell + mod * t  with  t = (r - ell)/mod mod p
        Int minv;
        if (mpz_invert(minv.get_mpz_t(), mod.get_mpz_t(), P.get_mpz_t()) == 0)
            throw std::logic_error("CRT moduli not coprime");
        Int t = ((r - ell) * minv) % P;
        if (t < 0) t += P;
        ell += mod * t;
        mod *= P;
    }

    MonicPoly sh = shift(f, ell);
    WeakNormalForm nf;
    nf.ell = ell;
    nf.m = m;
    nf.c = sh.a;
    const Int m2 = m * m;
    if (nf.c[size_t(n - 2)] % m != 0 || nf.c[size_t(n - 1)] % m2 != 0)
        throw std::logic_error("weak normal form shape violated (double root witness wrong)");
    nf.c[size_t(n - 2)] /= m;
    nf.c[size_t(n - 1)] /= m2;
    return nf;
}

}  // namespace discsieve
