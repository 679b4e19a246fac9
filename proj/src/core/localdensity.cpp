#include "localdensity.hpp"

#include <stdexcept>

#include "budget.hpp"
#include "modpoly.hpp"
#include "primes.hpp"

namespace discsieve {

Rat lambda_np(int n, uint64_t p) {
    if (n < 1) throw std::invalid_argument("lambda_n(p) requires n >= 1");
    if (!is_prime_u64(p)) throw std::invalid_argument("lambda_n(p) requires prime p");
    if (n == 1) return Rat(1);
    if (p == 2) return Rat(1, 2);
    Rat P(int_from_i64(int64_t(p)));
    if (n == 2) return 1 - 1 / (P * P);
    if (n == 3) return 1 - 2 / (P * P) + 1 / (P * P * P);
    // n >= 4: 1 - 1/p + (p-1)^2 (1 - (-p)^{2-n}) / (p^2 (p+1))
    Int pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), unsigned(n - 2));
    Rat neg_p_pow = Rat(1) / Rat(pk);  // |(-p)^{2-n}|
    if ((n - 2) % 2 == 1) neg_p_pow = -neg_p_pow;
    Rat out = 1 - 1 / P + (P - 1) * (P - 1) * (1 - neg_p_pow) / (P * P * (P + 1));
    out.canonicalize();
    return out;
}

Rat rho_np(int n, uint64_t p) {
    if (n < 2) throw std::invalid_argument("rho_n(p) requires n >= 2");
    if (!is_prime_u64(p)) throw std::invalid_argument("rho_n(p) requires prime p");
    Rat P(int_from_i64(int64_t(p)));
    return 1 - 1 / (P * P);
}

TruncatedProduct lambda_n_truncated(int n, uint64_t P) {
    TruncatedProduct out;
    out.prime_bound = P;
    if (P > (1ULL << 31)) throw budget_error("prime bound too large");
    for (uint32_t p : primes_up_to(uint32_t(P))) out.value *= lambda_np(n, p).get_d();
    out.tail_bound = 2.0 / double(P);
    return out;
}

TruncatedProduct rho_n_truncated(uint64_t P) {
    TruncatedProduct out;
    out.prime_bound = P;
    if (P > (1ULL << 31)) throw budget_error("prime bound too large");
    for (uint32_t p : primes_up_to(uint32_t(P))) out.value *= rho_np(2, p).get_d();
    out.tail_bound = 2.0 / double(P);
    return out;
}

namespace {

double limit_factor(uint64_t p) {
    double dp = double(p);
    return 1.0 - 1.0 / dp + (dp - 1) * (dp - 1) / (dp * dp * (dp + 1));
}

}  // namespace

TruncatedProduct lambda_limit_truncated(uint64_t P) {
    TruncatedProduct out;
    out.prime_bound = P;
    if (P < 2) throw std::invalid_argument("prime bound must be >= 2");
    if (P > (1ULL << 31)) throw budget_error("prime bound too large");
    out.value = 0.5;  // lambda_n(2) = 1/2 for every n >= 2
    for (uint32_t p : primes_up_to(uint32_t(P)))
        if (p > 2) out.value *= limit_factor(p);
    out.tail_bound = 2.0 / double(P);
    return out;
}

TruncatedProduct lambda_limit_truncated_paper_product(uint64_t P) {
    TruncatedProduct out;
    out.prime_bound = P;
    if (P < 2) throw std::invalid_argument("prime bound must be >= 2");
    if (P > (1ULL << 31)) throw budget_error("prime bound too large");
    for (uint32_t p : primes_up_to(uint32_t(P))) out.value *= limit_factor(p);
    out.tail_bound = 2.0 / double(P);
    return out;
}

bool dedekind_class_is_maximal(const ModPoly& f2, uint64_t p) {
    const uint64_t p2 = p * p;
    if (f2.q != p2) throw std::invalid_argument("expected a polynomial mod p^2");
    ModPoly fp{p, {}};
    fp.c.reserve(f2.c.size());
    for (uint64_t v : f2.c) fp.c.push_back(v % p);
    fp.normalize();

    auto decomp = sqf_decompose_mod_p(fp);
    ModPoly gstar{p, {1}};
    for (const auto& [factor, mult] : decomp) gstar = mod_mul(gstar, factor);
    ModPoly hstar, rem;
    mod_divmod(fp, gstar, hstar, rem);
    if (!rem.is_zero()) throw std::logic_error("radical does not divide f mod p");

    // T = (g* h* - f)/p, reduced mod p
    ModPoly g2{p2, gstar.c}, h2{p2, hstar.c};
    ModPoly diff = mod_sub(mod_mul(g2, h2), f2);
    ModPoly T{p, {}};
    T.c.resize(diff.c.size());
    for (size_t i = 0; i < diff.c.size(); ++i) {
        if (diff.c[i] % p != 0) throw std::logic_error("g* h* != f mod p");
        T.c[i] = (diff.c[i] / p) % p;
    }
    T.normalize();

    ModPoly g = mod_gcd(mod_gcd(T, gstar), hstar);
    return g.degree() == 0;
}

bool dedekind_is_p_maximal(const MonicPoly& f, uint64_t p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("Dedekind criterion requires prime p");
    if (p >= (1ULL << 31)) throw budget_error("Dedekind criterion: p too large at desk scale");
    if (discriminant(f) == 0)
        throw std::invalid_argument("Dedekind criterion on zero discriminant");
    return dedekind_class_is_maximal(reduce_mod(f, p * p), p);
}

namespace {

template <typename Fn>
Rat exhaustive_mod_p2(int n, uint64_t p, bool a1_zero, Fn&& predicate) {
    if (n < 1) throw std::invalid_argument("degree must be >= 1");
    if (!is_prime_u64(p)) throw std::invalid_argument("p must be prime");
    const uint64_t p2 = p * p;
    const int vary = a1_zero ? n - 1 : n;
    uint64_t total = 1;
    for (int i = 0; i < vary; ++i) {
        total *= p2;
        check_budget(total, "mod-p^2 sweep");
        if (total > 100'000'000ULL) throw budget_error("mod-p^2 sweep: p^{2n} beyond desk budget");
    }
    MonicPoly f;
    f.a.assign(size_t(n), Int(0));
    std::vector<uint64_t> digits(size_t(vary), 0);
    uint64_t hits = 0;
    for (uint64_t idx = 0;; ++idx) {
        for (int i = 0; i < vary; ++i)
            f.a[size_t(a1_zero ? i + 1 : i)] = int_from_i64(int64_t(digits[size_t(i)]));
        if (predicate(f)) ++hits;
        int j = 0;
        while (j < vary && ++digits[size_t(j)] == p2) digits[size_t(j++)] = 0;
        if (j == vary) break;
        (void)idx;
    }
    Rat out(int_from_i64(int64_t(hits)), int_from_i64(int64_t(total)));
    out.canonicalize();
    return out;
}

}  // namespace

Rat bruteforce_disc_density(int n, uint64_t p, bool a1_zero) {
    const Int P2 = int_from_i64(int64_t(p * p));
    return exhaustive_mod_p2(n, p, a1_zero,
                             [&](const MonicPoly& f) { return discriminant(f) % P2 != 0; });
}

Rat bruteforce_maximal_density(int n, uint64_t p) {
    return exhaustive_mod_p2(n, p, false, [&](const MonicPoly& f) {
        return dedekind_class_is_maximal(reduce_mod(f, p * p), p);
    });
}

}  // namespace discsieve
