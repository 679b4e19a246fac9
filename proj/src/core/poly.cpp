#include "poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

#include "budget.hpp"
#include "exactdet.hpp"

namespace discsieve {

int deg(const IntPoly& f) { return int(f.size()) - 1; }

void normalize(IntPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

IntPoly derivative(const IntPoly& f) {
    IntPoly d;
    for (size_t i = 1; i < f.size(); ++i) d.push_back(Int(long(i)) * f[i]);
    normalize(d);
    return d;
}

Int eval(const IntPoly& f, const Int& x) {
    Int r(0);
    for (size_t i = f.size(); i-- > 0;) r = r * x + f[i];
    return r;
}

IntPoly mul(const IntPoly& f, const IntPoly& g) {
    if (f.empty() || g.empty()) return {};
    IntPoly out(f.size() + g.size() - 1, Int(0));
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
    normalize(out);
    return out;
}

IntPoly sub(const IntPoly& f, const IntPoly& g) {
    IntPoly out = f;
    if (g.size() > out.size()) out.resize(g.size(), Int(0));
    for (size_t i = 0; i < g.size(); ++i) out[i] -= g[i];
    normalize(out);
    return out;
}

IntPoly MonicPoly::to_int_poly() const {
    const int n = degree();
    IntPoly f(size_t(n) + 1);
    f[size_t(n)] = 1;
    for (int i = 1; i <= n; ++i) f[size_t(n - i)] = a[size_t(i - 1)];
    return f;
}

MonicPoly MonicPoly::from_int_poly(const IntPoly& f) {
    if (f.empty() || f.back() != 1) throw std::invalid_argument("polynomial is not monic");
    const int n = deg(f);
    MonicPoly m;
    m.a.resize(size_t(n));
    for (int i = 1; i <= n; ++i) m.a[size_t(i - 1)] = f[size_t(n - i)];
    return m;
}

namespace {

void skip_ws(const std::string& s, size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

struct Term {
    Int coeff;
    int exp;
};

}  // namespace

MonicPoly parse_monic(const std::string& text) {
    size_t i = 0;
    skip_ws(text, i);
    if (i < text.size() && text[i] == '[') {
        // JSON array [a1,...,an]
        ++i;
        std::vector<Int> coeffs;
        skip_ws(text, i);
        if (i < text.size() && text[i] == ']') {
            throw std::invalid_argument("empty coefficient array (degree must be >= 1)");
        }
        for (;;) {
            skip_ws(text, i);
            std::string num;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) num += text[i++];
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) num += text[i++];
            if (num.empty() || (num.size() == 1 && !std::isdigit(static_cast<unsigned char>(num[0]))))
                throw std::invalid_argument("bad integer in coefficient array");
            coeffs.emplace_back(num);
            skip_ws(text, i);
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == ']') {
                ++i;
                break;
            }
            throw std::invalid_argument("expected ',' or ']' in coefficient array");
        }
        skip_ws(text, i);
        if (i != text.size()) throw std::invalid_argument("trailing characters after ']'");
        MonicPoly f;
        f.a = std::move(coeffs);
        return f;
    }

    std::vector<Term> terms;
    bool first = true;
    while (i < text.size()) {
        skip_ws(text, i);
        if (i >= text.size()) break;
        // allow '*' between coefficient and x: handled by re-scanning
        Term t;
        size_t save = i;
        // parse coefficient and optional *x^e
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            if (first) {
                sign = text[i] == '-' ? -1 : 1;
                ++i;
            } else {
                sign = text[i] == '-' ? -1 : 1;
                ++i;
            }
            skip_ws(text, i);
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' between terms");
        }
        std::string digits;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
        skip_ws(text, i);
        if (i < text.size() && text[i] == '*') {
            ++i;
            skip_ws(text, i);
        }
        bool has_x = false;
        int exp = 0;
        if (i < text.size() && (text[i] == 'x' || text[i] == 'X')) {
            has_x = true;
            exp = 1;
            ++i;
            if (i < text.size() && text[i] == '^') {
                ++i;
                std::string e;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) e += text[i++];
                if (e.empty()) throw std::invalid_argument("missing exponent after '^'");
                exp = std::stoi(e);
            }
        }
        if (digits.empty() && !has_x) throw std::invalid_argument("empty term at position " + std::to_string(save));
        t.coeff = digits.empty() ? Int(1) : Int(digits);
        t.coeff *= sign;
        t.exp = exp;
        terms.push_back(t);
        first = false;
        skip_ws(text, i);
    }
    if (terms.empty()) throw std::invalid_argument("empty polynomial text");
    int n = 0;
    for (auto& t : terms) n = std::max(n, t.exp);
    if (n < 1) throw std::invalid_argument("degree must be >= 1");
    IntPoly f(size_t(n) + 1, Int(0));
    for (auto& t : terms) f[size_t(t.exp)] += t.coeff;
    if (f[size_t(n)] != 1) throw std::invalid_argument("polynomial is not monic");
    return MonicPoly::from_int_poly(f);
}

std::string format_monic(const MonicPoly& f) {
    const int n = f.degree();
    std::string out = n == 1 ? "x" : "x^" + std::to_string(n);
    for (int i = 1; i <= n; ++i) {
        const Int& c = f.coeff(i);
        if (c == 0) continue;
        const int e = n - i;
        out += sgn(c) < 0 ? " - " : " + ";
        Int ac = abs(c);
        if (e == 0) {
            out += ac.get_str();
        } else {
            std::string xpart = e == 1 ? "x" : "x^" + std::to_string(e);
            out += ac.get_str() + "*" + xpart;
        }
    }
    return out;
}

std::string monic_coeff_json(const MonicPoly& f) {
    std::string out = "[";
    for (size_t i = 0; i < f.a.size(); ++i) {
        if (i) out += ",";
        out += f.a[i].get_str();
    }
    return out + "]";
}

bool height_less_than(const MonicPoly& f, const Int& X) {
    if (X < 1) throw std::invalid_argument("height bound X must be >= 1");
    Int pw(1);
    for (int i = 1; i <= f.degree(); ++i) {
        pw *= X;
        if (abs(f.coeff(i)) >= pw) return false;
    }
    return true;
}

Int box_count(int n, const Int& X) {
    Int total(1), pw(1);
    for (int i = 1; i <= n; ++i) {
        pw *= X;
        total *= 2 * pw - 1;
    }
    return total;
}

MonicPoly shift(const MonicPoly& f, const Int& ell) {
    IntPoly c = f.to_int_poly();
    const int n = deg(c);
    // Taylor shift x -> x + ell by repeated synthetic steps
    for (int i = 0; i < n; ++i)
        for (int j = n - 1; j >= i; --j) c[size_t(j)] += ell * c[size_t(j) + 1];
    return MonicPoly::from_int_poly(c);
}

RatPoly weighted_scale_rat(const RatPoly& monic_f, const Rat& rho) {
    if (rho <= 0) throw std::invalid_argument("weighted scale requires rho > 0");
    RatPoly out = monic_f;
    const int n = int(out.size()) - 1;
    Rat pw(1);
    for (int i = 1; i <= n; ++i) {
        pw *= rho;
        out[size_t(n - i)] *= pw;
    }
    return out;
}

MonicPoly weighted_scale(const MonicPoly& f, const Int& rho) {
    if (rho <= 0) throw std::invalid_argument("weighted scale requires rho > 0");
    MonicPoly out = f;
    Int pw(1);
    for (size_t i = 0; i < out.a.size(); ++i) {
        pw *= rho;
        out.a[i] *= pw;
    }
    return out;
}

Int resultant(const IntPoly& f, const IntPoly& g) {
    const int nf = deg(f), ng = deg(g);
    if (nf < 0 || ng < 0) throw std::invalid_argument("resultant of a zero polynomial");
    if (nf == 0 && ng == 0) return Int(1);
    if (nf == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), f[0].get_mpz_t(), size_t(ng));
        return r;
    }
    if (ng == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), g[0].get_mpz_t(), size_t(nf));
        return r;
    }
    const size_t m = size_t(nf + ng);
    std::vector<std::vector<Int>> s(m, std::vector<Int>(m, Int(0)));
    for (int r = 0; r < ng; ++r)
        for (int j = 0; j <= nf; ++j) s[size_t(r)][size_t(r + j)] = f[size_t(nf - j)];
    for (int r = 0; r < nf; ++r)
        for (int j = 0; j <= ng; ++j) s[size_t(ng + r)][size_t(r + j)] = g[size_t(ng - j)];
    return bareiss_det(std::move(s));
}

Int disc_resultant_raw(const MonicPoly& f) {
    IntPoly fi = f.to_int_poly();
    IntPoly fd = derivative(fi);
    return resultant(fi, fd);
}

Int discriminant(const MonicPoly& f) {
    const int n = f.degree();
    if (n < 1) throw std::invalid_argument("discriminant requires degree >= 1");
    if (n <= 3) {
        std::vector<int64_t> a;
        a.reserve(f.a.size());
        bool ok = true;
        for (const Int& c : f.a) {
            if (auto v = int_to_i64(c); v && std::llabs(*v) < (int64_t(1) << 19)) {
                a.push_back(*v);
            } else {
                ok = false;
                break;
            }
        }
        if (ok) {
            if (auto d = discriminant_i64(a)) return int_from_i64(*d);
        }
    }
    Int raw = disc_resultant_raw(f);
    return (n * (n - 1) / 2) % 2 ? Int(-raw) : raw;
}

Rat discriminant_rat(const RatPoly& monic_f) {
    const int n = int(monic_f.size()) - 1;
    if (n < 1 || monic_f[size_t(n)] != 1)
        throw std::invalid_argument("discriminant_rat requires a monic polynomial");
    Int den(1);
    for (const Rat& c : monic_f) den = lcm(den, Rat(c).get_den());
    // a_i -> D^i a_i makes coefficients integral and scales disc by D^{n(n-1)}
    RatPoly scaled = weighted_scale_rat(monic_f, Rat(den));
    MonicPoly g;
    g.a.resize(size_t(n));
    for (int i = 1; i <= n; ++i) {
        Rat c = scaled[size_t(n - i)];
        c.canonicalize();
        if (c.get_den() != 1) throw std::logic_error("denominator clearing failed");
        g.a[size_t(i - 1)] = c.get_num();
    }
    Rat out(discriminant(g));
    Int dpow;
    mpz_pow_ui(dpow.get_mpz_t(), den.get_mpz_t(), size_t(n) * size_t(n - 1));
    out /= Rat(dpow);
    out.canonicalize();
    return out;
}

std::optional<int64_t> discriminant_i64(std::span<const int64_t> a) {
    switch (a.size()) {
        case 1:
            return int64_t(1);
        case 2: {
            // a1^2 - 4 a2
            __int128 d = (__int128)a[0] * a[0] - 4 * (__int128)a[1];
            if (d > INT64_MAX || d < INT64_MIN) return std::nullopt;
            return int64_t(d);
        }
        case 3: {
            const __int128 p = a[0], q = a[1], r = a[2];
            __int128 d = 18 * p * q * r - 4 * p * p * p * r + p * p * q * q - 4 * q * q * q - 27 * r * r;
            if (d > INT64_MAX || d < INT64_MIN) return std::nullopt;
            return int64_t(d);
        }
        default:
            return std::nullopt;
    }
}

double fujiwara_bound(const MonicPoly& f) {
    const int n = f.degree();
    double best = 0.0;
    for (int i = 1; i <= n; ++i) {
        double c = std::abs(f.coeff(i).get_d());
        if (i == n) c /= 2.0;
        if (c == 0.0) continue;
        best = std::max(best, std::pow(c, 1.0 / i));
    }
    return 2.0 * best;
}

std::optional<IntPoly> divide_exact(const IntPoly& f, const IntPoly& h) {
    const int nf = deg(f), nh = deg(h);
    if (nh < 0 || h.back() != 1) throw std::invalid_argument("divisor must be monic");
    if (nf < nh) return std::nullopt;
    IntPoly rem = f;
    IntPoly quo(size_t(nf - nh) + 1, Int(0));
    for (int k = nf - nh; k >= 0; --k) {
        Int c = rem[size_t(k + nh)];
        quo[size_t(k)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= nh; ++j) rem[size_t(k + j)] -= c * h[size_t(j)];
    }
    for (const Int& c : rem)
        if (c != 0) return std::nullopt;
    return quo;
}

namespace {

std::vector<Int> positive_divisors(const Int& n) {
    std::vector<Int> divs;
    Int a = abs(n);
    for (Int d(1); d * d <= a; ++d) {
        if (a % d == 0) {
            divs.push_back(d);
            if (d * d != a) divs.push_back(a / d);
        }
    }
    return divs;
}

bool has_linear_factor(const MonicPoly& f) {
    const int n = f.degree();
    const Int& an = f.coeff(n);
    IntPoly fi = f.to_int_poly();
    if (an == 0) return true;  // x divides f
    for (const Int& d : positive_divisors(an)) {
        if (eval(fi, d) == 0 || eval(fi, Int(-d)) == 0) return true;
    }
    return false;
}

// enumerate candidate monic degree-d factors with |b_j| <= C(d,j) R^j
bool has_degree_d_factor(const MonicPoly& f, int d) {
    const Int& an = f.coeff(f.degree());
    if (an == 0) return true;  // handled by linear case, kept for safety
    const double R = fujiwara_bound(f);
    std::vector<Int> bound(size_t(d) + 1);
    double binom = 1.0;
    for (int j = 1; j <= d; ++j) {
        binom = binom * (d - j + 1) / j;
        double b = binom * std::pow(R, j) * (1.0 + 1e-9);
        if (b > 1e15) throw budget_error("factor enumeration bound too large");
        bound[size_t(j)] = Int(std::floor(b)) + 1;
    }
    // constant term of the factor divides a_n
    std::vector<Int> consts;
    for (const Int& dv : positive_divisors(an)) {
        if (dv <= bound[size_t(d)]) {
            consts.push_back(dv);
            consts.push_back(-dv);
        }
    }
    uint64_t work = uint64_t(consts.size());
    for (int j = 1; j < d; ++j) {
        Int w = 2 * bound[size_t(j)] + 1;
        if (!w.fits_ulong_p()) throw budget_error("factor enumeration too large");
        work *= w.get_ui();
        check_budget(work, "is_reducible_over_Q");
    }
    IntPoly fi = f.to_int_poly();
    IntPoly h(size_t(d) + 1, Int(0));
    h[size_t(d)] = 1;
    // odometer over b_1..b_{d-1}; b_d over divisors
    std::vector<Int> b(size_t(d), Int(0));
    for (int j = 1; j < d; ++j) b[size_t(j - 1)] = -bound[size_t(j)];
    for (;;) {
        for (const Int& c : consts) {
            for (int j = 1; j < d; ++j) h[size_t(d - j)] = b[size_t(j - 1)];
            h[0] = c;
            if (divide_exact(fi, h)) return true;
        }
        int j = 1;
        while (j < d) {
            Int& bj = b[size_t(j - 1)];
            if (bj < bound[size_t(j)]) {
                bj += 1;
                break;
            }
            bj = -bound[size_t(j)];
            ++j;
        }
        if (j == d) break;
    }
    return false;
}

}  // namespace

bool is_reducible_over_Q(const MonicPoly& f) {
    const int n = f.degree();
    if (n < 2) throw std::invalid_argument("reducibility test requires degree >= 2");
    if (has_linear_factor(f)) return true;
    for (int d = 2; 2 * d <= n; ++d) {
        if (has_degree_d_factor(f, d)) return true;
    }
    return false;
}

bool has_repeated_factor_over_Q(const MonicPoly& f) {
    // gcd(f, f') nonconstant over Q <=> Res(f, f') = 0
    return disc_resultant_raw(f) == 0;
}

}  // namespace discsieve
