#include "modpoly.hpp"

#include <stdexcept>

#include "primes.hpp"

namespace discsieve {

void ModPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

std::string ModPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        uint64_t v = c[size_t(i)];
        if (v == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0 || v != 1) out += std::to_string(v);
        if (i > 0 && v != 1) out += "*";
        if (i == 1) out += "x";
        else if (i > 1) out += "x^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

static uint64_t mod_of_int(const Int& v, uint64_t q) {
    Int r = v % Int(int_from_i64(int64_t(q)));
    if (r < 0) r += int_from_i64(int64_t(q));
    return r.get_ui();
}

ModPoly reduce_mod(const IntPoly& f, uint64_t q) {
    if (q < 2) throw std::invalid_argument("modulus must be >= 2");
    ModPoly out;
    out.q = q;
    out.c.reserve(f.size());
    for (const Int& v : f) out.c.push_back(mod_of_int(v, q));
    out.normalize();
    return out;
}

ModPoly reduce_mod(const MonicPoly& f, uint64_t q) { return reduce_mod(f.to_int_poly(), q); }

static void check_same(const ModPoly& a, const ModPoly& b) {
    if (a.q != b.q) throw std::invalid_argument("modulus mismatch");
}

ModPoly mod_add(const ModPoly& a, const ModPoly& b) {
    check_same(a, b);
    ModPoly out;
    out.q = a.q;
    out.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < out.c.size(); ++i) {
        uint64_t s = (i < a.c.size() ? a.c[i] : 0) + (i < b.c.size() ? b.c[i] : 0);
        out.c[i] = s >= a.q ? s - a.q : s;
    }
    out.normalize();
    return out;
}

ModPoly mod_sub(const ModPoly& a, const ModPoly& b) {
    check_same(a, b);
    ModPoly out;
    out.q = a.q;
    out.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < out.c.size(); ++i) {
        uint64_t x = i < a.c.size() ? a.c[i] : 0;
        uint64_t y = i < b.c.size() ? b.c[i] : 0;
        out.c[i] = x >= y ? x - y : x + a.q - y;
    }
    out.normalize();
    return out;
}

ModPoly mod_mul(const ModPoly& a, const ModPoly& b) {
    check_same(a, b);
    ModPoly out;
    out.q = a.q;
    if (a.is_zero() || b.is_zero()) return out;
    out.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) {
            out.c[i + j] = (out.c[i + j] + mulmod_u64(a.c[i], b.c[j], a.q)) % a.q;
        }
    }
    out.normalize();
    return out;
}

ModPoly mod_make_monic(const ModPoly& a) {
    if (a.is_zero()) return a;
    if (a.lc() == 1) return a;
    uint64_t inv = invmod_u64(a.lc(), a.q);
    ModPoly out = a;
    for (uint64_t& v : out.c) v = mulmod_u64(v, inv, a.q);
    return out;
}

void mod_divmod(const ModPoly& a, const ModPoly& b, ModPoly& quo, ModPoly& rem) {
    check_same(a, b);
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    const uint64_t q = a.q;
    const int db = b.degree();
    ModPoly r = a;          // local copies: quo/rem may alias a or b
    ModPoly qq;
    qq.q = r.q = q;
    if (a.degree() >= db) {
        qq.c.assign(size_t(a.degree() - db) + 1, 0);
        std::vector<uint64_t> bc = b.c;
        uint64_t inv = invmod_u64(bc.back(), q);
        for (int k = a.degree() - db; k >= 0; --k) {
            uint64_t lead = r.c[size_t(db + k)];
            if (lead == 0) continue;
            uint64_t f = mulmod_u64(lead, inv, q);
            qq.c[size_t(k)] = f;
            for (int j = 0; j <= db; ++j) {
                uint64_t& rc = r.c[size_t(k + j)];
                uint64_t s = mulmod_u64(f, bc[size_t(j)], q);
                rc = rc >= s ? rc - s : rc + q - s;
            }
        }
    }
    r.normalize();
    qq.normalize();
    quo = std::move(qq);
    rem = std::move(r);
}

ModPoly mod_gcd(const ModPoly& a, const ModPoly& b) {
    check_same(a, b);
    ModPoly x = a, y = b;
    while (!y.is_zero()) {
        ModPoly q, r;
        mod_divmod(x, y, q, r);
        x = y;
        y = r;
    }
    return mod_make_monic(x);
}

ModPoly mod_derivative(const ModPoly& a) {
    ModPoly out;
    out.q = a.q;
    for (size_t i = 1; i < a.c.size(); ++i) out.c.push_back(mulmod_u64(a.c[i], i % a.q, a.q));
    out.normalize();
    return out;
}

static ModPoly pth_root(const ModPoly& f) {
    // over F_p the Frobenius fixes coefficients, so g(x)^p = g(x^p) picks
    // every p-th coefficient
    ModPoly out;
    out.q = f.q;
    for (size_t i = 0; i < f.c.size(); i += size_t(f.q)) out.c.push_back(f.c[i]);
    out.normalize();
    return out;
}

std::vector<SqfFactor> sqf_decompose_mod_p(const ModPoly& f) {
    if (!is_prime_u64(f.q)) throw std::invalid_argument("squarefree decomposition requires prime modulus");
    std::vector<SqfFactor> out;
    ModPoly fm = mod_make_monic(f);
    if (fm.degree() <= 0) return out;

    ModPoly d = mod_derivative(fm);
    if (d.is_zero()) {
        for (auto& [factor, mult] : sqf_decompose_mod_p(pth_root(fm)))
            out.push_back({factor, mult * int(f.q)});
        return out;
    }
    ModPoly g = mod_gcd(fm, d);
    ModPoly w, tmp;
    mod_divmod(fm, g, w, tmp);
    int i = 1;
    while (w.degree() > 0) {
        ModPoly y = mod_gcd(w, g);
        ModPoly z, r;
        mod_divmod(w, y, z, r);
        if (z.degree() > 0) out.push_back({z, i});
        ++i;
        w = y;
        mod_divmod(g, y, g, r);
    }
    if (g.degree() > 0) {
        for (auto& [factor, mult] : sqf_decompose_mod_p(pth_root(g)))
            out.push_back({factor, mult * int(f.q)});
    }
    return out;
}

IntPoly lift_to_int(const ModPoly& f) {
    IntPoly out;
    out.reserve(f.c.size());
    for (uint64_t v : f.c) out.push_back(int_from_i64(int64_t(v)));
    normalize(out);
    return out;
}

}  // namespace discsieve
