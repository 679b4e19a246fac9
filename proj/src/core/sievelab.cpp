#include "sievelab.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "budget.hpp"
#include "discclass.hpp"
#include "localdensity.hpp"
#include "modpoly.hpp"
#include "parallel.hpp"
#include "primes.hpp"
#include "rng.hpp"

namespace discsieve {

namespace {

double now_seconds() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

int64_t disc_or_mpz(const int64_t* a, int n, Int& big, bool& fits) {
    std::span<const int64_t> sp(a, size_t(n));
    if (auto d = discriminant_i64(sp)) {
        fits = true;
        return *d;
    }
    MonicPoly f;
    f.a.reserve(size_t(n));
    for (int i = 0; i < n; ++i) f.a.push_back(int_from_i64(a[i]));
    big = discriminant(f);
    fits = false;
    return 0;
}

MonicPoly poly_from_i64(const int64_t* a, int n) {
    MonicPoly f;
    f.a.reserve(size_t(n));
    for (int i = 0; i < n; ++i) f.a.push_back(int_from_i64(a[i]));
    return f;
}

bool dedekind_i64(const int64_t* a, int n, uint64_t p) {
    const uint64_t p2 = p * p;
    ModPoly f2{p2, {}};
    f2.c.assign(size_t(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
        int64_t v = a[i - 1] % int64_t(p2);
        if (v < 0) v += int64_t(p2);
        f2.c[size_t(n - i)] = uint64_t(v);
    }
    f2.c[size_t(n)] = 1;
    return dedekind_class_is_maximal(f2, p);
}

}  // namespace

bool poly_disc_squarefree(const MonicPoly& f) {
    Int d = discriminant(f);
    if (d == 0) return false;
    return is_squarefree_int(d);
}

bool poly_is_maximal(const MonicPoly& f) {
    Int d = discriminant(f);
    if (d == 0) return false;
    for (uint64_t p : square_divisor_primes_int(d)) {
        if (!dedekind_is_p_maximal(f, p)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Row sieve for n in {2,3}: disc is linear/quadratic in the last coefficient,
// so p^2 | disc positions are arithmetic progressions found by root-finding
// mod p^2. Exact; equivalent to the per-polynomial predicate (tested).
// ---------------------------------------------------------------------------

namespace {

struct DedekindTable {
    uint64_t p = 0;
    uint64_t p2 = 0;
    std::vector<uint8_t> maximal;  // index ((a1 mod p2)*p2 + a2 mod p2)*p2 + ...

    uint8_t lookup(const int64_t* a, int n) const {
        uint64_t idx = 0;
        for (int i = 0; i < n; ++i) {
            int64_t v = a[i] % int64_t(p2);
            if (v < 0) v += int64_t(p2);
            idx = idx * p2 + uint64_t(v);
        }
        return maximal[idx];
    }
};

DedekindTable build_dedekind_table(int n, uint64_t p) {
    DedekindTable t;
    t.p = p;
    t.p2 = p * p;
    uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= t.p2;
    t.maximal.resize(total);
    std::vector<int64_t> a(size_t(n), 0);
    for (uint64_t idx = 0; idx < total; ++idx) {
        uint64_t rest = idx;
        for (int i = n - 1; i >= 0; --i) {
            a[size_t(i)] = int64_t(rest % t.p2);
            rest /= t.p2;
        }
        t.maximal[idx] = dedekind_i64(a.data(), n, p) ? 1 : 0;
    }
    return t;
}

struct RowSieve {
    int n;
    int64_t X;
    bool want_maximal;
    std::vector<uint32_t> primes;
    std::vector<DedekindTable> tables;  // for p <= 7

    int64_t window_lo, window_hi;
    uint64_t window;

    uint64_t rows() const {
        uint64_t r = 1;
        int64_t pw = 1;
        for (int i = 1; i < n; ++i) {
            pw *= X;
            r *= uint64_t(2 * pw - 1);
        }
        return r;
    }

    void decode_row(uint64_t row, int64_t* a) const {
        int64_t pw = X;
        std::vector<uint64_t> radix(size_t(n - 1));
        for (int i = 0; i + 1 < n; ++i) {
            radix[size_t(i)] = uint64_t(2 * pw - 1);
            pw *= X;
        }
        for (int i = n - 2; i >= 0; --i) {
            int64_t half = (int64_t(radix[size_t(i)]) - 1) / 2;
            a[i] = int64_t(row % radix[size_t(i)]) - half;
            row /= radix[size_t(i)];
        }
    }

    // counts (squarefree_hits, maximal_hits) over rows [r0, r1)
    std::pair<uint64_t, uint64_t> run_rows(uint64_t r0, uint64_t r1) const {
        std::vector<uint8_t> marked(window);
        std::vector<uint8_t> maxflag(want_maximal ? window : 0);
        std::vector<int64_t> a(size_t(n), 0);
        uint64_t sf = 0, mx = 0;
        for (uint64_t row = r0; row < r1; ++row) {
            decode_row(row, a.data());
            std::fill(marked.begin(), marked.end(), 0);
            if (want_maximal) std::fill(maxflag.begin(), maxflag.end(), 1);
            sieve_row(a.data(), marked, maxflag);
            for (uint64_t i = 0; i < window; ++i) {
                if (!marked[i]) ++sf;
                if (want_maximal && maxflag[i]) ++mx;
            }
        }
        return {sf, mx};
    }

    // disc as a polynomial in the last coefficient t:
    //   n=2: t -> a1^2 - 4t
    //   n=3: t -> -27t^2 + (18 a1 a2 - 4 a1^3) t + (a1^2 a2^2 - 4 a2^3)
    void sieve_row(const int64_t* a, std::vector<uint8_t>& marked, std::vector<uint8_t>& maxflag) const {
        int64_t beta = 0, gamma = 0;
        if (n == 2) {
            beta = -4;
            gamma = a[0] * a[0];
        } else {
            beta = 18 * a[0] * a[1] - 4 * a[0] * a[0] * a[0];
            gamma = a[0] * a[0] * a[1] * a[1] - 4 * a[1] * a[1] * a[1];
        }
        auto disc_at = [&](int64_t t) -> __int128 {
            if (n == 2) return (__int128)gamma - 4 * (__int128)t;
            return -27 * (__int128)t * t + (__int128)beta * t + gamma;
        };
        auto mark = [&](uint64_t start, uint64_t step, uint32_t p, int64_t* abuf) {
            for (uint64_t i = start; i < window; i += step) {
                marked[i] = 1;
                if (want_maximal && maxflag[i]) {
                    abuf[n - 1] = window_lo + int64_t(i);
                    bool ok;
                    if (p <= 7) {
                        ok = tables[p == 2 ? 0 : p == 3 ? 1 : p == 5 ? 2 : 3].lookup(abuf, n) != 0;
                    } else {
                        ok = dedekind_i64(abuf, n, p);
                    }
                    if (!ok) maxflag[i] = 0;
                }
            }
        };
        std::vector<int64_t> abuf(size_t(n), 0);
        for (int i = 0; i + 1 < n; ++i) abuf[size_t(i)] = a[i];

        for (uint32_t p : primes) {
            const uint64_t p2 = uint64_t(p) * p;
            if (p <= 3) {
                // tiny p (and p | 27): scan the p^2 residues directly
                for (uint64_t t = 0; t < p2; ++t) {
                    __int128 v = disc_at(int64_t(t)) % (__int128)p2;
                    if (v < 0) v += (__int128)p2;
                    if (v == 0) {
                        uint64_t off = uint64_t(((int64_t(t) - window_lo) % int64_t(p2) + int64_t(p2)) % int64_t(p2));
                        mark(off, p2, p, abuf.data());
                    }
                }
                continue;
            }
            // reduce to monic quadratic/linear mod p^2
            uint64_t B, D;
            if (n == 2) {
                // 4t = a1^2 (mod p^2), single root
                uint64_t inv4 = invmod_u64(4 % p2, p2);
                uint64_t g = uint64_t(((gamma % int64_t(p2)) + int64_t(p2)) % int64_t(p2));
                uint64_t t0 = mulmod_u64(g, inv4, p2);
                uint64_t off = uint64_t(((int64_t(t0) - window_lo) % int64_t(p2) + int64_t(p2)) % int64_t(p2));
                mark(off, p2, p, abuf.data());
                continue;
            }
            {
                uint64_t inv_neg27 = invmod_u64(p2 - 27 % p2, p2);
                uint64_t b = uint64_t(((beta % int64_t(p2)) + int64_t(p2)) % int64_t(p2));
                uint64_t g = uint64_t(((gamma % int64_t(p2)) + int64_t(p2)) % int64_t(p2));
                B = mulmod_u64(b, inv_neg27, p2);
                uint64_t C = mulmod_u64(g, inv_neg27, p2);
                // (2t + B)^2 = B^2 - 4C (mod p^2)
                uint64_t B2 = mulmod_u64(B, B, p2);
                uint64_t C4 = mulmod_u64(4 % p2, C, p2);
                D = (B2 + p2 - C4) % p2;
            }
            const uint64_t inv2 = invmod_u64(2, p2);
            if (D == 0) {
                // every t with 2t + B = 0 (mod p)
                uint64_t Bp = B % p;
                uint64_t t0 = mulmod_u64((p - Bp) % p, invmod_u64(2, p), p);
                uint64_t off = uint64_t(((int64_t(t0) - window_lo) % int64_t(p) + int64_t(p)) % int64_t(p));
                mark(off, p, p, abuf.data());
                continue;
            }
            if (D % p == 0) continue;  // valuation 1: no square root
            if (legendre_u64(D % p, p) != 1) continue;
            uint64_t s0 = sqrtmod_u64(D % p, p);
            // Hensel lift to mod p^2
            uint64_t s0sq = mulmod_u64(s0, s0, p2);
            uint64_t diff = (D + p2 - s0sq) % p2;  // divisible by p
            uint64_t k = mulmod_u64((diff / p) % p, invmod_u64((2 * s0) % p, p), p);
            uint64_t s = (s0 + mulmod_u64(k % p2, p % p2, p2)) % p2;
            for (uint64_t sig : {s, (p2 - s) % p2}) {
                uint64_t t0 = mulmod_u64((sig + p2 - B) % p2, inv2, p2);
                uint64_t off = uint64_t(((int64_t(t0) - window_lo) % int64_t(p2) + int64_t(p2)) % int64_t(p2));
                mark(off, p2, p, abuf.data());
                if (s == 0) break;
            }
        }

        if (want_maximal) {
            // integer zero-discriminant positions are never maximal
            if (n == 2) {
                if (gamma % 4 == 0) {
                    int64_t t = gamma / 4;
                    if (t >= window_lo && t <= window_hi) maxflag[uint64_t(t - window_lo)] = 0;
                }
            } else {
                // -27 t^2 + beta t + gamma = 0
                __int128 Dq = (__int128)beta * beta + 108 * (__int128)gamma;
                if (Dq >= 0) {
                    uint64_t s = isqrt_u64(uint64_t(Dq > (__int128)UINT64_MAX ? 0 : Dq));
                    if ((__int128)s * s == Dq) {
                        for (int64_t sig : {int64_t(s), -int64_t(s)}) {
                            int64_t num = beta + sig;
                            if (num % 54 == 0) {
                                int64_t t = num / 54;
                                if (t >= window_lo && t <= window_hi) maxflag[uint64_t(t - window_lo)] = 0;
                            }
                            if (s == 0) break;
                        }
                    }
                }
            }
        }
    }
};

int64_t max_abs_disc_bound(int n, int64_t X) {
    // crude closed-form bounds for n=2,3, used to size the prime list
    int64_t h1 = X - 1, h2 = X * X - 1, h3 = X * X * X - 1;
    if (n == 2) return h1 * h1 + 4 * h2;
    return 18 * h1 * h2 * h3 + 4 * h1 * h1 * h1 * h3 + h1 * h1 * h2 * h2 + 4 * h2 * h2 * h2 +
           27 * h3 * h3;
}

DensityReport run_density(int n, int64_t X, int threads, uint64_t prime_bound, bool want_maximal) {
    if (threads < 1) throw std::invalid_argument("threads must be >= 1");
    DensityReport rep;
    rep.n = n;
    rep.X = X;
    rep.threads = threads;
    rep.predicate = want_maximal ? "maximal_order" : "squarefree_disc";
    double t0 = now_seconds();

    Box box = make_box(n, X);
    check_budget(box.size, "density experiment");
    rep.total = box.size;

    uint64_t hits = 0;
    if ((n == 2 || n == 3) && X > 1) {
        rep.method = "row_sieve";
        RowSieve rs;
        rs.n = n;
        rs.X = X;
        rs.want_maximal = want_maximal;
        rs.window_hi = box.half[size_t(n - 1)];
        rs.window_lo = -rs.window_hi;
        rs.window = uint64_t(2 * rs.window_hi + 1);
        int64_t maxd = max_abs_disc_bound(n, X);
        rs.primes = primes_up_to(uint32_t(isqrt_u64(uint64_t(maxd))) + 1);
        if (want_maximal)
            for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL}) rs.tables.push_back(build_dedekind_table(n, p));
        uint64_t rows = rs.rows();
        std::vector<std::pair<uint64_t, uint64_t>> partial(64);
        parallel_chunks(rows, threads, [&](size_t c, uint64_t b, uint64_t e) { partial[c] = rs.run_rows(b, e); },
                        64);
        for (auto& [sf, mx] : partial) hits += want_maximal ? mx : sf;
    } else {
        rep.method = "per_poly";
        std::vector<uint64_t> partial(64, 0);
        parallel_chunks(box.size, threads, [&](size_t c, uint64_t b, uint64_t e) {
            std::vector<int64_t> a(size_t(n), 0);
            uint64_t h = 0;
            for (uint64_t idx = b; idx < e; ++idx) {
                box.decode(idx, a);
                Int big;
                bool fits;
                int64_t d = disc_or_mpz(a.data(), n, big, fits);
                bool ok;
                if (fits) {
                    if (d == 0) {
                        ok = false;
                    } else if (!want_maximal) {
                        ok = is_squarefree_i64(d);
                    } else {
                        ok = true;
                        for (uint64_t p : square_divisor_primes_i64(d)) {
                            if (!dedekind_i64(a.data(), n, p)) {
                                ok = false;
                                break;
                            }
                        }
                    }
                } else {
                    MonicPoly f = poly_from_i64(a.data(), n);
                    ok = want_maximal ? poly_is_maximal(f) : poly_disc_squarefree(f);
                }
                if (ok) ++h;
            }
            partial[c] = h;
        });
        for (uint64_t h : partial) hits += h;
    }

    rep.hits = hits;
    rep.empirical = Rat(int_from_i64(int64_t(hits)), int_from_i64(int64_t(box.size)));
    rep.empirical.canonicalize();
    if (want_maximal) {
        rep.theoretical = 6.0 / (std::numbers::pi * std::numbers::pi);
        rep.prime_bound = 0;
        rep.truncation_tail = 0;  // closed form
    } else {
        TruncatedProduct tp = lambda_n_truncated(n, prime_bound);
        rep.theoretical = tp.value;
        rep.prime_bound = tp.prime_bound;
        rep.truncation_tail = tp.tail_bound;
    }
    rep.abs_error = std::abs(rep.empirical.get_d() - rep.theoretical);
    rep.wall_time = now_seconds() - t0;
    return rep;
}

}  // namespace

DensityReport squarefree_density_experiment(int n, int64_t X, int threads, uint64_t prime_bound) {
    return run_density(n, X, threads, prime_bound, false);
}

DensityReport maximality_density_experiment(int n, int64_t X, int threads, uint64_t prime_bound) {
    return run_density(n, X, threads, prime_bound, true);
}

SieveCheckReport mobius_sieve_identity_check(int n, int64_t X) {
    SieveCheckReport rep;
    rep.n = n;
    rep.X = X;
    Box box = make_box(n, X);
    check_budget(box.size * 4, "mobius sieve check");
    rep.box = box.size;

    uint64_t sf = 0;
    std::map<int64_t, int64_t> signed_counts;  // m -> mu(m) * #W_m for m > 1
    std::map<int64_t, uint64_t> counts;
    uint64_t nonzero = 0;
    std::vector<int64_t> a(size_t(n), 0);
    for (uint64_t idx = 0; idx < box.size; ++idx) {
        box.decode(idx, a);
        Int big;
        bool fits;
        int64_t d = disc_or_mpz(a.data(), n, big, fits);
        Int dd = fits ? int_from_i64(d) : big;
        if (dd == 0) continue;  // identity concerns nonzero discriminants
        ++nonzero;
        std::vector<uint64_t> ps = fits ? square_divisor_primes_i64(d) : square_divisor_primes_int(dd);
        if (ps.empty()) ++sf;
        // all squarefree m > 1 with m^2 | disc: subset products of ps
        const size_t k = ps.size();
        for (size_t mask = 1; mask < (size_t(1) << k); ++mask) {
            int64_t m = 1;
            int bits = 0;
            for (size_t i = 0; i < k; ++i)
                if (mask & (size_t(1) << i)) {
                    m *= int64_t(ps[i]);
                    ++bits;
                }
            signed_counts[m] += bits % 2 ? -1 : 1;
            counts[m] += 1;
        }
    }
    rep.lhs = int_from_i64(int64_t(sf));
    // rhs = mu(1) * #W_1 + sum_{m>1} mu(m) #W_m ; #W_1 = all nonzero-disc f
    Int rhs = int_from_i64(int64_t(nonzero));
    for (auto& [m, sc] : signed_counts) rhs += int_from_i64(sc);
    rep.rhs = rhs;
    rep.equal = rep.lhs == rep.rhs;
    for (auto& [m, c] : counts) rep.terms.emplace_back(int_from_i64(m), int_from_i64(int64_t(c)));
    return rep;
}

TailReport tail_counts(int n, int64_t X, const std::vector<int64_t>& thresholds) {
    TailReport rep;
    rep.n = n;
    rep.X = X;
    Box box = make_box(n, X);
    check_budget(box.size * 2, "tail counts");
    rep.box = box.size;
    std::vector<int64_t> Ms = thresholds;
    std::sort(Ms.begin(), Ms.end());
    std::vector<uint64_t> cnt(Ms.size(), 0);

    std::vector<int64_t> a(size_t(n), 0);
    for (uint64_t idx = 0; idx < box.size; ++idx) {
        box.decode(idx, a);
        Int big;
        bool fits;
        int64_t d = disc_or_mpz(a.data(), n, big, fits);
        Int dd = fits ? int_from_i64(d) : big;
        if (dd == 0) {
            ++rep.zero_disc;
            ++rep.nonsquarefree;
            for (size_t i = 0; i < Ms.size(); ++i) ++cnt[i];  // every m qualifies
            continue;
        }
        std::vector<uint64_t> ps = fits ? square_divisor_primes_i64(d) : square_divisor_primes_int(dd);
        if (ps.empty()) continue;
        ++rep.nonsquarefree;
        Int rad(1);
        MonicPoly f = poly_from_i64(a.data(), n);
        for (uint64_t p : ps) {
            rad *= int_from_i64(int64_t(p));
            P2Class cls = classify_p2(f, p);
            auto& [s, w] = rep.strong_weak[p];
            if (cls.tag == P2Tag::STRONG) ++s;
            else if (cls.tag == P2Tag::WEAK) ++w;
        }
        // largest admissible squarefree m is the product of all of ps
        for (size_t i = 0; i < Ms.size(); ++i)
            if (rad > int_from_i64(Ms[i])) ++cnt[i];
    }
    for (size_t i = 0; i < Ms.size(); ++i) rep.counts.emplace_back(Ms[i], cnt[i]);
    return rep;
}

ReducibleReport reducible_count(int n, int64_t X) {
    ReducibleReport rep;
    rep.n = n;
    rep.X = X;
    Box box = make_box(n, X);
    check_budget(box.size * 8, "reducible count");
    rep.box = box.size;
    std::vector<int64_t> a(size_t(n), 0);
    for (uint64_t idx = 0; idx < box.size; ++idx) {
        box.decode(idx, a);
        if (is_reducible_over_Q(poly_from_i64(a.data(), n))) ++rep.count;
    }
    rep.fraction = Rat(int_from_i64(int64_t(rep.count)), int_from_i64(int64_t(box.size)));
    rep.fraction.canonicalize();
    return rep;
}

// ---------------------------------------------------------------------------
// C3 volume: area of {(a2,a3) : |disc(x^3 + a2 x + a3)| < 1} with
// disc = -4 a2^3 - 27 a3^2. 2D Monte Carlo stratified along a2, sheared to
// hug the region in the tail, a3 >= 0 sampled and doubled.
// ---------------------------------------------------------------------------

namespace {

double hi_of(double a) { return (1.0 - 4.0 * a * a * a) / 27.0; }
double lo_of(double a) { return (-1.0 - 4.0 * a * a * a) / 27.0; }

double strip_height(double a) {
    double hi = hi_of(a);
    if (hi <= 0) return 0;
    double lo = lo_of(a);
    double base = lo > 0 ? std::sqrt(lo) : 0.0;
    return std::sqrt(hi) - base;
}

}  // namespace

C3Report c3_volume(uint64_t samples, double truncation, uint64_t seed, int threads) {
    if (samples < 100000) throw std::invalid_argument("c3vol requires samples >= 1e5");
    if (truncation < 2.0) throw std::invalid_argument("c3vol truncation must be >= 2");
    C3Report rep;
    rep.samples = samples;
    rep.truncation = truncation;
    rep.seed = seed;
    rep.threads = threads;

    const double amax = std::cbrt(0.25);
    const double a0 = std::cbrt(0.25);  // lo crosses zero at -a0

    // stratum boundaries: [-a0, amax], then geometric down to -T
    std::vector<double> bounds{amax, -a0};
    double b = a0;
    while (b < truncation) {
        b = std::min(b * 1.6, truncation);
        bounds.push_back(-b);
    }
    const size_t K = bounds.size() - 1;

    struct Stratum {
        double left, right, height, area;
        uint64_t n = 0, hits = 0;
    };
    std::vector<Stratum> strata(K);
    double total_area = 0;
    for (size_t s = 0; s < K; ++s) {
        double r = bounds[s], l = bounds[s + 1];
        double h = std::max(strip_height(l), strip_height(r)) * (1.0 + 1e-12);
        strata[s] = {l, r, h, (r - l) * h};
        total_area += strata[s].area;
    }
    // largest-remainder allocation, deterministic
    uint64_t assigned = 0;
    std::vector<std::pair<double, size_t>> rema(K);
    for (size_t s = 0; s < K; ++s) {
        double exact = double(samples) * strata[s].area / total_area;
        strata[s].n = uint64_t(exact);
        rema[s] = {exact - double(strata[s].n), s};
        assigned += strata[s].n;
    }
    std::sort(rema.begin(), rema.end(), [](auto& x, auto& y) {
        return x.first > y.first || (x.first == y.first && x.second < y.second);
    });
    for (size_t i = 0; assigned < samples; ++i, ++assigned) strata[rema[i % K].second].n += 1;

    parallel_chunks(K, threads, [&](size_t, uint64_t b0, uint64_t e0) {
        for (uint64_t s = b0; s < e0; ++s) {
            Stratum& st = strata[s];
            CounterRng rng{seed, uint64_t(s)};
            uint64_t h = 0;
            for (uint64_t j = 0; j < st.n; ++j) {
                double a = st.left + (st.right - st.left) * rng.uniform(2 * j);
                double lo = lo_of(a);
                double base = lo > 0 ? std::sqrt(lo) : 0.0;
                double a3 = base + st.height * rng.uniform(2 * j + 1);
                double disc = -4.0 * a * a * a - 27.0 * a3 * a3;
                if (std::fabs(disc) < 1.0) ++h;
            }
            st.hits = h;
        }
    }, K);

    double vol = 0;
    for (auto& st : strata)
        if (st.n) vol += st.area * double(st.hits) / double(st.n);
    rep.estimate = 2.0 * vol;

    // analytic tail: width(a) <= (2/sqrt(27)) (4a^3 - 1)^{-1/2} for a > a0,
    // integrated beyond T
    double T = truncation;
    rep.tail_bound = (2.0 / std::sqrt(27.0)) / std::sqrt(1.0 - 1.0 / (4 * T * T * T)) / std::sqrt(T);
    rep.truncation_warning = rep.tail_bound > 0.01 * rep.estimate;

    const double g12 = std::tgamma(0.5), g16 = std::tgamma(1.0 / 6.0), g23 = std::tgamma(2.0 / 3.0);
    rep.closed_form = std::cbrt(2.0) * (3.0 + std::sqrt(3.0)) / 45.0 * g12 * g16 / g23;
    rep.rel_err = std::fabs(rep.estimate - rep.closed_form) / rep.closed_form;
    return rep;
}

}  // namespace discsieve
