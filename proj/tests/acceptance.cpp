// Acceptance suite: one check per criterion, each printing a PASS/FAIL line.
// Run `acceptance all` or `acceptance c<k>`.
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "core/discclass.hpp"
#include "core/lattice.hpp"
#include "core/localdensity.hpp"
#include "core/qinv.hpp"
#include "core/sievelab.hpp"
#include "core/symrep.hpp"
#include "testsupport.hpp"

using namespace discsieve;
namespace ts = discsieve::testsupport;

namespace {

struct Criterion {
    const char* name;
    const char* summary;
    std::function<bool(std::string&)> run;
};

bool c1_local_density(std::string& detail) {
    int failures = 0;
    for (int n : {2, 3, 4}) {
        for (uint64_t p : {2ULL, 3ULL, 5ULL}) {
            Rat oracle = bruteforce_disc_density(n, p, false);
            Rat formula = lambda_np(n, p);
            if (oracle != formula) {
                ++failures;
                detail += " (n=" + std::to_string(n) + ",p=" + std::to_string(p) + " mismatch)";
            }
        }
    }
    if (bruteforce_disc_density(3, 3, false) != Rat(22, 27)) {
        ++failures;
        detail += " (n=3,p=3 != 22/27)";
    }
    return failures == 0;
}

bool c2_maximality_density(std::string& detail) {
    int failures = 0;
    for (int n : {2, 3, 4}) {
        for (uint64_t p : {2ULL, 3ULL, 5ULL}) {
            Rat oracle = bruteforce_maximal_density(n, p);
            if (oracle != rho_np(n, p)) {
                ++failures;
                detail += " (n=" + std::to_string(n) + ",p=" + std::to_string(p) + ")";
            }
        }
    }
    return failures == 0;
}

bool c3_roundtrip(std::string& detail) {
    CounterRng rng{1001, 0};
    uint64_t ctr = 0;
    int failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 3 + int(rng.below(ctr++, 4));
        WeakNormalForm nf = ts::random_normal_form(n, rng, ctr, 50, 20);
        SymMatrix B = sigma_m(nf);
        auto f = rat_poly_to_monic(invariant_poly(B));
        if (!f || !(*f == nf.to_poly_original())) ++failures;
        if (abs(q_of_w0(B)) != Rat(nf.m)) ++failures;
    }
    detail = " (1000 samples, n in 3..6, squarefree m <= 50)";
    return failures == 0;
}

bool c4_strong_divisibility(std::string& detail) {
    CounterRng rng{2002, 0};
    uint64_t ctr = 0;
    const uint64_t class_budget = 4096;
    int failures = 0;
    uint64_t complete = 0, sampled = 0;
    for (int image = 0; image < 100; ++image) {
        int n = 3 + int(rng.below(ctr++, 4));
        WeakNormalForm nf;
        std::vector<uint64_t> odd_ps;
        do {
            nf = ts::random_normal_form(n, rng, ctr, 50, 20);
            odd_ps.clear();
            for (uint64_t p : square_divisor_primes_int(nf.m * nf.m))
                if (p % 2 == 1) odd_ps.push_back(p);
        } while (odd_ps.empty());
        SymMatrix B = sigma_m(nf);

        // free W0 coordinates (upper triangle outside the zero block)
        const int g = B.genus();
        const int cols = n % 2 ? g : g + 1;
        std::vector<std::pair<int, int>> coords;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                if (!(i < g && j < cols)) coords.emplace_back(i, j);

        for (uint64_t p : odd_ps) {
            double dim_work = std::pow(double(p), double(coords.size()));
            bool exhaustive = dim_work <= double(class_budget);
            uint64_t classes = exhaustive ? uint64_t(dim_work) : class_budget;
            exhaustive ? ++complete : ++sampled;
            const Int P2 = int_from_i64(int64_t(p * p));
            std::vector<uint64_t> digits(coords.size(), 0);
            for (uint64_t cls = 0; cls < classes; ++cls) {
                if (exhaustive) {
                    uint64_t rest = cls;
                    for (size_t k = 0; k < coords.size(); ++k) {
                        digits[k] = rest % p;
                        rest /= p;
                    }
                } else {
                    for (size_t k = 0; k < coords.size(); ++k) digits[k] = rng.below(ctr++, p);
                }
                SymMatrix Bp = B;
                for (size_t k = 0; k < coords.size(); ++k) {
                    if (digits[k] == 0) continue;
                    auto [i, j] = coords[k];
                    Int add = int_from_i64(int64_t(p * digits[k]));
                    Bp.at(i, j) += add;
                    if (i != j) Bp.at(j, i) += add;
                }
                Rat disc = discriminant_rat(invariant_poly(Bp));
                if (disc.get_num() % P2 != 0) {
                    ++failures;
                    break;
                }
            }
        }
    }
    std::ostringstream os;
    os << " (100 images; " << complete << " complete residue systems, " << sampled
       << " budget-sampled at " << class_budget << ")";
    detail = os.str();
    return failures == 0;
}

bool c5_q2_divides_disc(std::string& detail) {
    CounterRng rng{3003, 0};
    uint64_t ctr = 0;
    int done = 0, failures = 0;
    while (done < 1000) {
        int n = 3 + int(rng.below(ctr++, 4));
        SymMatrix B = ts::random_w0(n, rng, ctr, 20);
        if (q_of_w0(B) == 0) continue;
        if (!rat_is_integer(disc_over_q2(B))) ++failures;
        ++done;
    }
    detail = " (1000 integer W0 samples, both parities, entries in [-20,20])";
    return failures == 0;
}

bool c6_q_invariance(std::string& detail) {
    CounterRng rng{4004, 0};
    uint64_t ctr = 0;
    int failures = 0;
    // homogeneity in B alone (g(g+1)/2) and jointly (g(g+1))
    for (int g : {1, 2, 3}) {
        for (const Rat& lam : {Rat(2), Rat(-3), Rat(5, 2)}) {
            QInput q;
            q.A = make_rat_mat(g, g + 1);
            q.B = make_rat_mat(g, g + 1);
            for (auto& v : q.A.v) v = Rat(int_from_i64(rng.range(ctr++, -9, 9)));
            for (auto& v : q.B.v) v = Rat(int_from_i64(rng.range(ctr++, -9, 9)));
            Rat Q0 = q_invariant(q);
            QInput qb = q, qj = q;
            for (auto& v : qb.B.v) v *= lam;
            for (auto& v : qj.A.v) v *= lam;
            for (auto& v : qj.B.v) v *= lam;
            Rat lb(1), lj(1);
            for (int k = 0; k < g * (g + 1) / 2; ++k) lb *= lam;
            for (int k = 0; k < g * (g + 1); ++k) lj *= lam;
            if (q_invariant(qb) != lb * Q0) ++failures;
            if (q_invariant(qj) != lj * Q0) ++failures;
        }
    }
    // SL2 pencil invariance
    for (int g : {1, 2, 3}) {
        for (int trial = 0; trial < 15; ++trial) {
            QInput q;
            q.A = make_rat_mat(g, g + 1);
            q.B = make_rat_mat(g, g + 1);
            for (auto& v : q.A.v) v = Rat(int_from_i64(rng.range(ctr++, -9, 9)));
            for (auto& v : q.B.v) v = Rat(int_from_i64(rng.range(ctr++, -9, 9)));
            Rat Q0 = q_invariant(q);
            int64_t r = 1, s = 0, t = 0, u = 1;
            for (int k = 0; k < 4; ++k) {
                int64_t c = rng.range(ctr++, -3, 3);
                if (rng.below(ctr++, 2)) {
                    s = s + r * c;
                    u = u + t * c;
                } else {
                    r = r + s * c;
                    t = t + u * c;
                }
            }
            QInput qs = q;
            for (size_t i = 0; i < q.A.v.size(); ++i) {
                qs.A.v[i] = Rat(int_from_i64(r)) * q.A.v[i] + Rat(int_from_i64(s)) * q.B.v[i];
                qs.B.v[i] = Rat(int_from_i64(t)) * q.A.v[i] + Rat(int_from_i64(u)) * q.B.v[i];
            }
            if (q_invariant(qs) != Q0) ++failures;
        }
    }
    // relative invariance on constructed G0(Z) elements, both parities
    for (int n : {3, 4, 5, 6}) {
        for (int trial = 0; trial < 15; ++trial) {
            SymMatrix B = ts::random_w0(n, rng, ctr, 9);
            ts::Mat gamma = ts::random_g0(n, rng, ctr);
            if (!check_relative_invariance(B, gamma)) ++failures;
        }
    }
    detail = " (homogeneity, SL2 pencil, G0 weight - all exact)";
    return failures == 0;
}

bool c7_global_density(std::string& detail) {
    std::ostringstream os;
    bool ok = true;
    struct Row {
        int n;
        int64_t X;
        double tol;
    };
    for (Row row : {Row{2, 100, 0.01}, Row{3, 20, 0.02}}) {
        DensityReport sf = squarefree_density_experiment(row.n, row.X, 1);
        DensityReport mx = maximality_density_experiment(row.n, row.X, 1);
        os << " [n=" << row.n << ",X=" << row.X << ": sf_err=" << sf.abs_error
           << ", max_err=" << mx.abs_error << "]";
        if (sf.abs_error >= row.tol) ok = false;
        if (mx.abs_error >= row.tol) ok = false;
    }
    detail = os.str();
    return ok;
}

bool c8_mobius(std::string& detail) {
    bool ok = true;
    for (int n : {2, 3})
        for (int64_t X : {4, 5}) {
            SieveCheckReport r = mobius_sieve_identity_check(n, X);
            if (!r.equal) {
                ok = false;
                detail += " (n=" + std::to_string(n) + ",X=" + std::to_string(X) + " unequal)";
            }
        }
    if (ok) detail = " (exact integer identity on 4 boxes)";
    return ok;
}

bool c9_tail(std::string& detail) {
    TailReport t = tail_counts(3, 6, {1, 2, 4, 8, 16, 32, 64, 128, 256});
    uint64_t prev = UINT64_MAX;
    bool ok = true;
    for (auto& [M, c] : t.counts) {
        if (c > prev) ok = false;
        prev = c;
    }
    DensityReport sf = squarefree_density_experiment(3, 6, 1);
    if (t.counts.front().second != t.box - sf.hits) {
        ok = false;
        detail += " (M=1 complement mismatch)";
    }
    if (ok) detail = " (n=3, X=6: non-increasing; M=1 = box - squarefree hits)";
    return ok;
}

bool c10_lattice_suite(std::string& detail) {
    std::ostringstream os;
    bool ok = true;
    // x^2 - 2 gram and strong quasi-reduction
    EmbeddedLattice L = embed(parse_monic("x^2-2"));
    if (std::fabs(L.gram[0] - 2.0) > 1e-9 || std::fabs(L.gram[3] - 4.0) > 1e-9 ||
        std::fabs(L.gram[1]) > 1e-9) {
        ok = false;
        os << " (gram mismatch)";
    }
    if (is_strongly_quasi_reduced(parse_monic("x^2-2")) != Tri::True) {
        ok = false;
        os << " (x^2-2 not strongly quasi-reduced)";
    }
    // weighted-scaling lemma: 50/50 random f reach quasi-reduced and stay
    CounterRng rng{5005, 0};
    uint64_t ctr = 0;
    int passed = 0;
    for (int done = 0; done < 50;) {
        int n = 3 + int(rng.below(ctr++, 2));
        MonicPoly f;
        for (int i = 0; i < n; ++i) f.a.push_back(int_from_i64(rng.range(ctr++, -6, 6)));
        if (discriminant(f) == 0) continue;
        ++done;
        bool reached = false, stayed = true;
        for (int k = 0; k <= 10; ++k) {
            Int rho(1);
            for (int t = 0; t < k; ++t) rho *= 2;
            Tri q = is_quasi_reduced(weighted_scale(f, rho));
            if (q == Tri::True) reached = true;
            else if (reached && q == Tri::False) stayed = false;
        }
        if (reached && stayed) ++passed;
    }
    os << " [scaling lemma " << passed << "/50]";
    if (passed != 50) ok = false;
    // strongly quasi-reduced fraction grows across X = 5, 10, 20 (n = 3)
    double prev = -1;
    os << " [qr-fraction";
    for (int64_t X : {5, 10, 20}) {
        QrFractionReport r = qr_fraction_experiment(3, X, 4000, 424242, 1);
        double frac = r.fraction.get_d();
        os << " " << frac;
        if (frac <= prev) ok = false;
        prev = frac;
    }
    os << "]";
    detail = os.str();
    return ok;
}

bool c11_c3_volume(std::string& detail) {
    const double frozen = 0.9653093648799671;
    C3Report r = c3_volume(1000000, 4000.0, 1, 1);
    std::ostringstream os;
    os << " (estimate " << r.estimate << ", closed form " << r.closed_form << ", rel err "
       << r.rel_err << ")";
    detail = os.str();
    if (std::fabs(r.closed_form - frozen) > 1e-12) return false;
    if (r.rel_err > 0.05) return false;
    if (r.truncation_warning) return false;
    return true;
}

std::string canon_density(const DensityReport& r) {
    std::ostringstream os;
    os << r.n << "|" << r.X << "|" << r.total << "|" << r.hits << "|"
       << rat_to_pq_string(r.empirical) << "|" << r.theoretical << "|" << r.abs_error << "|"
       << r.prime_bound << "|" << r.truncation_tail << "|" << r.predicate << "|" << r.method;
    return os.str();
}

bool c12_determinism(std::string& detail) {
    bool ok = true;
    if (canon_density(squarefree_density_experiment(2, 30, 1)) !=
        canon_density(squarefree_density_experiment(2, 30, 4)))
        ok = false;
    if (canon_density(maximality_density_experiment(3, 5, 1)) !=
        canon_density(maximality_density_experiment(3, 5, 3)))
        ok = false;
    C3Report a = c3_volume(200000, 3000.0, 7, 1), b = c3_volume(200000, 3000.0, 7, 3);
    if (a.estimate != b.estimate) ok = false;
    QrFractionReport qa = qr_fraction_experiment(3, 6, 500, 9, 1);
    QrFractionReport qb = qr_fraction_experiment(3, 6, 500, 9, 4);
    if (qa.strong_hits != qb.strong_hits || qa.undetermined != qb.undetermined) ok = false;
    MonogenicReport ma = monogenic_count_experiment(3, 4, 1);
    MonogenicReport mb = monogenic_count_experiment(3, 4, 2);
    if (ma.counts != mb.counts || ma.undetermined != mb.undetermined) ok = false;
    detail = " (density, c3vol, qr-fraction, monogenic across thread counts)";
    return ok;
}

const std::vector<Criterion> kCriteria = {
    {"c1", "local density oracle equivalence on (n,p) in {2,3,4}x{2,3,5}", c1_local_density},
    {"c2", "maximality oracle equivalence: brute force = 1 - 1/p^2", c2_maximality_density},
    {"c3", "sigma_m roundtrip: f recovered and |Q| = m, 1000 samples", c3_roundtrip},
    {"c4", "strong divisibility of sigma_m images at odd p | m", c4_strong_divisibility},
    {"c5", "Q^2 | disc on integer W0 points", c5_q2_divides_disc},
    {"c6", "Q invariance suite: homogeneity, SL2, G0 weight", c6_q_invariance},
    {"c7", "global densities: n=2 X=100 (tol .01), n=3 X=20 (tol .02)", c7_global_density},
    {"c8", "Mobius sieve identity, exact", c8_mobius},
    {"c9", "tail counts: monotone and complement-consistent", c9_tail},
    {"c10", "lattice suite: gram, scaling lemma, qr-fraction trend", c10_lattice_suite},
    {"c11", "C3 volume: Monte Carlo within 5% of the gamma closed form", c11_c3_volume},
    {"c12", "determinism across seeds and thread counts", c12_determinism},
};

}  // namespace

int main(int argc, char** argv) {
    std::string which = argc > 1 ? argv[1] : "all";
    int failed = 0, ran = 0;
    for (const auto& c : kCriteria) {
        if (which != "all" && which != c.name) continue;
        ++ran;
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string(" (exception: ") + e.what() + ")";
        }
        std::printf("%s %s: %s%s\n", ok ? "PASS" : "FAIL", c.name, c.summary, detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failed;
    }
    if (ran == 0) {
        std::fprintf(stderr, "unknown criterion '%s'\n", which.c_str());
        return 2;
    }
    return failed == 0 ? 0 : 1;
}
