#ifndef DISCSIEVE_SIEVELAB_HPP
#define DISCSIEVE_SIEVELAB_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "boxenum.hpp"
#include "poly.hpp"

namespace discsieve {

struct DensityReport {
    int n = 0;
    int64_t X = 0;
    uint64_t total = 0;
    uint64_t hits = 0;
    Rat empirical;            // hits/total
    double theoretical = 0;   // truncated Euler product (or 6/pi^2)
    double abs_error = 0;     // |empirical - theoretical|
    uint64_t prime_bound = 0; // Euler-product truncation
    double truncation_tail = 0;
    std::string predicate;    // "squarefree_disc" or "maximal_order"
    std::string method;       // "row_sieve" or "per_poly"
    int threads = 1;
    double wall_time = 0;     // seconds; excluded from deterministic output
};

// Fraction of the box with squarefree discriminant, against the truncated
// prod_p lambda_n(p).
DensityReport squarefree_density_experiment(int n, int64_t X, int threads = 1,
                                            uint64_t prime_bound = 10000);

// Fraction of the box that is maximal at every prime p with p^2 | disc,
// against 6/pi^2.
DensityReport maximality_density_experiment(int n, int64_t X, int threads = 1,
                                            uint64_t prime_bound = 10000);

struct SieveCheckReport {
    int n = 0;
    int64_t X = 0;
    uint64_t box = 0;
    Int lhs;  // #{f : disc squarefree}
    Int rhs;  // sum_m mu(m) #{f : m^2 | disc}
    bool equal = false;
    std::vector<std::pair<Int, Int>> terms;  // (m, #W_{m,X}) for m > 1 with hits
};

// Exact Mobius identity on the box (inclusion-exclusion, no tolerance).
SieveCheckReport mobius_sieve_identity_check(int n, int64_t X);

struct TailReport {
    int n = 0;
    int64_t X = 0;
    uint64_t box = 0;
    uint64_t nonsquarefree = 0;
    std::vector<std::pair<int64_t, uint64_t>> counts;  // (M, #{f: some squarefree m>M, m^2|disc})
    // per-prime split of p^2|disc hits by classification
    std::map<uint64_t, std::pair<uint64_t, uint64_t>> strong_weak;  // p -> (strong, weak)
    uint64_t zero_disc = 0;
};

TailReport tail_counts(int n, int64_t X, const std::vector<int64_t>& thresholds);

struct ReducibleReport {
    int n = 0;
    int64_t X = 0;
    uint64_t box = 0;
    uint64_t count = 0;
    Rat fraction;
    // rational reducibility only: the even-n g(x)*gbar(x) quadratic-extension
    // refinement is not detected
    std::string scope = "rational_factors_only";
};

ReducibleReport reducible_count(int n, int64_t X);

struct C3Report {
    uint64_t samples = 0;
    double truncation = 0;   // |a2| <= T
    uint64_t seed = 0;
    double estimate = 0;     // Monte Carlo volume of |disc(x^3+a2x+a3)| < 1
    double closed_form = 0;  // gamma-expression value
    double tail_bound = 0;   // analytic bound on the untruncated remainder
    bool truncation_warning = false;  // tail bound exceeds 1% of estimate
    double rel_err = 0;      // |estimate - closed_form| / closed_form
    int threads = 1;
};

C3Report c3_volume(uint64_t samples, double truncation, uint64_t seed, int threads = 1);

// Internal predicate helpers shared with tests: exact per-polynomial path.
bool poly_disc_squarefree(const MonicPoly& f);  // false on disc = 0
bool poly_is_maximal(const MonicPoly& f);       // Dedekind at all p^2 | disc; false on disc = 0

}  // namespace discsieve

#endif
