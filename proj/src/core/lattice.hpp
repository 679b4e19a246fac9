#ifndef DISCSIEVE_LATTICE_HPP
#define DISCSIEVE_LATTICE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "poly.hpp"
#include "roots.hpp"

namespace discsieve {

enum class Tri { False, True, Undetermined };
const char* to_string(Tri t);

// R_f = Z-span of 1, theta, ..., theta^{n-1} embedded in R^n = R^r x C^s,
// complex places contributing (Re, Im) coordinates with no extra weighting.
struct EmbeddedLattice {
    int n = 0, r = 0, s = 0;
    std::vector<double> basis;  // row-major n x n; column j = image of theta^j
    std::vector<double> gram;   // basis^T basis
    double root_error_bound = 0;

    double ip(const std::vector<int64_t>& u, const std::vector<int64_t>& v) const;
    double norm2(const std::vector<int64_t>& u) const { return ip(u, u); }
};

EmbeddedLattice embed(const MonicPoly& f);  // requires disc != 0

enum class Uniqueness { unique, tied, undetermined };
const char* to_string(Uniqueness u);

struct ReductionResult {
    std::vector<std::vector<int64_t>> transform;  // columns = reduced basis in power coords
    bool is_minkowski_reduced = false;            // input basis was already reduced
    Uniqueness unique = Uniqueness::unique;
    std::optional<std::vector<MonicPoly>> h_polys;  // h_1..h_{n-1} when the basis is 1, h_i(theta)
};

// Successive shortest vectors subject to extension-to-basis (gcd of maximal
// minors = 1), Fincke-Pohst enumeration with LLL preprocessing. n <= 6.
ReductionResult minkowski_reduce(const EmbeddedLattice& L);

// Power basis Minkowski-reduced up to a unipotent upper-triangular integer
// change (basis 1, h_1(theta), ..., h_{n-1}(theta)); the strong variant also
// requires the Minkowski basis to be unique.
Tri is_quasi_reduced(const MonicPoly& f);
Tri is_strongly_quasi_reduced(const MonicPoly& f);

struct MonogenicReport {
    int n = 0;
    int64_t Y = 0;
    std::vector<int64_t> Ys;             // growth-table heights
    std::vector<uint64_t> box;           // a1 = 0 box sizes
    std::vector<uint64_t> counts;        // squarefree & irreducible & strongly quasi-reduced
    std::vector<uint64_t> undetermined;
    std::vector<double> slopes;          // log-log growth between consecutive heights
    double predicted_exponent = 0;       // (n-1)(n+2)/2
    uint64_t pairs_checked = 0;          // root-multiset distinctness cross-check
    uint64_t distinct_violations = 0;
    bool pairwise_complete = false;
};

// Counts monic f with a_1 = 0, height < Y, squarefree disc, irreducible and
// strongly quasi-reduced: pairwise non-isomorphic monogenized rings.
MonogenicReport monogenic_count_experiment(int n, int64_t Y, int threads = 1);

struct QrFractionReport {
    int n = 0;
    int64_t X = 0;
    uint64_t box = 0;
    uint64_t samples = 0;
    uint64_t strong_hits = 0;
    uint64_t undetermined = 0;
    uint64_t seed = 0;
    Rat fraction;  // strong_hits / samples
    bool exhaustive = false;
};

// Fraction of the height box that is strongly quasi-reduced; exhaustive when
// the box fits the budget, otherwise a seeded uniform sample.
QrFractionReport qr_fraction_experiment(int n, int64_t X, uint64_t samples, uint64_t seed,
                                        int threads = 1);

}  // namespace discsieve

#endif
