#ifndef DISCSIEVE_ROOTS_HPP
#define DISCSIEVE_ROOTS_HPP

#include <complex>
#include <vector>

#include "poly.hpp"

namespace discsieve {

struct CertifiedRoots {
    std::vector<std::complex<double>> z;  // all n roots; real ones have Im == 0
    std::vector<double> radius;           // per-root certified inclusion radius
    int r = 0;                            // real roots
    int s = 0;                            // complex conjugate pairs
    double max_rel_radius = 0;
};

// Simultaneous (Aberth) iteration refined until the inclusion disks
// D(z_k, n|f(z_k)| / prod_{j != k} |z_k - z_j|) are pairwise disjoint and
// small in relative terms. Real roots are snapped to the axis when the disk
// crosses it and f changes sign there. Throws on non-convergence; requires
// disc(f) != 0.
CertifiedRoots certified_roots(const MonicPoly& f);

// max |root|: the sup archimedean absolute value of theta
double sup_norm_theta(const CertifiedRoots& rts);

}  // namespace discsieve

#endif
