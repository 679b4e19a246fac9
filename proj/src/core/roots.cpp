#include "roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace discsieve {

namespace {

using cplx = std::complex<double>;

cplx horner(const std::vector<double>& c, cplx x) {
    cplx r(0);
    for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
    return r;
}

double horner_real(const std::vector<double>& c, double x) {
    double r = 0;
    for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
    return r;
}

}  // namespace

CertifiedRoots certified_roots(const MonicPoly& f) {
    const int n = f.degree();
    if (n < 1) throw std::invalid_argument("roots: degree must be >= 1");
    if (discriminant(f) == 0) throw std::invalid_argument("roots: zero discriminant");

    std::vector<double> c(size_t(n) + 1);  // ascending
    c[size_t(n)] = 1.0;
    for (int i = 1; i <= n; ++i) c[size_t(n - i)] = f.coeff(i).get_d();
    std::vector<double> dc(size_t(n), 0.0);  // derivative
    for (int i = 1; i <= n; ++i) dc[size_t(i - 1)] = double(i) * c[size_t(i)];

    const double R0 = std::max(fujiwara_bound(f) * 0.6, 0.5);
    std::vector<cplx> z(size_t(n), cplx(0));
    for (int k = 0; k < n; ++k) {
        double ang = 2.0 * std::numbers::pi * (k + 0.354) / n + 0.42;
        z[size_t(k)] = R0 * cplx(std::cos(ang), std::sin(ang));
    }

    const int max_iter = 400;
    bool converged = false;
    for (int it = 0; it < max_iter; ++it) {
        double worst = 0;
        for (int k = 0; k < n; ++k) {
            cplx fz = horner(c, z[size_t(k)]);
            cplx dz = horner(dc, z[size_t(k)]);
            cplx w = dz != cplx(0) ? fz / dz : fz;
            cplx sum(0);
            for (int j = 0; j < n; ++j)
                if (j != k) sum += 1.0 / (z[size_t(k)] - z[size_t(j)]);
            cplx denom = 1.0 - w * sum;
            cplx corr = denom != cplx(0) ? w / denom : w;
            z[size_t(k)] -= corr;
            worst = std::max(worst, std::abs(corr) / (1.0 + std::abs(z[size_t(k)])));
        }
        if (worst < 1e-15) {
            converged = true;
            break;
        }
    }
    if (!converged) throw std::runtime_error("roots: Aberth iteration did not converge");

    CertifiedRoots out;
    out.z = z;
    out.radius.resize(size_t(n));
    for (int k = 0; k < n; ++k) {
        double prod = 1.0;
        for (int j = 0; j < n; ++j)
            if (j != k) prod *= std::abs(z[size_t(k)] - z[size_t(j)]);
        double fz = std::abs(horner(c, z[size_t(k)]));
        double rad = prod > 0 ? double(n) * fz / prod : HUGE_VAL;
        out.radius[size_t(k)] = rad;
        double rel = rad / std::max(1.0, std::abs(z[size_t(k)]));
        out.max_rel_radius = std::max(out.max_rel_radius, rel);
    }
    if (out.max_rel_radius > 1e-12)
        throw std::runtime_error("roots: certified radii exceed the 1e-12 relative target");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(z[size_t(i)] - z[size_t(j)]) <= out.radius[size_t(i)] + out.radius[size_t(j)])
                throw std::runtime_error("roots: inclusion disks overlap (roots too close)");

    // snap real roots: disk crosses the axis and f changes sign across it
    std::vector<int> realidx, cplxidx;
    for (int k = 0; k < n; ++k) {
        double rad = out.radius[size_t(k)];
        if (std::abs(z[size_t(k)].imag()) <= rad) {
            double x0 = z[size_t(k)].real();
            double w = std::max(rad * 4.0, 1e-13 * (1.0 + std::abs(x0)));
            double lo = horner_real(c, x0 - w), hi = horner_real(c, x0 + w);
            if ((lo < 0 && hi > 0) || (lo > 0 && hi < 0) || lo == 0 || hi == 0) {
                out.z[size_t(k)] = cplx(x0, 0.0);
                realidx.push_back(k);
                continue;
            }
        }
        cplxidx.push_back(k);
    }
    if (cplxidx.size() % 2 != 0)
        throw std::runtime_error("roots: conjugate pairing failed");
    // verify the complex ones pair up as conjugates
    std::vector<int> rest = cplxidx;
    while (!rest.empty()) {
        int a = rest.back();
        rest.pop_back();
        cplx target = std::conj(out.z[size_t(a)]);
        auto best = rest.end();
        double bd = HUGE_VAL;
        for (auto it = rest.begin(); it != rest.end(); ++it) {
            double d = std::abs(out.z[size_t(*it)] - target);
            if (d < bd) {
                bd = d;
                best = it;
            }
        }
        if (best == rest.end() || bd > out.radius[size_t(a)] + out.radius[size_t(*best)] + 1e-12)
            throw std::runtime_error("roots: conjugate pairing failed");
        rest.erase(best);
    }
    out.r = int(realidx.size());
    out.s = int(cplxidx.size() / 2);
    return out;
}

double sup_norm_theta(const CertifiedRoots& rts) {
    double m = 0;
    for (const auto& z : rts.z) m = std::max(m, std::abs(z));
    return m;
}

}  // namespace discsieve
