#include "lattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>

#include "boxenum.hpp"
#include "budget.hpp"
#include "exactdet.hpp"
#include "parallel.hpp"
#include "primes.hpp"
#include "rng.hpp"

namespace discsieve {

const char* to_string(Tri t) {
    switch (t) {
        case Tri::False: return "false";
        case Tri::True: return "true";
        case Tri::Undetermined: return "undetermined";
    }
    return "?";
}

const char* to_string(Uniqueness u) {
    switch (u) {
        case Uniqueness::unique: return "unique";
        case Uniqueness::tied: return "tied";
        case Uniqueness::undetermined: return "undetermined";
    }
    return "?";
}

double EmbeddedLattice::ip(const std::vector<int64_t>& u, const std::vector<int64_t>& v) const {
    double acc = 0;
    for (int i = 0; i < n; ++i) {
        if (u[size_t(i)] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (v[size_t(j)] == 0) continue;
            acc += double(u[size_t(i)]) * double(v[size_t(j)]) * gram[size_t(i) * size_t(n) + size_t(j)];
        }
    }
    return acc;
}

EmbeddedLattice embed(const MonicPoly& f) {
    const int n = f.degree();
    CertifiedRoots rts = certified_roots(f);
    EmbeddedLattice L;
    L.n = n;
    L.r = rts.r;
    L.s = rts.s;
    L.root_error_bound = rts.max_rel_radius;
    L.basis.assign(size_t(n) * size_t(n), 0.0);

    // rows: real embeddings first (ascending), then (Re, Im) per pair with
    // positive imaginary representative, ordered by (Re, Im)
    std::vector<double> reals;
    std::vector<std::complex<double>> pairs;
    for (int k = 0; k < n; ++k) {
        if (rts.z[size_t(k)].imag() == 0.0) reals.push_back(rts.z[size_t(k)].real());
        else if (rts.z[size_t(k)].imag() > 0) pairs.push_back(rts.z[size_t(k)]);
    }
    std::sort(reals.begin(), reals.end());
    std::sort(pairs.begin(), pairs.end(), [](auto a, auto b) {
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
    });
    for (int j = 0; j < n; ++j) {  // column j = theta^j
        int row = 0;
        for (double x : reals) L.basis[size_t(row++) * size_t(n) + size_t(j)] = std::pow(x, j);
        for (auto zc : pairs) {
            std::complex<double> w = std::pow(zc, j);
            L.basis[size_t(row++) * size_t(n) + size_t(j)] = w.real();
            L.basis[size_t(row++) * size_t(n) + size_t(j)] = w.imag();
        }
    }
    L.gram.assign(size_t(n) * size_t(n), 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double acc = 0;
            for (int k = 0; k < n; ++k)
                acc += L.basis[size_t(k) * size_t(n) + size_t(i)] * L.basis[size_t(k) * size_t(n) + size_t(j)];
            L.gram[size_t(i) * size_t(n) + size_t(j)] = acc;
        }
    return L;
}

namespace {

using Vec = std::vector<int64_t>;

struct WorkingBasis {
    const EmbeddedLattice* L;
    std::vector<Vec> cols;  // current basis vectors in power coordinates

    double ip(int i, int j) const { return L->ip(cols[size_t(i)], cols[size_t(j)]); }
};

// textbook LLL (delta = 0.99) on the quadratic form given by L.gram,
// recomputing Gram-Schmidt data each round; n <= 6 so cost is irrelevant
void lll_reduce(WorkingBasis& wb) {
    const int n = wb.L->n;
    const double delta = 0.99;
    auto gs = [&](std::vector<std::vector<double>>& mu, std::vector<double>& B) {
        mu.assign(size_t(n), std::vector<double>(size_t(n), 0.0));
        B.assign(size_t(n), 0.0);
        std::vector<std::vector<double>> gso(size_t(n), std::vector<double>(size_t(n), 0.0));
        // work in the inner-product space spanned by the basis itself
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) gso[size_t(i)][size_t(j)] = wb.ip(i, j);
        }
        // B[i], mu[i][j] from the Gram matrix by the standard recurrences
        for (int i = 0; i < n; ++i) {
            B[size_t(i)] = gso[size_t(i)][size_t(i)];
            for (int j = 0; j < i; ++j) {
                double m = gso[size_t(i)][size_t(j)];
                for (int k = 0; k < j; ++k) m -= mu[size_t(i)][size_t(k)] * mu[size_t(j)][size_t(k)] * B[size_t(k)];
                mu[size_t(i)][size_t(j)] = B[size_t(j)] != 0 ? m / B[size_t(j)] : 0;
                B[size_t(i)] -= mu[size_t(i)][size_t(j)] * mu[size_t(i)][size_t(j)] * B[size_t(j)];
            }
        }
    };
    std::vector<std::vector<double>> mu;
    std::vector<double> B;
    int k = 1;
    int guard = 0;
    gs(mu, B);
    while (k < n && ++guard < 10000) {
        // size-reduce column k against j < k
        for (int j = k - 1; j >= 0; --j) {
            double m = mu[size_t(k)][size_t(j)];
            if (std::fabs(m) > 0.5) {
                int64_t q = int64_t(std::llround(m));
                for (int t = 0; t < n; ++t) wb.cols[size_t(k)][size_t(t)] -= q * wb.cols[size_t(j)][size_t(t)];
                gs(mu, B);
            }
        }
        if (B[size_t(k)] >= (delta - mu[size_t(k)][size_t(k - 1)] * mu[size_t(k)][size_t(k - 1)]) * B[size_t(k - 1)]) {
            ++k;
        } else {
            std::swap(wb.cols[size_t(k)], wb.cols[size_t(k - 1)]);
            gs(mu, B);
            k = std::max(k - 1, 1);
        }
    }
}

// Fincke-Pohst with Schnorr-Euchner ordering: visits every integer z with
// (z - c)^T Q (z - c) <= bound for positive definite Q, nearest-first per
// level, and emits (z, cost). `bound` is read live, so the emit callback may
// shrink it (never below the tie window of the running minimum) to prune.
void fp_enumerate(const std::vector<std::vector<double>>& Qm, const std::vector<double>& center,
                  double& bound, uint64_t& nodes,
                  const std::function<void(const Vec&, double)>& emit) {
    const int m = int(Qm.size());
    // q decomposition: Q(z-c) = sum_i q_ii (z_i - c_i + sum_{j>i} q_ij (z_j - c_j))^2
    std::vector<std::vector<double>> q = Qm;
    for (int i = 0; i < m; ++i) {
        if (q[size_t(i)][size_t(i)] <= 0) throw std::runtime_error("enumeration: degenerate Gram");
        for (int j = i + 1; j < m; ++j) q[size_t(j)][size_t(i)] = q[size_t(i)][size_t(j)] / q[size_t(i)][size_t(i)];
        for (int j = i + 1; j < m; ++j)
            for (int k = j; k < m; ++k)
                q[size_t(j)][size_t(k)] -= q[size_t(j)][size_t(i)] * q[size_t(i)][size_t(k)];
    }
    Vec z(size_t(m), 0);
    std::vector<double> partial(size_t(m) + 1, 0.0);
    std::function<void(int)> rec = [&](int i) {
        if (++nodes > 4'000'000ULL) throw budget_error("shortest-vector enumeration too large");
        if (i < 0) {
            emit(z, partial[0]);
            return;
        }
        double shift = 0;
        for (int j = i + 1; j < m; ++j)
            shift += q[size_t(i)][size_t(j)] * (double(z[size_t(j)]) - center[size_t(j)]);
        const double ctr = center[size_t(i)] - shift;
        const double qi = q[size_t(i)][size_t(i)];
        auto visit = [&](int64_t v) -> bool {  // false once past the live bound
            double d = double(v) - ctr;
            double cost = partial[size_t(i) + 1] + qi * d * d;
            if (cost > bound * (1 + 1e-12) + 1e-9) return false;
            z[size_t(i)] = v;
            partial[size_t(i)] = cost;
            rec(i - 1);
            return true;
        };
        int64_t base = int64_t(std::llround(ctr));
        int64_t up = base, down = base - 1;
        bool more_up = true, more_down = true;
        while (more_up || more_down) {
            if (more_up) {
                if (visit(up)) ++up;
                else more_up = false;
            }
            if (more_down) {
                if (visit(down)) --down;
                else more_down = false;
            }
        }
        z[size_t(i)] = 0;
    };
    partial[size_t(m)] = 0;
    if (bound >= 0) rec(m - 1);
}

// Unimodular W whose first k columns are the given primitive vectors, via
// Smith diagonalization with transform tracking: R M C = [I; 0] gives
// M = Rinv [Cinv; 0], so W = Rinv blockdiag(Cinv, I).
std::vector<Vec> completion_basis(const std::vector<Vec>& chosen, int n) {
    const int k = int(chosen.size());
    std::vector<std::vector<Int>> M(size_t(n), std::vector<Int>(size_t(k), Int(0)));
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i) M[size_t(i)][size_t(j)] = int_from_i64(chosen[size_t(j)][size_t(i)]);
    std::vector<std::vector<Int>> Rinv(size_t(n), std::vector<Int>(size_t(n), Int(0)));
    std::vector<std::vector<Int>> Cinv(size_t(k), std::vector<Int>(size_t(k), Int(0)));
    for (int i = 0; i < n; ++i) Rinv[size_t(i)][size_t(i)] = 1;
    for (int i = 0; i < k; ++i) Cinv[size_t(i)][size_t(i)] = 1;

    auto row_addmul = [&](int i, int j, const Int& c) {  // row_i += c row_j
        for (int t = 0; t < k; ++t) M[size_t(i)][size_t(t)] += c * M[size_t(j)][size_t(t)];
        for (int t = 0; t < n; ++t) Rinv[size_t(t)][size_t(j)] -= c * Rinv[size_t(t)][size_t(i)];
    };
    auto row_swap = [&](int i, int j) {
        std::swap(M[size_t(i)], M[size_t(j)]);
        for (int t = 0; t < n; ++t) std::swap(Rinv[size_t(t)][size_t(i)], Rinv[size_t(t)][size_t(j)]);
    };
    auto col_addmul = [&](int i, int j, const Int& c) {  // col_i += c col_j
        for (int t = 0; t < n; ++t) M[size_t(t)][size_t(i)] += c * M[size_t(t)][size_t(j)];
        for (int t = 0; t < k; ++t) Cinv[size_t(j)][size_t(t)] -= c * Cinv[size_t(i)][size_t(t)];
    };
    auto col_swap = [&](int i, int j) {
        for (int t = 0; t < n; ++t) std::swap(M[size_t(t)][size_t(i)], M[size_t(t)][size_t(j)]);
        std::swap(Cinv[size_t(i)], Cinv[size_t(j)]);
    };
    auto row_negate = [&](int i) {
        for (int t = 0; t < k; ++t) M[size_t(i)][size_t(t)] = -M[size_t(i)][size_t(t)];
        for (int t = 0; t < n; ++t) Rinv[size_t(t)][size_t(i)] = -Rinv[size_t(t)][size_t(i)];
    };

    for (int t = 0; t < k; ++t) {
        // pivot search
        int pi = -1, pj = -1;
        for (int i = t; i < n && pi < 0; ++i)
            for (int j = t; j < k; ++j)
                if (M[size_t(i)][size_t(j)] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) throw std::logic_error("completion: rank deficiency (vectors not independent)");
        if (pi != t) row_swap(pi, t);
        if (pj != t) col_swap(pj, t);
        for (;;) {
            bool clean = true;
            for (int i = t + 1; i < n; ++i) {
                if (M[size_t(i)][size_t(t)] == 0) continue;
                Int quo = M[size_t(i)][size_t(t)] / M[size_t(t)][size_t(t)];
                if (quo != 0) row_addmul(i, t, -quo);
                if (M[size_t(i)][size_t(t)] != 0) {  // remainder smaller than pivot
                    row_swap(i, t);
                    clean = false;
                }
            }
            for (int j = t + 1; j < k; ++j) {
                if (M[size_t(t)][size_t(j)] == 0) continue;
                Int quo = M[size_t(t)][size_t(j)] / M[size_t(t)][size_t(t)];
                if (quo != 0) col_addmul(j, t, -quo);
                if (M[size_t(t)][size_t(j)] != 0) {
                    col_swap(j, t);
                    clean = false;
                }
            }
            if (clean) break;
        }
        if (M[size_t(t)][size_t(t)] < 0) row_negate(t);
        if (M[size_t(t)][size_t(t)] != 1)
            throw std::logic_error("completion: chosen vectors are not primitive");
    }

    // W = Rinv * blockdiag(Cinv, I)
    std::vector<Vec> W(size_t(n), Vec(size_t(n), 0));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            Int acc(0);
            if (j < k) {
                for (int t = 0; t < k; ++t) acc += Rinv[size_t(i)][size_t(t)] * Cinv[size_t(t)][size_t(j)];
            } else {
                acc = Rinv[size_t(i)][size_t(j)];
            }
            auto v = int_to_i64(acc);
            if (!v) throw budget_error("completion basis entries exceed the int64 range");
            W[size_t(j)][size_t(i)] = *v;  // column j as a vector
        }
    }
    // first k columns must reproduce the chosen vectors
    for (int j = 0; j < k; ++j)
        if (W[size_t(j)] != chosen[size_t(j)]) throw std::logic_error("completion does not extend the prefix");
    return W;
}

Vec sign_normalize(Vec v) {
    for (int64_t c : v) {
        if (c > 0) break;
        if (c < 0) {
            for (int64_t& x : v) x = -x;
            break;
        }
    }
    return v;
}

struct StepResult {
    std::vector<Vec> min_class;     // candidates within rel 1e-9 of the minimum
    std::vector<Vec> near_class;    // within (1e-9, 1e-6]: numerically ambiguous
    double min_norm = 0;
};

constexpr double kTieTol = 1e-6;
constexpr double kEqualTol = 1e-9;

// Shortest extendable vectors after `chosen`, via the projected lattice:
// in completion coordinates v = W [x; y], extendability is gcd(y) = 1 and
// |v|^2 = sigma(y) + (x - x*(y))^T A (x - x*(y)) with sigma the Schur form.
// Enumerating y in the projection keeps the search tiny even on lattices
// whose minima span many orders of magnitude.
StepResult step_candidates(const EmbeddedLattice& L, const WorkingBasis& enum_basis,
                           const std::vector<Vec>& chosen) {
    const int n = L.n;
    const int k = int(chosen.size());
    const int m = n - k;

    std::vector<Vec> W;
    if (k == 0) {
        W.assign(size_t(n), Vec(size_t(n), 0));
        for (int i = 0; i < n; ++i) W[size_t(i)][size_t(i)] = 1;
    } else {
        W = completion_basis(chosen, n);
    }
    // Gram in W coordinates
    std::vector<std::vector<double>> GW(size_t(n), std::vector<double>(size_t(n), 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) GW[size_t(i)][size_t(j)] = GW[size_t(j)][size_t(i)] = L.ip(W[size_t(i)], W[size_t(j)]);

    // A = top-left k x k, inverted by Gaussian elimination
    std::vector<std::vector<double>> Ainv(size_t(k), std::vector<double>(size_t(k), 0.0));
    if (k > 0) {
        std::vector<std::vector<double>> a(size_t(k), std::vector<double>(2 * size_t(k), 0.0));
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) a[size_t(i)][size_t(j)] = GW[size_t(i)][size_t(j)];
            a[size_t(i)][size_t(k + i)] = 1;
        }
        for (int c = 0; c < k; ++c) {
            int piv = c;
            for (int i = c + 1; i < k; ++i)
                if (std::fabs(a[size_t(i)][size_t(c)]) > std::fabs(a[size_t(piv)][size_t(c)])) piv = i;
            std::swap(a[size_t(c)], a[size_t(piv)]);
            double d = a[size_t(c)][size_t(c)];
            if (d == 0) throw std::runtime_error("reduction: singular prefix Gram");
            for (int j = 0; j < 2 * k; ++j) a[size_t(c)][size_t(j)] /= d;
            for (int i = 0; i < k; ++i) {
                if (i == c) continue;
                double f = a[size_t(i)][size_t(c)];
                if (f == 0) continue;
                for (int j = 0; j < 2 * k; ++j) a[size_t(i)][size_t(j)] -= f * a[size_t(c)][size_t(j)];
            }
        }
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) Ainv[size_t(i)][size_t(j)] = a[size_t(i)][size_t(k + j)];
    }
    // Schur complement S = C - B^T A^{-1} B on the complement block
    std::vector<std::vector<double>> S(size_t(m), std::vector<double>(size_t(m), 0.0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            double acc = GW[size_t(k + i)][size_t(k + j)];
            for (int a2 = 0; a2 < k; ++a2)
                for (int b2 = 0; b2 < k; ++b2)
                    acc -= GW[size_t(a2)][size_t(k + i)] * Ainv[size_t(a2)][size_t(b2)] * GW[size_t(b2)][size_t(k + j)];
            S[size_t(i)][size_t(j)] = acc;
        }

    std::vector<double> norms;
    for (int i = 0; i < n; ++i)
        norms.push_back(enum_basis.L->ip(enum_basis.cols[size_t(i)], enum_basis.cols[size_t(i)]));
    std::sort(norms.begin(), norms.end());
    double bound = norms[std::min(size_t(k), norms.size() - 1)] * 1.01;

    std::vector<std::vector<double>> A(size_t(k), std::vector<double>(size_t(k), 0.0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) A[size_t(i)][size_t(j)] = GW[size_t(i)][size_t(j)];

    const std::vector<double> zero_center(size_t(m), 0.0);
    for (int attempt = 0;; ++attempt) {
        if (attempt > 60) throw std::runtime_error("minkowski step: no extendable vector found");
        double best = HUGE_VAL;
        double dyn = bound;  // shrinks to best * (1 + tie window) as hits arrive
        std::vector<std::pair<double, Vec>> cands;
        uint64_t nodes = 0;
        double bx = 0;  // live bound of the inner (lift) enumeration
        double sigma_cur = 0;
        fp_enumerate(S, zero_center, dyn, nodes, [&](const Vec& y, double sigma) {
            uint64_t g = 0;
            for (int64_t c : y) g = std::gcd(g, uint64_t(c < 0 ? -c : c));
            if (g != 1) return;  // not extendable (or y = 0)
            sigma_cur = sigma;
            auto push = [&](const Vec& x) {
                Vec v(size_t(n), 0);
                for (int j = 0; j < k; ++j)
                    for (int t = 0; t < n; ++t) v[size_t(t)] += x[size_t(j)] * W[size_t(j)][size_t(t)];
                for (int j = 0; j < m; ++j)
                    for (int t = 0; t < n; ++t) v[size_t(t)] += y[size_t(j)] * W[size_t(k + j)][size_t(t)];
                double norm = L.norm2(v);
                if (norm > dyn * (1 + 1e-12)) return;
                cands.emplace_back(norm, sign_normalize(std::move(v)));
                best = std::min(best, norm);
                dyn = std::min(dyn, best * (1 + kTieTol) + 1e-9);
                bx = std::min(bx, dyn - sigma_cur + 1e-9);
            };
            if (k == 0) {
                push({});
                return;
            }
            // x* = -A^{-1} (B y)
            std::vector<double> by(size_t(k), 0.0), xstar(size_t(k), 0.0);
            for (int a2 = 0; a2 < k; ++a2)
                for (int j = 0; j < m; ++j) by[size_t(a2)] += GW[size_t(a2)][size_t(k + j)] * double(y[size_t(j)]);
            for (int i2 = 0; i2 < k; ++i2)
                for (int a2 = 0; a2 < k; ++a2) xstar[size_t(i2)] -= Ainv[size_t(i2)][size_t(a2)] * by[size_t(a2)];
            bx = dyn - sigma + 1e-9;
            fp_enumerate(A, xstar, bx, nodes, [&](const Vec& x, double) { push(x); });
        });
        if (cands.empty()) {
            bound *= 2;
            continue;
        }
        StepResult res;
        res.min_norm = best;
        std::sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
            return a.first < b.first || (a.first == b.first && a.second < b.second);
        });
        for (auto& [norm, v] : cands) {
            bool dup = false;
            auto in = [&](std::vector<Vec>& cls) {
                for (const Vec& u : cls)
                    if (u == v) dup = true;
            };
            in(res.min_class);
            in(res.near_class);
            if (dup) continue;
            if (norm <= best * (1 + kEqualTol)) res.min_class.push_back(v);
            else if (norm <= best * (1 + kTieTol)) res.near_class.push_back(v);
        }
        return res;
    }
}

struct ReductionState {
    const EmbeddedLattice* L;
    WorkingBasis lll;  // LLL-preprocessed basis used for enumeration
};

ReductionState prepare(const EmbeddedLattice& L) {
    ReductionState st;
    st.L = &L;
    st.lll.L = &L;
    st.lll.cols.assign(size_t(L.n), Vec(size_t(L.n), 0));
    for (int i = 0; i < L.n; ++i) st.lll.cols[size_t(i)][size_t(i)] = 1;
    lll_reduce(st.lll);
    return st;
}

}  // namespace

ReductionResult minkowski_reduce(const EmbeddedLattice& L) {
    const int n = L.n;
    if (n > 6) throw budget_error("minkowski_reduce supports n <= 6");
    ReductionState st = prepare(L);
    ReductionResult out;
    out.unique = Uniqueness::unique;
    std::vector<Vec> chosen;
    for (int i = 0; i < n; ++i) {
        StepResult sr = step_candidates(L, st.lll, chosen);
        if (sr.min_class.size() > 1) out.unique = Uniqueness::tied;
        else if (!sr.near_class.empty() && out.unique == Uniqueness::unique)
            out.unique = Uniqueness::undetermined;
        chosen.push_back(sr.min_class.front());  // deterministic: lexicographic representative
    }
    out.transform = chosen;

    bool trivial = true;
    for (int i = 0; i < n && trivial; ++i) {
        Vec e(size_t(n), 0);
        e[size_t(i)] = 1;
        if (sign_normalize(chosen[size_t(i)]) != e) trivial = false;
    }
    out.is_minkowski_reduced = trivial;

    // 1, h_1(theta), ..., h_{n-1}(theta) shape: column k has top coordinate k
    // with unit entry
    bool tri = true;
    for (int k = 0; k < n && tri; ++k) {
        const Vec& v = chosen[size_t(k)];
        if (std::llabs(v[size_t(k)]) != 1) tri = false;
        for (int j = k + 1; j < n; ++j)
            if (v[size_t(j)] != 0) tri = false;
    }
    if (tri) {
        std::vector<MonicPoly> hs;
        for (int k = 1; k < n; ++k) {
            Vec v = chosen[size_t(k)];
            if (v[size_t(k)] < 0)
                for (int64_t& x : v) x = -x;
            MonicPoly h;
            h.a.resize(size_t(k));
            for (int i = 1; i <= k; ++i) h.a[size_t(i - 1)] = int_from_i64(v[size_t(k - i)]);
            hs.push_back(std::move(h));
        }
        out.h_polys = std::move(hs);
    }
    return out;
}

namespace {

bool column_triangular(const Vec& v, int k, int n) {
    if (std::llabs(v[size_t(k)]) != 1) return false;
    for (int j = k + 1; j < n; ++j)
        if (v[size_t(j)] != 0) return false;
    return true;
}

Tri quasi_search(const EmbeddedLattice& L, const ReductionState& st, std::vector<Vec>& chosen,
                 int step, int& branches) {
    const int n = L.n;
    if (step == n) return Tri::True;
    if (++branches > 512) return Tri::Undetermined;
    StepResult sr = step_candidates(L, st.lll, chosen);
    bool saw_undetermined = false;
    bool any_tri = false;
    for (const Vec& v : sr.min_class) {
        if (!column_triangular(v, step, n)) continue;
        any_tri = true;
        chosen.push_back(v);
        Tri t = quasi_search(L, st, chosen, step + 1, branches);
        chosen.pop_back();
        if (t == Tri::True) return Tri::True;
        if (t == Tri::Undetermined) saw_undetermined = true;
    }
    if (!any_tri) {
        // a triangular candidate in the numerically ambiguous band means the
        // tolerance cannot settle the answer
        for (const Vec& v : sr.near_class)
            if (column_triangular(v, step, n)) return Tri::Undetermined;
        return Tri::False;
    }
    return saw_undetermined ? Tri::Undetermined : Tri::False;
}

}  // namespace

Tri is_quasi_reduced(const MonicPoly& f) {
    EmbeddedLattice L = embed(f);
    if (L.n > 6) throw budget_error("quasi-reduction predicates support n <= 6");
    ReductionState st = prepare(L);
    std::vector<Vec> chosen;
    int branches = 0;
    return quasi_search(L, st, chosen, 0, branches);
}

Tri is_strongly_quasi_reduced(const MonicPoly& f) {
    EmbeddedLattice L = embed(f);
    if (L.n > 6) throw budget_error("quasi-reduction predicates support n <= 6");
    ReductionResult red = minkowski_reduce(L);
    if (red.unique == Uniqueness::tied) return Tri::False;
    if (red.unique == Uniqueness::undetermined) return Tri::Undetermined;
    return red.h_polys ? Tri::True : Tri::False;
}

// ---------------------------------------------------------------------------
// monogenic counting experiment
// ---------------------------------------------------------------------------

namespace {

struct A1ZeroBox {
    int n;
    int64_t Y;
    std::vector<int64_t> half;  // for a_2..a_n
    uint64_t size = 1;
};

A1ZeroBox make_a1zero_box(int n, int64_t Y) {
    A1ZeroBox b;
    b.n = n;
    b.Y = Y;
    int64_t pw = Y;
    for (int i = 2; i <= n; ++i) {
        pw *= Y;
        b.half.push_back(pw - 1);
        b.size *= uint64_t(2 * (pw)-1);
    }
    return b;
}

void decode_a1zero(const A1ZeroBox& b, uint64_t idx, std::vector<int64_t>& a) {
    a.assign(size_t(b.n), 0);
    for (int i = b.n - 2; i >= 0; --i) {
        uint64_t radix = uint64_t(2 * b.half[size_t(i)] + 1);
        a[size_t(i) + 1] = int64_t(idx % radix) - b.half[size_t(i)];
        idx /= radix;
    }
}

MonicPoly poly_of(const std::vector<int64_t>& a) {
    MonicPoly f;
    f.a.reserve(a.size());
    for (int64_t v : a) f.a.push_back(int_from_i64(v));
    return f;
}

// (-1)^n f(-x): theta -> -theta gives an isomorphic ring, so the monogenic
// count works with orbits under this mirror
MonicPoly mirror_poly(const MonicPoly& f) {
    MonicPoly out = f;
    for (size_t i = 0; i < out.a.size(); ++i)
        if (i % 2 == 0) out.a[i] = -out.a[i];  // a_{i+1} picks (-1)^{i+1}
    return out;
}

bool is_mirror_canonical(const MonicPoly& f) {
    MonicPoly m = mirror_poly(f);
    for (size_t i = 0; i < f.a.size(); ++i) {
        int c = cmp(f.a[i], m.a[i]);
        if (c < 0) return true;
        if (c > 0) return false;
    }
    return true;  // self-mirrored
}

// f == sigma * g(eps x + c) for monic g?
bool same_up_to_shift_sign(const MonicPoly& f, const MonicPoly& g) {
    const int n = f.degree();
    if (g.degree() != n) return false;
    int64_t C = int64_t(std::ceil(fujiwara_bound(f) + fujiwara_bound(g))) + 1;
    for (int eps : {1, -1}) {
        for (int64_t c = -C; c <= C; ++c) {
            MonicPoly sh = shift(g, int_from_i64(c));  // g(x + c)
            // then x -> eps x: coefficient of x^{n-i} picks eps^{n-i}; make monic
            MonicPoly cand = sh;
            if (eps == -1) {
                for (int i = 1; i <= n; ++i)
                    if ((n - i) % 2 == 1) cand.a[size_t(i - 1)] = -cand.a[size_t(i - 1)];
                if (n % 2 == 1)
                    for (auto& x : cand.a) x = -x;  // renormalize leading -1
            }
            if (cand == f) return true;
        }
    }
    return false;
}

}  // namespace

MonogenicReport monogenic_count_experiment(int n, int64_t Y, int threads) {
    if (n < 2 || n > 4) throw std::invalid_argument("monogenic experiment supports 2 <= n <= 4");
    if (Y < 2) throw std::invalid_argument("monogenic experiment requires Y >= 2");
    MonogenicReport rep;
    rep.n = n;
    rep.Y = Y;
    rep.predicted_exponent = double((n - 1) * (n + 2)) / 2.0;
    for (int64_t y = Y; y >= 2; y /= 2) rep.Ys.push_back(y);
    std::sort(rep.Ys.begin(), rep.Ys.end());
    if (rep.Ys.size() > 3) rep.Ys.erase(rep.Ys.begin(), rep.Ys.end() - 3);

    std::vector<MonicPoly> witnesses;  // counted set at the largest Y (capped)
    const uint64_t witness_cap = 400;

    for (int64_t y : rep.Ys) {
        A1ZeroBox box = make_a1zero_box(n, y);
        check_budget(box.size, "monogenic experiment");
        rep.box.push_back(box.size);
        std::vector<uint64_t> cnt(64, 0), und(64, 0);
        std::vector<std::vector<MonicPoly>> wit(64);
        parallel_chunks(box.size, threads, [&](size_t chunk, uint64_t b, uint64_t e) {
            std::vector<int64_t> a;
            for (uint64_t idx = b; idx < e; ++idx) {
                decode_a1zero(box, idx, a);
                Int big;
                std::span<const int64_t> sp(a.data(), a.size());
                auto d = discriminant_i64(sp);
                MonicPoly f = poly_of(a);
                Int dd = d ? int_from_i64(*d) : discriminant(f);
                if (dd == 0 || !is_squarefree_int(dd)) continue;
                if (!is_mirror_canonical(f)) continue;  // one per theta -> -theta orbit
                if (is_reducible_over_Q(f)) continue;
                Tri t;
                try {
                    t = is_strongly_quasi_reduced(f);
                } catch (const std::runtime_error&) {
                    t = Tri::Undetermined;
                }
                if (t == Tri::True) {
                    ++cnt[chunk];
                    if (y == rep.Ys.back() && wit[chunk].size() < witness_cap) wit[chunk].push_back(f);
                } else if (t == Tri::Undetermined) {
                    ++und[chunk];
                }
            }
        });
        uint64_t c = 0, u = 0;
        for (size_t i = 0; i < 64; ++i) {
            c += cnt[i];
            u += und[i];
            for (auto& f : wit[i])
                if (witnesses.size() < witness_cap) witnesses.push_back(f);
        }
        rep.counts.push_back(c);
        rep.undetermined.push_back(u);
    }
    for (size_t i = 0; i + 1 < rep.Ys.size(); ++i) {
        double c0 = double(rep.counts[i]), c1 = double(rep.counts[i + 1]);
        double y0 = double(rep.Ys[i]), y1 = double(rep.Ys[i + 1]);
        rep.slopes.push_back(c0 > 0 && c1 > 0 ? std::log(c1 / c0) / std::log(y1 / y0) : 0.0);
    }
    // pairwise distinctness cross-check (Lemma-style): no f = sigma g(eps x+c)
    uint64_t total = rep.counts.empty() ? 0 : rep.counts.back();
    rep.pairwise_complete = total <= witness_cap;
    for (size_t i = 0; i < witnesses.size(); ++i)
        for (size_t j = i + 1; j < witnesses.size(); ++j) {
            ++rep.pairs_checked;
            if (same_up_to_shift_sign(witnesses[i], witnesses[j])) ++rep.distinct_violations;
        }
    return rep;
}

QrFractionReport qr_fraction_experiment(int n, int64_t X, uint64_t samples, uint64_t seed,
                                        int threads) {
    QrFractionReport rep;
    rep.n = n;
    rep.X = X;
    rep.seed = seed;
    Box box = make_box(n, X);
    rep.box = box.size;
    rep.exhaustive = box.size <= samples;
    rep.samples = rep.exhaustive ? box.size : samples;

    std::vector<uint64_t> hits(64, 0), und(64, 0);
    CounterRng rng{seed, 0};
    parallel_chunks(rep.samples, threads, [&](size_t chunk, uint64_t b, uint64_t e) {
        std::vector<int64_t> a(size_t(n), 0);
        for (uint64_t i = b; i < e; ++i) {
            uint64_t idx = rep.exhaustive ? i : rng.below(i, box.size);
            box.decode(idx, a);
            MonicPoly f = poly_of(a);
            if (discriminant(f) == 0) continue;
            Tri t;
            try {
                t = is_strongly_quasi_reduced(f);
            } catch (const std::runtime_error&) {
                t = Tri::Undetermined;
            }
            if (t == Tri::True) ++hits[chunk];
            else if (t == Tri::Undetermined) ++und[chunk];
        }
    });
    for (size_t i = 0; i < 64; ++i) {
        rep.strong_hits += hits[i];
        rep.undetermined += und[i];
    }
    rep.fraction = Rat(int_from_i64(int64_t(rep.strong_hits)), int_from_i64(int64_t(rep.samples)));
    rep.fraction.canonicalize();
    return rep;
}

}  // namespace discsieve
