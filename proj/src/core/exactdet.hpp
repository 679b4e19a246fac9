#ifndef DISCSIEVE_EXACTDET_HPP
#define DISCSIEVE_EXACTDET_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "mp.hpp"

namespace discsieve {

// Fraction-free (Bareiss) determinant; consumes its argument.
inline Int bareiss_det(std::vector<std::vector<Int>> m) {
    const size_t n = m.size();
    if (n == 0) return Int(1);
    Int prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return Int(0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

// int64 Bareiss with overflow detection; nullopt when any intermediate
// product would overflow (caller falls back to the mpz path).
inline std::optional<int64_t> bareiss_det_i64(std::vector<std::vector<int64_t>> m) {
    const size_t n = m.size();
    if (n == 0) return int64_t(1);
    int64_t prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return int64_t(0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                int64_t p1, p2, num;
                if (__builtin_mul_overflow(m[i][j], m[k][k], &p1)) return std::nullopt;
                if (__builtin_mul_overflow(m[i][k], m[k][j], &p2)) return std::nullopt;
                if (__builtin_sub_overflow(p1, p2, &num)) return std::nullopt;
                m[i][j] = num / prev;  // Bareiss division is exact
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace discsieve

#endif
