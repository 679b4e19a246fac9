#ifndef DISCSIEVE_MP_HPP
#define DISCSIEVE_MP_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace discsieve {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_from_i64(int64_t v) {
    Int z;
    if (v >= 0 && v <= int64_t(0x7fffffff)) return Int(long(v));
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    if (v < 0) {
        // import reads the two's-complement pattern as unsigned
        Int shift;
        mpz_ui_pow_ui(shift.get_mpz_t(), 2, 64);
        z -= shift;
    }
    return z;
}

inline std::optional<int64_t> int_to_i64(const Int& z) {
    if (!z.fits_slong_p()) {
        if (sizeof(long) == 8) return std::nullopt;
    }
    if (sizeof(long) == 8) return int64_t(z.get_si());
    return std::nullopt;
}

inline std::string rat_to_string(const Rat& q) {
    return q.get_str();  // "p/q" or "p" when integral
}

// Emitted rationals always carry the denominator, even when 1.
inline std::string rat_to_pq_string(const Rat& q) {
    Rat c(q);
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline bool rat_is_integer(const Rat& q) {
    Rat c(q);
    c.canonicalize();
    return c.get_den() == 1;
}

}  // namespace discsieve

#endif
