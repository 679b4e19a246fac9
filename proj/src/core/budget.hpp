#ifndef DISCSIEVE_BUDGET_HPP
#define DISCSIEVE_BUDGET_HPP

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace discsieve {

// Enumeration work exceeded the configured budget (CLI exit code 3).
class budget_error : public std::runtime_error {
   public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Global enumeration budget in "items visited"; DISC_SIEVE_BUDGET overrides.
inline uint64_t enumeration_budget() {
    static const uint64_t v = [] {
        if (const char* s = std::getenv("DISC_SIEVE_BUDGET")) {
            char* end = nullptr;
            unsigned long long b = std::strtoull(s, &end, 10);
            if (end && *end == '\0' && b > 0) return uint64_t(b);
        }
        return uint64_t(2'000'000'000ULL);
    }();
    return v;
}

inline void check_budget(uint64_t work, const char* what) {
    if (work > enumeration_budget())
        throw budget_error(std::string(what) + ": work " + std::to_string(work) +
                           " exceeds budget " + std::to_string(enumeration_budget()));
}

}  // namespace discsieve

#endif
