#ifndef DISCSIEVE_BOXENUM_HPP
#define DISCSIEVE_BOXENUM_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "poly.hpp"

namespace discsieve {

// The height box {f monic of degree n : |a_i| < X^i}, coefficients int64.
// Lexicographic index order with a_1 most significant.
struct Box {
    int n = 0;
    int64_t X = 0;
    std::vector<int64_t> half;  // half[i] = X^{i+1} - 1: a_{i+1} in [-half, half]
    uint64_t size = 0;

    void decode(uint64_t idx, std::span<int64_t> a_out) const;
};

Box make_box(int n, int64_t X);

// Streams every polynomial of the box exactly once in index order.
// Budget-checked.
void enumerate_box(int n, int64_t X, const std::function<void(const MonicPoly&)>& fn);

}  // namespace discsieve

#endif
