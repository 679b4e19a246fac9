#include "boxenum.hpp"

#include <stdexcept>

#include "budget.hpp"

namespace discsieve {

Box make_box(int n, int64_t X) {
    if (n < 1) throw std::invalid_argument("box: degree must be >= 1");
    if (X < 1) throw std::invalid_argument("box: X must be >= 1");
    Box b;
    b.n = n;
    b.X = X;
    b.half.resize(size_t(n));
    b.size = 1;
    int64_t pw = 1;
    for (int i = 0; i < n; ++i) {
        if (pw > (int64_t(1) << 40) / X) throw budget_error("box: X^i overflows the desk-scale range");
        pw *= X;
        b.half[size_t(i)] = pw - 1;
        uint64_t radix = uint64_t(2 * pw - 1);
        if (b.size > UINT64_MAX / radix) throw budget_error("box: size overflows");
        b.size *= radix;
    }
    return b;
}

void Box::decode(uint64_t idx, std::span<int64_t> a) const {
    for (int i = n - 1; i >= 0; --i) {
        uint64_t radix = uint64_t(2 * half[size_t(i)] + 1);
        a[size_t(i)] = int64_t(idx % radix) - half[size_t(i)];
        idx /= radix;
    }
}

void enumerate_box(int n, int64_t X, const std::function<void(const MonicPoly&)>& fn) {
    Box b = make_box(n, X);
    check_budget(b.size, "enumerate_box");
    std::vector<int64_t> a(size_t(n), 0);
    MonicPoly f;
    f.a.resize(size_t(n));
    for (uint64_t idx = 0; idx < b.size; ++idx) {
        b.decode(idx, a);
        for (int i = 0; i < n; ++i) f.a[size_t(i)] = int_from_i64(a[size_t(i)]);
        fn(f);
    }
}

}  // namespace discsieve
