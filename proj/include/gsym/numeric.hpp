#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <cassert>
#include <vector>

namespace gsym {

using Int = boost::multiprecision::cpp_int;

// Falling-factorial binomial: defined for any integer upper argument,
// zero for negative lower argument.  C(a,r) = a(a-1)...(a-r+1)/r!.
inline Int binomial(const Int &a, long long r) {
    if (r < 0) return 0;
    Int num = 1, den = 1;
    for (long long t = 0; t < r; ++t) {
        num *= a - t;
        den *= t + 1;
    }
    assert(num % den == 0);
    return num / den;
}

inline Int factorial(long long n) {
    Int r = 1;
    for (long long t = 2; t <= n; ++t) r *= t;
    return r;
}

// ipow with the 0^0 = 1 convention used throughout.
inline Int intPow(const Int &base, long long e) {
    Int r = 1;
    for (long long t = 0; t < e; ++t) r *= base;
    return r;
}

inline Int catalanNumber(int n) {
    return binomial(Int(2) * n, n) / (n + 1);
}

// Eulerian number A(i,s): permutations of [i] with s descents; A(0,0) = 1.
// Recurrence A(r,d) = (d+1)A(r-1,d) + (r-d)A(r-1,d-1).
inline Int eulerian(int i, int s) {
    if (i < 0 || s < 0) return 0;
    if (i == 0) return s == 0 ? 1 : 0;
    if (s > i - 1) return 0;
    std::vector<Int> row{1}; // A(1, .)
    for (int r = 2; r <= i; ++r) {
        std::vector<Int> next(r, 0);
        for (int d = 0; d < r; ++d) {
            Int v = 0;
            if (d < (int)row.size()) v += Int(d + 1) * row[d];
            if (d >= 1 && d - 1 < (int)row.size()) v += Int(r - d) * row[d - 1];
            next[d] = v;
        }
        row = std::move(next);
    }
    return row[s];
}

// q_n(i,j) via the alternating sum: sum_k (-1)^{n-k} C(j,n-k) k^i, with 0^0 = 1.
inline Int qCoefficient(int n, int i, int j) {
    Int s = 0;
    for (int k = 0; k <= n; ++k) {
        Int t = binomial(Int(j), n - k) * intPow(k, i);
        s += ((n - k) % 2 ? -t : t);
    }
    return s;
}

// q_n(i,j) via shifted Eulerian numbers: sum_l C(i-j+l, l) * At(i, n-l),
// At(i,s) = A(i,s-1) for i >= 1 and At(0,s) = [s == 0].
inline Int qCoefficientEulerian(int n, int i, int j) {
    Int s = 0;
    for (int l = 0; l <= n; ++l) {
        Int At;
        if (i >= 1)
            At = (n - l >= 1) ? eulerian(i, n - l - 1) : Int(0);
        else
            At = (n - l == 0) ? 1 : 0;
        s += binomial(Int(i) - j + l, l) * At;
    }
    return s;
}

} // namespace gsym
