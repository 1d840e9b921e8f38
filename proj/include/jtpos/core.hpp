#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace jtpos {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised for any violated precondition of a library operation. The CLI maps
// it to exit code 1 and echoes what() verbatim.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Binomial coefficient with the combinatorial convention C(n, k) = 0 for
// k < 0 or k > n (n >= 0). Negative n also yields 0; no caller needs the
// generalised binomial.
inline BigInt binomial(long long n, long long k)
{
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline BigInt factorial(long long n)
{
    BigInt r = 1;
    for (long long i = 2; i <= n; ++i) {
        r *= i;
    }
    return r;
}

inline std::string to_string(const BigInt &v)
{
    return v.str();
}

template <class T>
using Matrix = std::vector<std::vector<T>>;

// Fraction-free Gaussian elimination (Bareiss); every division is exact.
inline BigInt det_bareiss(Matrix<BigInt> a)
{
    const std::size_t n = a.size();
    if (n == 0) {
        return 1;
    }
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) {
                ++p;
            }
            if (p == n) {
                return 0;
            }
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

} // namespace jtpos
