#pragma once

// Dense truncated power series in n variables with integer coefficients,
// truncated at total degree `trunc`.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "core.hpp"

namespace jtpos {

inline constexpr std::size_t max_series_cells = 2'000'000;

class TruncatedSeries {
public:
    using Exponent = std::vector<int>;

    TruncatedSeries(std::size_t nvars, int trunc) : n_(nvars), trunc_(trunc)
    {
        if (trunc < 0) {
            throw Error("truncation degree must be nonnegative");
        }
        std::size_t cells = 1;
        for (std::size_t i = 0; i < n_; ++i) {
            cells *= static_cast<std::size_t>(trunc + 1);
            if (cells > max_series_cells) {
                throw Error("series with " + std::to_string(n_) + " variables truncated at degree " +
                            std::to_string(trunc) + " exceeds the size bound");
            }
        }
        c_.assign(cells, 0);
    }

    static TruncatedSeries one(std::size_t nvars, int trunc)
    {
        TruncatedSeries s(nvars, trunc);
        s.c_[0] = 1;
        return s;
    }

    std::size_t nvars() const noexcept { return n_; }
    int trunc() const noexcept { return trunc_; }

    BigInt coeff(const Exponent &e) const
    {
        if (!in_range(e)) {
            return 0;
        }
        return c_[index(e)];
    }

    void set(const Exponent &e, BigInt v)
    {
        if (!in_range(e)) {
            throw Error("exponent outside the truncation");
        }
        c_[index(e)] = std::move(v);
    }

    // Calls f on every exponent of total degree ≤ trunc, in index order.
    void for_each_exponent(const std::function<void(const Exponent &)> &f) const
    {
        Exponent e(n_, 0);
        for (std::size_t idx = 0; idx < c_.size(); ++idx) {
            decode(idx, e);
            if (total(e) <= trunc_) {
                f(e);
            }
        }
    }

    // *this ·= (1 − x^a).
    void mul_one_minus(const Exponent &a)
    {
        Exponent e(n_, 0), src(n_, 0);
        for (std::size_t idx = c_.size(); idx-- > 0;) {
            decode(idx, e);
            if (total(e) > trunc_ || !shift_down(e, a, src)) {
                continue;
            }
            c_[idx] -= c_[index(src)];
        }
    }

    // *this /= (1 − x^a), with a ≠ 0.
    void div_one_minus(const Exponent &a)
    {
        if (total(a) == 0) {
            throw Error("cannot divide by 1 - 1");
        }
        Exponent e(n_, 0), src(n_, 0);
        for (std::size_t idx = 0; idx < c_.size(); ++idx) {
            decode(idx, e);
            if (total(e) > trunc_ || !shift_down(e, a, src)) {
                continue;
            }
            c_[idx] += c_[index(src)];
        }
    }

    friend bool operator==(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        if (a.n_ != b.n_ || a.trunc_ != b.trunc_) {
            return false;
        }
        bool eq = true;
        a.for_each_exponent([&](const Exponent &e) { eq = eq && a.coeff(e) == b.coeff(e); });
        return eq;
    }

    static int total(const Exponent &e)
    {
        int t = 0;
        for (int v : e) {
            t += v;
        }
        return t;
    }

private:
    bool in_range(const Exponent &e) const
    {
        if (e.size() != n_) {
            throw Error("exponent has wrong number of variables");
        }
        for (int v : e) {
            if (v < 0) {
                return false;
            }
        }
        return total(e) <= trunc_;
    }

    std::size_t index(const Exponent &e) const
    {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            idx = idx * static_cast<std::size_t>(trunc_ + 1) + static_cast<std::size_t>(e[i]);
        }
        return idx;
    }

    void decode(std::size_t idx, Exponent &e) const
    {
        for (std::size_t i = n_; i-- > 0;) {
            e[i] = static_cast<int>(idx % static_cast<std::size_t>(trunc_ + 1));
            idx /= static_cast<std::size_t>(trunc_ + 1);
        }
    }

    static bool shift_down(const Exponent &e, const Exponent &a, Exponent &out)
    {
        for (std::size_t i = 0; i < e.size(); ++i) {
            out[i] = e[i] - a[i];
            if (out[i] < 0) {
                return false;
            }
        }
        return true;
    }

    std::size_t n_;
    int trunc_;
    std::vector<BigInt> c_;
};

// Univariate helpers on plain coefficient vectors.
using Poly = std::vector<BigInt>;

inline Poly poly_mul_truncated(const Poly &a, const Poly &b, std::size_t len)
{
    Poly r(len, 0);
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size() && i + j < len; ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

} // namespace jtpos
