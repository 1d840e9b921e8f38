#pragma once

// Quadric hypersurface rings S(V)/(q), dim V = m. Only dimensions enter, so
// neither the form nor its rank is modelled.

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cache.hpp"
#include "core.hpp"
#include "schur.hpp"
#include "sequences.hpp"
#include "series.hpp"
#include "shapes.hpp"

namespace jtpos {

struct QuadricContext {
    int m;
    GradedSequence seq;
    GradedSequence dual;

    explicit QuadricContext(int dim) : m(dim), seq(make_quadric(dim)), dual(make_quadric_dual(dim)) {}
};

enum class QuadricMethod { jt, vertical_strip, super };

inline QuadricMethod parse_quadric_method(const std::string &s)
{
    if (s == "jt") {
        return QuadricMethod::jt;
    }
    if (s == "vertical_strip" || s == "vertical-strip") {
        return QuadricMethod::vertical_strip;
    }
    if (s == "super") {
        return QuadricMethod::super;
    }
    throw Error("unknown quadric method '" + s + "' (expected jt, vertical_strip or super)");
}

inline BigInt quadric_schur_dim(const QuadricContext &ctx, const SkewShape &s, QuadricMethod method = QuadricMethod::jt)
{
    switch (method) {
    case QuadricMethod::jt:
        return jt_minor(ctx.seq, s).as_integer();
    case QuadricMethod::vertical_strip: {
        BigInt total = 0;
        for (const auto &alpha : partitions_between(s.inner(), s.outer())) {
            if (SkewShape(s.outer(), alpha).is_vertical_strip()) {
                total += dim_gl_skew(SkewShape(alpha, s.inner()), ctx.m - 1);
            }
        }
        return total;
    }
    case QuadricMethod::super:
        return dim_super(s, ctx.m - 1, 1);
    }
    throw Error("unknown quadric method");
}

inline BigInt quadric_schur_dim(const QuadricContext &ctx, const Partition &lambda,
                                QuadricMethod method = QuadricMethod::jt)
{
    return quadric_schur_dim(ctx, SkewShape(lambda), method);
}

inline void require_stable_range(const Partition &p, int m)
{
    if (2 * static_cast<long long>(p.length()) > m) {
        throw Error("outside the stable range: 2*length" + p.to_string() + " = " + std::to_string(2 * p.length()) +
                    " > m = " + std::to_string(m));
    }
}

// 2ν: every part doubled.
inline Partition doubled(const Partition &nu)
{
    std::vector<int> v = nu.vec();
    for (int &x : v) {
        x *= 2;
    }
    return Partition(v);
}

namespace detail {
inline WriteOnceCache<std::pair<Partition, int>, BigInt> &chi_o_cache()
{
    static WriteOnceCache<std::pair<Partition, int>, BigInt> c;
    return c;
}
} // namespace detail

// Dimension of the O(m) irreducible χ_O(μ) in the stable range, by inverting
// s_μ = Σ_{α,ν} c^μ_{α,2ν} χ_O(α).
inline BigInt chi_o_dim(const Partition &mu, int m)
{
    require_stable_range(mu, m);
    if (auto hit = detail::chi_o_cache().find({mu, m})) {
        return *hit;
    }
    BigInt v = dim_gl(mu, m);
    for (int half = 1; 2 * half <= mu.size(); ++half) {
        for (const auto &nu : partitions_of(half)) {
            const Partition two_nu = doubled(nu);
            if (!mu.contains(two_nu)) {
                continue;
            }
            for (const auto &alpha : partitions_of(mu.size() - 2 * half)) {
                const BigInt c = lr_coefficient(mu, alpha, two_nu);
                if (c != 0) {
                    v -= c * chi_o_dim(alpha, m);
                }
            }
        }
    }
    return detail::chi_o_cache().insert({mu, m}, v);
}

struct OrthogonalTerm {
    Partition mu;
    BigInt mult;
};

using OrthogonalDecomposition = std::vector<OrthogonalTerm>;

// mult(μ) = Σ_ν c^λ_{μ,(2ν)^T}, listed by size then lexicographically.
inline OrthogonalDecomposition orthogonal_stable_decomposition(const QuadricContext &ctx, const Partition &lambda)
{
    require_stable_range(lambda, ctx.m);
    std::map<Partition, BigInt> mult;
    for (int half = 0; 2 * half <= lambda.size(); ++half) {
        for (const auto &nu : partitions_of(half)) {
            const Partition shape = doubled(nu).transpose();
            if (!lambda.contains(shape)) {
                continue;
            }
            for (const auto &mu : partitions_of(lambda.size() - 2 * half)) {
                const BigInt c = lr_coefficient(lambda, mu, shape);
                if (c != 0) {
                    mult[mu] += c;
                }
            }
        }
    }
    OrthogonalDecomposition out;
    for (auto &[mu, c] : mult) {
        out.push_back({mu, c});
    }
    std::sort(out.begin(), out.end(),
              [](const OrthogonalTerm &a, const OrthogonalTerm &b) { return graded_lex_less(a.mu, b.mu); });
    return out;
}

inline BigInt decomposition_dimension(const OrthogonalDecomposition &d, int m)
{
    BigInt total = 0;
    for (const auto &t : d) {
        total += t.mult * chi_o_dim(t.mu, m);
    }
    return total;
}

// Multigraded Hilbert series of U(g_{V,E})/I_{V,E} for dim E = n, taken
// literally from its product formula with [V] specialised to dim V = m, so
// that 1/(1 − [V]x_i) becomes 1/(1 − x_i)^m.
inline TruncatedSeries quadric_multigraded_hs(int m, std::size_t n, int trunc)
{
    require_positive(m, "quadric dimension");
    if (n < 1) {
        throw Error("need at least one variable");
    }
    TruncatedSeries hs = TruncatedSeries::one(n, trunc);
    auto mono = [n](std::size_t i, std::size_t j) {
        TruncatedSeries::Exponent e(n, 0);
        ++e[i];
        ++e[j];
        return e;
    };
    const std::size_t last = n - 1;
    for (std::size_t i = 0; i < last; ++i) {
        for (std::size_t j = i; j < last; ++j) {
            hs.mul_one_minus(mono(i, j));
        }
    }
    for (std::size_t i = 0; i < last; ++i) {
        hs.mul_one_minus(mono(i, last));
    }
    hs.mul_one_minus(mono(last, last));
    for (std::size_t i = 0; i < n; ++i) {
        TruncatedSeries::Exponent e(n, 0);
        e[i] = 1;
        for (int k = 0; k < m; ++k) {
            hs.div_one_minus(e);
        }
    }
    for (std::size_t i = 0; i < last; ++i) {
        for (std::size_t j = i + 1; j < last; ++j) {
            hs.div_one_minus(mono(i, j));
        }
    }
    for (std::size_t i = 0; i < last; ++i) {
        hs.div_one_minus(mono(i, last));
    }
    return hs;
}

struct MultigradedReport {
    bool factorization = false; // HS_n = HS_{n−1}(x_1..x_{n−1}) · HS_1(x_n)
    bool weight_spaces = false; // [x^μ] HS_n = Π_i dim A_{μ_i}
    std::size_t coefficients_checked = 0;

    bool ok() const noexcept { return factorization && weight_spaces; }
};

inline constexpr int max_hs_trunc = 40;

inline MultigradedReport multigraded_hs_check(int m, std::size_t n, int trunc)
{
    if (trunc > max_hs_trunc) {
        throw Error("truncation " + std::to_string(trunc) + " exceeds the bound " + std::to_string(max_hs_trunc));
    }
    const TruncatedSeries hs = quadric_multigraded_hs(m, n, trunc);
    const auto dims = make_quadric(m).dims(trunc + 1);
    MultigradedReport rep;
    rep.weight_spaces = true;
    hs.for_each_exponent([&](const TruncatedSeries::Exponent &e) {
        BigInt expect = 1;
        for (int v : e) {
            expect *= dims[static_cast<std::size_t>(v)];
        }
        rep.weight_spaces = rep.weight_spaces && hs.coeff(e) == expect;
        ++rep.coefficients_checked;
    });
    if (n == 1) {
        rep.factorization = true;
        return rep;
    }
    const TruncatedSeries head = quadric_multigraded_hs(m, n - 1, trunc);
    const TruncatedSeries tail = quadric_multigraded_hs(m, 1, trunc);
    rep.factorization = true;
    hs.for_each_exponent([&](const TruncatedSeries::Exponent &e) {
        TruncatedSeries::Exponent front(e.begin(), e.end() - 1);
        const BigInt prod = head.coeff(front) * tail.coeff({e.back()});
        rep.factorization = rep.factorization && prod == hs.coeff(e);
    });
    return rep;
}

} // namespace jtpos
