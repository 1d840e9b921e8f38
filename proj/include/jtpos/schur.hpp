#pragma once

// Schur-basis arithmetic for products of general linear groups.

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cache.hpp"
#include "core.hpp"
#include "shapes.hpp"

namespace jtpos {

// ---- Littlewood-Richardson ------------------------------------------------

namespace detail {

// Every ν with cur ⊆ ν ⊆ bound and ν/cur a horizontal strip (any size).
inline std::vector<Partition> horizontal_strips_within(const Partition &cur, const Partition &bound)
{
    std::vector<Partition> out;
    const std::size_t rows = bound.length();
    std::vector<int> nu(rows, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == rows) {
            out.emplace_back(nu);
            return;
        }
        const int hi = i == 0 ? bound[0] : std::min(bound[i], cur[i - 1]);
        for (int v = cur[i]; v <= hi; ++v) {
            nu[i] = v;
            rec(i + 1);
        }
    };
    if (bound.contains(cur)) {
        rec(0);
    }
    return out;
}

inline std::vector<Partition> vertical_strips_within(const Partition &cur, const Partition &bound)
{
    std::vector<Partition> out;
    const std::size_t rows = bound.length();
    std::vector<int> nu(rows, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == rows) {
            out.emplace_back(nu);
            return;
        }
        for (int v = cur[i]; v <= std::min(cur[i] + 1, bound[i]); ++v) {
            if (i > 0 && v > nu[i - 1]) {
                continue;
            }
            nu[i] = v;
            rec(i + 1);
        }
    };
    if (bound.contains(cur)) {
        rec(0);
    }
    return out;
}

// Enumerates LR fillings of λ/μ with content ν for every λ at once, adding the
// letters 1, 2, … as horizontal strips. counts[v][row] is the number of
// letters v+1 in that row. The reading word (rows top to bottom, each right to
// left) must be a lattice word; the pair (v, v+1) is checked as soon as strip
// v+1 is placed, since later letters never affect it.
inline void lr_enumerate(const Partition &mu, const Partition &nu, const Partition *bound,
                         const std::function<void(const Partition &)> &emit)
{
    const std::size_t letters = nu.length();
    const std::size_t max_rows = mu.length() + letters;
    std::vector<std::vector<int>> counts(letters, std::vector<int>(max_rows, 0));

    std::function<void(std::size_t, const Partition &)> place = [&](std::size_t v, const Partition &cur) {
        if (v == letters) {
            emit(cur);
            return;
        }
        const int need = nu[v];
        // Letter v+1 never sits above row v in an LR filling.
        std::vector<int> widths(max_rows);
        for (std::size_t r = 0; r < max_rows; ++r) {
            int cap = r == 0 ? cur[0] + need : std::min(cur[r - 1], cur[r] + need);
            if (bound) {
                cap = std::min(cap, (*bound)[r]);
            }
            if (r < v) {
                cap = cur[r];
            }
            widths[r] = cap;
        }
        std::vector<int> next(max_rows, 0);
        std::function<void(std::size_t, int)> rec = [&](std::size_t r, int left) {
            if (r == max_rows) {
                if (left != 0) {
                    return;
                }
                for (std::size_t i = 0; i < max_rows; ++i) {
                    counts[v][i] = next[i] - cur[i];
                }
                if (v > 0) {
                    int above = 0;
                    int here = 0;
                    for (std::size_t i = 0; i < max_rows; ++i) {
                        here += counts[v][i];
                        if (here > above) {
                            return;
                        }
                        above += counts[v - 1][i];
                    }
                }
                place(v + 1, Partition(next));
                return;
            }
            const int lo = cur[r];
            const int hi = std::min(widths[r], lo + left);
            for (int x = lo; x <= hi; ++x) {
                next[r] = x;
                rec(r + 1, left - (x - lo));
            }
        };
        rec(0, need);
        std::fill(counts[v].begin(), counts[v].end(), 0);
    };
    place(0, mu);
}

using LRKey = std::tuple<Partition, Partition, Partition>;
using ProductKey = std::pair<Partition, Partition>;
using Expansion = std::map<Partition, BigInt>;

inline WriteOnceCache<LRKey, BigInt> &lr_cache()
{
    static WriteOnceCache<LRKey, BigInt> c;
    return c;
}

inline WriteOnceCache<ProductKey, Expansion> &product_cache()
{
    static WriteOnceCache<ProductKey, Expansion> c;
    return c;
}

} // namespace detail

// c^λ_{μ,ν}: LR fillings of λ/μ with content ν.
inline BigInt lr_coefficient(const Partition &lambda, const Partition &mu, const Partition &nu)
{
    if (lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu)) {
        return 0;
    }
    return detail::lr_cache().get_or_compute({lambda, mu, nu}, [&] {
        BigInt n = 0;
        detail::lr_enumerate(mu, nu, &lambda, [&](const Partition &p) {
            if (p == lambda) {
                ++n;
            }
        });
        return n;
    });
}

// s_μ · s_ν in the Schur basis.
inline detail::Expansion lr_product(const Partition &a, const Partition &b)
{
    // Enumerate with the shorter partition as content.
    const bool swap = b.size() > a.size() || (b.size() == a.size() && b.length() > a.length());
    const Partition &mu = swap ? b : a;
    const Partition &nu = swap ? a : b;
    return detail::product_cache().get_or_compute({mu, nu}, [&] {
        detail::Expansion e;
        detail::lr_enumerate(mu, nu, nullptr, [&](const Partition &p) { ++e[p]; });
        return e;
    });
}

// ---- SchurClass -------------------------------------------------------------

// Integer combination of k-tuples of partitions, i.e. an element of the
// character ring of GL_{n_1} × … × GL_{n_k}. k = 0 is the ring of integers.
class SchurClass {
public:
    using Key = std::vector<Partition>;
    using Terms = std::map<Key, BigInt>;

    SchurClass() = default;
    explicit SchurClass(std::size_t factor_count) : k_(factor_count) {}

    static SchurClass zero(std::size_t k) { return SchurClass(k); }
    static SchurClass unit(std::size_t k) { return monomial(Key(k), 1); }
    static SchurClass integer(const BigInt &v) { return monomial({}, v); }
    static SchurClass schur(const Partition &p) { return monomial({p}, 1); }

    static SchurClass monomial(Key key, const BigInt &coeff)
    {
        SchurClass c(key.size());
        c.add_term(std::move(key), coeff);
        return c;
    }

    std::size_t factor_count() const noexcept { return k_; }
    const Terms &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_integer() const noexcept { return k_ == 0; }

    BigInt coefficient(const Key &key) const
    {
        auto it = terms_.find(key);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    // Value of a k = 0 class.
    BigInt as_integer() const
    {
        if (k_ != 0) {
            throw Error("class with " + std::to_string(k_) + " factors is not an integer");
        }
        return coefficient({});
    }

    bool has_negative_coefficient() const noexcept
    {
        return std::any_of(terms_.begin(), terms_.end(), [](const auto &t) { return t.second < 0; });
    }

    void add_term(Key key, const BigInt &coeff)
    {
        if (key.size() != k_) {
            throw Error("term has " + std::to_string(key.size()) + " factors, class has " + std::to_string(k_));
        }
        if (coeff == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(std::move(key), coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    SchurClass &operator+=(const SchurClass &o)
    {
        check_same(o);
        for (const auto &[key, c] : o.terms_) {
            add_term(key, c);
        }
        return *this;
    }

    SchurClass &operator-=(const SchurClass &o)
    {
        check_same(o);
        for (const auto &[key, c] : o.terms_) {
            add_term(key, -c);
        }
        return *this;
    }

    SchurClass operator-() const
    {
        SchurClass r = *this;
        for (auto &t : r.terms_) {
            t.second = -t.second;
        }
        return r;
    }

    SchurClass &operator*=(const BigInt &s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto &t : terms_) {
            t.second *= s;
        }
        return *this;
    }

    friend SchurClass operator+(SchurClass a, const SchurClass &b) { return a += b; }
    friend SchurClass operator-(SchurClass a, const SchurClass &b) { return a -= b; }
    friend SchurClass operator*(SchurClass a, const BigInt &s) { return a *= s; }
    friend bool operator==(const SchurClass &, const SchurClass &) = default;

    // Σ coeff · Π_i dim_gl(key_i, ms[i]); defined after dim_gl below.
    BigInt evaluate_dim(const std::vector<int> &ms) const;

    std::string to_string() const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::string s;
        bool first = true;
        for (const auto &[key, c] : terms_) {
            std::string coeff = c.str();
            if (!first) {
                if (c < 0) {
                    s += " - ";
                    coeff = coeff.substr(1);
                } else {
                    s += " + ";
                }
            }
            first = false;
            if (key.empty()) {
                s += coeff;
                continue;
            }
            if (coeff != "1") {
                s += coeff == "-1" ? "-" : coeff + "*";
            }
            for (std::size_t i = 0; i < key.size(); ++i) {
                if (i) {
                    s += "*";
                }
                s += "s" + key[i].to_string();
            }
        }
        return s;
    }

private:
    void check_same(const SchurClass &o) const
    {
        if (o.k_ != k_) {
            throw Error("factor count mismatch: " + std::to_string(k_) + " vs " + std::to_string(o.k_));
        }
    }

    std::size_t k_ = 0;
    Terms terms_;
};

// Componentwise LR product, extended bilinearly.
inline SchurClass multiply(const SchurClass &a, const SchurClass &b)
{
    if (a.factor_count() != b.factor_count()) {
        throw Error("multiply: factor count mismatch: " + std::to_string(a.factor_count()) + " vs " +
                    std::to_string(b.factor_count()));
    }
    const std::size_t k = a.factor_count();
    SchurClass out(k);
    for (const auto &[ka, ca] : a.terms()) {
        for (const auto &[kb, cb] : b.terms()) {
            std::vector<detail::Expansion> per;
            per.reserve(k);
            for (std::size_t i = 0; i < k; ++i) {
                per.push_back(lr_product(ka[i], kb[i]));
            }
            SchurClass::Key key(k);
            std::function<void(std::size_t, const BigInt &)> rec = [&](std::size_t i, const BigInt &c) {
                if (i == k) {
                    out.add_term(key, c);
                    return;
                }
                for (const auto &[p, m] : per[i]) {
                    key[i] = p;
                    rec(i + 1, c * m);
                }
            };
            rec(0, ca * cb);
        }
    }
    return out;
}

inline SchurClass operator*(const SchurClass &a, const SchurClass &b) { return multiply(a, b); }

// External product: the factor tuples are concatenated.
inline SchurClass external_product(const SchurClass &a, const SchurClass &b)
{
    SchurClass out(a.factor_count() + b.factor_count());
    for (const auto &[ka, ca] : a.terms()) {
        for (const auto &[kb, cb] : b.terms()) {
            SchurClass::Key key = ka;
            key.insert(key.end(), kb.begin(), kb.end());
            out.add_term(std::move(key), ca * cb);
        }
    }
    return out;
}

// s_{λ/μ} = Σ_ν c^λ_{μν} s_ν.
inline SchurClass skew_to_straight(const SkewShape &s)
{
    SchurClass out(1);
    if (s.empty()) {
        return SchurClass::unit(1);
    }
    for (const auto &nu : partitions_of(s.size())) {
        if (!s.outer().contains(nu)) {
            continue;
        }
        out.add_term({nu}, lr_coefficient(s.outer(), s.inner(), nu));
    }
    return out;
}

// ---- dimensions -------------------------------------------------------------

// dim S_λ(C^m) by the hook-content formula.
inline BigInt dim_gl(const Partition &lambda, int m)
{
    if (static_cast<long long>(lambda.length()) > m) {
        return 0;
    }
    const Partition t = lambda.transpose();
    BigInt num = 1;
    BigInt den = 1;
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda[i]; ++j) {
            num *= m + j - static_cast<int>(i);
            den *= (lambda[i] - j - 1) + (t[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
        }
    }
    return num / den;
}

// Number of (r|s) hook tableaux of shape λ/μ: chains μ ⊆ … ⊆ λ made of r
// horizontal strips followed by s vertical strips.
inline BigInt dim_super(const SkewShape &shape, int r, int s)
{
    if (r < 0 || s < 0) {
        throw Error("dim_super: negative dimension");
    }
    const Partition &bound = shape.outer();
    std::map<Partition, BigInt> layer{{shape.inner(), 1}};
    for (int step = 0; step < r + s; ++step) {
        std::map<Partition, BigInt> next;
        for (const auto &[cur, n] : layer) {
            auto strips = step < r ? detail::horizontal_strips_within(cur, bound)
                                   : detail::vertical_strips_within(cur, bound);
            for (const auto &nu : strips) {
                next[nu] += n;
            }
        }
        layer = std::move(next);
    }
    auto it = layer.find(bound);
    return it == layer.end() ? BigInt(0) : it->second;
}

inline BigInt dim_super(const Partition &lambda, int r, int s) { return dim_super(SkewShape(lambda), r, s); }

// dim S_{λ/μ}(C^m) = det h_{λ_i−μ_j−i+j}(1^m).
inline BigInt dim_gl_skew(const SkewShape &shape, int m)
{
    if (m < 0) {
        throw Error("dim_gl_skew: negative dimension");
    }
    const Partition &lam = shape.outer();
    const Partition &mu = shape.inner();
    const std::size_t n = lam.length();
    if (n == 0) {
        return 1;
    }
    Matrix<BigInt> a(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const long long k = static_cast<long long>(lam[i]) - mu[j] - static_cast<long long>(i) + static_cast<long long>(j);
            a[i][j] = k < 0 ? BigInt(0) : k == 0 ? BigInt(1) : binomial(m + k - 1, k);
        }
    }
    return det_bareiss(std::move(a));
}

inline BigInt SchurClass::evaluate_dim(const std::vector<int> &ms) const
{
    if (ms.size() != k_) {
        throw Error("evaluate_dim: need " + std::to_string(k_) + " dimensions, got " + std::to_string(ms.size()));
    }
    BigInt total = 0;
    for (const auto &[key, c] : terms_) {
        BigInt v = c;
        for (std::size_t i = 0; i < k_ && v != 0; ++i) {
            v *= dim_gl(key[i], ms[i]);
        }
        total += v;
    }
    return total;
}

} // namespace jtpos
