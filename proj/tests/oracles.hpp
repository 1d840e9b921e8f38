#pragma once

// Brute-force reference computations shared by the test suites. Nothing here
// calls into the LR or determinant code it is checking.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "jtpos/core.hpp"
#include "jtpos/determinant.hpp"
#include "jtpos/schur.hpp"
#include "jtpos/shapes.hpp"

namespace oracle {

using jtpos::BigInt;
using jtpos::Partition;
using jtpos::SkewShape;

using Monomial = std::vector<int>;
using Poly = std::map<Monomial, BigInt>;

// Calls visit(filling) for every SSYT of shape s with entries 0..m-1.
// filling is indexed like s.boxes().
inline void for_each_ssyt(const SkewShape &s, int m, const std::function<void(const std::vector<int> &)> &visit)
{
    const auto boxes = s.boxes();
    std::map<std::pair<int, int>, std::size_t> where;
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        where[boxes[i]] = i;
    }
    std::vector<int> fill(boxes.size(), -1);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == boxes.size()) {
            visit(fill);
            return;
        }
        const auto [r, c] = boxes[i];
        int lo = 0;
        if (auto it = where.find({r, c - 1}); it != where.end()) {
            lo = std::max(lo, fill[it->second]);
        }
        if (auto it = where.find({r - 1, c}); it != where.end()) {
            lo = std::max(lo, fill[it->second] + 1);
        }
        for (int v = lo; v < m; ++v) {
            fill[i] = v;
            rec(i + 1);
        }
        fill[i] = -1;
    };
    rec(0);
}

inline BigInt ssyt_count(const SkewShape &s, int m)
{
    BigInt n = 0;
    for_each_ssyt(s, m, [&](const std::vector<int> &) { ++n; });
    return n;
}

inline Poly schur_poly(const SkewShape &s, int k)
{
    Poly p;
    for_each_ssyt(s, k, [&](const std::vector<int> &f) {
        Monomial x(static_cast<std::size_t>(k), 0);
        for (int v : f) {
            ++x[static_cast<std::size_t>(v)];
        }
        p[x] += 1;
    });
    return p;
}

inline Poly poly_mul(const Poly &a, const Poly &b)
{
    Poly out;
    for (const auto &[x, c] : a) {
        for (const auto &[y, d] : b) {
            Monomial z = x;
            for (std::size_t i = 0; i < z.size(); ++i) {
                z[i] += y[i];
            }
            out[z] += c * d;
        }
    }
    std::erase_if(out, [](const auto &kv) { return kv.second == 0; });
    return out;
}

// Single-factor class as a polynomial in k variables.
inline Poly class_poly(const jtpos::SchurClass &c, int k)
{
    Poly out;
    for (const auto &[key, coeff] : c.terms()) {
        for (const auto &[x, v] : schur_poly(SkewShape(key.at(0)), k)) {
            out[x] += coeff * v;
        }
    }
    std::erase_if(out, [](const auto &kv) { return kv.second == 0; });
    return out;
}

// LR coefficient as the number of skew tableaux of shape λ/μ and content ν
// whose reverse row reading word is a lattice word.
inline BigInt lr_by_tableaux(const Partition &lambda, const Partition &mu, const Partition &nu)
{
    if (!lambda.contains(mu) || lambda.size() != mu.size() + nu.size()) {
        return 0;
    }
    const SkewShape s(lambda, mu);
    const auto boxes = s.boxes();
    BigInt n = 0;
    for_each_ssyt(s, static_cast<int>(nu.length()), [&](const std::vector<int> &f) {
        std::vector<int> seen(nu.length(), 0);
        // Reverse reading: rows top to bottom, each right to left.
        std::vector<std::size_t> order(boxes.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (boxes[a].first != boxes[b].first) {
                return boxes[a].first < boxes[b].first;
            }
            return boxes[a].second > boxes[b].second;
        });
        for (std::size_t i : order) {
            const auto v = static_cast<std::size_t>(f[i]);
            ++seen[v];
            if (v > 0 && seen[v] > seen[v - 1]) {
                return;
            }
        }
        for (std::size_t i = 0; i < nu.length(); ++i) {
            if (seen[i] != nu[i]) {
                return;
            }
        }
        ++n;
    });
    return n;
}

// Fillings with r even letters then s odd letters: even letters weak along
// rows and strict down columns, odd letters the other way round.
inline BigInt super_count(const SkewShape &s, int r, int sodd)
{
    const auto boxes = s.boxes();
    std::map<std::pair<int, int>, std::size_t> where;
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        where[boxes[i]] = i;
    }
    std::vector<int> fill(boxes.size(), -1);
    BigInt n = 0;
    const int total = r + sodd;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == boxes.size()) {
            ++n;
            return;
        }
        const auto [row, col] = boxes[i];
        for (int v = 0; v < total; ++v) {
            const bool odd = v >= r;
            if (auto it = where.find({row, col - 1}); it != where.end()) {
                const int left = fill[it->second];
                if (left > v || (left == v && odd)) {
                    continue;
                }
            }
            if (auto it = where.find({row - 1, col}); it != where.end()) {
                const int up = fill[it->second];
                if (up > v || (up == v && !odd)) {
                    continue;
                }
            }
            fill[i] = v;
            rec(i + 1);
        }
        fill[i] = -1;
    };
    rec(0);
    return n;
}

// Leibniz expansion.
template <class T>
T det_leibniz(const jtpos::Matrix<T> &a, T zero, T one)
{
    const std::size_t n = a.size();
    if (n == 0) {
        return one;
    }
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    T total = zero;
    do {
        int inv = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                inv += p[i] > p[j];
            }
        }
        T term = a[0][p[0]];
        for (std::size_t i = 1; i < n; ++i) {
            term = term * a[i][p[i]];
        }
        if (inv % 2) {
            total -= term;
        } else {
            total += term;
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

inline Partition random_partition(std::mt19937 &rng, int max_size, std::size_t max_len = 8)
{
    std::uniform_int_distribution<int> size_dist(0, max_size);
    const auto all = jtpos::partitions_of(size_dist(rng), max_len);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    return all[pick(rng)];
}

// All partitions of size at most n.
inline std::vector<Partition> partitions_up_to(int n, std::size_t max_len = 64)
{
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k) {
        const auto ps = jtpos::partitions_of(k, max_len);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

// All skew shapes λ/μ with |λ| ≤ n.
inline std::vector<SkewShape> skew_shapes_up_to(int n, std::size_t max_len = 64)
{
    std::vector<SkewShape> out;
    for (const auto &lam : partitions_up_to(n, max_len)) {
        for (const auto &mu : jtpos::partitions_between(Partition{}, lam)) {
            out.emplace_back(lam, mu);
        }
    }
    return out;
}

} // namespace oracle
