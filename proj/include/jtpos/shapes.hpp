#pragma once

// Integer shape data: partitions, skew shapes, compositions and ribbons,
// integral weights and permutations with the dotted action.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <limits>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"

namespace jtpos {

class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    // Accepts zero-padded input; trailing zeros are trimmed.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) {
                throw Error("partition has a negative part: " + format(parts_));
            }
            if (i > 0 && parts_[i] > parts_[i - 1]) {
                throw Error("partition parts must be weakly decreasing: " + format(parts_));
            }
        }
        while (!parts_.empty() && parts_.back() == 0) {
            parts_.pop_back();
        }
    }

    std::span<const int> parts() const noexcept { return parts_; }
    const std::vector<int> &vec() const noexcept { return parts_; }

    // Zero beyond the stored length.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    std::size_t length() const noexcept { return parts_.size(); }
    int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const noexcept { return parts_.empty(); }

    // other ⊆ *this, componentwise.
    bool contains(const Partition &other) const noexcept
    {
        if (other.length() > length()) {
            return false;
        }
        for (std::size_t i = 0; i < other.length(); ++i) {
            if (other[i] > parts_[i]) {
                return false;
            }
        }
        return true;
    }

    Partition transpose() const
    {
        if (parts_.empty()) {
            return {};
        }
        std::vector<int> t(static_cast<std::size_t>(parts_.front()), 0);
        for (int p : parts_) {
            for (int c = 0; c < p; ++c) {
                ++t[static_cast<std::size_t>(c)];
            }
        }
        return Partition(std::move(t));
    }

    // (λ, 1^k): append k rows of length one.
    Partition with_ones(int k) const
    {
        std::vector<int> p = parts_;
        if (k > 0 && !p.empty() && p.back() < 1) {
            throw Error("cannot append ones");
        }
        p.insert(p.end(), static_cast<std::size_t>(std::max(k, 0)), 1);
        return Partition(std::move(p));
    }

    std::string to_string() const { return format(parts_); }

    friend auto operator<=>(const Partition &, const Partition &) = default;
    friend bool operator==(const Partition &, const Partition &) = default;

private:
    static std::string format(const std::vector<int> &v)
    {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) {
                s += ',';
            }
            s += std::to_string(v[i]);
        }
        return s + ")";
    }

    std::vector<int> parts_;
};

// Deterministic scan order used for witnesses: by size, then lexicographic.
inline bool graded_lex_less(const Partition &a, const Partition &b)
{
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    return a.vec() < b.vec();
}

class SkewShape {
public:
    SkewShape() = default;
    SkewShape(Partition outer, Partition inner = {}) : outer_(std::move(outer)), inner_(std::move(inner))
    {
        if (!outer_.contains(inner_)) {
            throw Error("inner shape " + inner_.to_string() + " is not contained in " + outer_.to_string());
        }
    }

    const Partition &outer() const noexcept { return outer_; }
    const Partition &inner() const noexcept { return inner_; }
    int size() const noexcept { return outer_.size() - inner_.size(); }
    bool empty() const noexcept { return size() == 0; }
    bool is_straight() const noexcept { return inner_.empty(); }

    // Half-open column ranges [start, end) of each row of the outer shape.
    std::vector<std::pair<int, int>> rows() const
    {
        std::vector<std::pair<int, int>> r;
        for (std::size_t i = 0; i < outer_.length(); ++i) {
            r.emplace_back(inner_[i], outer_[i]);
        }
        return r;
    }

    // (row, column) pairs, 0-based, row-major.
    std::vector<std::pair<int, int>> boxes() const
    {
        std::vector<std::pair<int, int>> b;
        for (std::size_t i = 0; i < outer_.length(); ++i) {
            for (int c = inner_[i]; c < outer_[i]; ++c) {
                b.emplace_back(static_cast<int>(i), c);
            }
        }
        return b;
    }

    SkewShape transpose() const { return {outer_.transpose(), inner_.transpose()}; }

    bool is_horizontal_strip() const noexcept
    {
        for (std::size_t i = 0; i + 1 < outer_.length(); ++i) {
            if (inner_[i] < outer_[i + 1]) {
                return false;
            }
        }
        return true;
    }

    bool is_vertical_strip() const noexcept
    {
        for (std::size_t i = 0; i < outer_.length(); ++i) {
            if (outer_[i] - inner_[i] > 1) {
                return false;
            }
        }
        return true;
    }

    std::string to_string() const { return outer_.to_string() + "/" + inner_.to_string(); }

    friend bool operator==(const SkewShape &, const SkewShape &) = default;
    friend auto operator<=>(const SkewShape &, const SkewShape &) = default;

private:
    Partition outer_;
    Partition inner_;
};

class Composition {
public:
    Composition() = default;
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (int p : parts_) {
            if (p < 1) {
                throw Error("composition parts must be positive");
            }
        }
    }

    std::span<const int> parts() const noexcept { return parts_; }
    const std::vector<int> &vec() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_.at(i); }

    friend bool operator==(const Composition &, const Composition &) = default;

private:
    std::vector<int> parts_;
};

// All compositions of d, in lexicographic order of their part lists.
inline std::vector<Composition> compositions_of(int d)
{
    std::vector<Composition> out;
    if (d < 0) {
        return out;
    }
    if (d == 0) {
        out.emplace_back();
        return out;
    }
    // Bit i of the mask set <=> cut after position i+1.
    const unsigned cuts = static_cast<unsigned>(d - 1);
    for (unsigned long mask = 0; mask < (1ul << cuts); ++mask) {
        std::vector<int> parts;
        int run = 1;
        for (unsigned i = 0; i < cuts; ++i) {
            if (mask & (1ul << i)) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        out.emplace_back(std::move(parts));
    }
    std::sort(out.begin(), out.end(), [](const Composition &a, const Composition &b) { return a.vec() < b.vec(); });
    return out;
}

// Builds a skew shape from half-open row ranges listed top to bottom, after
// translating the box set to minimal row/column indices. Rows with
// start == end are empty.
inline SkewShape skew_from_rows(std::vector<std::pair<int, int>> rows)
{
    auto nonempty = [](const std::pair<int, int> &r) { return r.second > r.first; };
    while (!rows.empty() && !nonempty(rows.back())) {
        rows.pop_back();
    }
    while (!rows.empty() && !nonempty(rows.front())) {
        rows.erase(rows.begin());
    }
    if (rows.empty()) {
        return {};
    }
    int min_col = std::numeric_limits<int>::max();
    for (const auto &r : rows) {
        if (r.second <= r.first) {
            continue;
        }
        min_col = std::min(min_col, r.first);
    }
    for (auto &r : rows) {
        if (nonempty(r)) {
            r.first -= min_col;
            r.second -= min_col;
        }
    }
    const std::size_t n = rows.size();
    std::vector<int> outer(n), inner(n);
    for (std::size_t i = n; i-- > 0;) {
        if (nonempty(rows[i])) {
            inner[i] = rows[i].first;
            outer[i] = rows[i].second;
        } else {
            // Fill an empty row flush with the row below.
            inner[i] = outer[i] = outer[i + 1];
        }
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (inner[i] < inner[i + 1] || outer[i] < outer[i + 1]) {
            throw Error("box set is not a skew shape");
        }
    }
    return {Partition(outer), Partition(inner)};
}

namespace detail {

// Ribbon rows top to bottom, unnormalised, bottom row starting at column 0.
inline std::vector<std::pair<int, int>> ribbon_rows(const Composition &c)
{
    std::vector<std::pair<int, int>> bottom_up;
    int start = 0;
    for (std::size_t i = 0; i < c.length(); ++i) {
        if (i > 0) {
            start = bottom_up.back().second - 1;
        }
        bottom_up.emplace_back(start, start + c[i]);
    }
    return {bottom_up.rbegin(), bottom_up.rend()};
}

inline std::vector<std::pair<int, int>> nonempty_rows(const SkewShape &d)
{
    auto r = d.rows();
    while (!r.empty() && r.back().second <= r.back().first) {
        r.pop_back();
    }
    return r;
}

} // namespace detail

// Ribbon diagram of α = (α_1..α_r): rows α_r..α_1 top to bottom, consecutive
// rows sharing exactly one column.
inline SkewShape ribbon_of(const Composition &c)
{
    if (c.empty()) {
        throw Error("ribbon of an empty composition");
    }
    return skew_from_rows(detail::ribbon_rows(c));
}

// D·α: the ribbon's top row goes in a new row under D's bottom row, sharing
// exactly one column with it (ribbon-style join).
inline SkewShape attach_dot(const SkewShape &d, const Composition &c)
{
    auto ribbon = detail::ribbon_rows(c);
    auto rows = detail::nonempty_rows(d);
    if (rows.empty()) {
        return skew_from_rows(ribbon);
    }
    const int shift = rows.back().first - (ribbon.front().second - 1);
    for (auto r : ribbon) {
        rows.emplace_back(r.first + shift, r.second + shift);
    }
    return skew_from_rows(rows);
}

// D⊙α: the ribbon's top row is glued onto D's bottom row, directly to its
// left, so that bottom row grows by α_r boxes.
inline SkewShape attach_odot(const SkewShape &d, const Composition &c)
{
    auto ribbon = detail::ribbon_rows(c);
    auto rows = detail::nonempty_rows(d);
    if (rows.empty()) {
        return skew_from_rows(ribbon);
    }
    const int shift = rows.back().first - ribbon.front().second;
    rows.back().first = ribbon.front().first + shift;
    for (std::size_t i = 1; i < ribbon.size(); ++i) {
        rows.emplace_back(ribbon[i].first + shift, ribbon[i].second + shift);
    }
    return skew_from_rows(rows);
}

// Integral weight in Z^n.
struct Weight {
    std::vector<long long> entries;

    std::size_t size() const noexcept { return entries.size(); }
    long long operator[](std::size_t i) const { return entries.at(i); }
    bool has_negative() const noexcept
    {
        return std::any_of(entries.begin(), entries.end(), [](long long v) { return v < 0; });
    }

    static Weight from(const Partition &p, std::size_t n)
    {
        Weight w;
        for (std::size_t i = 0; i < n; ++i) {
            w.entries.push_back(p[i]);
        }
        return w;
    }

    friend bool operator==(const Weight &, const Weight &) = default;
};

inline Weight operator-(const Weight &a, const Weight &b)
{
    if (a.size() != b.size()) {
        throw Error("weight length mismatch");
    }
    Weight r = a;
    for (std::size_t i = 0; i < a.size(); ++i) {
        r.entries[i] -= b.entries[i];
    }
    return r;
}

// Permutation of {0..n-1}, stored as images. Printed 1-based in one-line
// notation.
class Permutation {
public:
    Permutation() = default;

    static Permutation identity(std::size_t n)
    {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        return Permutation(std::move(img), false);
    }

    // One-line notation on {1..n}.
    static Permutation from_one_line(const std::vector<int> &one_based)
    {
        std::vector<int> img;
        for (int v : one_based) {
            img.push_back(v - 1);
        }
        return Permutation(std::move(img), true);
    }

    static Permutation from_images(std::vector<int> zero_based) { return Permutation(std::move(zero_based), true); }

    std::size_t size() const noexcept { return img_.size(); }
    int operator()(std::size_t i) const { return img_.at(i); }
    const std::vector<int> &images() const noexcept { return img_; }

    // Number of inversions.
    int length() const noexcept
    {
        int inv = 0;
        for (std::size_t i = 0; i < img_.size(); ++i) {
            for (std::size_t j = i + 1; j < img_.size(); ++j) {
                inv += img_[i] > img_[j];
            }
        }
        return inv;
    }

    std::vector<int> one_line() const
    {
        std::vector<int> r;
        for (int v : img_) {
            r.push_back(v + 1);
        }
        return r;
    }

    // (σw)_{σ(j)} = w_j.
    Weight act(const Weight &w) const
    {
        if (w.size() != size()) {
            throw Error("permutation on " + std::to_string(size()) + " letters applied to weight of length " +
                        std::to_string(w.size()));
        }
        Weight r;
        r.entries.resize(w.size());
        for (std::size_t j = 0; j < img_.size(); ++j) {
            r.entries[static_cast<std::size_t>(img_[j])] = w.entries[j];
        }
        return r;
    }

    friend bool operator==(const Permutation &, const Permutation &) = default;
    friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
    Permutation(std::vector<int> img, bool check) : img_(std::move(img))
    {
        if (check) {
            std::vector<int> sorted = img_;
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t i = 0; i < sorted.size(); ++i) {
                if (sorted[i] != static_cast<int>(i)) {
                    throw Error("not a permutation");
                }
            }
        }
    }

    std::vector<int> img_;
};

inline Weight rho(std::size_t n)
{
    Weight r;
    for (std::size_t i = 0; i < n; ++i) {
        r.entries.push_back(static_cast<long long>(n - 1 - i));
    }
    return r;
}

// σ∙w = σ(w + ρ) − ρ with ρ = (n−1, …, 1, 0).
inline Weight dotted_action(const Permutation &s, const Weight &w)
{
    if (s.size() != w.size()) {
        throw Error("dotted action: permutation has " + std::to_string(s.size()) + " letters, weight has length " +
                    std::to_string(w.size()));
    }
    const Weight r = rho(w.size());
    Weight shifted = w;
    for (std::size_t i = 0; i < w.size(); ++i) {
        shifted.entries[i] += r.entries[i];
    }
    return s.act(shifted) - r;
}

inline constexpr std::size_t default_permutation_bound = 8;

// S_n grouped by inversion count; each group in lexicographic one-line order.
inline std::map<int, std::vector<Permutation>> permutations_by_length(std::size_t n,
                                                                       std::size_t bound = default_permutation_bound)
{
    if (n < 1) {
        throw Error("permutations_by_length needs n >= 1");
    }
    if (n > bound) {
        throw Error("n = " + std::to_string(n) + " exceeds the permutation bound " + std::to_string(bound));
    }
    std::map<int, std::vector<Permutation>> out;
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    do {
        auto p = Permutation::from_images(img);
        out[p.length()].push_back(std::move(p));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

// ---- partition enumeration -------------------------------------------------

namespace detail {

inline void box_rec(std::vector<int> &cur, std::size_t max_len, int max_part,
                    const std::function<void(const Partition &)> &emit)
{
    emit(Partition(cur));
    if (cur.size() == max_len) {
        return;
    }
    const int cap = cur.empty() ? max_part : std::min(max_part, cur.back());
    for (int p = 1; p <= cap; ++p) {
        cur.push_back(p);
        box_rec(cur, max_len, max_part, emit);
        cur.pop_back();
    }
}

} // namespace detail

// Every partition with at most max_len rows and parts at most max_part,
// sorted in graded lexicographic order.
inline std::vector<Partition> partitions_in_box(std::size_t max_len, int max_part)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    detail::box_rec(cur, max_len, max_part, [&](const Partition &p) { out.push_back(p); });
    std::sort(out.begin(), out.end(), graded_lex_less);
    return out;
}

inline std::vector<Partition> partitions_of(int n, std::size_t max_len = std::numeric_limits<std::size_t>::max(),
                                            int max_part = std::numeric_limits<int>::max())
{
    std::vector<Partition> out;
    if (n < 0) {
        return out;
    }
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (cur.size() == max_len) {
            return;
        }
        for (int p = std::min(remaining, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, std::min(n, max_part));
    std::sort(out.begin(), out.end(), graded_lex_less);
    return out;
}

// All ν with inner ⊆ ν ⊆ outer.
inline std::vector<Partition> partitions_between(const Partition &inner, const Partition &outer)
{
    std::vector<Partition> out;
    if (!outer.contains(inner)) {
        return out;
    }
    const std::size_t n = outer.length();
    std::vector<int> cur(n, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            out.emplace_back(cur);
            return;
        }
        const int hi = i == 0 ? outer[0] : std::min(outer[i], cur[i - 1]);
        for (int v = inner[i]; v <= hi; ++v) {
            cur[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(), graded_lex_less);
    return out;
}

// All μ ⊇ λ such that μ/λ is a horizontal strip of d boxes.
inline std::vector<Partition> horizontal_strip_extensions(const Partition &lambda, int d)
{
    std::vector<Partition> out;
    const std::size_t n = lambda.length() + 1;
    std::vector<int> cur(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == n) {
            if (left == 0) {
                out.emplace_back(cur);
            }
            return;
        }
        const int lo = lambda[i];
        const int hi = i == 0 ? lambda[0] + left : std::min(lambda[i - 1], lambda[i] + left);
        for (int v = lo; v <= hi; ++v) {
            cur[i] = v;
            rec(i + 1, left - (v - lo));
        }
    };
    rec(0, d);
    std::sort(out.begin(), out.end(), graded_lex_less);
    return out;
}

} // namespace jtpos
