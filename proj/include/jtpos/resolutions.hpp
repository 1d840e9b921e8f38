#pragma once

// Pure free resolutions at the level of Betti tables.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "quadric.hpp"
#include "schur.hpp"
#include "sequences.hpp"
#include "series.hpp"
#include "shapes.hpp"

namespace jtpos {

// d_0 = 0, d_i = e_1 + … + e_i.
inline std::vector<long long> degree_sequence(const Composition &e, std::size_t count)
{
    std::vector<long long> d{0};
    for (std::size_t i = 1; i < count; ++i) {
        d.push_back(d.back() + (i - 1 < e.length() ? e[i - 1] : 1));
    }
    return d;
}

struct BettiRow {
    int index = 0;
    long long twist = 0;
    BigInt rank;
    std::optional<Partition> label;
    // Skew shape whose GL(V) Schur module gives this term, when known.
    std::optional<SkewShape> shape;
};

// From homological index `start` on, every rank equals `rank` and the twist
// grows by one per step. The row at `start` is always stored explicitly.
struct BettiTail {
    int start = 0;
    BigInt rank;
    int step = 1;
};

struct BettiTable {
    std::vector<BettiRow> rows;
    std::optional<BettiTail> tail;
    // Rows are an initial segment of an infinite table with no closed form;
    // rows with index < head_size form the head.
    bool open_ended = false;
    int head_size = 0;

    const BettiRow *row_at(int index) const
    {
        for (const auto &r : rows) {
            if (r.index == index) {
                return &r;
            }
        }
        return nullptr;
    }

    void check() const
    {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].rank <= 0) {
                throw Error("Betti table row " + std::to_string(rows[i].index) + " has nonpositive rank");
            }
            if (i > 0 && (rows[i].twist <= rows[i - 1].twist || rows[i].index <= rows[i - 1].index)) {
                throw Error("Betti table twists must be strictly increasing");
            }
        }
        if (tail) {
            const BettiRow *s = row_at(tail->start);
            if (!s || s->rank != tail->rank || tail->step != 1) {
                throw Error("Betti table tail does not match its start row");
            }
        }
    }
};

// λ^{(0)}_j = Σ_{j<k≤n} e_k − (n − j); λ^{(i)} adds e_i boxes to row i, with
// e_i = 1 past the end of e.
inline std::vector<Partition> efw_partitions(const Composition &e, int count)
{
    if (count < 1) {
        throw Error("efw_partitions needs count >= 1");
    }
    const std::size_t n = e.length();
    std::vector<int> rows(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        int s = 0;
        for (std::size_t k = j + 1; k < n; ++k) {
            s += e[k];
        }
        rows[j] = s - static_cast<int>(n - 1 - j);
    }
    std::vector<Partition> out{Partition(rows)};
    for (int i = 1; i < count; ++i) {
        const auto r = static_cast<std::size_t>(i - 1);
        if (rows.size() <= r) {
            rows.resize(r + 1, 0);
        }
        rows[r] += r < n ? e[r] : 1;
        out.emplace_back(rows);
    }
    return out;
}

// Ranks dim S_{λ^{(i)}}(C^E) at twists d_i; zero rows are dropped.
inline BettiTable efw_betti(const Composition &e, int e_dim, int count = 0)
{
    require_positive(e_dim, "E dimension");
    if (count <= 0) {
        count = e_dim + 1;
    }
    const auto parts = efw_partitions(e, count);
    const auto d = degree_sequence(e, static_cast<std::size_t>(count));
    BettiTable t;
    for (int i = 0; i < count; ++i) {
        const BigInt rank = dim_gl(parts[static_cast<std::size_t>(i)], e_dim);
        if (rank != 0) {
            t.rows.push_back({i, d[static_cast<std::size_t>(i)], rank, parts[static_cast<std::size_t>(i)]});
        }
    }
    return t;
}

inline constexpr int default_tail_terms = 3;

// Pure resolution over the quadric ring in m variables with shifts e,
// length(e) = m. Finite when e_m > 1; otherwise a constant tail of rank
// β_{m−1} follows, checked explicitly for tail_terms further rows.
inline BettiTable quadric_pure_resolution(int m, const Composition &e, int tail_terms = default_tail_terms)
{
    require_positive(m, "quadric dimension");
    if (e.length() != static_cast<std::size_t>(m)) {
        throw Error("shift vector has length " + std::to_string(e.length()) + ", expected m = " + std::to_string(m));
    }
    if (tail_terms < 0) {
        throw Error("tail_terms must be nonnegative");
    }
    const QuadricContext ctx(m);
    const bool infinite = e[e.length() - 1] == 1;
    const int count = m + (infinite ? tail_terms : 0);
    const auto parts = efw_partitions(e, count);
    const auto d = degree_sequence(e, static_cast<std::size_t>(count));
    BettiTable t;
    for (int i = 0; i < count; ++i) {
        const auto &p = parts[static_cast<std::size_t>(i)];
        t.rows.push_back({i, d[static_cast<std::size_t>(i)], quadric_schur_dim(ctx, p), p});
    }
    if (infinite) {
        const BigInt r = t.rows[static_cast<std::size_t>(m - 1)].rank;
        for (int i = m; i < count; ++i) {
            if (t.rows[static_cast<std::size_t>(i)].rank != r) {
                throw Error("quadric resolution tail is not constant at index " + std::to_string(i));
            }
        }
        t.tail = BettiTail{m - 1, r, 1};
    }
    t.check();
    return t;
}

// Ranks of (λ^{(m−1)}, 1^j) for j = 0..horizon.
inline std::vector<BigInt> quadric_tail_ranks(int m, const Composition &e, int horizon)
{
    const QuadricContext ctx(m);
    const auto parts = efw_partitions(e, m + horizon);
    std::vector<BigInt> out;
    for (int j = 0; j <= horizon; ++j) {
        out.push_back(quadric_schur_dim(ctx, parts[static_cast<std::size_t>(m - 1 + j)]));
    }
    return out;
}

// ---- purity validation ------------------------------------------------------

struct PurityReport {
    bool polynomial = false;
    bool nonnegative = false;
    // Hilbert series coefficients of the resolved module, through the
    // certified range (trailing zeros trimmed when polynomial).
    std::vector<BigInt> coefficients;
    std::optional<BigInt> module_dimension;
    int horizon = 0;
};

// HS_M = (Σ_i (−1)^i β_i t^{d_i}) · HS_A, with a constant tail summed in
// closed form as (−1)^s r t^{d_s} / (1 + t).
inline PurityReport validate_purity(const BettiTable &t, const GradedSequence &a, int tail_horizon)
{
    t.check();
    if (t.rows.empty()) {
        PurityReport rep;
        rep.polynomial = rep.nonnegative = true;
        rep.module_dimension = BigInt(0);
        rep.horizon = tail_horizon;
        return rep;
    }
    long long cert_start = 0;
    for (const auto &r : t.rows) {
        const bool head = t.tail ? r.index <= t.tail->start : !t.open_ended || r.index < t.head_size;
        if (head) {
            cert_start = std::max(cert_start, r.twist);
        }
    }
    long long horizon = tail_horizon;
    if (t.open_ended) {
        horizon = std::min(horizon, t.rows.back().twist);
    }
    if (horizon < cert_start + 2) {
        throw Error("horizon " + std::to_string(horizon) + " is too small to certify a polynomial (need at least " +
                    std::to_string(cert_start + 2) + ")");
    }
    const auto len = static_cast<std::size_t>(horizon + 1);
    Poly num(len, 0);
    auto add = [&](long long deg, const BigInt &v) {
        if (deg >= 0 && static_cast<std::size_t>(deg) < len) {
            num[static_cast<std::size_t>(deg)] += v;
        }
    };
    for (const auto &r : t.rows) {
        if (t.tail && r.index > t.tail->start) {
            continue;
        }
        const BigInt sgn = r.index % 2 ? -1 : 1;
        if (t.tail && r.index == t.tail->start) {
            // t^{d_s}/(1+t) = Σ_j (−1)^j t^{d_s + j}
            for (long long j = 0; r.twist + j <= horizon; ++j) {
                add(r.twist + j, sgn * r.rank * (j % 2 ? -1 : 1));
            }
        } else {
            add(r.twist, sgn * r.rank);
        }
    }
    Poly hs_a;
    for (std::size_t k = 0; k < len; ++k) {
        hs_a.push_back(a.dim(static_cast<int>(k)));
    }
    PurityReport rep;
    rep.horizon = static_cast<int>(horizon);
    rep.coefficients = poly_mul_truncated(num, hs_a, len);
    rep.polynomial = true;
    for (std::size_t k = static_cast<std::size_t>(cert_start) + 1; k < len; ++k) {
        rep.polynomial = rep.polynomial && rep.coefficients[k] == 0;
    }
    rep.nonnegative = std::all_of(rep.coefficients.begin(), rep.coefficients.end(),
                                  [](const BigInt &c) { return c >= 0; });
    if (rep.polynomial) {
        while (!rep.coefficients.empty() && rep.coefficients.back() == 0) {
            rep.coefficients.pop_back();
        }
        BigInt total = 0;
        for (const auto &c : rep.coefficients) {
            total += c;
        }
        rep.module_dimension = total;
    }
    return rep;
}

// ---- Herzog-Kühl system -------------------------------------------------------

struct HKSolution {
    // β with β_{n−1} free: the infinite (matrix factorization) branch, where
    // f = Σ_{i≤n−2} (−1)^i β_i (t^{d_i} + t^{d_i+1}) + (−1)^{n−1} β_{n−1} t^{d_{n−1}}.
    std::vector<BigInt> infinite_branch;
    // β with f = (1 + t) Σ_i (−1)^i β_i t^{d_i}: the finite resolution, i.e.
    // the classical Herzog-Kühl vector in n − 1 variables.
    std::vector<BigInt> finite_branch;
};

namespace detail {

using LinearForm = std::vector<Rational>;

// Conditions f(1) = f'(1) = … = f^{(k−1)}(1) = 0, obtained as the remainders
// of k successive synthetic divisions by (t − 1).
inline std::vector<LinearForm> vanishing_conditions(std::vector<LinearForm> f, std::size_t k, std::size_t unknowns)
{
    std::vector<LinearForm> eqs;
    for (std::size_t step = 0; step < k; ++step) {
        if (f.empty()) {
            eqs.emplace_back(unknowns, Rational(0));
            continue;
        }
        std::vector<LinearForm> q(f.size() - 1, LinearForm(unknowns, Rational(0)));
        LinearForm carry(unknowns, Rational(0));
        for (std::size_t deg = f.size(); deg-- > 0;) {
            for (std::size_t u = 0; u < unknowns; ++u) {
                carry[u] += f[deg][u];
            }
            if (deg > 0) {
                q[deg - 1] = carry;
            }
        }
        eqs.push_back(carry);
        f = std::move(q);
    }
    return eqs;
}

// Primitive integer generator of a one-dimensional null space, oriented so
// that its last nonzero entry is positive.
inline std::vector<BigInt> null_vector(std::vector<LinearForm> rows, std::size_t unknowns)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < unknowns && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) {
            ++p;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[p]);
        const Rational inv = 1 / rows[r][c];
        for (auto &x : rows[r]) {
            x *= inv;
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != r && rows[i][c] != 0) {
                const Rational f = rows[i][c];
                for (std::size_t u = 0; u < unknowns; ++u) {
                    rows[i][u] -= f * rows[r][u];
                }
            }
        }
        pivots.push_back(c);
        ++r;
    }
    if (pivots.size() + 1 != unknowns) {
        throw Error("Herzog-Kuhl system does not have a one-dimensional solution space");
    }
    std::size_t free_col = 0;
    while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) {
        ++free_col;
    }
    std::vector<Rational> v(unknowns, Rational(0));
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        v[pivots[i]] = -rows[i][free_col];
    }
    BigInt den = 1;
    for (const auto &x : v) {
        den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(x));
    }
    std::vector<BigInt> out;
    BigInt g = 0;
    for (const auto &x : v) {
        out.push_back(boost::multiprecision::numerator(x) * (den / boost::multiprecision::denominator(x)));
        g = boost::multiprecision::gcd(g, out.back());
    }
    if (g == 0) {
        throw Error("Herzog-Kuhl system has only the zero solution");
    }
    auto last = std::find_if(out.rbegin(), out.rend(), [](const BigInt &x) { return x != 0; });
    if (*last < 0) {
        g = -g;
    }
    for (auto &x : out) {
        x /= g;
    }
    return out;
}

} // namespace detail

inline HKSolution hk_solve(const std::vector<long long> &d, std::size_t n)
{
    if (n < 2 || d.size() != n) {
        throw Error("hk_solve needs n >= 2 twists, got " + std::to_string(d.size()) + " for n = " + std::to_string(n));
    }
    if (d[0] != 0) {
        throw Error("hk_solve needs d_0 = 0");
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (d[i] <= d[i - 1]) {
            throw Error("twists must be strictly increasing");
        }
    }
    const auto top = static_cast<std::size_t>(d.back() + 2);
    auto blank = [&] { return std::vector<detail::LinearForm>(top, detail::LinearForm(n, Rational(0))); };

    auto f_inf = blank();
    auto f_fin = blank();
    for (std::size_t i = 0; i < n; ++i) {
        const Rational sgn = i % 2 ? -1 : 1;
        const auto di = static_cast<std::size_t>(d[i]);
        f_fin[di][i] += sgn;
        f_fin[di + 1][i] += sgn;
        if (i + 1 < n) {
            f_inf[di][i] += sgn;
            f_inf[di + 1][i] += sgn;
        } else {
            f_inf[di][i] += sgn;
        }
    }
    HKSolution s;
    s.infinite_branch = detail::null_vector(detail::vanishing_conditions(f_inf, n - 1, n), n);
    s.finite_branch = detail::null_vector(detail::vanishing_conditions(f_fin, n - 1, n), n);
    return s;
}

// ---- rational normal curves ---------------------------------------------------

// dim of S^A_λ for A the d-th Veronese of the polynomial ring in two
// variables, through α/β = veronese_shape(λ, d, r) over C^2.
inline BigInt rnc_schur_dim(const Partition &lambda, int d)
{
    const std::size_t r = std::max<std::size_t>(lambda.length(), 1);
    return dim_gl_skew(veronese_shape(SkewShape(lambda), d, r), 2);
}

inline BettiTable rnc_pure_resolution(int d, const std::vector<int> &e, int tail_terms = default_tail_terms)
{
    require_positive(d, "Veronese degree");
    if (e.size() != 3) {
        throw Error("rational normal curve resolutions take exactly three shifts");
    }
    if (tail_terms < 0) {
        throw Error("tail_terms must be nonnegative");
    }
    const Composition ec(e);
    const bool infinite = e[2] == 1;
    const int count = 3 + (infinite ? tail_terms : 0);
    const auto parts = efw_partitions(ec, count);
    const auto deg = degree_sequence(ec, static_cast<std::size_t>(count));
    BettiTable t;
    std::vector<BigInt> ranks;
    for (int i = 0; i < count; ++i) {
        const auto &p = parts[static_cast<std::size_t>(i)];
        ranks.push_back(rnc_schur_dim(p, d));
        if (ranks.back() != 0) {
            t.rows.push_back({i, deg[static_cast<std::size_t>(i)], ranks.back(), p});
        }
    }
    if (infinite) {
        // D = (de_1 + de_2 − 1, de_2)/(d − 1); row 2 + i is S_{D·(d^i)}(V).
        const SkewShape D(Partition{d * e[0] + d * e[1] - 1, d * e[1]}, Partition{d - 1});
        for (auto &r : t.rows) {
            if (r.index == 2) {
                r.shape = D;
            } else if (r.index > 2) {
                r.shape = attach_dot(D, Composition(std::vector<int>(static_cast<std::size_t>(r.index - 2), d)));
            }
        }
    }
    if (infinite && count > 3) {
        const bool all_zero = std::all_of(ranks.begin() + 3, ranks.end(), [](const BigInt &x) { return x == 0; });
        const bool constant = std::all_of(ranks.begin() + 3, ranks.end(), [&](const BigInt &x) { return x == ranks[2]; });
        if (constant && ranks[2] != 0) {
            t.tail = BettiTail{2, ranks[2], 1};
        } else if (!all_zero) {
            t.open_ended = true;
            t.head_size = 3;
        }
    }
    t.check();
    return t;
}

} // namespace jtpos
