#pragma once

// Graded sequences (A_0 = 1, A_1, A_2, …) valued in integers or Schur
// classes, their Jacobi-Trudi minors, positivity scans and transforms.

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cache.hpp"
#include "core.hpp"
#include "determinant.hpp"
#include "schur.hpp"
#include "shapes.hpp"

namespace jtpos {

inline constexpr std::size_t default_max_class_order = 8;

class GradedSequence {
public:
    using Generator = std::function<SchurClass(int)>;

    // factor_count 0 means integer valued. group_dims, when known, gives
    // dim V for each GL factor so class values can be evaluated to integers.
    GradedSequence(std::string name, std::size_t factor_count, Generator gen, std::vector<int> group_dims = {})
        : s_(std::make_shared<State>())
    {
        s_->name = std::move(name);
        s_->factors = factor_count;
        s_->gen = std::move(gen);
        s_->group_dims = std::move(group_dims);
        if (!s_->group_dims.empty() && s_->group_dims.size() != factor_count) {
            throw Error("sequence " + s_->name + ": group dimension count does not match factor count");
        }
        if (term(0) != SchurClass::unit(factor_count)) {
            throw Error("sequence " + s_->name + ": term 0 must be the unit, got " + term(0).to_string());
        }
    }

    const std::string &name() const noexcept { return s_->name; }
    std::size_t factor_count() const noexcept { return s_->factors; }
    bool is_integer() const noexcept { return s_->factors == 0; }
    const std::vector<int> &group_dims() const noexcept { return s_->group_dims; }
    bool has_dimensions() const noexcept { return is_integer() || !s_->group_dims.empty(); }

    SchurClass term(int d) const
    {
        if (d < 0) {
            return SchurClass::zero(s_->factors);
        }
        return s_->terms.get_or_compute(d, [&] {
            SchurClass c = s_->gen(d);
            if (c.factor_count() != s_->factors) {
                throw Error("sequence " + s_->name + ": generator returned wrong factor count");
            }
            return c;
        });
    }

    // Integer value of term d (dimension for class-valued sequences).
    BigInt dim(int d) const { return evaluate(term(d)); }

    std::vector<BigInt> dims(int count) const
    {
        std::vector<BigInt> v;
        for (int d = 0; d < count; ++d) {
            v.push_back(dim(d));
        }
        return v;
    }

    BigInt evaluate(const SchurClass &c) const
    {
        if (c.is_integer()) {
            return c.as_integer();
        }
        if (s_->group_dims.empty()) {
            throw Error("sequence " + s_->name + " has no group dimensions to evaluate classes at");
        }
        return c.evaluate_dim(s_->group_dims);
    }

    // The integer sequence of dimensions.
    GradedSequence dimension_sequence() const
    {
        if (is_integer()) {
            return *this;
        }
        if (!has_dimensions()) {
            throw Error("sequence " + s_->name + " has no group dimensions");
        }
        GradedSequence self = *this;
        return {"dim(" + name() + ")", 0, [self](int d) { return SchurClass::integer(self.dim(d)); }};
    }

    template <class F>
    SchurClass cached_minor(const SkewShape &s, std::size_t r, F &&compute) const
    {
        return s_->minors.get_or_compute({s, r}, std::forward<F>(compute));
    }

    template <class F>
    SchurClass cached_e(int d, F &&compute) const
    {
        return s_->e_terms.get_or_compute(d, std::forward<F>(compute));
    }

    bool same_as(const GradedSequence &o) const noexcept { return s_ == o.s_; }

private:
    struct State {
        std::string name;
        std::size_t factors = 0;
        std::vector<int> group_dims;
        Generator gen;
        WriteOnceCache<int, SchurClass> terms;
        WriteOnceCache<int, SchurClass> e_terms;
        WriteOnceCache<std::pair<SkewShape, std::size_t>, SchurClass> minors;
    };
    std::shared_ptr<State> s_;
};

// ---- constructors -----------------------------------------------------------

inline Partition ones(int k) { return Partition(std::vector<int>(static_cast<std::size_t>(std::max(k, 0)), 1)); }

inline Partition row(int d) { return d > 0 ? Partition{d} : Partition{}; }

inline void require_positive(int v, const char *what)
{
    if (v < 1) {
        throw Error(std::string(what) + " must be at least 1, got " + std::to_string(v));
    }
}

inline GradedSequence make_polynomial(int m)
{
    require_positive(m, "polynomial ring dimension");
    return {"poly:" + std::to_string(m), 0, [m](int d) { return SchurClass::integer(binomial(m + d - 1, d)); }};
}

inline GradedSequence make_quadric(int m)
{
    require_positive(m, "quadric dimension");
    return {"quadric:" + std::to_string(m), 0,
            [m](int d) { return SchurClass::integer(binomial(m + d - 1, d) - binomial(m + d - 3, d - 2)); }};
}

// Λ^d V ⊕ Λ^{d−2} V ⊕ …
inline GradedSequence make_quadric_dual(int m)
{
    require_positive(m, "quadric dimension");
    return {"quadric-dual:" + std::to_string(m), 0, [m](int d) {
                BigInt v = 0;
                for (int j = d; j >= 0; j -= 2) {
                    v += binomial(m, j);
                }
                return SchurClass::integer(v);
            }};
}

inline GradedSequence make_tensor_algebra(int m)
{
    require_positive(m, "tensor algebra dimension");
    return {"tensoralg:" + std::to_string(m), 0, [m](int d) { return SchurClass::integer(pow(BigInt(m), d)); }};
}

// Sym^d of the super space C^{r|s}.
inline GradedSequence make_super(int r, int s)
{
    if (r < 0 || s < 0 || r + s < 1) {
        throw Error("super dimensions must be nonnegative with r + s >= 1");
    }
    return {"super:" + std::to_string(r) + "," + std::to_string(s), 0, [r, s](int d) {
                BigInt v = 0;
                for (int i = 0; i <= d; ++i) {
                    v += (r == 0 ? BigInt(i == 0 ? 1 : 0) : binomial(r + i - 1, i)) * binomial(s, d - i);
                }
                return SchurClass::integer(v);
            }};
}

// Sym^d U ⊕ Sym^{d−2} U ⊕ …
inline GradedSequence make_heisenberg(int u)
{
    require_positive(u, "symplectic space dimension");
    return {"heisenberg:" + std::to_string(u), 0, [u](int d) {
                BigInt v = 0;
                for (int j = d; j >= 0; j -= 2) {
                    v += binomial(u + j - 1, j);
                }
                return SchurClass::integer(v);
            }};
}

// Explicit values A_1, A_2, …; A_0 = 1 and later terms are 0.
inline GradedSequence make_list(std::vector<BigInt> values)
{
    std::string name = "list";
    for (std::size_t i = 0; i < values.size(); ++i) {
        name += (i ? "," : ":") + values[i].str();
    }
    return {name, 0, [values](int d) {
                if (d == 0) {
                    return SchurClass::integer(1);
                }
                const auto i = static_cast<std::size_t>(d - 1);
                return SchurClass::integer(i < values.size() ? values[i] : BigInt(0));
            }};
}

// ((d+1)^2)_d.
inline GradedSequence make_squares()
{
    return {"squares", 0, [](int d) { return SchurClass::integer(BigInt(d + 1) * (d + 1)); }};
}

inline GradedSequence make_unit()
{
    return {"unit", 0, [](int d) { return SchurClass::integer(d == 0 ? 1 : 0); }};
}

// Class-valued versions (one GL(V) factor unless noted). m = 0 leaves the
// group dimension unspecified.

inline std::vector<int> group_dims_of(std::initializer_list<int> ms)
{
    for (int m : ms) {
        if (m <= 0) {
            return {};
        }
    }
    return ms;
}

inline GradedSequence make_sym(int m = 0)
{
    return {m > 0 ? "sym:" + std::to_string(m) : "sym", 1, [](int d) { return SchurClass::schur(row(d)); },
            group_dims_of({m})};
}

inline GradedSequence make_sym_quadric(int m = 0)
{
    return {m > 0 ? "sym-quadric:" + std::to_string(m) : "sym-quadric", 1,
            [](int d) {
                SchurClass c = SchurClass::schur(row(d));
                if (d >= 2) {
                    c -= SchurClass::schur(row(d - 2));
                }
                return c;
            },
            group_dims_of({m})};
}

inline GradedSequence make_sym_quadric_dual(int m = 0)
{
    return {m > 0 ? "sym-quadric-dual:" + std::to_string(m) : "sym-quadric-dual", 1,
            [](int d) {
                SchurClass c(1);
                for (int j = d; j >= 0; j -= 2) {
                    c += SchurClass::schur(ones(j));
                }
                return c;
            },
            group_dims_of({m})};
}

inline GradedSequence make_sym_heisenberg(int u = 0)
{
    return {u > 0 ? "sym-heisenberg:" + std::to_string(u) : "sym-heisenberg", 1,
            [](int d) {
                SchurClass c(1);
                for (int j = d; j >= 0; j -= 2) {
                    c += SchurClass::schur(row(j));
                }
                return c;
            },
            group_dims_of({u})};
}

// Number of standard Young tableaux of shape λ (hook length formula).
inline BigInt count_syt(const Partition &lambda)
{
    const Partition t = lambda.transpose();
    BigInt hooks = 1;
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda[i]; ++j) {
            hooks *= lambda[i] - j + t[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
        }
    }
    return factorial(lambda.size()) / hooks;
}

// V^{⊗d} = Σ_λ f^λ S_λ V.
inline GradedSequence make_sym_tensor_algebra(int m = 0)
{
    return {m > 0 ? "sym-tensoralg:" + std::to_string(m) : "sym-tensoralg", 1,
            [](int d) {
                SchurClass c(1);
                for (const auto &p : partitions_of(d)) {
                    c.add_term({p}, count_syt(p));
                }
                return c;
            },
            group_dims_of({m})};
}

// Sym^d(C^{r|s}) = Σ_i S^i(C^r) ⊗ Λ^{d−i}(C^s), as a GL_r × GL_s class.
inline GradedSequence make_sym_super(int r = 0, int s = 0)
{
    std::string name = "sym-super";
    if (r > 0 && s > 0) {
        name += ":" + std::to_string(r) + "," + std::to_string(s);
    }
    return {name, 2,
            [](int d) {
                SchurClass c(2);
                for (int i = 0; i <= d; ++i) {
                    c.add_term({row(i), ones(d - i)}, 1);
                }
                return c;
            },
            group_dims_of({r, s})};
}

// ---- Jacobi-Trudi minors ----------------------------------------------------

struct MinorOptions {
    std::size_t r = 0; // padding; 0 picks max(ℓ(λ), ℓ(μ))
    std::size_t max_class_order = default_max_class_order;
};

inline Matrix<SchurClass> jt_matrix(const GradedSequence &a, const SkewShape &s, std::size_t r)
{
    Matrix<SchurClass> m(r, std::vector<SchurClass>(r));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            const long long idx = static_cast<long long>(s.outer()[i]) - s.inner()[j] - static_cast<long long>(i) +
                                  static_cast<long long>(j);
            m[i][j] = a.term(static_cast<int>(idx));
        }
    }
    return m;
}

inline SchurClass determinant(const GradedSequence &a, const Matrix<SchurClass> &m, std::size_t max_class_order)
{
    if (a.is_integer()) {
        Matrix<BigInt> b(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (const auto &e : m[i]) {
                b[i].push_back(e.as_integer());
            }
        }
        return SchurClass::integer(det_bareiss(std::move(b)));
    }
    if (m.size() > max_class_order) {
        throw Error("class determinant of order " + std::to_string(m.size()) + " exceeds the expansion bound " +
                    std::to_string(max_class_order));
    }
    return det_expand(m, a.factor_count());
}

// s^A_{λ/μ} = det([A_{λ_i − μ_j − i + j}])_{i,j ≤ r}.
inline SchurClass jt_minor(const GradedSequence &a, const SkewShape &s, MinorOptions opt = {})
{
    const std::size_t need = std::max(s.outer().length(), s.inner().length());
    std::size_t r = opt.r == 0 ? need : opt.r;
    if (r < need) {
        throw Error("padding length " + std::to_string(r) + " is smaller than the shape length " +
                    std::to_string(need));
    }
    if (!a.is_integer() && r > opt.max_class_order) {
        throw Error("class determinant of order " + std::to_string(r) + " exceeds the expansion bound " +
                    std::to_string(opt.max_class_order));
    }
    return a.cached_minor(s, r, [&] { return determinant(a, jt_matrix(a, s, r), opt.max_class_order); });
}

inline SchurClass jt_minor(const GradedSequence &a, const Partition &lambda, MinorOptions opt = {})
{
    return jt_minor(a, SkewShape(lambda), opt);
}

// (λ, μ) with λ = (i_r − r, …, i_1 − 1), μ = (j_r − r, …, j_1 − 1).
inline std::pair<Partition, Partition> index_to_shapes(const std::vector<int> &rows_j, const std::vector<int> &cols_i)
{
    auto check = [](const std::vector<int> &v, const char *what) {
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (v[k] < 1 || (k > 0 && v[k] <= v[k - 1])) {
                throw Error(std::string(what) + " must be strictly increasing positive indices");
            }
        }
    };
    check(rows_j, "row indices");
    check(cols_i, "column indices");
    if (rows_j.size() != cols_i.size()) {
        throw Error("row and column index sets differ in size");
    }
    const std::size_t r = rows_j.size();
    std::vector<int> lambda(r), mu(r);
    for (std::size_t k = 0; k < r; ++k) {
        lambda[r - 1 - k] = cols_i[k] - static_cast<int>(k) - 1;
        mu[r - 1 - k] = rows_j[k] - static_cast<int>(k) - 1;
    }
    return {Partition(lambda), Partition(mu)};
}

// det[A_{I_a − J_b}]_{a,b}.
inline SchurClass minor_from_indices(const GradedSequence &a, const std::vector<int> &rows_j,
                                     const std::vector<int> &cols_i,
                                     std::size_t max_class_order = default_max_class_order)
{
    index_to_shapes(rows_j, cols_i);
    const std::size_t r = rows_j.size();
    Matrix<SchurClass> m(r, std::vector<SchurClass>(r));
    for (std::size_t x = 0; x < r; ++x) {
        for (std::size_t y = 0; y < r; ++y) {
            m[x][y] = a.term(cols_i[x] - rows_j[y]);
        }
    }
    return determinant(a, m, max_class_order);
}

// ---- positivity scan ----------------------------------------------------------

struct Witness {
    Partition lambda;
    Partition mu;
    SchurClass value;
};

struct PFReport {
    bool negative = false;
    int order = 0;
    int window = 0;
    std::optional<Witness> witness;

    std::string verdict() const { return negative ? "negative" : "positive-up-to-bounds"; }
};

inline bool is_negative(const SchurClass &c) { return c.has_negative_coefficient(); }

// Scans s^A_λ for ℓ(λ) ≤ order, λ_1 ≤ window, by size then lexicographically;
// with skew = true every μ ⊆ λ is scanned too. Returns the first negative.
inline PFReport pf_check(const GradedSequence &a, int order, int window, bool skew = false,
                         std::size_t max_class_order = default_max_class_order)
{
    if (order < 1 || window < 1) {
        throw Error("pf_check bounds must be at least 1");
    }
    PFReport rep;
    rep.order = order;
    rep.window = window;
    for (const auto &lambda : partitions_in_box(static_cast<std::size_t>(order), window)) {
        std::vector<Partition> inners{Partition{}};
        if (skew) {
            inners = partitions_between({}, lambda);
        }
        for (const auto &mu : inners) {
            SchurClass v = jt_minor(a, SkewShape(lambda, mu), {0, max_class_order});
            if (is_negative(v)) {
                rep.negative = true;
                rep.witness = Witness{lambda, mu, std::move(v)};
                return rep;
            }
        }
    }
    return rep;
}

// ---- transforms -------------------------------------------------------------

// (A_(d))_i = A_{di}.
inline GradedSequence veronese(const GradedSequence &a, int d)
{
    require_positive(d, "Veronese degree");
    if (d == 1) {
        return a;
    }
    return {"veronese:" + std::to_string(d) + "," + a.name(), a.factor_count(), [a, d](int i) { return a.term(d * i); },
            a.group_dims()};
}

// α_i = dλ_i + (d−1)(r−i), β_j = dμ_j + (d−1)(r−j).
inline SkewShape veronese_shape(const SkewShape &s, int d, std::size_t r)
{
    std::vector<int> alpha(r), beta(r);
    for (std::size_t i = 0; i < r; ++i) {
        const int shift = (d - 1) * static_cast<int>(r - 1 - i);
        alpha[i] = d * s.outer()[i] + shift;
        beta[i] = d * s.inner()[i] + shift;
    }
    return {Partition(alpha), Partition(beta)};
}

inline bool veronese_identity_check(const GradedSequence &a, int d, const SkewShape &s, std::size_t r = 0)
{
    const std::size_t need = std::max(s.outer().length(), s.inner().length());
    if (r == 0) {
        r = need;
    }
    if (r < need) {
        throw Error("padding length smaller than the shape length");
    }
    const SchurClass left = jt_minor(veronese(a, d), s, {r});
    const SchurClass right = jt_minor(a, veronese_shape(s, d, r), {r});
    return left == right;
}

inline void require_same_kind(const GradedSequence &a, const GradedSequence &b, const char *op)
{
    if (a.factor_count() != b.factor_count()) {
        throw Error(std::string(op) + ": sequences " + a.name() + " and " + b.name() + " have different value kinds");
    }
}

inline std::vector<int> concat_dims(const GradedSequence &a, const GradedSequence &b)
{
    if (a.is_integer() || b.is_integer() || a.group_dims().empty() || b.group_dims().empty()) {
        return {};
    }
    std::vector<int> v = a.group_dims();
    v.insert(v.end(), b.group_dims().begin(), b.group_dims().end());
    return v;
}

// (A⊗B)_n = Σ_i A_i B_{n−i}.
inline GradedSequence tensor_product(const GradedSequence &a, const GradedSequence &b)
{
    require_same_kind(a, b, "tensor product");
    std::vector<int> dims;
    if (!a.is_integer() && a.group_dims() == b.group_dims()) {
        dims = a.group_dims();
    }
    return {"tensor:" + a.name() + "," + b.name(), a.factor_count(),
            [a, b](int n) {
                SchurClass c(a.factor_count());
                for (int i = 0; i <= n; ++i) {
                    c += a.term(i) * b.term(n - i);
                }
                return c;
            },
            dims};
}

// s^{A⊗B}_{λ/μ} = Σ_{μ⊆ν⊆λ} s^A_{λ/ν} s^B_{ν/μ}.
inline bool tensor_identity_check(const GradedSequence &a, const GradedSequence &b, const SkewShape &s)
{
    const SchurClass left = jt_minor(tensor_product(a, b), s);
    SchurClass right(a.factor_count());
    for (const auto &nu : partitions_between(s.inner(), s.outer())) {
        right += jt_minor(a, SkewShape(s.outer(), nu)) * jt_minor(b, SkewShape(nu, s.inner()));
    }
    return left == right;
}

// C_d = A_d ⊗ B_d; class factors are concatenated.
inline GradedSequence segre(const GradedSequence &a, const GradedSequence &b)
{
    if (a.is_integer() != b.is_integer()) {
        throw Error("segre: cannot combine integer sequence " + (a.is_integer() ? a.name() : b.name()) +
                    " with a class-valued one");
    }
    return {"hadamard:" + a.name() + "," + b.name(), a.factor_count() + b.factor_count(),
            [a, b](int d) { return external_product(a.term(d), b.term(d)); }, concat_dims(a, b)};
}

// ψ(e_d) = Σ_{α ⊨ d} (−1)^{d−ℓ(α)} A_{α_1} ⋯ A_{α_ℓ}.
inline SchurClass e_class(const GradedSequence &a, int d)
{
    if (d < 0) {
        return SchurClass::zero(a.factor_count());
    }
    return a.cached_e(d, [&] {
        SchurClass total(a.factor_count());
        for (const auto &alpha : compositions_of(d)) {
            SchurClass term = SchurClass::unit(a.factor_count());
            for (int part : alpha.parts()) {
                term = term * a.term(part);
            }
            if ((d - static_cast<int>(alpha.length())) % 2) {
                total -= term;
            } else {
                total += term;
            }
        }
        return total;
    });
}

// det(ψ(e_{λ^T_i − μ^T_j − i + j}))_{i,j ≤ n}.
inline SchurClass jt_minor_dual(const GradedSequence &a, const SkewShape &s, std::size_t n = 0,
                                std::size_t max_class_order = default_max_class_order)
{
    const SkewShape t = s.transpose();
    const std::size_t need = std::max(t.outer().length(), t.inner().length());
    if (n == 0) {
        n = need;
    }
    if (n < need) {
        throw Error("padding length " + std::to_string(n) + " is smaller than λ_1 = " + std::to_string(need));
    }
    Matrix<SchurClass> m(n, std::vector<SchurClass>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const long long idx = static_cast<long long>(t.outer()[i]) - t.inner()[j] - static_cast<long long>(i) +
                                  static_cast<long long>(j);
            m[i][j] = e_class(a, static_cast<int>(idx));
        }
    }
    return determinant(a, m, max_class_order);
}

inline bool transpose_duality_check(const GradedSequence &a, const SkewShape &s, std::size_t n = 0)
{
    return jt_minor_dual(a, s, n) == jt_minor(a, s);
}

// s^A_λ · A_d = Σ_{μ/λ horizontal d-strip} s^A_μ.
inline bool pieri_identity_check(const GradedSequence &a, const Partition &lambda, int d, std::size_t r = 0)
{
    if (r == 0) {
        r = lambda.length() + 1;
    }
    if (r < lambda.length() + 1) {
        throw Error("pieri check needs padding at least ℓ(λ) + 1");
    }
    const SchurClass left = jt_minor(a, lambda, {r}) * a.term(d);
    SchurClass right(a.factor_count());
    for (const auto &mu : horizontal_strip_extensions(lambda, d)) {
        right += jt_minor(a, mu, {std::max(r, mu.length())});
    }
    return left == right;
}

// (r, s) with {λ : s^A_λ = 0} = {λ : λ_{r+1} > s} on the box of r_max + 2 rows
// and s_max + 2 columns, provided the zero set is an order ideal there.
inline std::optional<std::pair<int, int>> schur_dimension_profile(const GradedSequence &a, int r_max, int s_max)
{
    if (r_max < 0 || s_max < 0) {
        throw Error("profile bounds must be nonnegative");
    }
    const auto box = partitions_in_box(static_cast<std::size_t>(r_max + 2), s_max + 2);
    std::map<Partition, bool> zero;
    for (const auto &p : box) {
        zero[p] = jt_minor(a, p).is_zero();
    }
    for (const auto &[p, z] : zero) {
        if (!z) {
            continue;
        }
        for (std::size_t i = 0; i <= p.length(); ++i) {
            std::vector<int> up = p.vec();
            up.resize(std::max(up.size(), i + 1), 0);
            ++up[i];
            if (i > 0 && up[i] > up[i - 1]) {
                continue;
            }
            auto it = zero.find(Partition(up));
            if (it != zero.end() && !it->second) {
                return std::nullopt;
            }
        }
    }
    for (int r = 0; r <= r_max; ++r) {
        for (int s = 0; s <= s_max; ++s) {
            const bool match = std::all_of(zero.begin(), zero.end(), [&](const auto &kv) {
                return kv.second == (kv.first[static_cast<std::size_t>(r)] > s);
            });
            if (match) {
                return std::make_pair(r, s);
            }
        }
    }
    return std::nullopt;
}

} // namespace jtpos
