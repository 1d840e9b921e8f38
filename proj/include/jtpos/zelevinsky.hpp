#pragma once

// Term layout of the Jacobi-Trudi complex F^{A,λ,μ}:
// F_i = ⊕_{ℓ(σ)=i} A_{w_1} ⊗ … ⊗ A_{w_n}, w = λ − σ∙μ.

#include <map>
#include <string>
#include <vector>

#include "core.hpp"
#include "schur.hpp"
#include "sequences.hpp"
#include "shapes.hpp"

namespace jtpos {

struct ComplexTerm {
    Permutation sigma;
    Weight weight;
    SchurClass value; // zero when some weight entry is negative
};

struct ComplexLayout {
    std::size_t n = 0;
    Partition lambda;
    Partition mu;
    std::size_t factor_count = 0;
    std::map<int, std::vector<ComplexTerm>> degrees;
    SchurClass h0; // the Jacobi-Trudi minor
};

inline ComplexLayout jt_complex_layout(const GradedSequence &a, const Partition &lambda, const Partition &mu,
                                       std::size_t n, std::size_t bound = default_permutation_bound)
{
    if (n < std::max(lambda.length(), mu.length())) {
        throw Error("n = " + std::to_string(n) + " is smaller than the partition lengths");
    }
    ComplexLayout c;
    c.n = n;
    c.lambda = lambda;
    c.mu = mu;
    c.factor_count = a.factor_count();
    const Weight wl = Weight::from(lambda, n);
    const Weight wm = Weight::from(mu, n);
    for (auto &[len, perms] : permutations_by_length(n, bound)) {
        auto &terms = c.degrees[len];
        for (auto &s : perms) {
            Weight w = wl - dotted_action(s, wm);
            SchurClass v = SchurClass::unit(a.factor_count());
            if (w.has_negative()) {
                v = SchurClass::zero(a.factor_count());
            } else {
                for (long long x : w.entries) {
                    v = v * a.term(static_cast<int>(x));
                }
            }
            terms.push_back({s, std::move(w), std::move(v)});
        }
    }
    c.h0 = jt_minor(a, SkewShape(lambda, mu), {n, std::max(n, default_max_class_order)});
    return c;
}

// Σ_i (−1)^i Σ_{terms in degree i} value.
inline SchurClass euler_characteristic(const ComplexLayout &c)
{
    SchurClass chi(c.factor_count);
    for (const auto &[len, terms] : c.degrees) {
        for (const auto &t : terms) {
            if (len % 2) {
                chi -= t.value;
            } else {
                chi += t.value;
            }
        }
    }
    return chi;
}

inline bool euler_check(const GradedSequence &a, const Partition &lambda, const Partition &mu, std::size_t n)
{
    const ComplexLayout c = jt_complex_layout(a, lambda, mu, n);
    return euler_characteristic(c) == c.h0;
}

} // namespace jtpos
