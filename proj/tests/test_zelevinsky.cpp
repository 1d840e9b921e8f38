#include <catch_amalgamated.hpp>

#include "jtpos/zelevinsky.hpp"
#include "oracles.hpp"

using namespace jtpos;

TEST_CASE("Euler characteristic equals the Jacobi-Trudi minor", "[zelevinsky]")
{
    const std::vector<GradedSequence> seqs{make_quadric(2), make_quadric(3), make_quadric(4), make_polynomial(3),
                                           make_super(1, 1), make_tensor_algebra(2), make_sym_quadric(3)};
    for (const auto &a : seqs) {
        for (const auto &s : oracle::skew_shapes_up_to(6, 4)) {
            for (std::size_t n = std::max<std::size_t>(s.outer().length(), 1); n <= 4; ++n) {
                INFO(a.name() << " " << s.to_string() << " n=" << n);
                REQUIRE(euler_check(a, s.outer(), s.inner(), n));
            }
        }
    }
}

TEST_CASE("complex layout", "[zelevinsky]")
{
    const auto a = make_polynomial(3);
    const ComplexLayout c = jt_complex_layout(a, {2, 1}, {}, 2);
    REQUIRE(c.degrees.size() == 2);
    const auto &deg0 = c.degrees.at(0);
    REQUIRE(deg0.size() == 1);
    CHECK(deg0[0].sigma == Permutation::identity(2));
    CHECK(deg0[0].weight.entries == std::vector<long long>{2, 1});
    CHECK(deg0[0].value.as_integer() == 6 * 3);
    // σ = (2,1): w = λ − σ∙0 = (2,1) − (−1,1) = (3,0).
    CHECK(c.degrees.at(1)[0].weight.entries == std::vector<long long>{3, 0});
    CHECK(c.h0.as_integer() == 8);

    // Negative weights are kept with value zero.
    const ComplexLayout z = jt_complex_layout(a, {1}, {}, 3);
    std::size_t zeros = 0;
    for (const auto &[len, terms] : z.degrees) {
        for (const auto &t : terms) {
            REQUIRE(t.sigma.length() == len);
            if (t.weight.has_negative()) {
                REQUIRE(t.value.is_zero());
                ++zeros;
            }
        }
    }
    CHECK(zeros > 0);
    CHECK_THROWS_AS(jt_complex_layout(a, {1, 1, 1}, {}, 2), Error);
}

TEST_CASE("degree zero term and nonnegativity for PF sequences", "[zelevinsky]")
{
    const auto sym = make_sym(3);
    REQUIRE_FALSE(pf_check(sym, 3, 3).negative);
    for (const auto &lam : partitions_in_box(3, 3)) {
        const std::size_t n = std::max<std::size_t>(lam.length(), 1);
        const ComplexLayout c = jt_complex_layout(sym, lam, {}, n);
        SchurClass expect = SchurClass::unit(1);
        for (std::size_t i = 0; i < n; ++i) {
            expect = expect * sym.term(lam[i]);
        }
        REQUIRE(c.degrees.at(0).front().value == expect);
        REQUIRE_FALSE(euler_characteristic(c).has_negative_coefficient());
    }
}

TEST_CASE("polynomial Euler characteristic is the skew Schur dimension", "[zelevinsky]")
{
    for (int m = 1; m <= 3; ++m) {
        const auto a = make_polynomial(m);
        for (const auto &s : oracle::skew_shapes_up_to(6, 3)) {
            const std::size_t n = std::max<std::size_t>(s.outer().length(), 1);
            const SchurClass chi = euler_characteristic(jt_complex_layout(a, s.outer(), s.inner(), n));
            BigInt expect = 0;
            const SchurClass straight = skew_to_straight(s);
            for (const auto &[key, coeff] : straight.terms()) {
                expect += coeff * dim_gl(key.at(0), m);
            }
            REQUIRE(chi.as_integer() == expect);
        }
    }
}
