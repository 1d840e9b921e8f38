#include <catch_amalgamated.hpp>

#include "jtpos/quadric.hpp"
#include "oracles.hpp"

using namespace jtpos;

TEST_CASE("three methods agree and vanish exactly when lambda_m > 1", "[quadric]")
{
    for (int m = 2; m <= 5; ++m) {
        const QuadricContext ctx(m);
        for (const auto &s : oracle::skew_shapes_up_to(8)) {
            const BigInt jt = quadric_schur_dim(ctx, s, QuadricMethod::jt);
            INFO("m=" << m << " " << s.to_string());
            REQUIRE(jt == quadric_schur_dim(ctx, s, QuadricMethod::vertical_strip));
            REQUIRE(jt == quadric_schur_dim(ctx, s, QuadricMethod::super));
            REQUIRE(jt >= 0);
            if (s.is_straight()) {
                const bool outside = s.outer()[static_cast<std::size_t>(m - 1)] > 1;
                REQUIRE((jt == 0) == outside);
            }
        }
    }
}

TEST_CASE("small quadric Schur dimensions", "[quadric]")
{
    const QuadricContext q3(3);
    CHECK(quadric_schur_dim(q3, Partition{1}) == 3);
    CHECK(quadric_schur_dim(q3, Partition{2}) == 5);
    CHECK(quadric_schur_dim(q3, Partition{1, 1}) == 4);
    CHECK(quadric_schur_dim(q3, Partition{2, 2}) == 4);
    CHECK(quadric_schur_dim(q3, Partition{2, 2, 2}) == 0);
    CHECK(quadric_schur_dim(q3, Partition{1, 1, 1, 1}) == 4);
    CHECK(parse_quadric_method("vertical-strip") == QuadricMethod::vertical_strip);
    CHECK_THROWS_AS(parse_quadric_method("hooks"), Error);
}

TEST_CASE("generalized LR for the quadric", "[quadric]")
{
    for (int m = 2; m <= 4; ++m) {
        const QuadricContext ctx(m);
        for (const auto &s : oracle::skew_shapes_up_to(8)) {
            BigInt expect = 0;
            for (const auto &nu : partitions_of(s.size())) {
                const BigInt c = lr_coefficient(s.outer(), s.inner(), nu);
                if (c != 0) {
                    expect += c * quadric_schur_dim(ctx, nu);
                }
            }
            REQUIRE(quadric_schur_dim(ctx, s) == expect);
        }
    }
}

TEST_CASE("orthogonal dimensions in the stable range", "[quadric]")
{
    for (int m = 2; m <= 8; ++m) {
        CHECK(chi_o_dim(Partition{}, m) == 1);
        CHECK(chi_o_dim(Partition{1}, m) == m);
        CHECK(chi_o_dim(Partition{2}, m) == binomial(m + 1, 2) - 1);
        if (m >= 4) {
            CHECK(chi_o_dim(Partition{1, 1}, m) == binomial(m, 2));
            CHECK(chi_o_dim(Partition{2, 1}, m) == dim_gl({2, 1}, m) - m);
        }
        if (m >= 6) {
            CHECK(chi_o_dim(Partition{1, 1, 1}, m) == binomial(m, 3));
        }
    }
    for (const auto &p : oracle::partitions_up_to(6)) {
        for (int m = static_cast<int>(2 * p.length()); m <= static_cast<int>(2 * p.length()) + 2; ++m) {
            if (m == 0) {
                continue;
            }
            REQUIRE(chi_o_dim(p, m) >= 0);
        }
    }
    CHECK_THROWS_AS(chi_o_dim(Partition{1, 1}, 3), Error);
}

TEST_CASE("orthogonal decomposition matches the quadric dimension", "[quadric]")
{
    const auto d = orthogonal_stable_decomposition(QuadricContext(4), Partition{1, 1});
    REQUIRE(d.size() == 2);
    CHECK(d[0].mu == Partition{});
    CHECK(d[1].mu == Partition{1, 1});
    for (const auto &lam : oracle::partitions_up_to(6)) {
        const int lo = std::max<int>(1, static_cast<int>(2 * lam.length()));
        for (int m = lo; m <= static_cast<int>(2 * lam.length()) + 2; ++m) {
            const QuadricContext ctx(m);
            const auto dec = orthogonal_stable_decomposition(ctx, lam);
            INFO(lam.to_string() << " m=" << m);
            REQUIRE(decomposition_dimension(dec, m) == quadric_schur_dim(ctx, lam));
            for (std::size_t i = 1; i < dec.size(); ++i) {
                REQUIRE(graded_lex_less(dec[i - 1].mu, dec[i].mu));
            }
        }
    }
}

TEST_CASE("multigraded Hilbert series", "[quadric]")
{
    // One variable: (1 − x^2)/(1 − x)^m is the quadric's Hilbert series.
    for (int m = 1; m <= 4; ++m) {
        const auto hs = quadric_multigraded_hs(m, 1, 10);
        const auto dims = make_quadric(m).dims(11);
        for (int d = 0; d <= 10; ++d) {
            REQUIRE(hs.coeff({d}) == dims[static_cast<std::size_t>(d)]);
        }
    }
    for (int m = 1; m <= 4; ++m) {
        for (std::size_t n = 1; n <= 3; ++n) {
            const auto rep = multigraded_hs_check(m, n, 8);
            INFO("m=" << m << " n=" << n);
            CHECK(rep.factorization);
            CHECK(rep.weight_spaces);
            CHECK(rep.coefficients_checked > 0);
        }
    }
    CHECK_THROWS_AS(multigraded_hs_check(2, 2, max_hs_trunc + 1), Error);
}
